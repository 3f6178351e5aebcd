#include "ydlie/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace ydlie {

void Report::pass(std::string check, std::optional<int> n, std::optional<std::string> zeta, std::size_t index)
{
	add({std::move(check), n, std::move(zeta), index, Status::Pass, {}});
}

void Report::fail(std::string check, std::optional<int> n, std::optional<std::string> zeta, std::size_t index,
                  std::string witness)
{
	add({std::move(check), n, std::move(zeta), index, Status::Fail, std::move(witness)});
}

void Report::skip(std::string check, std::optional<int> n, std::optional<std::string> zeta, std::size_t index,
                  std::string reason)
{
	add({std::move(check), n, std::move(zeta), index, Status::Skipped, std::move(reason)});
}

void Report::merge(Report const &other)
{
	lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
}

std::size_t Report::count(Status s) const
{
	return static_cast<std::size_t>(
	    std::count_if(lines_.begin(), lines_.end(), [s](ReportLine const &l) { return l.status == s; }));
}

ReportLine const *Report::first_failure() const
{
	for (auto const &l : lines_)
		if (l.status == Status::Fail)
			return &l;
	return nullptr;
}

std::string Report::to_text() const
{
	std::ostringstream os;
	for (auto const &l : lines_)
	{
		os << l.check;
		if (l.n)
			os << " n=" << *l.n;
		if (l.zeta)
			os << " zeta=" << *l.zeta;
		os << " #" << l.index << ": ";
		switch (l.status)
		{
		case Status::Pass:
			os << "PASS";
			break;
		case Status::Fail:
			os << "FAIL: witness = " << l.detail;
			break;
		case Status::Skipped:
			os << "SKIPPED: " << l.detail;
			break;
		}
		os << '\n';
	}
	os << "summary: pass=" << count(Status::Pass) << " fail=" << count(Status::Fail)
	   << " skipped=" << count(Status::Skipped) << '\n';
	return os.str();
}

std::string Report::to_json() const
{
	nlohmann::ordered_json results = nlohmann::ordered_json::array();
	for (auto const &l : lines_)
	{
		nlohmann::ordered_json j;
		j["check"] = l.check;
		if (l.n)
			j["n"] = *l.n;
		if (l.zeta)
			j["zeta"] = *l.zeta;
		j["index"] = l.index;
		switch (l.status)
		{
		case Status::Pass:
			j["status"] = "PASS";
			break;
		case Status::Fail:
			j["status"] = "FAIL";
			j["witness"] = l.detail;
			break;
		case Status::Skipped:
			j["status"] = "SKIPPED";
			j["reason"] = l.detail;
			break;
		}
		results.push_back(std::move(j));
	}
	nlohmann::ordered_json out;
	out["results"] = std::move(results);
	out["summary"] = {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"skipped", count(Status::Skipped)}};
	return out.dump(2) + "\n";
}

} // namespace ydlie
