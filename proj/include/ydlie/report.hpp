#pragma once

// Outcome lists of the verification checks, rendered as text lines or JSON.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ydlie {

enum class Status
{
	Pass,
	Fail,
	Skipped
};

struct ReportLine
{
	std::string check;
	std::optional<int> n;
	std::optional<std::string> zeta;
	std::size_t index = 0;
	Status status = Status::Pass;
	/// Failing element for FAIL, reason for SKIPPED.
	std::string detail;
};

class Report
{
  public:
	void add(ReportLine line) { lines_.push_back(std::move(line)); }
	void pass(std::string check, std::optional<int> n, std::optional<std::string> zeta, std::size_t index);
	void fail(std::string check, std::optional<int> n, std::optional<std::string> zeta, std::size_t index,
	          std::string witness);
	void skip(std::string check, std::optional<int> n, std::optional<std::string> zeta, std::size_t index,
	          std::string reason);
	void merge(Report const &other);

	std::vector<ReportLine> const &lines() const { return lines_; }
	std::size_t count(Status s) const;
	bool passed() const { return count(Status::Fail) == 0; }
	/// First failing line, if any.
	ReportLine const *first_failure() const;

	/// One line per entry ("<check> n=<n> zeta=z^k #<i>: PASS") and a summary line.
	std::string to_text() const;
	std::string to_json() const;

  private:
	std::vector<ReportLine> lines_;
};

} // namespace ydlie
