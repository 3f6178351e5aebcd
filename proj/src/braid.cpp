#include "ydlie/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ydlie {

BraidWord::BraidWord(int strands) : strands_(strands)
{
	if (strands < 1)
		throw std::invalid_argument("braid word needs at least one strand");
}

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : BraidWord(strands)
{
	for (auto const &l : letters)
	{
		if (l.index < 1 || l.index >= strands)
			throw std::invalid_argument("braid generator t" + std::to_string(l.index) +
			                            " out of range for " + std::to_string(strands) + " strands");
		if (l.sign != 1 && l.sign != -1)
			throw std::invalid_argument("braid letter sign must be +1 or -1");
	}
	letters_ = std::move(letters);
}

BraidWord BraidWord::positive(int strands, std::vector<int> const &indices)
{
	std::vector<BraidLetter> letters;
	letters.reserve(indices.size());
	for (int i : indices)
		letters.push_back({i, 1});
	return BraidWord(strands, std::move(letters));
}

bool BraidWord::is_positive() const
{
	return std::all_of(letters_.begin(), letters_.end(), [](BraidLetter const &l) { return l.sign > 0; });
}

BraidWord BraidWord::operator*(BraidWord const &other) const
{
	if (strands_ != other.strands_)
		throw std::invalid_argument("cannot compose braid words on " + std::to_string(strands_) + " and " +
		                            std::to_string(other.strands_) + " strands");
	auto letters = letters_;
	letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
	return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::inverse() const
{
	std::vector<BraidLetter> letters(letters_.rbegin(), letters_.rend());
	for (auto &l : letters)
		l.sign = -l.sign;
	return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::free_reduced() const
{
	std::vector<BraidLetter> stack;
	for (auto const &l : letters_)
	{
		if (!stack.empty() && stack.back().index == l.index && stack.back().sign == -l.sign)
			stack.pop_back();
		else
			stack.push_back(l);
	}
	return BraidWord(strands_, std::move(stack));
}

BraidWord BraidWord::shifted(int k, int strands) const
{
	if (strands < strands_ + k)
		throw std::invalid_argument("shifted braid does not fit");
	auto letters = letters_;
	for (auto &l : letters)
		l.index += k;
	return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::widened(int strands) const
{
	if (strands < strands_)
		throw std::invalid_argument("widened braid needs at least as many strands");
	return BraidWord(strands, letters_);
}

Permutation BraidWord::to_permutation() const
{
	Permutation p(strands_);
	for (auto const &l : letters_)
		p = p * Permutation::transposition(strands_, l.index, l.index + 1);
	return p;
}

std::string BraidWord::to_string() const
{
	if (letters_.empty())
		return "1";
	std::string out;
	for (auto const &l : letters_)
	{
		if (!out.empty())
			out += ' ';
		out += 't' + std::to_string(l.index);
		if (l.sign < 0)
			out += '\'';
	}
	return out;
}

BraidWord BraidWord::parse(int strands, std::string_view text)
{
	std::istringstream in{std::string(text)};
	std::string tok;
	std::vector<BraidLetter> letters;
	while (in >> tok)
	{
		if (tok == "1" && letters.empty())
			continue;
		int sign = 1;
		if (tok.back() == '\'')
		{
			sign = -1;
			tok.pop_back();
		}
		if (tok.size() < 2 || tok[0] != 't' ||
		    !std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
			throw std::invalid_argument("bad braid letter '" + tok + "'");
		letters.push_back({std::stoi(tok.substr(1)), sign});
	}
	return BraidWord(strands, std::move(letters));
}

// ---------------------------------------------------------------------------

Permutation::Permutation(int n) : images_(n)
{
	std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
	std::vector<bool> seen(images_.size(), false);
	for (int v : images_)
	{
		if (v < 1 || v > size() || seen[v - 1])
			throw std::invalid_argument("not a permutation");
		seen[v - 1] = true;
	}
}

Permutation Permutation::transposition(int n, int i, int j)
{
	Permutation p(n);
	std::swap(p.images_[i - 1], p.images_[j - 1]);
	return p;
}

Permutation Permutation::cycle(int n, std::vector<int> const &points)
{
	Permutation p(n);
	for (std::size_t k = 0; k < points.size(); ++k)
		p.images_[points[k] - 1] = points[(k + 1) % points.size()];
	return Permutation(p.images_);
}

Permutation Permutation::operator*(Permutation const &b) const
{
	if (size() != b.size())
		throw std::invalid_argument("permutation size mismatch");
	std::vector<int> r(images_.size());
	for (int k = 1; k <= size(); ++k)
		r[k - 1] = (*this)(b(k));
	return Permutation(std::move(r));
}

Permutation Permutation::inverse() const
{
	std::vector<int> r(images_.size());
	for (int k = 1; k <= size(); ++k)
		r[(*this)(k) - 1] = k;
	return Permutation(std::move(r));
}

int Permutation::length() const
{
	int inv = 0;
	for (int a = 0; a < size(); ++a)
		for (int b = a + 1; b < size(); ++b)
			if (images_[a] > images_[b])
				++inv;
	return inv;
}

bool Permutation::is_identity() const
{
	for (int k = 1; k <= size(); ++k)
		if ((*this)(k) != k)
			return false;
	return true;
}

std::string Permutation::to_string() const
{
	std::string out = "[";
	for (std::size_t k = 0; k < images_.size(); ++k)
	{
		if (k)
			out += ' ';
		out += std::to_string(images_[k]);
	}
	return out + "]";
}

std::vector<Permutation> all_permutations(int n)
{
	std::vector<int> images(n);
	std::iota(images.begin(), images.end(), 1);
	std::vector<Permutation> out;
	do
		out.emplace_back(images);
	while (std::next_permutation(images.begin(), images.end()));
	return out;
}

BraidWord minimal_lift(Permutation const &s)
{
	// Greedy on left descents: s = s_i o s' with l(s') = l(s) - 1 exactly
	// when i+1 comes before i in the one-line notation of s.
	int const n = s.size();
	std::vector<int> indices;
	Permutation cur = s;
	while (!cur.is_identity())
	{
		auto inv = cur.inverse();
		for (int i = 1; i < n; ++i)
		{
			if (inv(i) > inv(i + 1))
			{
				indices.push_back(i);
				cur = Permutation::transposition(n, i, i + 1) * cur;
				break;
			}
		}
	}
	return BraidWord::positive(n, indices);
}

BraidWord pi_element(int i, int j, int n)
{
	if (i < 1 || i >= j || j > n)
		throw std::invalid_argument("pi_element needs 1 <= i < j <= n");
	std::vector<BraidLetter> letters;
	for (int k = i; k <= j - 2; ++k)
		letters.push_back({k, -1});
	letters.push_back({j - 1, 1});
	for (int k = j - 2; k >= i; --k)
		letters.push_back({k, 1});
	return BraidWord(n, std::move(letters));
}

namespace {

// Lift of the positive generator t_j when the contracted strand sits at slot i.
std::pair<std::vector<BraidLetter>, int> lift_positive(int j, int i)
{
	if (j > i)
		return {{{j + 1, 1}}, i};
	if (j < i - 1)
		return {{{j, 1}}, i};
	if (j == i - 1)
		return {{{i, 1}, {i - 1, 1}}, i - 1};
	return {{{i, 1}, {i + 1, 1}}, i + 1};
}

} // namespace

std::pair<BraidWord, int> phi_lift(BraidWord const &w, int i)
{
	int const n = w.strands();
	if (i < 1 || i > n)
		throw std::invalid_argument("phi_lift: slot out of range");
	auto const &letters = w.letters();
	std::vector<std::vector<BraidLetter>> lifted(letters.size());
	int cur = i;
	for (std::size_t k = letters.size(); k-- > 0;)
	{
		auto const &l = letters[k];
		if (l.sign > 0)
		{
			auto [word, next] = lift_positive(l.index, cur);
			lifted[k] = std::move(word);
			cur = next;
		}
		else
		{
			// t_j^-1 at slot cur is the inverse of the lift of t_j at the slot
			// that t_j sends to cur.
			int const from = cur == l.index ? l.index + 1 : (cur == l.index + 1 ? l.index : cur);
			auto [word, next] = lift_positive(l.index, from);
			(void)next;
			std::reverse(word.begin(), word.end());
			for (auto &x : word)
				x.sign = -1;
			lifted[k] = std::move(word);
			cur = from;
		}
	}
	std::vector<BraidLetter> out;
	for (auto const &part : lifted)
		out.insert(out.end(), part.begin(), part.end());
	return {BraidWord(n + 1, std::move(out)), cur};
}

BraidWord full_twist(int n)
{
	std::vector<int> indices;
	for (int k = 1; k < n; ++k)
		for (int m = k; m >= 1; --m)
			indices.push_back(m);
	return BraidWord::positive(n, indices);
}

BraidWord descending_run(int k, int n)
{
	std::vector<int> indices;
	for (int m = k; m >= 1; --m)
		indices.push_back(m);
	return BraidWord::positive(n, indices);
}

BraidWord ascending_run(int k, int n)
{
	std::vector<int> indices;
	for (int m = 1; m <= k; ++m)
		indices.push_back(m);
	return BraidWord::positive(n, indices);
}

} // namespace ydlie
