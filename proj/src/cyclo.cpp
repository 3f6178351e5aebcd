#include "ydlie/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ydlie {

int euler_phi(int n)
{
	if (n < 1)
		throw std::invalid_argument("euler_phi: argument must be positive");
	int result = n;
	for (int p = 2; p * p <= n; ++p)
	{
		if (n % p == 0)
		{
			while (n % p == 0)
				n /= p;
			result -= result / p;
		}
	}
	if (n > 1)
		result -= result / n;
	return result;
}

long long ipow(long long base, int exp)
{
	long long r = 1;
	for (int i = 0; i < exp; ++i)
		r *= base;
	return r;
}

namespace {

// Exact division of integer polynomials (divisor monic).
std::vector<long long> divide_monic(std::vector<long long> num, std::vector<long long> const &den)
{
	int const dn = static_cast<int>(den.size()) - 1;
	int const nn = static_cast<int>(num.size()) - 1;
	std::vector<long long> q(nn - dn + 1, 0);
	for (int k = nn - dn; k >= 0; --k)
	{
		long long c = num[k + dn];
		q[k] = c;
		if (c != 0)
			for (int j = 0; j <= dn; ++j)
				num[k + j] -= c * den[j];
	}
	for (int j = 0; j < dn; ++j)
		if (num[j] != 0)
			throw std::logic_error("cyclotomic_polynomial: inexact division");
	return q;
}

} // namespace

std::vector<long long> cyclotomic_polynomial(int n)
{
	if (n < 1)
		throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
	static std::mutex mutex;
	static std::map<int, std::vector<long long>> cache;
	{
		std::lock_guard lock(mutex);
		if (auto it = cache.find(n); it != cache.end())
			return it->second;
	}
	std::vector<long long> p(n + 1, 0);
	p[0] = -1;
	p[n] = 1;
	for (int d = 1; d < n; ++d)
		if (n % d == 0)
			p = divide_monic(std::move(p), cyclotomic_polynomial(d));
	std::lock_guard lock(mutex);
	cache.emplace(n, p);
	return p;
}

CyclotomicField::CyclotomicField(int order)
    : order_(order), degree_(euler_phi(order))
{
	auto const phi = cyclotomic_polynomial(order);
	powers_.reserve(order);
	std::vector<long> cur(degree_, 0);
	cur[0] = 1;
	for (int k = 0; k < order; ++k)
	{
		powers_.push_back(cur);
		// multiply by z and reduce with the monic defining polynomial
		long top = cur[degree_ - 1];
		for (int j = degree_ - 1; j > 0; --j)
			cur[j] = cur[j - 1];
		cur[0] = 0;
		if (top != 0)
			for (int j = 0; j < degree_; ++j)
				cur[j] -= top * phi[j];
	}
}

CyclotomicField const &CyclotomicField::get(int order)
{
	if (order < 1)
		throw std::invalid_argument("cyclotomic field order must be positive");
	static std::mutex mutex;
	static std::map<int, std::unique_ptr<CyclotomicField>> fields;
	std::lock_guard lock(mutex);
	auto &slot = fields[order];
	if (!slot)
		slot.reset(new CyclotomicField(order));
	return *slot;
}

std::span<const long> CyclotomicField::power(long long k) const
{
	long long m = k % order_;
	if (m < 0)
		m += order_;
	return powers_[static_cast<std::size_t>(m)];
}

// ---------------------------------------------------------------------------

CycNumber::CycNumber(CyclotomicField const &field)
    : field_(&field), coeffs_(field.degree())
{
}

CycNumber::CycNumber(CyclotomicField const &field, Rational const &value)
    : CycNumber(field)
{
	coeffs_[0] = value;
	coeffs_[0].canonicalize();
}

CycNumber::CycNumber(CyclotomicField const &field, std::vector<Rational> coeffs)
    : field_(&field), coeffs_(field.degree())
{
	// accept unreduced polynomials of any length
	for (std::size_t j = 0; j < coeffs.size(); ++j)
	{
		coeffs[j].canonicalize();
		if (coeffs[j] == 0)
			continue;
		auto p = field.power(static_cast<long long>(j));
		for (int t = 0; t < field.degree(); ++t)
			if (p[t] != 0)
				coeffs_[t] += coeffs[j] * p[t];
	}
}

CycNumber CycNumber::root(CyclotomicField const &f, long long k)
{
	CycNumber r(f);
	auto p = f.power(k);
	for (int t = 0; t < f.degree(); ++t)
		r.coeffs_[t] = p[t];
	return r;
}

bool CycNumber::is_zero() const
{
	return std::all_of(coeffs_.begin(), coeffs_.end(), [](Rational const &c) { return c == 0; });
}

bool CycNumber::is_one() const
{
	if (coeffs_[0] != 1)
		return false;
	return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Rational const &c) { return c == 0; });
}

bool CycNumber::is_rational() const
{
	return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Rational const &c) { return c == 0; });
}

void CycNumber::check_same_field(CycNumber const &b) const
{
	if (field_ != b.field_)
		throw ArithmeticError("cyclotomic numbers from different ambient orders (" +
		                      std::to_string(order()) + " vs " + std::to_string(b.order()) + ")");
}

CycNumber &CycNumber::operator+=(CycNumber const &b)
{
	check_same_field(b);
	for (std::size_t j = 0; j < coeffs_.size(); ++j)
		coeffs_[j] += b.coeffs_[j];
	return *this;
}

CycNumber &CycNumber::operator-=(CycNumber const &b)
{
	check_same_field(b);
	for (std::size_t j = 0; j < coeffs_.size(); ++j)
		coeffs_[j] -= b.coeffs_[j];
	return *this;
}

CycNumber operator*(CycNumber const &a, CycNumber const &b)
{
	a.check_same_field(b);
	auto const &f = *a.field_;
	int const d = f.degree();
	if (b.is_rational())
		return a * b.coeffs_[0];
	if (a.is_rational())
		return b * a.coeffs_[0];
	std::vector<Rational> raw(2 * d - 1);
	for (int i = 0; i < d; ++i)
	{
		if (a.coeffs_[i] == 0)
			continue;
		for (int j = 0; j < d; ++j)
			if (b.coeffs_[j] != 0)
				raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
	}
	CycNumber r(f);
	for (int i = 0; i < d; ++i)
		r.coeffs_[i] = std::move(raw[i]);
	for (int m = d; m < 2 * d - 1; ++m)
	{
		if (raw[m] == 0)
			continue;
		auto p = f.power(m);
		for (int t = 0; t < d; ++t)
			if (p[t] != 0)
				r.coeffs_[t] += raw[m] * p[t];
	}
	return r;
}

CycNumber &CycNumber::operator*=(CycNumber const &b)
{
	*this = *this * b;
	return *this;
}

CycNumber &CycNumber::operator*=(Rational const &b)
{
	for (auto &c : coeffs_)
		c *= b;
	return *this;
}

CycNumber &CycNumber::mul_root(long long k)
{
	auto const &f = *field_;
	long long m = k % f.order();
	if (m == 0)
		return *this;
	CycNumber r(f);
	r.add_scaled_root(*this, k);
	*this = std::move(r);
	return *this;
}

void CycNumber::add_scaled_root(CycNumber const &c, long long k)
{
	check_same_field(c);
	auto const &f = *field_;
	int const d = f.degree();
	for (int j = 0; j < d; ++j)
	{
		if (c.coeffs_[j] == 0)
			continue;
		auto p = f.power(k + j);
		for (int t = 0; t < d; ++t)
			if (p[t] != 0)
				coeffs_[t] += c.coeffs_[j] * p[t];
	}
}

CycNumber CycNumber::operator-() const
{
	CycNumber r(*this);
	for (auto &c : r.coeffs_)
		c = -c;
	return r;
}

CycNumber CycNumber::inverse() const
{
	if (is_zero())
		throw ArithmeticError("division by zero in cyclotomic field");
	auto const &f = *field_;
	int const d = f.degree();
	if (is_rational())
		return CycNumber(f, Rational(1) / coeffs_[0]);
	// Solve (multiplication-by-this) * y = 1 by Gauss-Jordan elimination.
	std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
	for (int j = 0; j < d; ++j)
	{
		CycNumber col = *this;
		col.mul_root(j);
		for (int i = 0; i < d; ++i)
			m[i][j] = col.coeffs_[i];
	}
	m[0][d] = 1;
	for (int c = 0; c < d; ++c)
	{
		int piv = c;
		while (piv < d && m[piv][c] == 0)
			++piv;
		if (piv == d)
			throw std::logic_error("singular multiplication matrix for nonzero cyclotomic number");
		std::swap(m[piv], m[c]);
		Rational inv = Rational(1) / m[c][c];
		for (int j = c; j <= d; ++j)
			m[c][j] *= inv;
		for (int i = 0; i < d; ++i)
		{
			if (i == c || m[i][c] == 0)
				continue;
			Rational factor = m[i][c];
			for (int j = c; j <= d; ++j)
				m[i][j] -= factor * m[c][j];
		}
	}
	CycNumber r(f);
	for (int i = 0; i < d; ++i)
		r.coeffs_[i] = m[i][d];
	return r;
}

CycNumber &CycNumber::operator/=(CycNumber const &b)
{
	check_same_field(b);
	*this = *this * b.inverse();
	return *this;
}

bool operator==(CycNumber const &a, CycNumber const &b)
{
	return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string CycNumber::to_string() const
{
	std::string out;
	for (std::size_t j = 0; j < coeffs_.size(); ++j)
	{
		Rational const &c = coeffs_[j];
		if (c == 0)
			continue;
		bool const negative = c < 0;
		Rational const mag = negative ? Rational(-c) : c;
		if (out.empty())
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		if (j == 0)
			out += mag.get_str();
		else
		{
			if (mag != 1)
				out += mag.get_str() + "*";
			out += "z";
			if (j > 1)
				out += "^" + std::to_string(j);
		}
	}
	return out.empty() ? "0" : out;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::string const &why)
{
	throw std::invalid_argument("cannot parse cyclotomic number '" + std::string(text) + "': " + why);
}

Rational parse_rational(std::string_view text, std::string_view whole)
{
	if (text.empty())
		parse_fail(whole, "missing coefficient");
	for (char ch : text)
		if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/')
			parse_fail(whole, "bad coefficient '" + std::string(text) + "'");
	Rational r;
	if (r.set_str(std::string(text), 10) != 0)
		parse_fail(whole, "bad coefficient '" + std::string(text) + "'");
	if (r.get_den() == 0)
		parse_fail(whole, "zero denominator");
	r.canonicalize();
	return r;
}

} // namespace

CycNumber CycNumber::parse(CyclotomicField const &f, std::string_view text)
{
	std::string s;
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch)))
			s += ch;
	if (s.empty())
		parse_fail(text, "empty input");
	CycNumber result(f);
	std::size_t pos = 0;
	while (pos < s.size())
	{
		bool negative = false;
		if (s[pos] == '+' || s[pos] == '-')
		{
			negative = s[pos] == '-';
			++pos;
		}
		else if (pos != 0)
			parse_fail(text, "expected '+' or '-'");
		std::size_t end = pos;
		while (end < s.size() && s[end] != '+' && s[end] != '-')
			++end;
		std::string_view term(s.data() + pos, end - pos);
		if (term.empty())
			parse_fail(text, "empty term");
		Rational coef = 1;
		long long exponent = 0;
		auto zpos = term.find('z');
		if (zpos == std::string_view::npos)
			coef = parse_rational(term, text);
		else
		{
			auto head = term.substr(0, zpos);
			if (!head.empty())
			{
				if (head.back() != '*')
					parse_fail(text, "expected '*' before z");
				coef = parse_rational(head.substr(0, head.size() - 1), text);
			}
			auto tail = term.substr(zpos + 1);
			if (!tail.empty())
			{
				if (tail[0] != '^' || tail.size() < 2)
					parse_fail(text, "expected '^' after z");
				exponent = 0;
				for (char ch : tail.substr(1))
				{
					if (!std::isdigit(static_cast<unsigned char>(ch)))
						parse_fail(text, "bad exponent");
					exponent = exponent * 10 + (ch - '0');
				}
			}
			else
				exponent = 1;
		}
		if (negative)
			coef = -coef;
		result.add_scaled_root(CycNumber(f, coef), exponent);
		pos = end;
	}
	return result;
}

// ---------------------------------------------------------------------------

RootOfUnity::RootOfUnity(int ambient, long long exponent)
    : ambient_(ambient), exponent_(0)
{
	if (ambient < 1)
		throw std::invalid_argument("root of unity: ambient order must be positive");
	long long m = exponent % ambient;
	if (m < 0)
		m += ambient;
	exponent_ = static_cast<int>(m);
}

int RootOfUnity::multiplicative_order() const
{
	return ambient_ / std::gcd(ambient_, exponent_);
}

RootOfUnity RootOfUnity::operator*(RootOfUnity const &b) const
{
	if (ambient_ != b.ambient_)
		throw ArithmeticError("roots of unity from different ambient orders");
	return RootOfUnity(ambient_, static_cast<long long>(exponent_) + b.exponent_);
}

CycNumber RootOfUnity::value() const
{
	return CycNumber::root(CyclotomicField::get(ambient_), exponent_);
}

std::string RootOfUnity::to_string() const
{
	return "z^" + std::to_string(exponent_);
}

std::vector<RootOfUnity> primitive_roots(int ambient, int n)
{
	std::vector<RootOfUnity> out;
	if (n < 1 || ambient % n != 0)
		return out;
	for (int k = 0; k < ambient; ++k)
	{
		RootOfUnity r(ambient, k);
		if (r.multiplicative_order() == n)
			out.push_back(r);
	}
	return out;
}

long long partitions_in_box(int i, int j, int t)
{
	if (i < 0 || j < 0 || t < 0)
		throw std::invalid_argument("partitions_in_box: arguments must be nonnegative");
	if (static_cast<long long>(i) * j < t)
		return 0;
	// ways[p][s]: partitions of s into at most p parts (processed so far),
	// parts bounded by i. Build by adding parts of size 1..i one size at a time
	// while tracking the number of parts used.
	std::vector<std::vector<long long>> ways(j + 1, std::vector<long long>(t + 1, 0));
	ways[0][0] = 1;
	for (int part = 1; part <= i; ++part)
		for (int p = 1; p <= j; ++p)
			for (int s = part; s <= t; ++s)
				ways[p][s] += ways[p - 1][s - part];
	long long total = 0;
	for (int p = 0; p <= j; ++p)
		total += ways[p][t];
	return total;
}

CycNumber c_coefficient(int n, int i, RootOfUnity const &zeta)
{
	if (n < 0 || i < 0 || i > n)
		throw std::invalid_argument("c_coefficient: need 0 <= i <= n");
	auto const &f = CyclotomicField::get(zeta.ambient());
	CycNumber sum(f);
	int const max_t = i * (n - i);
	for (int t = 0; t <= max_t; ++t)
	{
		long long p = partitions_in_box(i, n - i, t);
		if (p != 0)
			sum.add_scaled_root(CycNumber(f, Rational(static_cast<long>(p))), -static_cast<long long>(t) * zeta.exponent());
	}
	return sum;
}

} // namespace ydlie
