#pragma once

// Exact arithmetic in the cyclotomic field Q(z), z a primitive L-th root of
// unity. Elements are stored as rational polynomials in z reduced modulo the
// L-th cyclotomic polynomial, so equal numbers have identical coefficients.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ydlie {

using Rational = mpq_class;

class ArithmeticError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

int euler_phi(int n);
long long ipow(long long base, int exp);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<long long> cyclotomic_polynomial(int n);

/**
 * Shared data for Q(zeta_L): the defining polynomial and the reduced form of
 * every power z^k, 0 <= k < L. Instances are interned per order and live for
 * the whole program, so `CyclotomicField const&` may be stored freely.
 */
class CyclotomicField
{
  public:
	static CyclotomicField const &get(int order);

	int order() const { return order_; }
	int degree() const { return degree_; }

	/// Reduced coefficients of z^k (k taken modulo L).
	std::span<const long> power(long long k) const;

  private:
	explicit CyclotomicField(int order);

	int order_;
	int degree_;
	std::vector<std::vector<long>> powers_;
};

class CycNumber
{
  public:
	explicit CycNumber(CyclotomicField const &field);
	CycNumber(CyclotomicField const &field, Rational const &value);
	CycNumber(CyclotomicField const &field, std::vector<Rational> coeffs);

	static CycNumber zero(CyclotomicField const &f) { return CycNumber(f); }
	static CycNumber one(CyclotomicField const &f) { return CycNumber(f, 1); }
	/// z^k for the ambient primitive root z.
	static CycNumber root(CyclotomicField const &f, long long k);

	CyclotomicField const &field() const { return *field_; }
	int order() const { return field_->order(); }
	std::vector<Rational> const &coeffs() const { return coeffs_; }

	bool is_zero() const;
	bool is_one() const;
	/// True iff the value is rational (only the constant coefficient set).
	bool is_rational() const;

	CycNumber &operator+=(CycNumber const &b);
	CycNumber &operator-=(CycNumber const &b);
	CycNumber &operator*=(CycNumber const &b);
	CycNumber &operator*=(Rational const &b);
	CycNumber &operator/=(CycNumber const &b);

	/// Multiply in place by z^k; cheaper than a general product.
	CycNumber &mul_root(long long k);
	/// this += c * z^k
	void add_scaled_root(CycNumber const &c, long long k);

	CycNumber inverse() const;
	CycNumber operator-() const;

	friend CycNumber operator+(CycNumber a, CycNumber const &b) { return a += b; }
	friend CycNumber operator-(CycNumber a, CycNumber const &b) { return a -= b; }
	friend CycNumber operator*(CycNumber const &a, CycNumber const &b);
	friend CycNumber operator*(CycNumber a, Rational const &b) { return a *= b; }
	friend CycNumber operator/(CycNumber a, CycNumber const &b) { return a /= b; }
	friend bool operator==(CycNumber const &a, CycNumber const &b);

	/// "a0 + a1*z + a2*z^2" with exact rationals; "0" for zero.
	std::string to_string() const;
	static CycNumber parse(CyclotomicField const &f, std::string_view text);

  private:
	void check_same_field(CycNumber const &b) const;

	CyclotomicField const *field_;
	std::vector<Rational> coeffs_;
};

/// z_L^k for the ambient order L.
class RootOfUnity
{
  public:
	RootOfUnity(int ambient, long long exponent);

	int ambient() const { return ambient_; }
	int exponent() const { return exponent_; }
	int multiplicative_order() const;
	bool is_primitive_root(int n) const { return multiplicative_order() == n; }

	RootOfUnity operator*(RootOfUnity const &b) const;
	RootOfUnity inverse() const { return RootOfUnity(ambient_, -exponent_); }
	RootOfUnity pow(long long e) const { return RootOfUnity(ambient_, exponent_ * e); }
	CycNumber value() const;

	friend bool operator==(RootOfUnity const &, RootOfUnity const &) = default;
	friend auto operator<=>(RootOfUnity const &, RootOfUnity const &) = default;

	/// "z^k"
	std::string to_string() const;

  private:
	int ambient_;
	int exponent_;
};

/// All exponents k in [0, L) with z_L^k of multiplicative order exactly n.
std::vector<RootOfUnity> primitive_roots(int ambient, int n);

/// Number of partitions of t into at most j parts, each part at most i.
long long partitions_in_box(int i, int j, int t);

/// sum_t p(i, n-i, t) zeta^{-t}
CycNumber c_coefficient(int n, int i, RootOfUnity const &zeta);

} // namespace ydlie
