#pragma once

#include <memory>
#include <random>

#include "ydlie/models.hpp"
#include "ydlie/symzeta.hpp"

namespace testing_helpers {

using namespace ydlie;

inline BicharacterPtr make_chi(Bicharacter b)
{
	return std::make_shared<const Bicharacter>(std::move(b));
}

/// C3 with chi(a, b) = z3^{ab} inside Q(z_L).
inline BicharacterPtr c3_chi(int ambient = 12)
{
	return make_chi(Bicharacter::cyclic_power(3, 1, ambient));
}

/// Random bicharacter on the given group, values in Q(z_L).
inline BicharacterPtr random_chi(std::mt19937 &rng, FiniteAbelianGroup const &g, int ambient)
{
	int r = g.rank();
	std::vector<std::vector<int>> k(r, std::vector<int>(r));
	for (int a = 0; a < r; ++a)
		for (int b = 0; b < r; ++b)
		{
			int o = std::gcd(g.orders()[a], g.orders()[b]);
			std::uniform_int_distribution<int> d(0, o - 1);
			k[a][b] = d(rng) * (ambient / o);
		}
	return make_chi(Bicharacter(g, ambient, k));
}

/// Random module with dims in [0, max_dim] per degree (at least one label).
inline ModulePtr random_module(std::mt19937 &rng, BicharacterPtr chi, int max_dim)
{
	std::map<int, int> dims;
	std::uniform_int_distribution<int> d(0, max_dim);
	int total = 0;
	for (int g = 0; g < chi->group().size(); ++g)
	{
		dims[g] = d(rng);
		total += dims[g];
	}
	if (total == 0)
		dims[0] = 1;
	return GradedModule::from_dims(chi, dims);
}

inline CycNumber random_scalar(std::mt19937 &rng, CyclotomicField const &f)
{
	std::uniform_int_distribution<int> c(-3, 3), e(0, f.order() - 1);
	int v = c(rng);
	if (v == 0)
		v = 1;
	return CycNumber::root(f, e(rng)) * Rational(v);
}

inline TensorElement random_element(std::mt19937 &rng, ModulePtr m, int power, int terms)
{
	TensorElement z(m, power);
	std::uniform_int_distribution<int> label(0, m->dim() - 1);
	for (int k = 0; k < terms; ++k)
	{
		std::vector<int> t(power);
		for (auto &x : t)
			x = label(rng);
		z.add_term(t, random_scalar(rng, m->field()));
	}
	return z;
}

/// Random combination of the basis of a subspace.
inline TensorElement random_member(std::mt19937 &rng, Subspace const &s)
{
	TensorElement z(s.host(), s.power());
	for (auto const &b : s.basis())
		z += b.scaled(random_scalar(rng, s.host()->field()));
	return z;
}

inline BraidWord random_word(std::mt19937 &rng, int n, int len)
{
	std::vector<BraidLetter> letters;
	if (n < 2)
		return BraidWord(n);
	std::uniform_int_distribution<int> idx(1, n - 1), sgn(0, 1);
	for (int k = 0; k < len; ++k)
		letters.push_back({idx(rng), sgn(rng) ? 1 : -1});
	return BraidWord(n, letters);
}

struct NamedAlgebra
{
	std::string name;
	AlgebraPtr algebra;
};

/// End(V) for V = k e0 + k e1 + k e2 in degrees 0, 1, 2 of C3, chi(a,b) = z3^{ab}.
inline AlgebraPtr c3_end(int ambient = 12)
{
	return graded_end(GradedModule::from_dims(c3_chi(ambient), {{0, 1}, {1, 1}, {2, 1}}));
}

/// 2x2 matrices with trivial grading.
inline AlgebraPtr gl2(int ambient = 12)
{
	auto chi = make_chi(Bicharacter::trivial(FiniteAbelianGroup::cyclic(2), ambient));
	return graded_end(GradedModule::from_dims(chi, {{0, 2}}));
}

/// k[x]/(x^2) with x odd: C2 grading, chi(1,1) = -1.
inline AlgebraPtr grassmann_line(int ambient = 12)
{
	return truncated_polynomial(make_chi(Bicharacter::cyclic_power(2, 1, ambient)), 1, 2);
}

/// The algebras the axiom suites run on, all inside Q(z_12).
inline std::vector<NamedAlgebra> test_algebras()
{
	std::vector<NamedAlgebra> out;
	out.push_back({"c3-end", c3_end()});
	out.push_back({"gl2", gl2()});
	out.push_back({"grassmann", grassmann_line()});
	auto c2 = make_chi(Bicharacter::cyclic_power(2, 1, 12));
	out.push_back({"c2-end", graded_end(GradedModule::from_dims(c2, {{0, 1}, {1, 1}}))});
	auto c4 = make_chi(Bicharacter::cyclic_power(4, 1, 12));
	out.push_back({"c4-end", graded_end(GradedModule::from_dims(c4, {{0, 1}, {1, 1}, {3, 1}}))});
	out.push_back({"c4-poly", truncated_polynomial(c4, 1, 5)});
	auto k22 = make_chi(Bicharacter(FiniteAbelianGroup({2, 2}), 12, {{6, 0}, {6, 6}}));
	out.push_back({"c2xc2-end", graded_end(GradedModule::from_dims(k22, {{0, 1}, {1, 1}, {2, 1}}))});
	return out;
}

} // namespace testing_helpers
