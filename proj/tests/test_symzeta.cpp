#include <doctest.h>

#include "helpers.hpp"

using namespace ydlie;
using namespace testing_helpers;

namespace {

ModulePtr c3_module(int ambient = 12)
{
	return GradedModule::from_dims(c3_chi(ambient), {{0, 1}, {1, 1}, {2, 1}});
}

RootOfUnity zeta_of_order(int ambient, int n, int k = 1)
{
	return RootOfUnity(ambient, (ambient / n) * k);
}

} // namespace

TEST_CASE("C3 example dimensions")
{
	auto m = c3_module();
	auto minus_one = zeta_of_order(12, 2);
	auto xi = zeta_of_order(12, 3);
	CHECK(symmetrize_kernel(m, 2, minus_one).dimension() == 5);
	CHECK(symmetrize_kernel(m, 3, xi).dimension() == 2);
	CHECK(symmetrize_graded(m, 2, minus_one).dimension() == 5);
	CHECK(symmetrize_graded(m, 3, xi).dimension() == 2);

	auto fams = zeta_families(m->chi(), m->degrees_present(), 3, xi);
	REQUIRE(fams.size() == 2);
	CHECK(fams[0].degrees == std::vector<int>{1, 1, 1});
	CHECK(fams[1].degrees == std::vector<int>{2, 2, 2});

	auto fams2 = zeta_families(m->chi(), m->degrees_present(), 2, minus_one);
	std::vector<std::vector<int>> got;
	for (auto const &f : fams2)
		got.push_back(f.degrees);
	CHECK(got == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}});

	// no primitive 4th root works on C3
	CHECK(symmetrize_graded(m, 4, zeta_of_order(12, 4)).is_zero());
	CHECK(symmetrize_kernel(m, 4, zeta_of_order(12, 4)).is_zero());
}

TEST_CASE("C3 example has a sixth arity domain")
{
	// zeta = -z3 squares to z3^2, and the domain conditions only depend on zeta^2
	int const L = 84;
	auto m = GradedModule::from_dims(c3_chi(L), {{0, 1}, {1, 1}, {2, 1}});
	RootOfUnity minus_xi(L, 42 + 28);
	auto s = symmetrize_graded(m, 6, minus_xi);
	CHECK(s.dimension() == 2);
	CHECK(s == symmetrize_kernel(m, 6, minus_xi));
	CHECK(s.contains(TensorElement::basis(m, {1, 1, 1, 1, 1, 1})));
	CHECK(symmetrize_graded(m, 6, RootOfUnity(L, 14)).is_zero());
	for (int n : {4, 5, 7})
		for (auto const &zeta : primitive_roots(L, n))
			CHECK(symmetrize_graded(m, n, zeta).is_zero());
}

TEST_CASE("trivial bicharacter")
{
	auto chi = make_chi(Bicharacter::trivial(FiniteAbelianGroup::cyclic(2), 12));
	auto m = GradedModule::from_dims(chi, {{0, 2}, {1, 1}});
	auto minus_one = zeta_of_order(12, 2);
	CHECK(symmetrize_kernel(m, 2, minus_one).dimension() == 9);
	CHECK(symmetrize_graded(m, 3, minus_one).dimension() == 27);
	CHECK(zeta_families(*chi, {0, 1}, 2, minus_one).size() == 4);
	// zeta^2 != 1 forces zero when the action factors through S_n
	CHECK(symmetrize_kernel(m, 3, zeta_of_order(12, 3)).is_zero());
	CHECK(symmetrize_kernel(m, 4, zeta_of_order(12, 4)).is_zero());
	CHECK(minus_one_zeta_subspace(m, 2, minus_one).dimension() == 27);
}

TEST_CASE("degree zero module and empty families")
{
	auto chi = c3_chi();
	auto m = GradedModule::from_dims(chi, {{0, 2}});
	CHECK(symmetrize_graded(m, 3, zeta_of_order(12, 2)).dimension() == 8);

	auto c5 = make_chi(Bicharacter::cyclic_power(5, 1, 10));
	auto single = GradedModule::from_dims(c5, {{1, 2}});
	CHECK(symmetrize_graded(single, 2, RootOfUnity(10, 5)).is_zero());
	CHECK(symmetrize_kernel(single, 2, RootOfUnity(10, 5)).is_zero());
	CHECK(symmetrize_kernel(single, 1, RootOfUnity(10, 5)).dimension() == 2);
}

TEST_CASE("kernel and graded symmetrization agree")
{
	std::mt19937 rng(21);
	for (auto orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {6}})
	{
		FiniteAbelianGroup g(orders);
		for (int trial = 0; trial < 3; ++trial)
		{
			auto chi = random_chi(rng, g, 12);
			auto m = random_module(rng, chi, g.size() > 3 ? 1 : 2);
			for (int n = 1; n <= 4; ++n)
			{
				if (m->tuple_count(n) > 1500)
					continue;
				for (int k = 0; k < 12; ++k)
				{
					RootOfUnity zeta(12, k);
					CAPTURE(n);
					CAPTURE(k);
					CHECK(symmetrize_kernel(m, n, zeta) == symmetrize_graded(m, n, zeta));
				}
			}
		}
	}
}

TEST_CASE("symmetrized subspaces: eigen conditions over random braids")
{
	std::mt19937 rng(22);
	auto chi = random_chi(rng, FiniteAbelianGroup::cyclic(4), 12);
	auto m = random_module(rng, chi, 1);
	for (int n = 2; n <= 3; ++n)
		for (auto const &zeta : {zeta_of_order(12, 2), zeta_of_order(12, 4), zeta_of_order(12, 3)})
		{
			auto s = symmetrize_kernel(m, n, zeta);
			if (s.is_zero())
				continue;
			auto sq = (zeta * zeta).value();
			for (int trial = 0; trial < 200 / (n * 3); ++trial)
			{
				auto phi = random_word(rng, n, 1 + trial % 8);
				std::uniform_int_distribution<int> idx(1, n - 1);
				int i = idx(rng);
				auto w = phi.inverse() * BraidWord::positive(n, {i, i}) * phi;
				auto z = random_member(rng, s);
				CHECK(apply_word(w, z) == z.scaled(sq));
			}
		}
}

TEST_CASE("zeta and minus zeta give the same subspace, and it is braid invariant")
{
	std::mt19937 rng(23);
	auto chi = random_chi(rng, FiniteAbelianGroup({2, 2}), 12);
	auto m = GradedModule::from_dims(chi, {{0, 1}, {1, 1}, {2, 1}, {3, 1}});
	for (int n = 2; n <= 3; ++n)
		for (int k = 0; k < 12; ++k)
		{
			RootOfUnity zeta(12, k);
			RootOfUnity neg = zeta * RootOfUnity(12, 6);
			auto s = symmetrize_kernel(m, n, zeta);
			CHECK(s == symmetrize_kernel(m, n, neg));
			for (auto const &b : s.basis())
				for (int i = 1; i < n; ++i)
				{
					CHECK(s.contains(apply_word(BraidWord::positive(n, {i}), b)));
					if (!s.is_zero() && n == 2)
						CHECK(sn_action(Permutation::transposition(2, 1, 2), neg, b) ==
						      sn_action(Permutation::transposition(2, 1, 2), zeta, b).scaled(CycNumber(m->field(), -1)));
				}
		}
}

TEST_CASE("sum over distinct zeta squared is direct")
{
	auto m = c3_module();
	for (int n = 2; n <= 3; ++n)
	{
		// one representative per value of zeta^2
		std::size_t total = 0;
		Subspace sum(m, n);
		for (int k = 0; k < 6; ++k)
		{
			auto s = symmetrize_kernel(m, n, RootOfUnity(12, k));
			total += s.dimension();
			for (auto const &b : s.basis())
				sum.insert(b);
		}
		CHECK(sum.dimension() == total);
	}
}

TEST_CASE("functoriality under degree preserving injections")
{
	auto chi = c3_chi();
	auto small = GradedModule::from_dims(chi, {{0, 1}, {1, 1}});
	auto big = GradedModule::from_dims(chi, {{0, 2}, {1, 2}, {2, 1}});
	// e0 -> e0 (degree 0), e1 -> e2 (first degree-1 label of big)
	std::vector<int> embed{0, 2};
	for (int n = 2; n <= 3; ++n)
		for (int k = 0; k < 12; ++k)
		{
			RootOfUnity zeta(12, k);
			auto s = symmetrize_kernel(small, n, zeta);
			auto t = symmetrize_graded(big, n, zeta);
			for (auto const &b : s.basis())
			{
				TensorElement image(big, n);
				for (auto const &[i, c] : b.coeffs())
				{
					auto tup = small->decode(i, n);
					for (auto &l : tup)
						l = embed[l];
					image.add_term(tup, c);
				}
				CHECK(t.contains(image));
			}
		}
}

TEST_CASE("S_n action on symmetrized subspaces")
{
	// The longest element of S3 through both reduced words.
	auto m = c3_module();
	auto xi = zeta_of_order(12, 3);
	auto s = symmetrize_kernel(m, 3, xi);
	for (auto const &b : s.basis())
	{
		auto lhs = apply_word(BraidWord::parse(3, "t1 t2 t1"), b);
		auto rhs = apply_word(BraidWord::parse(3, "t2 t1 t2"), b);
		CHECK(lhs == rhs);
	}

	std::mt19937 rng(24);
	for (auto orders : std::vector<std::vector<int>>{{3}, {4}, {2, 2}})
	{
		auto chi = random_chi(rng, FiniteAbelianGroup(orders), 12);
		auto mod = random_module(rng, chi, 1);
		for (int n = 2; n <= 4; ++n)
			for (int k : {3, 4, 6})
			{
				RootOfUnity zeta(12, k);
				auto sub = symmetrize_graded(mod, n, zeta);
				if (sub.is_zero())
					continue;
				auto z = random_member(rng, sub);
				auto perms = all_permutations(n);
				for (auto const &a : perms)
					for (auto const &b : perms)
						CHECK(sn_action(a, zeta, sn_action(b, zeta, z)) == sn_action(a * b, zeta, z));
				// any reduced word gives the same element: compare with a
				// non-minimal reduced word of the longest element
				if (n == 3)
				{
					auto scale = CycNumber::root(mod->field(), -3LL * zeta.exponent());
					CHECK(apply_word(BraidWord::parse(3, "t2 t1 t2"), z).scaled(scale) ==
					      sn_action(Permutation(std::vector<int>{3, 2, 1}), zeta, z));
				}
			}
	}
}

TEST_CASE("minus one zeta subspace")
{
	auto m = c3_module();
	auto xi = zeta_of_order(12, 3);
	auto graded = minus_one_zeta_subspace(m, 3, xi);
	CHECK(graded.dimension() == 2);
	CHECK(graded == minus_one_zeta_kernel(m, 3, xi));
	for (auto const &b : graded.basis())
	{
		auto t = m->decode(b.coeffs().leading_index(), 4);
		CHECK(m->degree(t[0]) == 0);
	}

	// single degree g with chi(g,g)^2 != 1: nothing survives for zeta = -1
	auto c5 = make_chi(Bicharacter::cyclic_power(5, 1, 10));
	auto single = GradedModule::from_dims(c5, {{1, 1}});
	CHECK(minus_one_zeta_subspace(single, 2, RootOfUnity(10, 5)).is_zero());
	CHECK(minus_one_zeta_kernel(single, 2, RootOfUnity(10, 5)).is_zero());

	std::mt19937 rng(25);
	for (auto orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}})
	{
		auto chi = random_chi(rng, FiniteAbelianGroup(orders), 12);
		auto p = random_module(rng, chi, 1);
		for (int n = 1; n <= 3; ++n)
			for (int k : {0, 6, 4, 3, 2})
			{
				RootOfUnity zeta(12, k);
				CHECK(minus_one_zeta_subspace(p, n, zeta) == minus_one_zeta_kernel(p, n, zeta));
			}
	}
}

TEST_CASE("subspace export round trip")
{
	auto m = c3_module();
	std::mt19937 rng(26);
	Subspace s(m, 2);
	for (int k = 0; k < 3; ++k)
		s.insert(random_element(rng, m, 2, 3));
	auto text = s.export_text();
	CHECK(text.rfind("power 2 dim 3\n", 0) == 0);
	auto back = Subspace::import_text(m, text);
	CHECK(back == s);
	CHECK(back.export_text() == text);
	CHECK_THROWS(Subspace::import_text(m, "power 2 dim 1\n1 * (e0,e9)\n"));
	CHECK_THROWS(Subspace::import_text(m, "power 2 dim 2\n1 * (e0,e1)\n"));
}

TEST_CASE("graded subspaces")
{
	auto m = c3_module();
	Subspace s(m, 1);
	TensorElement mixed(m, 1);
	mixed.add_term({0}, CycNumber::one(m->field()));
	mixed.add_term({1}, CycNumber::one(m->field()));
	s.insert(mixed);
	CHECK_FALSE(is_graded(s));
	s.insert(TensorElement::basis(m, {1}));
	CHECK(is_graded(s));
	CHECK(homogeneous_basis(s).size() == 2);
}
