#include <doctest.h>

#include "helpers.hpp"
#include "ydlie/brlie.hpp"

using namespace testing_helpers;

namespace {

TensorElement elem(ModulePtr const &m, std::vector<std::pair<int, CycNumber>> const &terms)
{
	TensorElement z(m, 1);
	for (auto const &[l, c] : terms)
		z.add_term({l}, c);
	return z;
}

TensorElement basis1(ModulePtr const &m, int label) { return TensorElement::basis(m, {label}); }

TensorElement tensor(std::vector<TensorElement> const &xs)
{
	TensorElement z = xs[0];
	for (std::size_t k = 1; k < xs.size(); ++k)
		z = tensor_product(z, xs[k]);
	return z;
}

TensorElement commutator(GradedAlgebra const &a, TensorElement const &x, TensorElement const &y)
{
	return a.multiply(x, y) - a.multiply(y, x);
}

RootOfUnity z12(int k) { return RootOfUnity(12, k); }

} // namespace

TEST_CASE("bracket of 2x2 matrices is the commutator")
{
	auto a = gl2();
	auto const &m = a->carrier();
	auto const &f = m->field();
	// labels: 0 = E0_0, 1 = E0_1, 2 = E1_0, 3 = E1_1
	auto z = TensorElement::basis(m, {1, 2});
	auto v = bracket(*a, 2, z12(6), z);
	CHECK(v == elem(m, {{0, CycNumber::one(f)}, {3, -CycNumber::one(f)}}));

	std::mt19937 rng(3);
	for (int rep = 0; rep < 10; ++rep)
	{
		auto x = random_element(rng, m, 1, 3);
		auto y = random_element(rng, m, 1, 3);
		CHECK(bracket(*a, 2, z12(6), tensor_product(x, y)) == commutator(*a, x, y));
	}
}

TEST_CASE("cubic bracket of a degree one endomorphism over C3")
{
	auto a = c3_end();
	auto const &m = a->carrier();
	auto const &f = m->field();
	std::vector<int> deg1 = m->labels_of_degree(1);
	REQUIRE(deg1.size() == 3);
	std::mt19937 rng(11);
	TensorElement x(m, 1);
	for (int l : deg1)
		x.add_term({l}, random_scalar(rng, f));
	auto z = tensor({x, x, x});
	auto v = bracket(*a, 3, z12(4), z);
	CHECK(v == a->multiply(a->multiply(x, x), x).scaled(CycNumber(f, 6)));
}

TEST_CASE("bracket on the ground field and in arity one")
{
	auto a = ground_field(make_chi(Bicharacter::trivial(FiniteAbelianGroup::cyclic(2), 12)));
	auto const &m = a->carrier();
	auto one = basis1(m, 0);
	// even x: x x - x x
	CHECK(bracket(*a, 2, z12(6), tensor_product(one, one)).is_zero());
	// odd x with chi(1,1) = -1: x x + x x
	auto odd = truncated_polynomial(make_chi(Bicharacter::cyclic_power(2, 1, 12)), 1, 3);
	auto xo = basis1(odd->carrier(), 1);
	CHECK(bracket(*odd, 2, z12(6), tensor_product(xo, xo)) == basis1(odd->carrier(), 2).scaled(CycNumber(m->field(), 2)));

	auto b = gl2();
	std::mt19937 rng(5);
	auto x = random_element(rng, b->carrier(), 1, 4);
	CHECK(bracket(*b, 1, z12(0), x) == x);
}

TEST_CASE("bracket rejects arguments outside the domain")
{
	auto a = c3_end();
	auto const &m = a->carrier();
	int d1 = m->labels_of_degree(1)[0];
	int d2 = m->labels_of_degree(2)[0];
	CHECK_THROWS_AS(bracket(*a, 2, z12(6), TensorElement::basis(m, {d1, d2})), DomainError);
	CHECK_THROWS_AS(bracket(*a, 3, z12(4), TensorElement::basis(m, {d1, d1, d2})), DomainError);
	CHECK_THROWS_AS(bracket(*a, 3, z12(6), TensorElement::basis(m, {d1, d1, d1})), std::invalid_argument);
}

TEST_CASE("lie_from_algebra domains for the C3 endomorphism algebra")
{
	auto a = c3_end();
	auto l = lie_from_algebra(*a, 4);
	std::vector<std::pair<int, int>> keys;
	for (auto const &[n, z] : l.keys())
		keys.emplace_back(n, z.exponent());
	CHECK(keys == std::vector<std::pair<int, int>>{{1, 0}, {2, 6}, {3, 4}});
	CHECK(l.find(2, z12(6))->domain.dimension() == 45);
	CHECK(l.find(3, z12(4))->domain.dimension() == 54);
	CHECK(l.max_n() == 3);

	// the bracket map stored on the domain agrees with direct evaluation
	std::mt19937 rng(7);
	for (auto const &[n, zeta] : l.keys())
	{
		auto z = random_member(rng, l.find(n, zeta)->domain);
		CHECK(l.apply(n, zeta, z) == bracket(*a, n, zeta, z));
	}
}

TEST_CASE("lie_from_algebra needs the roots of unity it uses")
{
	auto small = graded_end(GradedModule::from_dims(make_chi(Bicharacter::cyclic_power(3, 1, 3)), {{0, 1}, {1, 1}}));
	CHECK_THROWS_WITH_AS(lie_from_algebra(*small, 2), doctest::Contains("order 2"), std::invalid_argument);
	// Q(z_3) suffices for arity 3 when no arity 2 structure can exist: none here
	auto pure = truncated_polynomial(make_chi(Bicharacter::cyclic_power(3, 1, 3)), 1, 2);
	CHECK_THROWS_AS(lie_from_algebra(*pure, 2), std::invalid_argument);
	CHECK_NOTHROW(lie_from_algebra(*gl2(2), 2));
}

TEST_CASE("bracket structure apply outside the domain")
{
	auto a = c3_end();
	auto l = lie_from_algebra(*a, 3);
	auto const &m = a->carrier();
	int d1 = m->labels_of_degree(1)[0];
	int d2 = m->labels_of_degree(2)[0];
	CHECK_THROWS_AS(l.apply(2, z12(6), TensorElement::basis(m, {d1, d2})), DomainError);
	CHECK_THROWS_AS(l.apply(4, z12(3), TensorElement::basis(m, {d1, d1, d1, d1})), DomainError);
	CHECK(l.apply(4, z12(3), TensorElement(m, 4)).is_zero());
}

TEST_CASE("arity availability from degrees")
{
	auto a = c3_end();
	CHECK(arity_possible(*a->carrier(), 2));
	CHECK(arity_possible(*a->carrier(), 3));
	CHECK_FALSE(arity_possible(*a->carrier(), 4));
	CHECK_FALSE(arity_possible(*a->carrier(), 5));
	auto t = gl2();
	CHECK(arity_possible(*t->carrier(), 2));
	CHECK_FALSE(arity_possible(*t->carrier(), 3));
}

TEST_CASE("classical nested brackets")
{
	auto a = gl2();
	auto l = lie_from_algebra(*a, 2);
	auto const &m = a->carrier();
	std::mt19937 rng(19);
	auto minus = z12(6);
	for (int rep = 0; rep < 5; ++rep)
	{
		auto x = random_element(rng, m, 1, 3);
		auto y = random_element(rng, m, 1, 3);
		auto w = random_element(rng, m, 1, 3);
		auto z = tensor({x, y, w});
		CHECK(inner_then_outer(l, 2, minus, z) == commutator(*a, x, commutator(*a, y, w)));
		CHECK(outer_then_inner(l, 2, minus, z) == commutator(*a, commutator(*a, x, y), w));
		CHECK(nested_bracket_at(l, 2, minus, 1, z) == commutator(*a, commutator(*a, x, y), w));
		CHECK(nested_bracket_at(l, 2, minus, 2, z) == commutator(*a, y, commutator(*a, x, w)));
	}
	CHECK(inner_then_outer(l, 2, minus, TensorElement(m, 3)).is_zero());
	CHECK(nested_bracket_at(l, 2, minus, 1, TensorElement(m, 3)).is_zero());
}

TEST_CASE("inner_then_outer on a fully symmetric classical element")
{
	// z = sum over S3 of sign * permuted x (x) y (x) w: the iterated bracket
	// expands to a signed sum of the 6 orderings of products.
	auto a = gl2();
	auto l = lie_from_algebra(*a, 2);
	auto const &m = a->carrier();
	std::mt19937 rng(23);
	auto x = random_element(rng, m, 1, 2), y = random_element(rng, m, 1, 2), w = random_element(rng, m, 1, 2);
	std::vector<TensorElement> xs{x, y, w};
	TensorElement z(m, 3);
	for (auto const &s : all_permutations(3))
	{
		int sign = s.length() % 2 ? -1 : 1;
		z += tensor({xs[s(1) - 1], xs[s(2) - 1], xs[s(3) - 1]}).scaled(CycNumber(m->field(), sign));
	}
	TensorElement expect(m, 1);
	for (auto const &s : all_permutations(3))
	{
		int sign = s.length() % 2 ? -1 : 1;
		auto const &p = xs[s(1) - 1];
		auto const &q = xs[s(2) - 1];
		auto const &r = xs[s(3) - 1];
		expect += commutator(*a, p, commutator(*a, q, r)).scaled(CycNumber(m->field(), sign));
	}
	CHECK(inner_then_outer(l, 2, z12(6), z) == expect);
}

TEST_CASE("Lie axiom suites on the test algebras")
{
	for (auto const &[name, a] : test_algebras())
	{
		CAPTURE(name);
		auto l = lie_from_algebra(*a, 4);
		for (auto const &[n, zeta] : l.keys())
		{
			CAPTURE(n);
			CAPTURE(zeta.to_string());
			auto r = check_antisymmetry(l, n, zeta);
			CHECK(r.passed());
			if (n > 3)
				continue;
			auto j1 = check_jacobi1(l, n, zeta);
			CHECK(j1.passed());
			auto j2 = check_jacobi2(l, n, zeta);
			CHECK(j2.passed());
			if (auto const *f = j2.first_failure())
				MESSAGE(f->detail);
			auto t = check_bracket_transport(l, n, zeta);
			CHECK(t.passed());
		}
	}
}

TEST_CASE("Jacobi checks exercise nonempty domains")
{
	auto a = c3_end();
	auto l = lie_from_algebra(*a, 3);
	auto j1 = check_jacobi1(l, 3, z12(4));
	CHECK(j1.count(Status::Pass) == 162);
	auto j2 = check_jacobi2(l, 3, z12(4));
	CHECK(j2.count(Status::Pass) == 162);
	auto g = lie_from_algebra(*grassmann_line(), 2);
	CHECK(check_jacobi1(g, 2, z12(6)).count(Status::Pass) == 8);
	CHECK(check_jacobi2(g, 2, z12(6)).count(Status::Pass) == 8);
}

TEST_CASE("corrupted bracket tables fail with witnesses")
{
	auto a = gl2();
	auto l = lie_from_algebra(*a, 2);
	auto const minus = z12(6);
	auto const &m = a->carrier();
	auto bad = l;
	// [E0_1, E1_0] should be E0_0 - E1_1
	auto dom = l.find(2, minus)->domain.basis();
	std::size_t k = 0;
	while (!(dom[k] == TensorElement::basis(m, {1, 2})))
		++k;
	bad.set_value(2, minus, k, basis1(m, 0));
	auto r = check_antisymmetry(bad, 2, minus);
	CHECK_FALSE(r.passed());
	REQUIRE(r.first_failure());
	CHECK(r.first_failure()->detail.find("sigma = [2 1]") != std::string::npos);
	CHECK_FALSE(check_jacobi1(bad, 2, minus).passed());
	CHECK(r.to_text().find("FAIL: witness = ") != std::string::npos);
}

TEST_CASE("composite operator identities")
{
	std::mt19937 rng(29);
	for (auto const &[name, a] : test_algebras())
	{
		CAPTURE(name);
		auto const &p = a->carrier();
		// a random degree preserving map P^2 -> P
		auto f = GradedMap::from_function(p, 2, p, 1, 0, [&](std::vector<int> const &t) {
			SparseVector v;
			int g = p->total_degree(t);
			for (int l : p->labels_of_degree(g))
				if (rng() % 2)
					v.add(static_cast<Index>(l), random_scalar(rng, p->field()));
			return v;
		});
		for (auto const &[n, zeta] : available_arities(12, 3))
		{
			CAPTURE(n);
			std::vector<BraidWord> phis;
			for (int k = 0; k < 4; ++k)
				phis.push_back(random_word(rng, n, 1 + static_cast<int>(rng() % 5)));
			CHECK(check_lifted_braids(p, n, zeta, phis).passed());
			CHECK(check_slot_contraction(p, n, zeta, f).passed());
		}
	}
}

TEST_CASE("subalgebra checks")
{
	auto a = gl2();
	auto l = lie_from_algebra(*a, 2);
	auto const &m = a->carrier();
	auto const &f = m->field();
	CHECK(is_lie_subalgebra(l, Subspace::whole(m, 1)));
	CHECK(is_lie_subalgebra(l, Subspace::span(m, 1, {basis1(m, 1)})));
	CHECK(is_lie_subalgebra(l, Subspace::span(m, 1, {elem(m, {{0, CycNumber::one(f)}, {3, CycNumber::one(f)}})})));
	auto r = subalgebra_report(l, Subspace::span(m, 1, {basis1(m, 1), basis1(m, 2)}));
	CHECK_FALSE(r.passed());
	CHECK(r.first_failure()->detail.find("leaves the subspace") != std::string::npos);

	auto c = c3_end();
	auto lc = lie_from_algebra(*c, 3);
	auto const &mc = c->carrier();
	auto deg0 = Subspace::coordinate(mc, 1, {0, 4, 8});
	CHECK(is_lie_subalgebra(lc, deg0));
	TensorElement mixed = basis1(mc, 1) + basis1(mc, 2);
	CHECK_THROWS_AS(is_lie_subalgebra(lc, Subspace::span(mc, 1, {mixed})), std::invalid_argument);
}

TEST_CASE("reports render text and json with the same content")
{
	Report r;
	r.pass("antisym", 2, "z^6", 0);
	r.fail("antisym", 2, "z^6", 1, "z = 1 * (E0_1,E1_0)");
	r.skip("jacobi1", 3, "z^4", 0, "empty domain");
	CHECK(r.to_text() == "antisym n=2 zeta=z^6 #0: PASS\n"
	                     "antisym n=2 zeta=z^6 #1: FAIL: witness = z = 1 * (E0_1,E1_0)\n"
	                     "jacobi1 n=3 zeta=z^4 #0: SKIPPED: empty domain\n"
	                     "summary: pass=1 fail=1 skipped=1\n");
	auto j = r.to_json();
	CHECK(j.find("\"witness\": \"z = 1 * (E0_1,E1_0)\"") != std::string::npos);
	CHECK(j.find("\"status\": \"SKIPPED\"") != std::string::npos);
	CHECK(j.find("\"fail\": 1") != std::string::npos);
	CHECK_FALSE(r.passed());
}
