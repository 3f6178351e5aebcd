#include <doctest.h>

#include "helpers.hpp"
#include "ydlie/hopf.hpp"

using namespace testing_helpers;

namespace {

RootOfUnity z12(int k) { return RootOfUnity(12, k); }

CycNumber num(CyclotomicField const &f, long v) { return CycNumber(f, Rational(v)); }

TensorElement label(ModulePtr const &m, int l) { return TensorElement::basis(m, {l}); }

ModulePtr trivial_line(int dim)
{
	auto chi = make_chi(Bicharacter::trivial(FiniteAbelianGroup::cyclic(2), 12));
	return GradedModule::from_dims(chi, {{0, dim}});
}

ModulePtr odd_line()
{
	return GradedModule::from_dims(make_chi(Bicharacter::cyclic_power(2, 1, 12)), {{1, 1}});
}

/// og for V = e0 + e1 + e2 in degrees 0, 1, 2 of C3 with <e0,e0> = 1,
/// <e1,e2> = 1, <e2,e1> = z3: og_0 = diag(0, a, -a), og_1 = span{E1_0 - E0_2}.
std::pair<AlgebraPtr, Subspace> small_c3_og()
{
	auto v = GradedModule::from_dims(c3_chi(), {{0, 1}, {1, 1}, {2, 1}});
	auto const &f = v->field();
	BilinearForm form(v, {{{0, 0}, num(f, 1)}, {{1, 2}, num(f, 1)}, {{2, 1}, CycNumber::root(f, 4)}});
	auto end = graded_end(v);
	return {end, og_subspace(*end, form)};
}

Report hopf_axioms(TruncatedHopf const &h)
{
	Report r;
	r.merge(check_antipode(h));
	r.merge(check_coassociativity(h));
	r.merge(check_counit(h));
	r.merge(check_coproduct_multiplicative(h));
	r.merge(check_generators_primitive(h));
	return r;
}

} // namespace

TEST_CASE("braided tensor square products")
{
	auto g = grassmann_line();
	auto sq = tensor_square(*g);
	auto one = g->unit_element();
	auto x = label(g->carrier(), 1);
	CHECK(sq->dim() == 4);
	CHECK_FALSE(sq->validation_failure());
	// (1 (x) x)(x (x) 1) = chi(1,1) x (x) x = -x (x) x
	auto lhs = sq->multiply(pair_element(*sq, one, x), pair_element(*sq, x, one));
	CHECK(lhs == pair_element(*sq, x, x).scaled(num(g->field(), -1)));
	CHECK(sq->multiply(pair_element(*sq, x, one), pair_element(*sq, one, x)) == pair_element(*sq, x, x));

	// over C3 the braiding picks up a cube root of unity
	auto a = c3_end();
	auto s3 = tensor_square(*a);
	CHECK_FALSE(s3->validation_failure());
	auto const &E = a->carrier();
	auto e10 = label(E, 1 * 3 + 0), e21 = label(E, 2 * 3 + 1); // both of degree 1
	auto u = a->unit_element();
	auto prod = tensor_square_multiply(*s3, pair_element(*s3, u, e10), pair_element(*s3, e21, u));
	CHECK(prod == pair_element(*s3, e21, e10).scaled(CycNumber::root(a->field(), 4)));
	CHECK(*s3->carrier()->label_of("E1_0|E2_1") == 3 * 9 + 7);
}

TEST_CASE("p-map and its tensor powers")
{
	auto g = grassmann_line();
	auto sq = tensor_square(*g);
	auto x = label(g->carrier(), 1);
	auto one = g->unit_element();
	CHECK(p_map(*g, *sq, x) == pair_element(*sq, x, one) + pair_element(*sq, one, x));
	CHECK(p_map(*g, *sq, one) == pair_element(*sq, one, one).scaled(num(g->field(), 2)));
	auto p2 = p_power(*g, *sq, TensorElement::basis(g->carrier(), {1, 1}));
	CHECK(p2.power() == 2);
	CHECK(p2 == tensor_product(p_map(*g, *sq, x), p_map(*g, *sq, x)));
	// p is additive but not multiplicative
	CHECK(p_map(*g, *sq, x + one) == p_map(*g, *sq, x) + p_map(*g, *sq, one));
}

TEST_CASE("primitive element theorem on the test algebras")
{
	for (auto const &[name, a] : test_algebras())
		for (int n = 1; n <= 4; ++n)
			for (auto const &zeta : primitive_roots(12, n))
			{
				CAPTURE(name);
				CAPTURE(n);
				CAPTURE(zeta.to_string());
				auto r = verify_main_theorem(*a, n, zeta);
				CHECK(r.count(Status::Fail) == 0);
				auto c = verify_c_expansion(*a, n, zeta);
				CHECK(c.count(Status::Fail) == 0);
			}
	CHECK_THROWS_AS(verify_main_theorem(*gl2(), 3, z12(6)), std::invalid_argument);
}

TEST_CASE("primitive element theorem detects a broken unit")
{
	auto good = gl2();
	int const d = good->dim();
	std::vector<SparseVector> products;
	for (int a = 0; a < d; ++a)
		for (int b = 0; b < d; ++b)
			products.push_back(good->product(a, b));
	products[0 * d + 1] = SparseVector{}; // E0_0 * E0_1 := 0
	auto bad = std::make_shared<const GradedAlgebra>(good->carrier(), products, good->unit(), false);
	CHECK(bad->validation_failure());
	auto r = verify_main_theorem(*bad, 2, z12(6));
	CHECK(r.count(Status::Fail) > 0);
	CHECK(r.first_failure()->detail.find("p([z])") != std::string::npos);
}

TEST_CASE("enveloping algebra of an abelian even space is polynomial")
{
	auto p = abelian_lie(trivial_line(2), 5);
	Enveloping u(p, {.cap = 2, .max_slack = 2});
	CHECK(u.hopf().dims_by_length() == std::vector<int>{1, 2, 3});
	Enveloping u3(p, {.cap = 3, .max_slack = 2});
	CHECK(u3.hopf().dims_by_length() == std::vector<int>{1, 2, 3, 4});
	CHECK(u3.stabilized());
	CHECK(hopf_axioms(u3.hopf()).count(Status::Fail) == 0);

	auto line = abelian_lie(trivial_line(1), 5);
	Enveloping l(line, {.cap = 3, .max_slack = 1});
	auto prims = primitives(l.hopf());
	CHECK(prims.dimension() == 1);
	CHECK(prims.contains(TensorElement(l.hopf().carrier(), 1, l.hopf().generator_image(0))));
}

TEST_CASE("enveloping algebra of an odd line is an exterior algebra")
{
	auto p = abelian_lie(odd_line(), 6);
	for (int cap = 1; cap <= 4; ++cap)
	{
		CAPTURE(cap);
		Enveloping u(p, {.cap = cap, .max_slack = 2});
		int total = 0;
		for (int k : u.hopf().dims_by_length())
			total += k;
		CHECK(total == 2);
		CHECK(hopf_axioms(u.hopf()).count(Status::Fail) == 0);
		if (cap >= 2)
		{
			auto prims = primitives(u.hopf());
			CHECK(prims.dimension() == 1);
			CHECK(prims.contains(TensorElement(u.hopf().carrier(), 1, u.hopf().generator_image(0))));
		}
	}

	auto zero = std::make_shared<const GradedModule>(odd_line()->chi_ptr(), std::vector<int>{});
	Enveloping u0(BracketStructure(zero), {.cap = 3, .max_slack = 1});
	CHECK(u0.hopf().dim() == 1);
}

TEST_CASE("antipode on low degrees")
{
	auto p = lie_from_algebra(*gl2(), 5);
	Enveloping u(p, {.cap = 2, .max_slack = 2});
	auto const &h = u.hopf();
	auto const &f = h.field();
	CHECK(h.antipode(h.unit_label()) == SparseVector::unit(f, 0));
	for (int k = 0; k < p.carrier()->dim(); ++k)
		CHECK(h.apply_antipode(h.generator_image(k)) == h.generator_image(k).scaled(num(f, -1)));
	CHECK(check_antipode(h).passed());
	CHECK(u.check_antipode_preserves_ideal().passed());
}

TEST_CASE("universal enveloping algebra of gl2")
{
	auto p = lie_from_algebra(*gl2(), 5);
	Enveloping u(p, {.cap = 3, .max_slack = 2});
	auto const &h = u.hopf();
	CHECK(h.dims_by_length() == std::vector<int>{1, 4, 10, 20});
	CHECK(u.stabilized());
	CHECK(hopf_axioms(h).count(Status::Fail) == 0);
	auto prims = primitives(h);
	CHECK(prims.dimension() == 4);
	CHECK(check_primitives_lie(h, 3).count(Status::Fail) == 0);
	CHECK(u.check_antipode_preserves_ideal().passed());

	auto a = gl2();
	std::vector<TensorElement> own;
	for (int k = 0; k < 4; ++k)
		own.push_back(label(a->carrier(), k));
	CHECK(u.check_universal_map(*a, own).passed());
}

TEST_CASE("corrupted coproduct breaks closure of primitives")
{
	auto p = lie_from_algebra(*gl2(), 5);
	Enveloping u(p, {.cap = 3, .max_slack = 2});
	auto h = u.hopf();
	// E1_0 = y, E0_1 = x; the word y.x is a standard monomial
	auto yx = h.label_of_word({2, 1});
	REQUIRE(yx);
	Index const N = static_cast<Index>(h.dim());
	SparseVector fake;
	fake.add(static_cast<Index>(*yx) * N, CycNumber::one(h.field()));
	fake.add(static_cast<Index>(*yx), CycNumber::one(h.field()));
	h.set_coproduct(*yx, fake);
	CHECK(primitives(h).dimension() == 5);
	auto r = check_primitives_lie(h, 2);
	CHECK(r.count(Status::Fail) > 0);
	CHECK(check_coproduct_multiplicative(h).count(Status::Fail) > 0);
}

TEST_CASE("a grouplike element is not primitive")
{
	auto chi = make_chi(Bicharacter::trivial(FiniteAbelianGroup::cyclic(2), 12));
	auto gens = std::make_shared<const GradedModule>(chi, std::vector<int>{0}, std::vector<std::string>{"g"});
	auto const &f = chi->field();
	TruncatedHopf::Tables t;
	t.words = {{}, {0}};
	auto e = [&](Index i) { return SparseVector::unit(f, i); };
	t.mult = {{e(0), e(1)}, {e(1), e(0)}};
	t.coproduct = {e(0), e(3)};
	t.counit = {num(f, 1), num(f, 1)};
	t.antipode = {e(0), e(1)};
	t.generator_images = {e(1)};
	TruncatedHopf h(gens, 2, t);
	CHECK(check_antipode(h).passed());
	CHECK(check_coassociativity(h).passed());
	CHECK(check_counit(h).passed());
	CHECK(primitives(h).dimension() == 0);
	CHECK_FALSE(check_generators_primitive(h).passed());
}

TEST_CASE("enveloping algebra of a C3 orthogonal Lie algebra")
{
	auto [end, og] = small_c3_og();
	CHECK(og.dimension() == 2);
	auto rl = restrict_lie(*end, og, 5);
	CHECK(rl.lie.carrier()->dim() == 2);
	Enveloping u(rl.lie, {.cap = 3, .max_slack = 2});
	auto const &h = u.hopf();
	CHECK(h.dims_by_length()[1] == 2);
	CHECK(hopf_axioms(h).count(Status::Fail) == 0);
	CHECK(check_primitives_lie(h, 3).count(Status::Fail) == 0);
	CHECK(u.check_antipode_preserves_ideal().passed());
	CHECK(u.check_universal_map(*end, rl.inclusion).passed());
	// primitives of filtration degree <= 2 are exactly the generators
	CHECK(primitives(h).dimension() == 2);

	// a wrong image for a generator violates the relations
	auto wrong = rl.inclusion;
	wrong[0] = wrong[0].scaled(num(end->field(), 2));
	CHECK_FALSE(u.check_universal_map(*end, wrong).passed());
}

TEST_CASE("truncated Hopf dump round trip")
{
	auto [end, og] = small_c3_og();
	auto rl = restrict_lie(*end, og, 5);
	Enveloping u(rl.lie, {.cap = 2, .max_slack = 1});
	auto text = u.hopf().dump();
	auto back = TruncatedHopf::import(text);
	CHECK(back.dump() == text);
	CHECK(back.dims_by_length() == u.hopf().dims_by_length());
	CHECK(check_antipode(back).passed());

	Enveloping g(lie_from_algebra(*gl2(), 4), {.cap = 2, .max_slack = 1});
	auto gtext = g.hopf().dump();
	CHECK(TruncatedHopf::import(gtext).dump() == gtext);

	CHECK_THROWS_AS(TruncatedHopf::import("truncated-hopf 2\n"), std::invalid_argument);
	auto cut = text.substr(0, text.size() / 2);
	CHECK_THROWS_AS(TruncatedHopf::import(cut), std::invalid_argument);
}

TEST_CASE("enveloping construction needs brackets up to the sandwich length")
{
	// End(V) over C3 has ternary brackets
	auto p = lie_from_algebra(*c3_end(), 2);
	CHECK_THROWS_AS(Enveloping(p, {.cap = 2, .max_slack = 1}), std::invalid_argument);
	CHECK_NOTHROW(Enveloping(p, {.cap = 2, .max_slack = 0}));
}
