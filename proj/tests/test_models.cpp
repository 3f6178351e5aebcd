#include <doctest.h>

#include "helpers.hpp"
#include "ydlie/models.hpp"

using namespace testing_helpers;

namespace {

RootOfUnity z12(int k) { return RootOfUnity(12, k); }

CycNumber num(CyclotomicField const &f, long v) { return CycNumber(f, Rational(v)); }

ModulePtr c3_module(std::map<int, int> dims) { return GradedModule::from_dims(c3_chi(), dims); }

} // namespace

TEST_CASE("graded endomorphism algebra")
{
	auto v = c3_module({{0, 1}, {1, 1}, {2, 1}});
	auto a = graded_end(v);
	CHECK(a->dim() == 9);
	CHECK(a->carrier()->dims_by_degree() == std::map<int, int>{{0, 3}, {1, 3}, {2, 3}});
	CHECK_FALSE(a->validation_failure());

	auto trivial = make_chi(Bicharacter::trivial(FiniteAbelianGroup::cyclic(2), 12));
	auto m3 = graded_end(GradedModule::from_dims(trivial, {{0, 3}}));
	CHECK(m3->carrier()->dims_by_degree() == std::map<int, int>{{0, 9}});

	auto zero = graded_end(std::make_shared<const GradedModule>(trivial, std::vector<int>{}));
	CHECK(zero->dim() == 0);

	// uneven dims over C4
	auto c4 = make_chi(Bicharacter::cyclic_power(4, 1, 12));
	auto e = graded_end(GradedModule::from_dims(c4, {{0, 2}, {1, 1}, {3, 2}}));
	CHECK_FALSE(e->validation_failure());
	CHECK(e->dim() == 25);
}

TEST_CASE("evaluation intertwines the grading")
{
	std::mt19937 rng(41);
	auto v = GradedModule::from_dims(make_chi(Bicharacter::cyclic_power(4, 1, 12)), {{0, 2}, {1, 1}, {2, 1}, {3, 2}});
	auto a = graded_end(v);
	auto const &E = a->carrier();
	for (int rep = 0; rep < 40; ++rep)
	{
		int gf = static_cast<int>(rng() % 4), gv = static_cast<int>(rng() % 4);
		TensorElement f(E, 1), x(v, 1);
		for (int l : E->labels_of_degree(gf))
			f.add_term({l}, random_scalar(rng, v->field()));
		for (int l : v->labels_of_degree(gv))
			x.add_term({l}, random_scalar(rng, v->field()));
		auto y = evaluate(*a, v, f, x);
		if (!y.is_zero())
			CHECK(*y.homogeneous_degree() == (gf + gv) % 4);
		// composition is evaluation twice
		TensorElement g(E, 1);
		for (int l : E->labels_of_degree(static_cast<int>(rng() % 4)))
			g.add_term({l}, random_scalar(rng, v->field()));
		CHECK(evaluate(*a, v, a->multiply(g, f), x) == evaluate(*a, v, g, evaluate(*a, v, f, x)));
	}
}

TEST_CASE("invalid multiplication tables are rejected")
{
	auto a = gl2();
	std::vector<SparseVector> products;
	for (int x = 0; x < 4; ++x)
		for (int y = 0; y < 4; ++y)
			products.push_back(a->product(x, y));
	// E0_1 * E1_0 = E0_0 changed to E1_1 breaks associativity
	products[1 * 4 + 2] = SparseVector::unit(a->field(), 3);
	CHECK_THROWS_WITH_AS(GradedAlgebra(a->carrier(), products, a->unit()), doctest::Contains("*"),
	                     std::invalid_argument);
	CHECK_NOTHROW(GradedAlgebra(a->carrier(), products, a->unit(), false));

	auto c = c3_end();
	std::vector<SparseVector> p2;
	for (int x = 0; x < 9; ++x)
		for (int y = 0; y < 9; ++y)
			p2.push_back(c->product(x, y));
	p2[0] = SparseVector::unit(c->field(), 1); // E0_0 * E0_0 of degree 1
	CHECK_THROWS_WITH_AS(GradedAlgebra(c->carrier(), p2, c->unit()), doctest::Contains("degree"),
	                     std::invalid_argument);
}

TEST_CASE("truncated polynomial algebras")
{
	auto c4 = make_chi(Bicharacter::cyclic_power(4, 1, 12));
	auto a = truncated_polynomial(c4, 1, 5);
	CHECK(a->carrier()->degrees() == std::vector<int>{0, 1, 2, 3, 0});
	CHECK(a->product(2, 2) == SparseVector::unit(a->field(), 4));
	CHECK(a->product(2, 3).empty());
	CHECK(a->carrier()->name(3) == "x^3");
}

TEST_CASE("derivations")
{
	auto a = gl2();
	auto end = graded_end(a->carrier());
	auto der = derivation_space(*a, *end);
	CHECK(der.dimension() == 3);
	// every derivation kills the identity
	for (auto const &d : der.basis())
		CHECK(evaluate(*end, a->carrier(), d, a->unit_element()).is_zero());

	auto k = ground_field(c3_chi());
	CHECK(derivation_space(*k, *graded_end(k->carrier())).dimension() == 0);

	auto g = grassmann_line();
	auto gend = graded_end(g->carrier());
	auto gder = derivation_space(*g, *gend);
	// odd d with d(1) = 0, d(x) = 1: label E0_1
	CHECK(gder.contains(TensorElement::basis(gend->carrier(), {1})));
	auto by_degree = std::map<int, int>{};
	for (auto const &b : homogeneous_basis(gder))
		by_degree[*b.homogeneous_degree()]++;
	CHECK(by_degree[1] >= 1);
}

TEST_CASE("braided inner derivations are derivations")
{
	// d_a(b) = ab - chi(deg a, deg b) ba for homogeneous a
	auto a = c3_end();
	auto const &m = a->carrier();
	auto end = graded_end(m);
	auto der = derivation_space(*a, *end);
	int const d = a->dim();
	for (int x = 0; x < d; ++x)
	{
		SparseVector col;
		TensorElement dx(end->carrier(), 1);
		for (int b = 0; b < d; ++b)
		{
			auto ex = TensorElement::basis(m, {x});
			auto eb = TensorElement::basis(m, {b});
			auto img = a->multiply(ex, eb) -
			           a->multiply(eb, ex).scaled(m->chi().value(m->degree(x), m->degree(b)).value());
			for (auto const &[u, c] : img.coeffs())
				dx.add_term({static_cast<int>(u) * d + b}, c);
		}
		CHECK(der.contains(dx));
	}
	CHECK(der.dimension() == 8);
}

TEST_CASE("derivation closure")
{
	CHECK(check_der_closure(*gl2(), 2).passed());
	auto r = check_der_closure(*c3_end(), 3);
	CHECK(r.passed());
	CHECK(r.count(Status::Pass) > 0);
	CHECK(check_der_closure(*grassmann_line(), 2).passed());

	// adjoining a non-derivation breaks closure
	auto a = gl2();
	auto end = graded_end(a->carrier());
	auto s = derivation_space(*a, *end);
	s.insert(TensorElement::basis(end->carrier(), {0})); // E0_0 on the labels of gl2
	auto bad = closure_report(*end, 2, s, "der-closure");
	CHECK_FALSE(bad.passed());
	CHECK(bad.first_failure()->detail.find("leaves the subspace") != std::string::npos);
}

TEST_CASE("bilinear forms respect degrees")
{
	auto v = c3_module({{0, 1}, {1, 1}, {2, 1}});
	auto const &f = v->field();
	CHECK_NOTHROW(BilinearForm(v, {{{0, 0}, num(f, 1)}, {{1, 2}, num(f, 1)}}));
	CHECK_THROWS_AS(BilinearForm(v, {{{1, 1}, num(f, 1)}}), std::invalid_argument);
	CHECK_THROWS_AS(BilinearForm(v, {{{0, 3}, num(f, 1)}}), std::invalid_argument);
}

TEST_CASE("og for the symmetric C3 form")
{
	auto v = c3_module({{0, 1}, {1, 1}, {2, 1}});
	auto const &f = v->field();
	BilinearForm form(v, {{{0, 0}, num(f, 1)}, {{1, 2}, num(f, 1)}, {{2, 1}, num(f, 1)}});
	auto end = graded_end(v);
	auto og = og_subspace(*end, form);
	CHECK(is_graded(og));
	// degree 0: diag(a0, a1, a2) with a0 = 0, a1 = -a2
	TensorElement h(end->carrier(), 1);
	h.add_term({4}, num(f, 1));
	h.add_term({8}, num(f, -1));
	CHECK(og.contains(h));
	std::map<int, int> dims;
	for (auto const &b : homogeneous_basis(og))
		dims[*b.homogeneous_degree()]++;
	CHECK(dims[0] == 1);
	CHECK(dims[1] == 0);
	CHECK(dims[2] == 0);
	CHECK(check_og_closure(form, 3).passed());
}

TEST_CASE("og with zero form and classical so(3)")
{
	auto v = c3_module({{0, 1}, {1, 1}, {2, 1}});
	BilinearForm zero(v, {});
	CHECK(og_subspace(*graded_end(v), zero).dimension() == 9);

	auto trivial = make_chi(Bicharacter::trivial(FiniteAbelianGroup::cyclic(2), 12));
	auto w = GradedModule::from_dims(trivial, {{0, 3}});
	auto const &f = w->field();
	BilinearForm dot(w, {{{0, 0}, num(f, 1)}, {{1, 1}, num(f, 1)}, {{2, 2}, num(f, 1)}});
	auto end = graded_end(w);
	auto so3 = og_subspace(*end, dot);
	CHECK(so3.dimension() == 3);
	for (auto const &b : so3.basis())
	{
		// antisymmetric matrices
		for (auto const &[i, c] : b.coeffs())
		{
			int r = static_cast<int>(i) / 3, s = static_cast<int>(i) % 3;
			auto const *t = b.coeffs().find(static_cast<Index>(s * 3 + r));
			REQUIRE(t);
			CHECK(*t == -c);
		}
	}
	CHECK(check_og_closure(dot, 2).passed());

	// symplectic form on k^2: sp(2) = sl(2), dimension 3
	auto u = GradedModule::from_dims(trivial, {{0, 2}});
	BilinearForm omega(u, {{{0, 1}, num(f, 1)}, {{1, 0}, num(f, -1)}});
	CHECK(og_subspace(*graded_end(u), omega).dimension() == 3);
	CHECK(check_og_closure(omega, 2).passed());
}

TEST_CASE("og for a C3 form with nonzero odd components")
{
	// <e0,e0> = 1, <e1,e3> = <e2,e4> = 1, <e3,e1> = <e4,e2> = z3
	auto v = c3_module({{0, 1}, {1, 2}, {2, 2}});
	auto const &f = v->field();
	auto xi = CycNumber::root(f, 4);
	BilinearForm form(v, {{{0, 0}, num(f, 1)},
	                      {{1, 3}, num(f, 1)},
	                      {{2, 4}, num(f, 1)},
	                      {{3, 1}, xi},
	                      {{4, 2}, xi}});
	auto end = graded_end(v);
	auto og = og_subspace(*end, form);
	std::map<int, std::vector<TensorElement>> by_degree;
	for (auto const &b : homogeneous_basis(og))
		by_degree[*b.homogeneous_degree()].push_back(b);
	CHECK(by_degree[0].size() >= 1);
	CHECK(by_degree[1].size() == 3);

	auto r = check_og_closure(form, 3);
	CHECK(r.passed());

	// some ternary bracket of degree one elements is nonzero and of degree 0
	bool nonzero = false;
	auto const &e1 = by_degree[1];
	for (auto const &x : e1)
		for (auto const &y : e1)
			for (auto const &w : e1)
			{
				auto val = bracket(*end, 3, z12(4), tensor_product(tensor_product(x, y), w));
				if (!val.is_zero())
				{
					nonzero = true;
					CHECK(*val.homogeneous_degree() == 0);
					CHECK(og.contains(val));
				}
			}
	CHECK(nonzero);
	// and some [f, g] with f of degree 0, g of degree 1 is nonzero
	bool mixed = false;
	for (auto const &x : by_degree[0])
		for (auto const &y : e1)
			mixed = mixed || !bracket(*end, 2, z12(6), tensor_product(x, y)).is_zero();
	CHECK(mixed);
}
