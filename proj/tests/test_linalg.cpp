#include <doctest.h>

#include <random>

#include "ydlie/linalg.hpp"

using namespace ydlie;

namespace {

SparseVector random_vector(std::mt19937 &rng, CyclotomicField const &f, int dim, int density)
{
	std::uniform_int_distribution<int> pos(0, dim - 1), coef(-3, 3), root(0, f.order() - 1);
	std::vector<SparseVector::Entry> e;
	for (int k = 0; k < density; ++k)
		e.emplace_back(pos(rng), CycNumber::root(f, root(rng)) * Rational(coef(rng)));
	return SparseVector::from_unsorted(e);
}

} // namespace

TEST_CASE("sparse vector arithmetic")
{
	auto const &f = CyclotomicField::get(4);
	SparseVector a = SparseVector::unit(f, 3);
	a.add(1, CycNumber::root(f, 1));
	CHECK(a.size() == 2);
	CHECK(a.leading_index() == 1);
	a.add(1, CycNumber::root(f, 3)); // i + (-i) = 0
	CHECK(a.size() == 1);
	SparseVector b = a - a;
	CHECK(b.empty());
	CHECK(a.find(7) == nullptr);
}

TEST_CASE("echelon basis membership and coordinates")
{
	std::mt19937 rng(5);
	auto const &f = CyclotomicField::get(12);
	for (int trial = 0; trial < 10; ++trial)
	{
		EchelonBasis basis(f);
		std::vector<SparseVector> gens;
		for (int k = 0; k < 6; ++k)
		{
			gens.push_back(random_vector(rng, f, 12, 4));
			basis.insert(gens.back());
		}
		// combinations are contained and have consistent coordinates
		SparseVector combo;
		for (auto const &g : gens)
			combo.axpy(CycNumber::root(f, 1) + CycNumber::one(f), g);
		CHECK(basis.contains(combo));
		auto coords = basis.coordinates(combo);
		REQUIRE(coords);
		SparseVector rebuilt;
		for (std::size_t r = 0; r < coords->size(); ++r)
			rebuilt.axpy((*coords)[r], basis.rows()[r]);
		CHECK(rebuilt == combo);
		// rows are fully reduced against each other's pivots
		auto const &rows = basis.rows();
		for (std::size_t r = 0; r < rows.size(); ++r)
			for (std::size_t s = 0; s < rows.size(); ++s)
			{
				auto c = rows[s].find(basis.pivots()[r]);
				if (r == s)
					CHECK((c && c->is_one()));
				else
					CHECK(c == nullptr);
			}
		// rank is order independent
		EchelonBasis reversed(f);
		for (auto it = gens.rbegin(); it != gens.rend(); ++it)
			reversed.insert(*it);
		CHECK(reversed.dimension() == basis.dimension());
		CHECK(reversed.sorted_rows() == basis.sorted_rows());
	}
}

TEST_CASE("kernel of a matrix")
{
	auto const &f = CyclotomicField::get(3);
	// columns: e0, e1, e0 + e1, z * e0
	std::vector<SparseVector> cols(4);
	cols[0] = SparseVector::unit(f, 0);
	cols[1] = SparseVector::unit(f, 1);
	cols[2] = cols[0] + cols[1];
	cols[3] = cols[0].scaled(CycNumber::root(f, 1));
	auto ker = kernel_of_columns(f, 4, [&](Index j) { return cols[j]; });
	CHECK(ker.size() == 2);
	for (auto const &k : ker)
	{
		SparseVector image;
		for (auto const &[j, c] : k)
			image.axpy(c, cols[j]);
		CHECK(image.empty());
	}
}
