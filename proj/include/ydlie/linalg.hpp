#pragma once

// Sparse exact linear algebra over a cyclotomic field: vectors keyed by a
// column index, incremental reduced row echelon form, and kernels.

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ydlie/cyclo.hpp"

namespace ydlie {

using Index = std::size_t;

/// Finitely supported vector; entries sorted by index, no stored zeros.
class SparseVector
{
  public:
	using Entry = std::pair<Index, CycNumber>;

	SparseVector() = default;
	static SparseVector unit(CyclotomicField const &f, Index i);

	bool empty() const { return entries_.empty(); }
	std::size_t size() const { return entries_.size(); }
	std::vector<Entry> const &entries() const { return entries_; }
	auto begin() const { return entries_.begin(); }
	auto end() const { return entries_.end(); }

	/// Coefficient at i, or nullptr when absent (zero).
	CycNumber const *find(Index i) const;
	Index leading_index() const { return entries_.front().first; }
	CycNumber const &leading_coeff() const { return entries_.front().second; }

	/// Insert or accumulate; keeps canonical form.
	void add(Index i, CycNumber const &c);
	/// this += c * other
	void axpy(CycNumber const &c, SparseVector const &other);
	void scale(CycNumber const &c);
	SparseVector scaled(CycNumber const &c) const;
	/// Build from unsorted (index, coeff) pairs, merging duplicates.
	static SparseVector from_unsorted(std::vector<Entry> entries);

	SparseVector &operator+=(SparseVector const &b);
	SparseVector &operator-=(SparseVector const &b);
	friend SparseVector operator+(SparseVector a, SparseVector const &b) { return a += b; }
	friend SparseVector operator-(SparseVector a, SparseVector const &b) { return a -= b; }
	friend bool operator==(SparseVector const &a, SparseVector const &b) = default;

  private:
	std::vector<Entry> entries_;
};

/**
 * Reduced row echelon basis of a subspace. Pivots are the smallest index of
 * each row (under an optional rank function: smaller rank = earlier), pivot
 * coefficients are 1 and every other row is zero in each pivot column, so the
 * representation of a subspace is unique.
 */
class EchelonBasis
{
  public:
	/// rank maps a column index to its elimination priority; identity if empty.
	using RankFn = std::function<Index(Index)>;

	explicit EchelonBasis(CyclotomicField const &f, RankFn rank = {});

	CyclotomicField const &field() const { return *field_; }
	std::size_t dimension() const { return rows_.size(); }
	/// Fully reduced rows, in insertion order.
	std::vector<SparseVector> const &rows() const;
	std::vector<Index> const &pivots() const { return row_pivot_; }

	/// Reduce v against the basis; the remainder is zero iff v is in the span.
	SparseVector reduce(SparseVector v) const;
	bool contains(SparseVector const &v) const { return reduce(v).empty(); }
	/// Coordinates of v in terms of rows() when v is in the span.
	std::optional<std::vector<CycNumber>> coordinates(SparseVector const &v) const;

	/// Adds v to the span; returns false when v was already contained.
	bool insert(SparseVector v);

	/// Rows sorted by pivot column position (canonical listing).
	std::vector<SparseVector> sorted_rows() const;

  private:
	Index rank_of(Index i) const { return rank_ ? rank_(i) : i; }
	Index leading(SparseVector const &v) const;

	void back_substitute() const;

	CyclotomicField const *field_;
	RankFn rank_;
	// Rows are kept in semi-echelon form (each row is zero in the pivot
	// columns of earlier rows) and fully reduced lazily.
	mutable std::vector<SparseVector> rows_;
	mutable bool fully_reduced_ = true;
	std::vector<Index> row_pivot_;
	std::unordered_map<Index, std::size_t> pivot_row_;
};

/**
 * Kernel of a linear map given column by column: column(j) is the image of
 * the j-th unit vector. Returns a basis of the kernel (not canonicalized).
 */
std::vector<SparseVector> kernel_of_columns(CyclotomicField const &f, std::size_t ncols,
                                            std::function<SparseVector(Index)> const &column);

} // namespace ydlie
