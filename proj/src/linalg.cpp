#include "ydlie/linalg.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace ydlie {

SparseVector SparseVector::unit(CyclotomicField const &f, Index i)
{
	SparseVector v;
	v.entries_.emplace_back(i, CycNumber::one(f));
	return v;
}

CycNumber const *SparseVector::find(Index i) const
{
	auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
	                           [](Entry const &e, Index k) { return e.first < k; });
	if (it == entries_.end() || it->first != i)
		return nullptr;
	return &it->second;
}

void SparseVector::add(Index i, CycNumber const &c)
{
	if (c.is_zero())
		return;
	auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
	                           [](Entry const &e, Index k) { return e.first < k; });
	if (it != entries_.end() && it->first == i)
	{
		it->second += c;
		if (it->second.is_zero())
			entries_.erase(it);
	}
	else
		entries_.insert(it, Entry(i, c));
}

void SparseVector::axpy(CycNumber const &c, SparseVector const &other)
{
	if (c.is_zero() || other.empty())
		return;
	std::vector<Entry> out;
	out.reserve(entries_.size() + other.entries_.size());
	auto a = entries_.begin();
	auto b = other.entries_.begin();
	bool const unit = c.is_one();
	while (a != entries_.end() || b != other.entries_.end())
	{
		if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first))
		{
			out.push_back(std::move(*a));
			++a;
		}
		else if (a == entries_.end() || b->first < a->first)
		{
			out.emplace_back(b->first, unit ? b->second : c * b->second);
			++b;
		}
		else
		{
			CycNumber sum = std::move(a->second);
			if (unit)
				sum += b->second;
			else
				sum += c * b->second;
			if (!sum.is_zero())
				out.emplace_back(a->first, std::move(sum));
			++a;
			++b;
		}
	}
	entries_ = std::move(out);
}

void SparseVector::scale(CycNumber const &c)
{
	if (c.is_zero())
	{
		entries_.clear();
		return;
	}
	for (auto &e : entries_)
		e.second *= c;
}

SparseVector SparseVector::scaled(CycNumber const &c) const
{
	SparseVector r = *this;
	r.scale(c);
	return r;
}

SparseVector SparseVector::from_unsorted(std::vector<Entry> entries)
{
	std::stable_sort(entries.begin(), entries.end(),
	                 [](Entry const &x, Entry const &y) { return x.first < y.first; });
	SparseVector v;
	for (auto &e : entries)
	{
		if (!v.entries_.empty() && v.entries_.back().first == e.first)
		{
			v.entries_.back().second += e.second;
			continue;
		}
		if (!v.entries_.empty() && v.entries_.back().second.is_zero())
			v.entries_.pop_back();
		v.entries_.push_back(std::move(e));
	}
	if (!v.entries_.empty() && v.entries_.back().second.is_zero())
		v.entries_.pop_back();
	return v;
}

SparseVector &SparseVector::operator+=(SparseVector const &b)
{
	if (b.empty())
		return *this;
	axpy(CycNumber::one(b.entries_.front().second.field()), b);
	return *this;
}

SparseVector &SparseVector::operator-=(SparseVector const &b)
{
	if (b.empty())
		return *this;
	axpy(-CycNumber::one(b.entries_.front().second.field()), b);
	return *this;
}

// ---------------------------------------------------------------------------

EchelonBasis::EchelonBasis(CyclotomicField const &f, RankFn rank)
    : field_(&f), rank_(std::move(rank))
{
}

Index EchelonBasis::leading(SparseVector const &v) const
{
	if (!rank_)
		return v.leading_index();
	Index best = v.leading_index();
	Index best_rank = rank_(best);
	for (auto const &[i, c] : v)
	{
		Index r = rank_(i);
		if (r < best_rank)
		{
			best = i;
			best_rank = r;
		}
	}
	return best;
}

SparseVector EchelonBasis::reduce(SparseVector v) const
{
	if (rows_.empty() || v.empty())
		return v;
	// Subtract rows in insertion order: row r is zero in the pivots of rows
	// before r, so it can only introduce pivots of later rows.
	std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> queue;
	auto enqueue_hits = [&](SparseVector const &w) {
		for (auto const &[i, c] : w)
			if (auto it = pivot_row_.find(i); it != pivot_row_.end())
				queue.push(it->second);
	};
	enqueue_hits(v);
	std::size_t last = static_cast<std::size_t>(-1);
	while (!queue.empty())
	{
		std::size_t r = queue.top();
		queue.pop();
		if (r == last)
			continue;
		last = r;
		CycNumber const *c = v.find(row_pivot_[r]);
		if (!c)
			continue;
		CycNumber factor = -*c;
		v.axpy(factor, rows_[r]);
		if (!fully_reduced_)
			for (auto const &[i, cc] : rows_[r])
				if (auto it = pivot_row_.find(i); it != pivot_row_.end() && it->second > r)
					queue.push(it->second);
	}
	return v;
}

void EchelonBasis::back_substitute() const
{
	if (fully_reduced_)
		return;
	for (std::size_t r = rows_.size(); r-- > 0;)
	{
		std::vector<std::pair<std::size_t, CycNumber>> hits;
		for (auto const &[i, c] : rows_[r])
			if (auto it = pivot_row_.find(i); it != pivot_row_.end() && it->second != r)
				hits.emplace_back(it->second, c);
		for (auto const &[s, c] : hits)
			rows_[r].axpy(-c, rows_[s]);
	}
	fully_reduced_ = true;
}

std::vector<SparseVector> const &EchelonBasis::rows() const
{
	back_substitute();
	return rows_;
}

std::optional<std::vector<CycNumber>> EchelonBasis::coordinates(SparseVector const &v) const
{
	back_substitute();
	std::vector<CycNumber> coords(rows_.size(), CycNumber::zero(*field_));
	for (auto const &[i, c] : v)
		if (auto it = pivot_row_.find(i); it != pivot_row_.end())
			coords[it->second] = c;
	SparseVector rest = v;
	for (std::size_t r = 0; r < rows_.size(); ++r)
		if (!coords[r].is_zero())
			rest.axpy(-coords[r], rows_[r]);
	if (!rest.empty())
		return std::nullopt;
	return coords;
}

bool EchelonBasis::insert(SparseVector v)
{
	v = reduce(std::move(v));
	if (v.empty())
		return false;
	Index const lead = leading(v);
	CycNumber const inv = v.find(lead)->inverse();
	v.scale(inv);
	if (!rows_.empty())
		fully_reduced_ = false;
	pivot_row_.emplace(lead, rows_.size());
	rows_.push_back(std::move(v));
	row_pivot_.push_back(lead);
	return true;
}

std::vector<SparseVector> EchelonBasis::sorted_rows() const
{
	back_substitute();
	std::vector<std::size_t> order(rows_.size());
	for (std::size_t i = 0; i < order.size(); ++i)
		order[i] = i;
	std::sort(order.begin(), order.end(),
	          [&](std::size_t a, std::size_t b) { return rank_of(row_pivot_[a]) < rank_of(row_pivot_[b]); });
	std::vector<SparseVector> out;
	out.reserve(rows_.size());
	for (auto i : order)
		out.push_back(rows_[i]);
	return out;
}

// ---------------------------------------------------------------------------

std::vector<SparseVector> kernel_of_columns(CyclotomicField const &f, std::size_t ncols,
                                            std::function<SparseVector(Index)> const &column)
{
	struct Row
	{
		SparseVector image;
		SparseVector combo;
	};
	std::vector<Row> rows;
	std::unordered_map<Index, std::size_t> pivot;
	std::vector<SparseVector> kernel;
	for (Index j = 0; j < ncols; ++j)
	{
		SparseVector image = column(j);
		SparseVector combo = SparseVector::unit(f, j);
		while (!image.empty())
		{
			auto it = pivot.find(image.leading_index());
			if (it == pivot.end())
				break;
			Row const &r = rows[it->second];
			CycNumber c = -image.leading_coeff();
			image.axpy(c, r.image);
			combo.axpy(c, r.combo);
		}
		if (image.empty())
		{
			kernel.push_back(std::move(combo));
			continue;
		}
		CycNumber inv = image.leading_coeff().inverse();
		image.scale(inv);
		combo.scale(inv);
		pivot.emplace(image.leading_index(), rows.size());
		rows.push_back({std::move(image), std::move(combo)});
	}
	return kernel;
}

} // namespace ydlie
