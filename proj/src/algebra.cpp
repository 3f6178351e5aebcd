#include "ydlie/algebra.hpp"

#include <stdexcept>

namespace ydlie {

GradedAlgebra::GradedAlgebra(ModulePtr carrier, std::vector<SparseVector> products, SparseVector unit, bool validate)
    : carrier_(std::move(carrier)), products_(std::move(products)), unit_(std::move(unit))
{
	if (!carrier_)
		throw std::invalid_argument("algebra without carrier");
	std::size_t const d = static_cast<std::size_t>(carrier_->dim());
	if (products_.size() != d * d)
		throw std::invalid_argument("multiplication table must have dim^2 entries");
	auto in_range = [&](SparseVector const &v) { return v.empty() || v.entries().back().first < d; };
	for (auto const &p : products_)
		if (!in_range(p))
			throw std::invalid_argument("multiplication table refers to a label outside the carrier");
	if (!in_range(unit_))
		throw std::invalid_argument("unit refers to a label outside the carrier");
	if (validate)
		if (auto why = validation_failure())
			throw std::invalid_argument("not an algebra in the category: " + *why);
}

SparseVector GradedAlgebra::multiply_vectors(SparseVector const &x, SparseVector const &y) const
{
	SparseVector out;
	for (auto const &[a, ca] : x)
		for (auto const &[b, cb] : y)
		{
			auto const &p = product(static_cast<int>(a), static_cast<int>(b));
			if (!p.empty())
				out.axpy(ca * cb, p);
		}
	return out;
}

TensorElement GradedAlgebra::multiply(TensorElement const &x, TensorElement const &y) const
{
	if (x.host() != carrier_ || y.host() != carrier_ || x.power() != 1 || y.power() != 1)
		throw std::invalid_argument("multiply expects elements of the algebra");
	return TensorElement(carrier_, 1, multiply_vectors(x.coeffs(), y.coeffs()));
}

SparseVector GradedAlgebra::multiply_tuple(std::vector<int> const &tuple) const
{
	if (tuple.empty())
		return unit_;
	SparseVector acc = SparseVector::unit(field(), static_cast<Index>(tuple[0]));
	for (std::size_t k = 1; k < tuple.size() && !acc.empty(); ++k)
	{
		SparseVector next;
		for (auto const &[a, c] : acc)
		{
			auto const &p = product(static_cast<int>(a), tuple[k]);
			if (!p.empty())
				next.axpy(c, p);
		}
		acc = std::move(next);
	}
	return acc;
}

TensorElement GradedAlgebra::nabla(TensorElement const &z) const
{
	if (z.host() != carrier_)
		throw std::invalid_argument("nabla expects a tensor power of the carrier");
	SparseVector out;
	std::vector<int> t(z.power());
	for (auto const &[i, c] : z.coeffs())
	{
		carrier_->decode_into(i, t);
		auto p = multiply_tuple(t);
		if (!p.empty())
			out.axpy(c, p);
	}
	return TensorElement(carrier_, 1, std::move(out));
}

std::optional<std::string> GradedAlgebra::validation_failure() const
{
	auto const &m = *carrier_;
	auto const &G = m.group();
	int const d = dim();
	auto name = [&](int a) { return m.name(a); };
	for (auto const &[i, c] : unit_)
		if (m.degree(static_cast<int>(i)) != G.zero())
			return "unit has a component of nonzero degree";
	for (int a = 0; a < d; ++a)
		for (int b = 0; b < d; ++b)
			for (auto const &[i, c] : product(a, b))
				if (m.degree(static_cast<int>(i)) != G.add(m.degree(a), m.degree(b)))
					return "product " + name(a) + "*" + name(b) + " is not of degree deg a + deg b";
	for (int a = 0; a < d; ++a)
	{
		auto e = SparseVector::unit(field(), static_cast<Index>(a));
		if (!(multiply_vectors(unit_, e) == e))
			return "1*" + name(a) + " != " + name(a);
		if (!(multiply_vectors(e, unit_) == e))
			return name(a) + "*1 != " + name(a);
	}
	for (int a = 0; a < d; ++a)
		for (int b = 0; b < d; ++b)
		{
			auto const &ab = product(a, b);
			for (int c = 0; c < d; ++c)
			{
				auto left = multiply_vectors(ab, SparseVector::unit(field(), static_cast<Index>(c)));
				auto right = multiply_vectors(SparseVector::unit(field(), static_cast<Index>(a)), product(b, c));
				if (!(left == right))
					return "(" + name(a) + "*" + name(b) + ")*" + name(c) + " != " + name(a) + "*(" + name(b) + "*" +
					       name(c) + ")";
			}
		}
	return std::nullopt;
}

} // namespace ydlie
