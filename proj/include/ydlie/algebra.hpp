#pragma once

// Associative unital algebras in the category: a graded module with
// degree-additive structure constants.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ydlie/ydspace.hpp"

namespace ydlie {

class GradedAlgebra
{
  public:
	/**
	 * products[a * dim + b] is the product of basis labels a and b. With
	 * validate set, associativity, the unit laws and degree additivity are
	 * checked exactly and a failure throws std::invalid_argument.
	 */
	GradedAlgebra(ModulePtr carrier, std::vector<SparseVector> products, SparseVector unit, bool validate = true);

	ModulePtr const &carrier() const { return carrier_; }
	CyclotomicField const &field() const { return carrier_->field(); }
	int dim() const { return carrier_->dim(); }

	SparseVector const &product(int a, int b) const { return products_[static_cast<std::size_t>(a) * dim() + b]; }
	SparseVector const &unit() const { return unit_; }
	TensorElement unit_element() const { return TensorElement(carrier_, 1, unit_); }

	TensorElement multiply(TensorElement const &x, TensorElement const &y) const;
	/// Product of the basis labels of a tuple, left to right (unit for the empty tuple).
	SparseVector multiply_tuple(std::vector<int> const &tuple) const;
	/// nabla^n: A^{(x)n} -> A.
	TensorElement nabla(TensorElement const &z) const;

	/// Description of the first violated axiom, if any.
	std::optional<std::string> validation_failure() const;

  private:
	SparseVector multiply_vectors(SparseVector const &x, SparseVector const &y) const;

	ModulePtr carrier_;
	std::vector<SparseVector> products_;
	SparseVector unit_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

} // namespace ydlie
