#pragma once

// Concrete algebras and Lie algebras: graded endomorphism algebras, small
// commutative test algebras, braided derivations and the orthogonal-type
// subalgebras og(V) of End(V) cut out by a bilinear form.

#include <map>
#include <utility>
#include <vector>

#include "ydlie/brlie.hpp"

namespace ydlie {

/**
 * End(V) graded by End(V)_i = {f | f(V_j) in V_{i+j}}. The label a*dim+b
 * (named "E<a>_<b>") is the matrix unit sending e_b to e_a, of degree
 * deg a - deg b. Multiplication is composition.
 */
AlgebraPtr graded_end(ModulePtr v);
/// ev(f (x) x) = f(x) for f in graded_end(v).
TensorElement evaluate(GradedAlgebra const &end, ModulePtr const &v, TensorElement const &f, TensorElement const &x);

/// The one-dimensional algebra k in degree 0.
AlgebraPtr ground_field(BicharacterPtr chi);
/// k[x]/(x^length) with x of degree g; labels "1", "x", "x^2", ...
AlgebraPtr truncated_polynomial(BicharacterPtr chi, int g, int length);

/// Linear maps d: A -> A with d(ab) = d(a)b + chi(deg d, deg a) a d(b) on
/// homogeneous d, as a subspace of the carrier of `end` = graded_end(A's carrier).
Subspace derivation_space(GradedAlgebra const &a, GradedAlgebra const &end);

class BilinearForm
{
  public:
	/// Entries keyed by label pairs; nonzero values need deg a + deg b = 0.
	BilinearForm(ModulePtr host, std::map<std::pair<int, int>, CycNumber> const &entries);

	ModulePtr const &host() const { return host_; }
	CycNumber const &value(int a, int b) const { return matrix_[static_cast<std::size_t>(a) * host_->dim() + b]; }
	std::map<std::pair<int, int>, CycNumber> nonzero_entries() const;

  private:
	ModulePtr host_;
	std::vector<CycNumber> matrix_;
};

/// og(V)_i = {f in End(V)_i | <f v, w> = -chi(i, deg v) <v, f w>}, summed over i.
Subspace og_subspace(GradedAlgebra const &end, BilinearForm const &form);

/// Closure of a graded subspace of A under every bracket of A^L with n <= max_n.
Report closure_report(GradedAlgebra const &a, int max_n, Subspace const &s, std::string const &check);
Report check_der_closure(GradedAlgebra const &a, int max_n);
Report check_og_closure(BilinearForm const &form, int max_n);

/// A bracket-closed graded subspace S of A seen as a Lie structure on its own:
/// labels p0, p1, ... for a homogeneous basis of S, and their images in A.
struct RestrictedLie
{
	BracketStructure lie;
	std::vector<TensorElement> inclusion;
};

/// Restricts the brackets of A^L (n <= max_n) to S; throws InvariantViolation
/// when a bracket leaves S.
RestrictedLie restrict_lie(GradedAlgebra const &a, Subspace const &s, int max_n);

} // namespace ydlie
