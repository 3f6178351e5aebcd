#pragma once

// Partial n-ary brackets [z] = sum_sigma nabla^n sigma(z) on zeta-symmetrized
// tensors, bracket structures given as (domain, linear map) pairs, composite
// bracket operators and the Lie axiom checks.

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ydlie/algebra.hpp"
#include "ydlie/errors.hpp"
#include "ydlie/report.hpp"
#include "ydlie/symzeta.hpp"

namespace ydlie {

/// sum over S_n of sn_action(sigma, zeta, z).
TensorElement symmetrized_sum(RootOfUnity const &zeta, TensorElement const &z);

/// Bracket of an algebra on A^n(zeta); zeta must be a primitive n-th root.
/// Throws DomainError when z is not in A^n(zeta).
TensorElement bracket(GradedAlgebra const &a, int n, RootOfUnity const &zeta, TensorElement const &z);

/**
 * For each (n, zeta) a domain subspace of the n-th tensor power and the
 * images of its canonical basis. The bracket is never extended by zero
 * outside its domain.
 */
class BracketStructure
{
  public:
	struct Entry
	{
		Subspace domain;
		std::vector<TensorElement> values; // aligned with domain.basis()
	};
	using Key = std::pair<int, int>; // (n, exponent of zeta)

	explicit BracketStructure(ModulePtr carrier) : carrier_(std::move(carrier)) {}

	ModulePtr const &carrier() const { return carrier_; }

	/// Checks that values are degree preserving on homogeneous basis elements.
	void set(int n, RootOfUnity const &zeta, Subspace domain, std::vector<TensorElement> values);
	/// Overwrites one value without any check (used to build negative controls).
	void set_value(int n, RootOfUnity const &zeta, std::size_t k, TensorElement value);

	Entry const *find(int n, RootOfUnity const &zeta) const;
	std::vector<std::pair<int, RootOfUnity>> keys() const;
	int max_n() const;

	/// Throws DomainError outside the domain.
	TensorElement apply(int n, RootOfUnity const &zeta, TensorElement const &z) const;

  private:
	ModulePtr carrier_;
	std::map<Key, Entry> entries_;
};

/// True when some degree tuple of the module could support a bracket of
/// arity n, independently of whether the ambient field has the needed root.
bool arity_possible(GradedModule const &m, int n);

/// The Lie structure A^L: domains A^n(zeta) for all n <= max_n and all
/// primitive n-th roots in the ambient field, n = 1 included ([x] = x).
BracketStructure lie_from_algebra(GradedAlgebra const &a, int max_n);
/// Every bracket of arity >= 2 is zero (n = 1 stays the identity), on all
/// nonzero domains with n <= max_n.
BracketStructure abelian_lie(ModulePtr p, int max_n);

/// [x_1, [x_2, ..., x_{n+1}]_n]_2 on P (x) P^n(zeta); the intermediate must lie in P^2(-1).
TensorElement inner_then_outer(BracketStructure const &l, int n, RootOfUnity const &zeta, TensorElement const &z);
/// [[x_1, ..., x_n]_n, x_{n+1}]_2 on P^n(zeta) (x) P.
TensorElement outer_then_inner(BracketStructure const &l, int n, RootOfUnity const &zeta, TensorElement const &z);
/// [y_1, ..., [x, y_i]_2, ..., y_n]_n for z = x (x) y_1 (x) ... (x) y_n in P^{n+1}(-1, zeta).
TensorElement nested_bracket_at(BracketStructure const &l, int n, RootOfUnity const &zeta, int i,
                                TensorElement const &z);

Report check_antisymmetry(BracketStructure const &l, int n, RootOfUnity const &zeta);
Report check_jacobi1(BracketStructure const &l, int n, RootOfUnity const &zeta);
Report check_jacobi2(BracketStructure const &l, int n, RootOfUnity const &zeta);

/// tau (1 (x) [.,.]) = ([.,.] (x) 1) t_n...t_1 and its mirror, on P^{n+1}(zeta).
Report check_bracket_transport(BracketStructure const &l, int n, RootOfUnity const &zeta);
/// phi_(i) t_{i-1}...t_1 = t_{j-1}...t_1 (1 (x) phi) and the variant with t_i...t_1,
/// on P^{n+1}(-1, zeta), j the image of i under phi.
Report check_lifted_braids(ModulePtr p, int n, RootOfUnity const &zeta, std::vector<BraidWord> const &phis);
/// Contracting slots (i, i+1) of t_{i-1}...t_1(z) by f lands in P^n(zeta).
Report check_slot_contraction(ModulePtr p, int n, RootOfUnity const &zeta, GradedMap const &f);

/// Returns nullopt when the bracket cannot be evaluated (reported as SKIPPED).
using BracketFn = std::function<std::optional<TensorElement>(int, RootOfUnity const &, TensorElement const &)>;

/**
 * Closure of a graded subspace S of the carrier: every bracket of a tuple of
 * homogeneous basis elements of S whose degrees form a zeta-family lies in S.
 * Throws std::invalid_argument when S is not graded.
 */
Report subalgebra_report(ModulePtr carrier, std::vector<std::pair<int, RootOfUnity>> const &keys,
                         BracketFn const &bracket, Subspace const &s, std::string const &check = "subalgebra");
Report subalgebra_report(BracketStructure const &l, Subspace const &s, std::string const &check = "subalgebra");
bool is_lie_subalgebra(BracketStructure const &l, Subspace const &s);

/// Every (n, zeta) with n <= max_n and zeta a primitive n-th root in the ambient field.
std::vector<std::pair<int, RootOfUnity>> available_arities(int ambient, int max_n);

} // namespace ydlie
