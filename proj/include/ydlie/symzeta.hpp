#pragma once

// zeta-symmetrized subspaces of tensor powers: M^n(zeta) through the braid
// eigenvalue conditions and through zeta-families of degrees, and the mixed
// subspace P^{n+1}(-1, zeta).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ydlie/ydspace.hpp"

namespace ydlie {

/// Subspace of a tensor power, kept in canonical reduced echelon form.
class Subspace
{
  public:
	Subspace(ModulePtr host, int power);
	static Subspace whole(ModulePtr host, int power);
	static Subspace span(ModulePtr host, int power, std::vector<TensorElement> const &gens);
	/// Span of the given basis tuples (encoded indices).
	static Subspace coordinate(ModulePtr host, int power, std::vector<Index> tuples);

	ModulePtr const &host() const { return host_; }
	int power() const { return power_; }
	std::size_t dimension() const { return basis_.dimension(); }
	bool is_zero() const { return dimension() == 0; }

	bool insert(TensorElement const &z);
	bool contains(TensorElement const &z) const;
	bool contains(Subspace const &other) const;
	/// Coordinates with respect to basis(), when z lies in the subspace.
	std::optional<std::vector<CycNumber>> coordinates(TensorElement const &z) const;
	/// Canonical basis, ordered by pivot tuple.
	std::vector<TensorElement> basis() const;

	friend bool operator==(Subspace const &a, Subspace const &b);

	/// "power n dim d" followed by one basis element per line.
	std::string export_text() const;
	static Subspace import_text(ModulePtr host, std::string_view text);

  private:
	void refresh_order() const;

	ModulePtr host_;
	int power_;
	EchelonBasis basis_;
	mutable std::vector<std::size_t> order_; // basis() position -> row index
	mutable bool order_valid_ = false;
};

/// Span of a (x) b over bases of both subspaces.
Subspace tensor_subspaces(Subspace const &a, Subspace const &b);
Subspace intersect(Subspace const &a, Subspace const &b);

/// Elements z of `domain` with w(z) = eigen * z for every word w.
Subspace common_eigenspace(Subspace const &domain, std::vector<BraidWord> const &words, CycNumber const &eigen);

/// t_i^-1 ... t_{j-1}^-1 t_j^2 t_{j-1} ... t_i for 1 <= i <= j <= n-1.
std::vector<BraidWord> zeta_condition_words(int n);

/// Exact membership test of an element in M^n(zeta) via the condition words.
bool in_zeta_symmetrized(TensorElement const &z, RootOfUnity const &zeta);

/// Kernel computation over the reduced condition set.
Subspace symmetrize_kernel(ModulePtr m, int n, RootOfUnity const &zeta);

struct ZetaFamily
{
	std::vector<int> degrees;
	RootOfUnity zeta;
};

/// Degree tuples with chi(g_i,g_j)chi(g_j,g_i) = z_L^square_exponent for all
/// i != j, in lexicographic order.
std::vector<std::vector<int>> degree_families(Bicharacter const &chi, std::vector<int> const &degrees, int n,
                                              int square_exponent);

/// Tuples over `degrees` (sorted ascending) with chi(g_i,g_j)chi(g_j,g_i) =
/// zeta^2 for all i != j, in lexicographic order.
std::vector<ZetaFamily> zeta_families(Bicharacter const &chi, std::vector<int> const &degrees, int n,
                                      RootOfUnity const &zeta);

/// Direct sum of the homogeneous blocks over zeta-families.
Subspace symmetrize_graded(ModulePtr m, int n, RootOfUnity const &zeta);

/// P^{n+1}(-1, zeta) by intersecting P (x) P^n(zeta) with the fixed points
/// of (1 (x) phi)^-1 t_1^2 (1 (x) phi) over minimal lifts phi of S_n.
Subspace minus_one_zeta_kernel(ModulePtr p, int n, RootOfUnity const &zeta);
/// Blocks P_{g0} (x) (family block) with chi(g0,g_i)chi(g_i,g0) = 1.
Subspace minus_one_zeta_subspace(ModulePtr p, int n, RootOfUnity const &zeta);

/// Degree components of an element of the first tensor power.
std::map<int, TensorElement> degree_components(TensorElement const &z);
/// True when the subspace (of the first power) is a sum of its homogeneous parts.
bool is_graded(Subspace const &s);
/// Basis of homogeneous elements spanning a graded subspace.
std::vector<TensorElement> homogeneous_basis(Subspace const &s);

} // namespace ydlie
