#pragma once

// Yetter-Drinfeld modules over the group algebra of a finite abelian group G:
// G-graded spaces whose G-action is forced by a bicharacter chi, their tensor
// powers and the braid group action through
//   tau(x_h (x) y_g) = chi(h, g) y_g (x) x_h.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ydlie/braid.hpp"
#include "ydlie/cyclo.hpp"
#include "ydlie/linalg.hpp"

namespace ydlie {

/// Product of cyclic groups C_{n1} x ... x C_{nr}. Elements are integers in
/// [0, size()) encoding exponent tuples, first factor most significant, so
/// integer order is lexicographic order on tuples.
class FiniteAbelianGroup
{
  public:
	explicit FiniteAbelianGroup(std::vector<int> orders = {});
	static FiniteAbelianGroup cyclic(int n) { return FiniteAbelianGroup({n}); }

	std::vector<int> const &orders() const { return orders_; }
	int rank() const { return static_cast<int>(orders_.size()); }
	int size() const { return size_; }

	int zero() const { return 0; }
	int add(int a, int b) const;
	int neg(int a) const;
	int sub(int a, int b) const { return add(a, neg(b)); }
	int multiple(int a, long long k) const;
	int element_order(int g) const;
	/// The k-th standard generator (0-based factor index).
	int generator(int k) const;

	std::vector<int> tuple(int g) const;
	int from_tuple(std::vector<int> const &t) const;

	/// "2" for cyclic groups, "(1,0)" otherwise; parse accepts both.
	std::string to_string(int g) const;
	int parse(std::string_view text) const;

	friend bool operator==(FiniteAbelianGroup const &a, FiniteAbelianGroup const &b)
	{
		return a.orders_ == b.orders_;
	}

  private:
	std::vector<int> orders_;
	std::vector<int> strides_;
	int size_;
};

/**
 * chi: G x G -> roots of unity in Q(z_L), given on generator pairs as
 * exponents k_ab (chi(g_a, g_b) = z_L^{k_ab}) and extended bimultiplicatively.
 */
class Bicharacter
{
  public:
	Bicharacter(FiniteAbelianGroup group, int ambient, std::vector<std::vector<int>> generator_exponents);
	static Bicharacter trivial(FiniteAbelianGroup group, int ambient);
	/// chi(a, b) = z_n^{k a b} on C_n, expressed in the ambient field.
	static Bicharacter cyclic_power(int n, int k, int ambient);

	FiniteAbelianGroup const &group() const { return group_; }
	int ambient() const { return ambient_; }
	CyclotomicField const &field() const { return *field_; }
	std::vector<std::vector<int>> const &generator_exponents() const { return gen_; }

	int exponent(int g, int h) const { return table_[static_cast<std::size_t>(g) * group_.size() + h]; }
	RootOfUnity value(int g, int h) const { return RootOfUnity(ambient_, exponent(g, h)); }
	/// Exponent of chi(g, h) chi(h, g).
	int double_exponent(int g, int h) const { return (exponent(g, h) + exponent(h, g)) % ambient_; }

  private:
	FiniteAbelianGroup group_;
	int ambient_;
	CyclotomicField const *field_;
	std::vector<std::vector<int>> gen_;
	std::vector<int> table_;
};

using BicharacterPtr = std::shared_ptr<const Bicharacter>;

/// Finite-dimensional G-graded space with a basis of homogeneous labels.
class GradedModule
{
  public:
	GradedModule(BicharacterPtr chi, std::vector<int> degrees, std::vector<std::string> names = {});
	/// Labels grouped by ascending degree, named e0, e1, ...
	static std::shared_ptr<const GradedModule> from_dims(BicharacterPtr chi, std::map<int, int> const &dims,
	                                                     std::string const &prefix = "e");

	BicharacterPtr const &chi_ptr() const { return chi_; }
	Bicharacter const &chi() const { return *chi_; }
	FiniteAbelianGroup const &group() const { return chi_->group(); }
	CyclotomicField const &field() const { return chi_->field(); }
	int ambient() const { return chi_->ambient(); }

	int dim() const { return static_cast<int>(degrees_.size()); }
	int degree(int label) const { return degrees_[label]; }
	std::vector<int> const &degrees() const { return degrees_; }
	std::string const &name(int label) const { return names_[label]; }
	std::vector<std::string> const &names() const { return names_; }
	std::optional<int> label_of(std::string_view name) const;

	/// Sorted degrees carrying at least one label.
	std::vector<int> degrees_present() const;
	std::vector<int> labels_of_degree(int g) const;
	std::map<int, int> dims_by_degree() const;

	// Basis tuples of the n-th tensor power are encoded in mixed radix with
	// slot 1 most significant, so index order is lexicographic order.
	Index tuple_count(int n) const;
	Index encode(std::span<const int> tuple) const;
	std::vector<int> decode(Index index, int n) const;
	void decode_into(Index index, std::vector<int> &tuple) const;
	int total_degree(std::span<const int> tuple) const;

	/// Apply one braid letter to a basis tuple in place; returns the exponent
	/// of the root of unity picked up.
	int apply_letter(std::vector<int> &tuple, BraidLetter const &l) const;
	/// Same for a word (rightmost letter first).
	int apply_word(std::vector<int> &tuple, BraidWord const &w) const;

  private:
	BicharacterPtr chi_;
	std::vector<int> degrees_;
	std::vector<std::string> names_;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

/// Scalar of the braiding on x_h (x) y_g.
RootOfUnity braiding(Bicharacter const &chi, int h, int g);

/// Element of the n-th tensor power of a graded module.
class TensorElement
{
  public:
	TensorElement(ModulePtr host, int power);
	TensorElement(ModulePtr host, int power, SparseVector coeffs);
	static TensorElement basis(ModulePtr host, std::vector<int> const &tuple);

	ModulePtr const &host() const { return host_; }
	int power() const { return power_; }
	SparseVector const &coeffs() const { return coeffs_; }
	bool is_zero() const { return coeffs_.empty(); }
	CyclotomicField const &field() const { return host_->field(); }

	void add_term(std::vector<int> const &tuple, CycNumber const &c);
	TensorElement &operator+=(TensorElement const &b);
	TensorElement &operator-=(TensorElement const &b);
	friend TensorElement operator+(TensorElement a, TensorElement const &b) { return a += b; }
	friend TensorElement operator-(TensorElement a, TensorElement const &b) { return a -= b; }
	TensorElement scaled(CycNumber const &c) const;
	friend bool operator==(TensorElement const &a, TensorElement const &b);

	/// Degree of every term when they agree.
	std::optional<int> homogeneous_degree() const;

	/// "c * (e0,e1) + (1/2 - z) * (e1,e0)"; "0" for zero.
	std::string to_string() const;

  private:
	void check_compatible(TensorElement const &b) const;

	ModulePtr host_;
	int power_;
	SparseVector coeffs_;
};

/// Concatenation a (x) b.
TensorElement tensor_product(TensorElement const &a, TensorElement const &b);

TensorElement apply_word(BraidWord const &w, TensorElement const &z);

/// zeta^{-l(s)} applied to the minimal positive lift of s.
TensorElement sn_action(Permutation const &s, RootOfUnity const &zeta, TensorElement const &z);

/// Checks t_i t_{i+1} t_i = t_{i+1} t_i t_{i+1} and far commutation on the
/// n-th tensor power; returns a failing basis tuple rendering, if any.
std::optional<std::string> yang_baxter_witness(GradedModule const &m, int n);
inline bool check_yang_baxter(GradedModule const &m, int n) { return !yang_baxter_witness(m, n); }

/**
 * Linear map between tensor powers given by its columns on basis tuples.
 * For morphisms of the category the degree shift is zero.
 */
class GradedMap
{
  public:
	GradedMap(ModulePtr source, int source_power, ModulePtr target, int target_power, int degree_shift,
	          std::vector<SparseVector> columns);
	static GradedMap from_function(ModulePtr source, int source_power, ModulePtr target, int target_power,
	                               int degree_shift, std::function<SparseVector(std::vector<int> const &)> const &f);

	ModulePtr const &source() const { return source_; }
	ModulePtr const &target() const { return target_; }
	int source_power() const { return source_power_; }
	int target_power() const { return target_power_; }
	int degree_shift() const { return shift_; }
	SparseVector const &column(Index i) const { return columns_[i]; }

	/// True when every column lands in the shifted degree component.
	bool respects_grading() const;

	TensorElement apply(TensorElement const &z) const;

  private:
	ModulePtr source_, target_;
	int source_power_, target_power_;
	int shift_;
	std::vector<SparseVector> columns_;
};

/**
 * Contract the m slots starting at `slot` (1-based): z is split by the
 * labels of the remaining slots and f is applied to each m-fold part. f must
 * return elements of a fixed power q (over the same host).
 */
TensorElement contract_slots(TensorElement const &z, int slot, int m, int q,
                             std::function<TensorElement(TensorElement const &)> const &f);

/// 1 (x) ... (x) f (x) ... (x) 1 with f acting on the slots starting at `slot`.
TensorElement apply_at_slot(GradedMap const &f, TensorElement const &z, int slot);

} // namespace ydlie
