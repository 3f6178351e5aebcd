#pragma once

// The braided tensor square A (x) A and the p-map x -> x (x) 1 + 1 (x) x, the
// primitive element theorem [p^n(z)] = p([z]), and degree-truncated universal
// enveloping algebras U(P) with coproduct, counit and antipode.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ydlie/brlie.hpp"

namespace ydlie {

/**
 * A (x) A with (a (x) b)(c (x) d) = chi(deg b, deg c) ac (x) bd. The label of
 * a (x) b is a * dim + b, named "<a>|<b>", of degree deg a + deg b.
 */
AlgebraPtr tensor_square(GradedAlgebra const &a);
/// x (x) y as an element of the tensor square.
TensorElement pair_element(GradedAlgebra const &sq, TensorElement const &x, TensorElement const &y);
TensorElement tensor_square_multiply(GradedAlgebra const &sq, TensorElement const &u, TensorElement const &v);

TensorElement p_map(GradedAlgebra const &a, GradedAlgebra const &sq, TensorElement const &x);
/// p^{(x)n}(z) in the n-th tensor power of A (x) A.
TensorElement p_power(GradedAlgebra const &a, GradedAlgebra const &sq, TensorElement const &z);

/// [p^n(z)] = p([z]) on a basis of A^n(zeta), with p^n(z) checked to lie in (A (x) A)^n(zeta).
Report verify_main_theorem(GradedAlgebra const &a, int n, RootOfUnity const &zeta);
/// sum_i c_i (nabla^i (x) nabla^{n-i}) sum_sigma sigma(z), as an element of A (x) A.
TensorElement c_expansion(GradedAlgebra const &a, GradedAlgebra const &sq, int n, RootOfUnity const &zeta,
                          TensorElement const &z);
/// [p^n(z)] against the c_i expansion with the computed c_i, and the middle terms vanish.
Report verify_c_expansion(GradedAlgebra const &a, int n, RootOfUnity const &zeta);

/**
 * A filtered Hopf algebra known up to a degree cap d. The basis consists of
 * monomials (words in the generators) of length <= d; products whose length
 * would exceed d are unknown.
 */
class TruncatedHopf
{
  public:
	struct Tables
	{
		std::vector<std::vector<int>> words;                     // basis monomials
		std::vector<std::vector<std::optional<SparseVector>>> mult; // nullopt: beyond cap
		std::vector<SparseVector> coproduct;                     // index a * dim + b
		std::vector<CycNumber> counit;
		std::vector<SparseVector> antipode;
		std::vector<SparseVector> generator_images; // image of each generator of P
	};

	TruncatedHopf(ModulePtr generators, int cap, Tables tables);

	ModulePtr const &generators() const { return generators_; }
	/// One label per basis monomial; degrees are the G-degrees of the words.
	ModulePtr const &carrier() const { return carrier_; }
	CyclotomicField const &field() const { return carrier_->field(); }
	int cap() const { return cap_; }
	int dim() const { return carrier_->dim(); }
	std::vector<int> const &word(int u) const { return tables_.words[u]; }
	int length(int u) const { return static_cast<int>(tables_.words[u].size()); }
	/// Number of basis monomials of each length 0..cap.
	std::vector<int> dims_by_length() const;
	/// Filtration degree (longest basis monomial in the support).
	int filtration_degree(SparseVector const &x) const;

	std::optional<SparseVector> const &product(int u, int v) const { return tables_.mult[u][v]; }
	SparseVector const &coproduct(int u) const { return tables_.coproduct[u]; }
	CycNumber const &counit(int u) const { return tables_.counit[u]; }
	SparseVector const &antipode(int u) const { return tables_.antipode[u]; }
	/// Label of the empty word.
	int unit_label() const { return 0; }
	std::optional<int> label_of_word(std::vector<int> const &w) const;
	SparseVector const &generator_image(int k) const { return tables_.generator_images[k]; }

	std::optional<SparseVector> multiply(SparseVector const &x, SparseVector const &y) const;
	/// Braided product on H (x) H (pair index a * dim + b).
	std::optional<SparseVector> multiply_pairs(SparseVector const &x, SparseVector const &y) const;
	SparseVector apply_antipode(SparseVector const &x) const;
	SparseVector apply_coproduct(SparseVector const &x) const;

	void set_coproduct(int u, SparseVector v) { tables_.coproduct[u] = std::move(v); }
	void set_antipode(int u, SparseVector v) { tables_.antipode[u] = std::move(v); }

	std::string dump() const;
	static TruncatedHopf import(std::string_view text);

  private:
	ModulePtr generators_;
	ModulePtr carrier_;
	int cap_;
	Tables tables_;
};

struct EnvelopingOptions
{
	int cap = 2;
	/// Sandwiches a r b are taken up to total length cap + slack, slack growing
	/// until the quotient dimensions repeat or max_slack is reached.
	int max_slack = 2;
};

/// U(P) = T(P) / (ι([z]) - sum_sigma sigma(z)), truncated.
class Enveloping
{
  public:
	Enveloping(BracketStructure const &p, EnvelopingOptions const &opts);

	TruncatedHopf const &hopf() const { return *hopf_; }
	int slack() const { return slack_; }
	bool stabilized() const { return stabilized_; }
	/// Quotient dimensions by length for each slack tried.
	std::vector<std::vector<int>> const &history() const { return history_; }
	/// Relations in word coordinates with their top degree.
	std::size_t relation_count() const { return relations_.size(); }

	/// S maps the ideal (within the cap) into itself.
	Report check_antipode_preserves_ideal() const;
	/// The algebra map T(P) -> A with x_k -> images[k] kills every ideal element within the cap.
	Report check_universal_map(GradedAlgebra const &a, std::vector<TensorElement> const &images) const;

  private:
	Index word_index(std::vector<int> const &w) const;
	std::vector<int> index_word(Index i) const;
	void add_sandwiches(int total_length);
	SparseVector normal_form(Index word) const;
	void build_tables(int cap);

	ModulePtr gens_;
	int m_;
	int max_len_ = 0;
	std::vector<Index> offset_;
	std::vector<std::pair<SparseVector, int>> relations_;
	std::unique_ptr<EchelonBasis> ideal_;
	std::vector<int> standard_label_; // word index -> quotient label or -1, lengths <= cap
	std::optional<TruncatedHopf> hopf_;
	int slack_ = 0;
	bool stabilized_ = false;
	std::vector<std::vector<int>> history_;
};

Report check_antipode(TruncatedHopf const &h);
Report check_coassociativity(TruncatedHopf const &h);
Report check_counit(TruncatedHopf const &h);
/// Delta(uv) = Delta(u) Delta(v) for basis pairs with len u + len v <= cap.
Report check_coproduct_multiplicative(TruncatedHopf const &h);

/// Ker(Delta - p) on the part of filtration degree <= cap - 1.
Subspace primitives(TruncatedHopf const &h);
/// Every generator is primitive.
Report check_generators_primitive(TruncatedHopf const &h);
/// Brackets of primitives (computed in H^L) are primitive, where they stay within the cap.
Report check_primitives_lie(TruncatedHopf const &h, int max_n);

} // namespace ydlie
