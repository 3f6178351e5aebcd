#pragma once

// Braid words and their images in the symmetric group.
//
// Convention: a word is read like a composite of operators, so the rightmost
// letter acts first. "t2 t1" applied to a tensor moves the first factor to
// slot 2 and then to slot 3. The quotient map to permutations is a
// homomorphism for composition of functions: perm(w v) = perm(w) o perm(v),
// and perm(w)(k) is the slot that the factor starting in slot k ends up in.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ydlie {

struct BraidLetter
{
	int index; // generator t_index, 1 <= index < strands
	int sign;  // +1 or -1

	friend bool operator==(BraidLetter const &, BraidLetter const &) = default;
};

class Permutation;

class BraidWord
{
  public:
	explicit BraidWord(int strands);
	BraidWord(int strands, std::vector<BraidLetter> letters);
	/// Positive word from generator indices.
	static BraidWord positive(int strands, std::vector<int> const &indices);

	int strands() const { return strands_; }
	std::vector<BraidLetter> const &letters() const { return letters_; }
	std::size_t length() const { return letters_.size(); }
	bool empty() const { return letters_.empty(); }
	bool is_positive() const;

	/// Concatenation; as operators, other acts first.
	BraidWord operator*(BraidWord const &other) const;
	BraidWord inverse() const;
	/// Cancels adjacent t_i t_i^-1 pairs until none remain.
	BraidWord free_reduced() const;
	/// The same word on strands + k strands with every index shifted by k
	/// (the braid 1^k (x) w).
	BraidWord shifted(int k, int strands) const;
	/// The same word on more strands (the braid w (x) 1).
	BraidWord widened(int strands) const;

	Permutation to_permutation() const;

	friend bool operator==(BraidWord const &, BraidWord const &) = default;

	/// "t1 t2' t1"; "1" for the empty word.
	std::string to_string() const;
	static BraidWord parse(int strands, std::string_view text);

  private:
	int strands_;
	std::vector<BraidLetter> letters_;
};

/// A bijection of {1..n}, stored as its images.
class Permutation
{
  public:
	explicit Permutation(int n); // identity
	explicit Permutation(std::vector<int> images);
	static Permutation transposition(int n, int i, int j);
	/// Cycle notation (a1 a2 ... ak): a1 -> a2 -> ... -> ak -> a1.
	static Permutation cycle(int n, std::vector<int> const &points);

	int size() const { return static_cast<int>(images_.size()); }
	int operator()(int k) const { return images_[k - 1]; }
	std::vector<int> const &images() const { return images_; }

	/// Function composition: (a * b)(k) = a(b(k)).
	Permutation operator*(Permutation const &b) const;
	Permutation inverse() const;
	int length() const; // inversion count
	bool is_identity() const;

	friend bool operator==(Permutation const &, Permutation const &) = default;
	friend auto operator<=>(Permutation const &, Permutation const &) = default;

	std::string to_string() const;

  private:
	std::vector<int> images_;
};

/// All permutations of {1..n} in lexicographic order of their images.
std::vector<Permutation> all_permutations(int n);

/// Lexicographically smallest positive word of length l(s) mapping to s.
BraidWord minimal_lift(Permutation const &s);

/// t_i^-1 t_{i+1}^-1 ... t_{j-2}^-1 t_{j-1} t_{j-2} ... t_i on n strands.
BraidWord pi_element(int i, int j, int n);

/// The lift of w along the contraction of strands (i, i+1) of n+1 strands
/// into one strand: returns the word on n+1 strands and the slot j = perm(w)(i)
/// where the contracted strand ends.
std::pair<BraidWord, int> phi_lift(BraidWord const &w, int i);

/// (t1)(t2 t1)...(t_{n-1} ... t2 t1), the positive half twist.
BraidWord full_twist(int n);

/// t_k t_{k-1} ... t_1 on n strands (moves the first factor to slot k+1).
BraidWord descending_run(int k, int n);
/// t_1 t_2 ... t_k on n strands.
BraidWord ascending_run(int k, int n);

} // namespace ydlie
