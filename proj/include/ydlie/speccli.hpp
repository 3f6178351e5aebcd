#pragma once

// Problem description language (".yd" files), its materialization into
// library objects, and the command line surface.
//
//   group C3                       # or C2xC2, ...
//   root 3                         # z below is a primitive 3rd root of unity
//   bichar g1 g1 = z^1             # one line per ordered generator pair
//   module V { 0:1 1:1 2:1 }       # degree:dim, degrees as 1,0 for products
//   algebra A = end(V)
//   algebra X {                    # explicit structure constants on e0, e1, ...
//     dims { 0:1 1:1 }
//     unit e0
//     mult e1 e1 = 2 e0 + (z) e1
//     validate off                 # keep a table that breaks the axioms
//   }
//   form B on V { 0 0 = 1; 1 2 = z }
//   lie L = from(A, max_n=3)       # also og(B, ...), der(A, ...), zero(V, ...)

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ydlie/hopf.hpp"
#include "ydlie/models.hpp"

namespace ydlie {

/// Parse or validation failure with a 1-based source position.
class SpecError : public std::runtime_error
{
  public:
	SpecError(int line, int column, std::string const &message);
	int line() const { return line_; }
	int column() const { return column_; }
	std::string const &message() const { return message_; }

  private:
	int line_, column_;
	std::string message_;
};

/// Coefficients live in Q(z_root) as declared; labels are module label indices.
using Coefficients = std::map<int, CycNumber>;

struct ProblemSpec
{
	struct Module
	{
		std::string name;
		std::map<int, int> dims; // group element -> dimension
		friend bool operator==(Module const &, Module const &) = default;
	};
	struct Algebra
	{
		std::string name;
		std::string end_of; // nonempty for end(<module>)
		std::map<int, int> dims;
		Coefficients unit;
		std::map<std::pair<int, int>, Coefficients> mult;
		bool validate = true;
		friend bool operator==(Algebra const &, Algebra const &) = default;
	};
	struct Form
	{
		std::string name;
		std::string module;
		std::map<std::pair<int, int>, CycNumber> entries;
		friend bool operator==(Form const &, Form const &) = default;
	};
	struct Lie
	{
		std::string name;
		std::string kind; // from, og, der, zero
		std::string source;
		int max_n = 2;
		friend bool operator==(Lie const &, Lie const &) = default;
	};

	std::vector<int> group_orders;
	int root = 0;
	std::map<std::pair<int, int>, int> bichar; // 0-based generator pair -> exponent of z_root
	std::vector<Module> modules;
	std::vector<Algebra> algebras;
	std::vector<Form> forms;
	std::vector<Lie> lies;

	friend bool operator==(ProblemSpec const &, ProblemSpec const &) = default;
};

ProblemSpec parse_spec(std::string_view text);
/// Canonical text; parse_spec(render_spec(s)) == s.
std::string render_spec(ProblemSpec const &spec);

struct LieObject
{
	BracketStructure lie;
	AlgebraPtr ambient;                // algebra the brackets were computed in, if any
	std::vector<TensorElement> inclusion; // images of the carrier labels in ambient
};

/**
 * Library objects for a parsed spec. Computation happens in Q(z_L') with
 * L' = lcm(root, 2), so that -1 is always a root power; this is the same
 * field as Q(z_root). Inputs and outputs use the declared root.
 */
class Workspace
{
  public:
	explicit Workspace(ProblemSpec spec);

	ProblemSpec const &spec() const { return spec_; }
	int declared_root() const { return spec_.root; }
	int ambient() const { return ambient_; }
	BicharacterPtr const &chi() const { return chi_; }
	FiniteAbelianGroup const &group() const { return chi_->group(); }

	bool has(std::string const &name) const;
	ModulePtr module(std::string const &name) const;
	AlgebraPtr algebra(std::string const &name) const;
	BilinearForm const &form(std::string const &name) const;
	LieObject const &lie(std::string const &name) const;
	/// Module of a module, algebra, lie structure or form by name.
	ModulePtr carrier_of(std::string const &name) const;

	/// "z^k", "z", "-z^k", "1" or "-1", powers of the declared root.
	RootOfUnity parse_zeta(std::string_view text) const;
	std::string render_zeta(RootOfUnity const &zeta) const;
	/// Declared-field number into the computation field and back.
	CycNumber embed(CycNumber const &c) const;
	CycNumber to_declared(CycNumber const &c) const;

	/// Sum of terms "[coeff] [*] label" or "[coeff] [*] (l1,...,ln)"; a
	/// coefficient is a rational or a parenthesized expression in z.
	TensorElement parse_element(ModulePtr const &host, int power, std::string_view text) const;
	/// "c * (l1,...,ln) + ..." with coefficients in the declared field.
	std::string render_element(TensorElement const &z) const;
	std::string render_subspace(Subspace const &s) const;
	/// Rewrites zeta fields of a report in declared terms.
	Report declared(Report const &r) const;

  private:
	ProblemSpec spec_;
	int ambient_;
	BicharacterPtr chi_;
	std::map<std::string, ModulePtr> modules_;
	std::map<std::string, AlgebraPtr> algebras_;
	std::map<std::string, std::unique_ptr<BilinearForm>> forms_;
	mutable std::map<std::string, std::unique_ptr<LieObject>> lies_;
};

/// Runs the command line; returns 0 when every check passes, 1 on a failed
/// check and 2 on input errors.
int run_command(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace ydlie
