#include "ydlie/speccli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ydlie/errors.hpp"

namespace ydlie {

SpecError::SpecError(int line, int column, std::string const &message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line),
      column_(column), message_(message)
{
}

namespace {

std::string trim(std::string_view s)
{
	auto b = s.find_first_not_of(" \t\r\n");
	if (b == std::string_view::npos)
		return {};
	auto e = s.find_last_not_of(" \t\r\n");
	return std::string(s.substr(b, e - b + 1));
}

bool is_integer(std::string_view s)
{
	return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// ---------------------------------------------------------------------------
// lexer

enum class Tok
{
	Word,
	Sym,
	Sep,
	End
};

struct Token
{
	Tok kind;
	std::string text;
	int line, column;
	std::size_t begin, end; // source offsets
};

bool word_char(char c)
{
	return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^' || c == '/' || c == '.';
}

std::vector<Token> lex(std::string_view src)
{
	std::vector<Token> out;
	int line = 1, col = 1;
	std::size_t i = 0;
	auto advance = [&](std::size_t k) {
		for (std::size_t q = 0; q < k; ++q, ++i)
		{
			if (src[i] == '\n')
			{
				++line;
				col = 1;
			}
			else
				++col;
		}
	};
	while (i < src.size())
	{
		char c = src[i];
		if (c == '#')
		{
			while (i < src.size() && src[i] != '\n')
				advance(1);
			continue;
		}
		if (c == '\n' || c == ';')
		{
			out.push_back({Tok::Sep, std::string(1, c), line, col, i, i + 1});
			advance(1);
			continue;
		}
		if (std::isspace(static_cast<unsigned char>(c)))
		{
			advance(1);
			continue;
		}
		if (word_char(c))
		{
			std::size_t j = i;
			while (j < src.size() && word_char(src[j]))
				++j;
			out.push_back({Tok::Word, std::string(src.substr(i, j - i)), line, col, i, j});
			advance(j - i);
			continue;
		}
		if (std::string_view("{}()=:,+-*").find(c) != std::string_view::npos)
		{
			out.push_back({Tok::Sym, std::string(1, c), line, col, i, i + 1});
			advance(1);
			continue;
		}
		throw SpecError(line, col, std::string("unexpected character '") + c + "'");
	}
	out.push_back({Tok::End, "", line, col, src.size(), src.size()});
	return out;
}

// ---------------------------------------------------------------------------
// element terms shared by the DSL and the command line

struct Term
{
	CycNumber coeff;
	std::vector<std::string> labels;
	bool tuple = false;
};

std::size_t matching_paren(std::string_view s, std::size_t open)
{
	int depth = 0;
	for (std::size_t k = open; k < s.size(); ++k)
	{
		if (s[k] == '(')
			++depth;
		else if (s[k] == ')' && --depth == 0)
			return k;
	}
	throw std::invalid_argument("unbalanced parentheses in '" + std::string(s) + "'");
}

std::string strip_outer_parens(std::string s)
{
	s = trim(s);
	while (s.size() >= 2 && s.front() == '(' && matching_paren(s, 0) == s.size() - 1)
		s = trim(s.substr(1, s.size() - 2));
	return s;
}

std::vector<Term> parse_terms(std::string_view text, CyclotomicField const &f)
{
	// split at top-level signs
	std::vector<std::pair<bool, std::string>> chunks;
	int depth = 0;
	std::string cur;
	bool negative = false;
	auto flush = [&] {
		auto t = trim(cur);
		if (!t.empty())
			chunks.emplace_back(negative, t);
		else if (!chunks.empty() || negative)
			throw std::invalid_argument("empty term in '" + std::string(text) + "'");
		cur.clear();
	};
	bool any = false, sign_pending = false;
	for (char c : text)
	{
		if (c == '(')
			++depth;
		else if (c == ')')
			--depth;
		if (depth == 0 && (c == '+' || c == '-'))
		{
			if (sign_pending && trim(cur).empty())
				negative = negative != (c == '-');
			else
			{
				if (any || !trim(cur).empty())
					flush();
				negative = c == '-';
			}
			any = sign_pending = true;
			continue;
		}
		if (!std::isspace(static_cast<unsigned char>(c)))
			sign_pending = false;
		cur += c;
	}
	if (depth != 0)
		throw std::invalid_argument("unbalanced parentheses in '" + std::string(text) + "'");
	flush();
	if (chunks.empty())
		throw std::invalid_argument("empty element");

	std::vector<Term> out;
	for (auto const &[neg, chunk] : chunks)
	{
		std::string coeff_text, factor;
		bool tuple = false;
		if (chunk.back() == ')')
		{
			// the last parenthesized group is the tuple
			std::size_t open = chunk.size() - 1;
			int d = 0;
			for (std::size_t k = chunk.size(); k-- > 0;)
			{
				if (chunk[k] == ')')
					++d;
				else if (chunk[k] == '(' && --d == 0)
				{
					open = k;
					break;
				}
			}
			factor = chunk.substr(open + 1, chunk.size() - open - 2);
			coeff_text = chunk.substr(0, open);
			tuple = true;
		}
		else
		{
			std::size_t cut = chunk.find_last_of(" \t*");
			if (cut == std::string::npos)
				factor = chunk;
			else
			{
				factor = chunk.substr(cut + 1);
				coeff_text = chunk.substr(0, cut + 1);
			}
		}
		coeff_text = trim(coeff_text);
		if (!coeff_text.empty() && coeff_text.back() == '*')
			coeff_text = trim(coeff_text.substr(0, coeff_text.size() - 1));
		coeff_text = strip_outer_parens(coeff_text);
		CycNumber c = coeff_text.empty() ? CycNumber::one(f) : CycNumber::parse(f, coeff_text);
		if (neg)
			c = -c;
		Term t{c, {}, tuple};
		if (tuple)
		{
			std::stringstream ss(factor);
			std::string part;
			while (std::getline(ss, part, ','))
				t.labels.push_back(trim(part));
		}
		else
			t.labels.push_back(trim(factor));
		for (auto const &l : t.labels)
			if (l.empty())
				throw std::invalid_argument("missing label in '" + chunk + "'");
		out.push_back(std::move(t));
	}
	return out;
}

std::string render_coeffs(Coefficients const &v)
{
	std::string s;
	for (auto const &[l, c] : v)
	{
		if (!s.empty())
			s += " + ";
		s += "(" + c.to_string() + ") e" + std::to_string(l);
	}
	return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// parser

class Parser
{
  public:
	explicit Parser(std::string_view src) : src_(src), toks_(lex(src)) {}

	ProblemSpec run()
	{
		while (true)
		{
			skip_seps();
			auto const &t = peek();
			if (t.kind == Tok::End)
				break;
			if (t.kind != Tok::Word)
				fail(t, "expected a directive");
			auto kw = next().text;
			if (kw == "group")
				group(toks_[pos_ - 1]);
			else if (kw == "root")
				root(toks_[pos_ - 1]);
			else if (kw == "bichar")
				bichar(toks_[pos_ - 1]);
			else if (kw == "module")
				module();
			else if (kw == "algebra")
				algebra();
			else if (kw == "form")
				form();
			else if (kw == "lie")
				lie();
			else
				fail(toks_[pos_ - 1], "unknown directive '" + kw + "'");
			end_statement();
		}
		validate();
		return std::move(spec_);
	}

  private:
	[[noreturn]] void fail(Token const &t, std::string const &msg) { throw SpecError(t.line, t.column, msg); }

	Token const &peek() const { return toks_[pos_]; }
	Token const &next() { return toks_[pos_++]; }
	void skip_seps()
	{
		while (peek().kind == Tok::Sep)
			++pos_;
	}
	bool at_sym(char c) const { return peek().kind == Tok::Sym && peek().text[0] == c; }
	Token const &expect_sym(char c)
	{
		if (!at_sym(c))
			fail(peek(), std::string("expected '") + c + "'" + found());
		return next();
	}
	Token const &expect_word(std::string const &what)
	{
		if (peek().kind != Tok::Word)
			fail(peek(), "expected " + what + found());
		return next();
	}
	std::string found() const
	{
		auto const &t = peek();
		if (t.kind == Tok::End)
			return ", found end of input";
		if (t.kind == Tok::Sep)
			return ", found end of statement";
		return ", found '" + t.text + "'";
	}
	int expect_int(std::string const &what)
	{
		auto const &t = expect_word(what);
		if (!is_integer(t.text) || t.text.size() > 9)
			fail(t, "expected " + what + ", found '" + t.text + "'");
		return std::stoi(t.text);
	}
	void end_statement()
	{
		auto const &t = peek();
		if (t.kind != Tok::Sep && t.kind != Tok::End)
			fail(t, "expected end of statement" + found());
	}
	std::string fresh_name(std::string const &what)
	{
		auto const &t = expect_word(what);
		if (!std::isalpha(static_cast<unsigned char>(t.text[0])))
			fail(t, "names must start with a letter");
		if (!names_.insert(t.text).second)
			fail(t, "duplicate name '" + t.text + "'");
		name_pos_[t.text] = t;
		return t.text;
	}
	void need_header(Token const &t)
	{
		if (spec_.group_orders.empty())
			fail(t, "'group' must come before this directive");
		if (spec_.root == 0)
			fail(t, "'root' must come before this directive");
	}
	CyclotomicField const &field() const { return CyclotomicField::get(spec_.root); }

	// raw source text of the tokens up to the end of the statement or a closing brace
	std::pair<std::string, Token> raw_until_end()
	{
		auto const first = peek();
		std::size_t b = first.begin, e = first.begin;
		int depth = 0;
		while (true)
		{
			auto const &t = peek();
			if (t.kind == Tok::End || t.kind == Tok::Sep)
				break;
			if (t.kind == Tok::Sym && t.text[0] == '}' && depth == 0)
				break;
			if (t.kind == Tok::Sym && t.text[0] == '(')
				++depth;
			if (t.kind == Tok::Sym && t.text[0] == ')')
				--depth;
			e = t.end;
			++pos_;
		}
		if (e == b)
			fail(first, "expected a value" + found());
		return {std::string(src_.substr(b, e - b)), first};
	}

	void group(Token const &kw)
	{
		if (!spec_.group_orders.empty())
			fail(kw, "duplicate 'group' directive");
		auto const &t = expect_word("a group such as C3 or C2xC2");
		std::vector<int> orders;
		std::stringstream ss(t.text);
		std::string part;
		while (std::getline(ss, part, 'x'))
		{
			if (part.size() < 2 || part[0] != 'C' || !is_integer(part.substr(1)) || part.size() > 8)
				fail(t, "malformed group '" + t.text + "'; expected factors like C3 joined by x");
			int n = std::stoi(part.substr(1));
			if (n < 1)
				fail(t, "cyclic factors need positive order");
			orders.push_back(n);
		}
		spec_.group_orders = orders;
		group_tok_ = t;
		try
		{
			group_ = FiniteAbelianGroup(orders);
		}
		catch (std::exception const &e)
		{
			fail(t, e.what());
		}
	}

	void root(Token const &kw)
	{
		if (spec_.root != 0)
			fail(kw, "duplicate 'root' directive");
		auto const &t = peek();
		int L = expect_int("the order of the ambient root of unity");
		if (L < 1 || L > 5040)
			fail(t, "root order must be between 1 and 5040");
		spec_.root = L;
	}

	int generator(std::string const &what)
	{
		auto const &t = expect_word(what);
		if (t.text.size() < 2 || t.text[0] != 'g' || !is_integer(t.text.substr(1)) || t.text.size() > 6)
			fail(t, "expected a generator g1, g2, ...; found '" + t.text + "'");
		int k = std::stoi(t.text.substr(1));
		if (k < 1 || k > static_cast<int>(spec_.group_orders.size()))
			fail(t, "generator '" + t.text + "' does not exist in the group");
		return k - 1;
	}

	void bichar(Token const &kw)
	{
		need_header(kw);
		int a = generator("a generator");
		int b = generator("a generator");
		expect_sym('=');
		auto [text, at] = raw_until_end();
		auto s = trim(text);
		std::string stripped;
		for (char c : s)
			if (!std::isspace(static_cast<unsigned char>(c)))
				stripped += c;
		int const L = spec_.root;
		long long k = 0;
		if (stripped == "1")
			k = 0;
		else if (stripped == "-1")
		{
			if (L % 2)
				fail(at, "-1 is not a power of z when root is odd; use an even root");
			k = L / 2;
		}
		else if (stripped == "z")
			k = 1;
		else if (stripped.rfind("z^", 0) == 0 && is_integer(stripped.substr(2)) && stripped.size() < 12)
			k = std::stoll(stripped.substr(2));
		else
			fail(at, "bichar values are written z^k, found '" + s + "'");
		if (spec_.bichar.count({a, b}))
			fail(kw, "duplicate bichar entry for g" + std::to_string(a + 1) + " g" + std::to_string(b + 1));
		spec_.bichar[{a, b}] = static_cast<int>(k % L);
		bichar_pos_[{a, b}] = kw;
	}

	int degree()
	{
		bool paren = at_sym('(');
		if (paren)
			next();
		std::vector<int> tuple;
		auto const &first = peek();
		tuple.push_back(expect_int("a degree"));
		while (at_sym(','))
		{
			next();
			tuple.push_back(expect_int("a degree component"));
		}
		if (paren)
			expect_sym(')');
		if (tuple.size() != group_.orders().size())
			fail(first, "degree needs " + std::to_string(group_.orders().size()) + " components");
		for (std::size_t k = 0; k < tuple.size(); ++k)
			if (tuple[k] >= group_.orders()[k])
				fail(first, "degree component " + std::to_string(tuple[k]) + " out of range for C" +
				                std::to_string(group_.orders()[k]));
		return group_.from_tuple(tuple);
	}

	std::map<int, int> dims_block()
	{
		expect_sym('{');
		std::map<int, int> dims;
		while (true)
		{
			skip_seps();
			if (at_sym('}'))
				break;
			auto const &at = peek();
			int g = degree();
			expect_sym(':');
			int d = expect_int("a dimension");
			if (dims.count(g))
				fail(at, "degree listed twice");
			if (d > 0)
				dims[g] = d;
		}
		next();
		return dims;
	}

	void module()
	{
		need_header(toks_[pos_ - 1]);
		ProblemSpec::Module m;
		m.name = fresh_name("a module name");
		m.dims = dims_block();
		spec_.modules.push_back(std::move(m));
	}

	Coefficients element(std::string const &text, Token const &at, int dim)
	{
		Coefficients out;
		std::vector<Term> terms;
		try
		{
			terms = parse_terms(text, field());
		}
		catch (std::exception const &e)
		{
			fail(at, e.what());
		}
		for (auto const &t : terms)
		{
			if (t.tuple && t.labels.size() != 1)
				fail(at, "expected single labels e0, e1, ...");
			auto const &l = t.labels[0];
			if (l.size() < 2 || l[0] != 'e' || !is_integer(l.substr(1)) || l.size() > 8)
				fail(at, "unknown label '" + l + "'");
			int k = std::stoi(l.substr(1));
			if (k >= dim)
				fail(at, "label '" + l + "' exceeds the dimension " + std::to_string(dim));
			auto it = out.find(k);
			if (it == out.end())
				out.emplace(k, t.coeff);
			else
				it->second += t.coeff;
		}
		for (auto it = out.begin(); it != out.end();)
			it = it->second.is_zero() ? out.erase(it) : std::next(it);
		return out;
	}

	int label(int dim)
	{
		auto const &t = expect_word("a label");
		auto const &l = t.text;
		if (l.size() < 2 || l[0] != 'e' || !is_integer(l.substr(1)) || l.size() > 8 || std::stoi(l.substr(1)) >= dim)
			fail(t, "unknown label '" + l + "'");
		return std::stoi(l.substr(1));
	}

	void algebra()
	{
		auto const &kw = toks_[pos_ - 1];
		need_header(kw);
		ProblemSpec::Algebra a;
		a.name = fresh_name("an algebra name");
		if (at_sym('='))
		{
			next();
			auto const &t = expect_word("end");
			if (t.text != "end")
				fail(t, "expected end(<module>)");
			expect_sym('(');
			auto const &m = expect_word("a module name");
			a.end_of = m.text;
			refs_.push_back({m, m.text, "module"});
			expect_sym(')');
			spec_.algebras.push_back(std::move(a));
			return;
		}
		expect_sym('{');
		bool have_dims = false, have_unit = false;
		int dim = 0;
		while (true)
		{
			skip_seps();
			if (at_sym('}'))
				break;
			auto const &t = expect_word("dims, unit, mult or validate");
			if (t.text == "dims")
			{
				if (have_dims)
					fail(t, "duplicate dims");
				a.dims = dims_block();
				for (auto const &[g, d] : a.dims)
					dim += d;
				have_dims = true;
			}
			else if (t.text == "unit" || t.text == "mult")
			{
				if (!have_dims)
					fail(t, "dims must come first");
				if (t.text == "unit")
				{
					if (have_unit)
						fail(t, "duplicate unit");
					auto [text, at] = raw_until_end();
					a.unit = element(text, at, dim);
					have_unit = true;
				}
				else
				{
					int x = label(dim);
					int y = label(dim);
					expect_sym('=');
					auto [text, at] = raw_until_end();
					if (a.mult.count({x, y}))
						fail(t, "duplicate mult entry");
					auto v = element(text, at, dim);
					if (!v.empty())
						a.mult[{x, y}] = std::move(v);
				}
			}
			else if (t.text == "validate")
			{
				auto const &v = expect_word("on or off");
				if (v.text != "on" && v.text != "off")
					fail(v, "expected on or off");
				a.validate = v.text == "on";
			}
			else
				fail(t, "unknown algebra item '" + t.text + "'");
			if (!at_sym('}'))
				end_statement();
		}
		next();
		if (!have_dims)
			fail(kw, "algebra '" + a.name + "' needs dims");
		if (!have_unit)
			fail(kw, "algebra '" + a.name + "' needs a unit");
		spec_.algebras.push_back(std::move(a));
	}

	void form()
	{
		need_header(toks_[pos_ - 1]);
		ProblemSpec::Form f;
		f.name = fresh_name("a form name");
		auto const &on = expect_word("on");
		if (on.text != "on")
			fail(on, "expected 'on <module>'");
		auto const &m = expect_word("a module name");
		f.module = m.text;
		refs_.push_back({m, m.text, "module"});
		expect_sym('{');
		while (true)
		{
			skip_seps();
			if (at_sym('}'))
				break;
			auto const &at = peek();
			int i = expect_int("a label index");
			int j = expect_int("a label index");
			expect_sym('=');
			auto [text, vt] = raw_until_end();
			CycNumber v(field());
			try
			{
				v = CycNumber::parse(field(), strip_outer_parens(text));
			}
			catch (std::exception const &e)
			{
				fail(vt, e.what());
			}
			if (f.entries.count({i, j}))
				fail(at, "duplicate form entry");
			if (!v.is_zero())
				f.entries.emplace(std::make_pair(i, j), v);
			form_pos_[{f.name, {i, j}}] = at;
			if (!at_sym('}'))
				end_statement();
		}
		next();
		spec_.forms.push_back(std::move(f));
	}

	void lie()
	{
		need_header(toks_[pos_ - 1]);
		ProblemSpec::Lie l;
		l.name = fresh_name("a lie structure name");
		expect_sym('=');
		auto const &k = expect_word("from, og, der or zero");
		static std::map<std::string, std::string> const kinds{
		    {"from", "algebra"}, {"og", "form"}, {"der", "algebra"}, {"zero", "module"}};
		auto it = kinds.find(k.text);
		if (it == kinds.end())
			fail(k, "unknown lie constructor '" + k.text + "'");
		l.kind = k.text;
		expect_sym('(');
		auto const &s = expect_word("a name");
		l.source = s.text;
		refs_.push_back({s, s.text, it->second});
		expect_sym(',');
		auto const &mn = expect_word("max_n");
		if (mn.text != "max_n")
			fail(mn, "expected max_n=<N>");
		expect_sym('=');
		auto const &nt = peek();
		l.max_n = expect_int("an arity bound");
		if (l.max_n < 1 || l.max_n > 12)
			fail(nt, "max_n must be between 1 and 12");
		expect_sym(')');
		spec_.lies.push_back(std::move(l));
	}

	void validate()
	{
		if (spec_.group_orders.empty())
			fail(peek(), "missing 'group' directive");
		if (spec_.root == 0)
			fail(peek(), "missing 'root' directive");
		int const r = static_cast<int>(spec_.group_orders.size());
		int const L = spec_.root;
		for (int a = 0; a < r; ++a)
			for (int b = 0; b < r; ++b)
			{
				std::string pair = "g" + std::to_string(a + 1) + " g" + std::to_string(b + 1);
				auto it = spec_.bichar.find({a, b});
				if (it == spec_.bichar.end())
					fail(group_tok_, "missing bichar entry for " + pair);
				long long k = it->second;
				long long na = spec_.group_orders[a], nb = spec_.group_orders[b];
				for (auto [n, who] : {std::pair{na, a}, std::pair{nb, b}})
					if ((n * k) % L != 0)
					{
						auto g = "g" + std::to_string(who + 1);
						fail(bichar_pos_[{a, b}],
						     "bichar " + pair + " = z^" + std::to_string(k) + " is not a bicharacter value: " + g +
						         " has order " + std::to_string(n) + ", so chi(" + pair.substr(0, pair.find(' ')) +
						         "," + pair.substr(pair.find(' ') + 1) + ")^" + std::to_string(n) +
						         " must be 1, but z^" + std::to_string(k) + " has order " +
						         std::to_string(L / std::gcd(static_cast<long long>(L), k)));
					}
			}
		std::map<std::string, std::string> kind_of;
		for (auto const &m : spec_.modules)
			kind_of[m.name] = "module";
		for (auto const &a : spec_.algebras)
			kind_of[a.name] = "algebra";
		for (auto const &f : spec_.forms)
			kind_of[f.name] = "form";
		for (auto const &l : spec_.lies)
			kind_of[l.name] = "lie";
		for (auto const &ref : refs_)
		{
			auto it = kind_of.find(ref.name);
			if (it == kind_of.end())
				fail(ref.at, "unknown name '" + ref.name + "'");
			if (it->second != ref.kind)
				fail(ref.at, "'" + ref.name + "' is a " + it->second + ", expected a " + ref.kind);
		}
		std::map<std::string, int> dims;
		for (auto const &m : spec_.modules)
		{
			int d = 0;
			for (auto const &[g, k] : m.dims)
				d += k;
			dims[m.name] = d;
		}
		for (auto const &f : spec_.forms)
			for (auto const &[ij, v] : f.entries)
				if (ij.first >= dims[f.module] || ij.second >= dims[f.module])
					fail(form_pos_[{f.name, ij}], "form entry outside the module dimension " +
					                                  std::to_string(dims[f.module]));
	}

	struct Ref
	{
		Token at;
		std::string name, kind;
	};

	std::string_view src_;
	std::vector<Token> toks_;
	std::size_t pos_ = 0;
	ProblemSpec spec_;
	FiniteAbelianGroup group_;
	Token group_tok_{Tok::End, "", 1, 1, 0, 0};
	std::set<std::string> names_;
	std::map<std::string, Token> name_pos_;
	std::map<std::pair<int, int>, Token> bichar_pos_;
	std::map<std::pair<std::string, std::pair<int, int>>, Token> form_pos_;
	std::vector<Ref> refs_;
};

std::string render_degree(FiniteAbelianGroup const &g, int d)
{
	auto t = g.tuple(d);
	std::string s;
	for (std::size_t k = 0; k < t.size(); ++k)
		s += (k ? "," : "") + std::to_string(t[k]);
	return s;
}

std::string render_dims(FiniteAbelianGroup const &g, std::map<int, int> const &dims)
{
	std::string s = "{";
	for (auto const &[d, n] : dims)
		s += " " + render_degree(g, d) + ":" + std::to_string(n);
	return s + " }";
}

} // namespace

ProblemSpec parse_spec(std::string_view text)
{
	return Parser(text).run();
}

std::string render_spec(ProblemSpec const &spec)
{
	std::ostringstream os;
	FiniteAbelianGroup g(spec.group_orders);
	os << "group ";
	for (std::size_t k = 0; k < spec.group_orders.size(); ++k)
		os << (k ? "x" : "") << "C" << spec.group_orders[k];
	os << "\nroot " << spec.root << "\n";
	for (auto const &[ab, k] : spec.bichar)
		os << "bichar g" << ab.first + 1 << " g" << ab.second + 1 << " = z^" << k << "\n";
	for (auto const &m : spec.modules)
		os << "module " << m.name << " " << render_dims(g, m.dims) << "\n";
	for (auto const &a : spec.algebras)
	{
		if (!a.end_of.empty())
		{
			os << "algebra " << a.name << " = end(" << a.end_of << ")\n";
			continue;
		}
		os << "algebra " << a.name << " {\n  dims " << render_dims(g, a.dims) << "\n  unit " << render_coeffs(a.unit)
		   << "\n";
		for (auto const &[xy, v] : a.mult)
			os << "  mult e" << xy.first << " e" << xy.second << " = " << render_coeffs(v) << "\n";
		if (!a.validate)
			os << "  validate off\n";
		os << "}\n";
	}
	for (auto const &f : spec.forms)
	{
		os << "form " << f.name << " on " << f.module << " {\n";
		for (auto const &[ij, v] : f.entries)
			os << "  " << ij.first << " " << ij.second << " = " << v.to_string() << "\n";
		os << "}\n";
	}
	for (auto const &l : spec.lies)
		os << "lie " << l.name << " = " << l.kind << "(" << l.source << ", max_n=" << l.max_n << ")\n";
	return os.str();
}

// ---------------------------------------------------------------------------

Workspace::Workspace(ProblemSpec spec) : spec_(std::move(spec))
{
	int const L = spec_.root;
	ambient_ = L % 2 == 0 ? L : 2 * L;
	int const m = ambient_ / L;
	int const r = static_cast<int>(spec_.group_orders.size());
	std::vector<std::vector<int>> gen(r, std::vector<int>(r));
	for (auto const &[ab, k] : spec_.bichar)
		gen[ab.first][ab.second] = k * m;
	chi_ = std::make_shared<const Bicharacter>(FiniteAbelianGroup(spec_.group_orders), ambient_, gen);
	auto const &f = chi_->field();

	for (auto const &mod : spec_.modules)
		modules_[mod.name] = GradedModule::from_dims(chi_, mod.dims);
	for (auto const &a : spec_.algebras)
	{
		if (!a.end_of.empty())
		{
			algebras_[a.name] = graded_end(modules_.at(a.end_of));
			continue;
		}
		auto carrier = GradedModule::from_dims(chi_, a.dims);
		int const d = carrier->dim();
		auto vec = [&](Coefficients const &c) {
			SparseVector v;
			for (auto const &[l, x] : c)
				v.add(static_cast<Index>(l), embed(x));
			return v;
		};
		std::vector<SparseVector> products(static_cast<std::size_t>(d) * d);
		for (auto const &[xy, v] : a.mult)
			products[static_cast<std::size_t>(xy.first) * d + xy.second] = vec(v);
		try
		{
			algebras_[a.name] = std::make_shared<const GradedAlgebra>(carrier, std::move(products), vec(a.unit),
			                                                          a.validate);
		}
		catch (std::invalid_argument const &e)
		{
			throw std::invalid_argument("algebra " + a.name + ": " + e.what());
		}
	}
	for (auto const &fm : spec_.forms)
	{
		std::map<std::pair<int, int>, CycNumber> entries;
		for (auto const &[ij, v] : fm.entries)
			entries.emplace(ij, embed(v));
		try
		{
			forms_[fm.name] = std::make_unique<BilinearForm>(modules_.at(fm.module), entries);
		}
		catch (std::invalid_argument const &e)
		{
			throw std::invalid_argument("form " + fm.name + ": " + e.what());
		}
	}
	(void)f;
}

bool Workspace::has(std::string const &name) const
{
	return modules_.count(name) || algebras_.count(name) || forms_.count(name) ||
	       std::any_of(spec_.lies.begin(), spec_.lies.end(), [&](auto const &l) { return l.name == name; });
}

ModulePtr Workspace::module(std::string const &name) const
{
	auto it = modules_.find(name);
	if (it == modules_.end())
		throw std::invalid_argument("no module named '" + name + "'");
	return it->second;
}

AlgebraPtr Workspace::algebra(std::string const &name) const
{
	auto it = algebras_.find(name);
	if (it == algebras_.end())
		throw std::invalid_argument("no algebra named '" + name + "'");
	return it->second;
}

BilinearForm const &Workspace::form(std::string const &name) const
{
	auto it = forms_.find(name);
	if (it == forms_.end())
		throw std::invalid_argument("no form named '" + name + "'");
	return *it->second;
}

LieObject const &Workspace::lie(std::string const &name) const
{
	if (auto it = lies_.find(name); it != lies_.end())
		return *it->second;
	auto decl = std::find_if(spec_.lies.begin(), spec_.lies.end(), [&](auto const &l) { return l.name == name; });
	if (decl == spec_.lies.end())
		throw std::invalid_argument("no lie structure named '" + name + "'");
	std::unique_ptr<LieObject> obj;
	if (decl->kind == "from")
	{
		auto a = algebra(decl->source);
		obj.reset(new LieObject{lie_from_algebra(*a, decl->max_n), a, {}});
		for (int l = 0; l < a->dim(); ++l)
			obj->inclusion.push_back(TensorElement::basis(a->carrier(), {l}));
	}
	else if (decl->kind == "zero")
		obj.reset(new LieObject{abelian_lie(module(decl->source), decl->max_n), nullptr, {}});
	else
	{
		AlgebraPtr end = decl->kind == "og" ? graded_end(form(decl->source).host())
		                                    : graded_end(algebra(decl->source)->carrier());
		Subspace s = decl->kind == "og" ? og_subspace(*end, form(decl->source))
		                                : derivation_space(*algebra(decl->source), *end);
		auto r = restrict_lie(*end, s, decl->max_n);
		obj.reset(new LieObject{std::move(r.lie), end, std::move(r.inclusion)});
	}
	return *lies_.emplace(name, std::move(obj)).first->second;
}

ModulePtr Workspace::carrier_of(std::string const &name) const
{
	if (auto it = modules_.find(name); it != modules_.end())
		return it->second;
	if (auto it = algebras_.find(name); it != algebras_.end())
		return it->second->carrier();
	if (auto it = forms_.find(name); it != forms_.end())
		return it->second->host();
	return lie(name).lie.carrier();
}

RootOfUnity Workspace::parse_zeta(std::string_view text) const
{
	std::string s;
	for (char c : text)
		if (!std::isspace(static_cast<unsigned char>(c)))
			s += c;
	bool neg = !s.empty() && s[0] == '-';
	if (neg)
		s = s.substr(1);
	long long k;
	if (s == "1")
		k = 0;
	else if (s == "z")
		k = 1;
	else if (s.rfind("z^", 0) == 0 && is_integer(s.substr(2)) && s.size() < 12)
		k = std::stoll(s.substr(2));
	else
		throw std::invalid_argument("zeta must be written z^k (a power of the declared root), -z^k or -1; got '" +
		                            std::string(text) + "'");
	long long e = k * (ambient_ / spec_.root) + (neg ? ambient_ / 2 : 0);
	return RootOfUnity(ambient_, e);
}

std::string Workspace::render_zeta(RootOfUnity const &zeta) const
{
	int const L = spec_.root;
	int e = zeta.exponent();
	if (ambient_ == L)
		return "z^" + std::to_string(e);
	if (e % 2 == 0)
		return "z^" + std::to_string(e / 2);
	int k = ((e + L) / 2) % L;
	return k == 0 ? std::string("-1") : "-z^" + std::to_string(k);
}

CycNumber Workspace::embed(CycNumber const &c) const
{
	auto const &f = chi_->field();
	if (ambient_ == spec_.root)
		return CycNumber(f, c.coeffs());
	int const m = ambient_ / spec_.root;
	CycNumber out(f);
	auto const &v = c.coeffs();
	for (std::size_t j = 0; j < v.size(); ++j)
		if (v[j] != 0)
			out += CycNumber::root(f, static_cast<long long>(j) * m) * v[j];
	return out;
}

CycNumber Workspace::to_declared(CycNumber const &c) const
{
	int const L = spec_.root;
	auto const &f = CyclotomicField::get(L);
	if (ambient_ == L)
		return CycNumber(f, c.coeffs());
	// z_{2L} = -z_L^{(L+1)/2} for odd L
	CycNumber out(f);
	auto const &v = c.coeffs();
	for (std::size_t j = 0; j < v.size(); ++j)
		if (v[j] != 0)
		{
			long long jj = static_cast<long long>(j);
			out += CycNumber::root(f, jj * ((L + 1) / 2)) * Rational(jj % 2 ? -v[j] : v[j]);
		}
	return out;
}

TensorElement Workspace::parse_element(ModulePtr const &host, int power, std::string_view text) const
{
	auto terms = parse_terms(text, CyclotomicField::get(spec_.root));
	TensorElement out(host, power);
	for (auto const &t : terms)
	{
		if (static_cast<int>(t.labels.size()) != power)
			throw std::invalid_argument("term with " + std::to_string(t.labels.size()) + " labels in an element of power " +
			                            std::to_string(power));
		std::vector<int> tuple;
		for (auto const &l : t.labels)
		{
			auto k = host->label_of(l);
			if (!k)
				throw std::invalid_argument("unknown label '" + l + "'");
			tuple.push_back(*k);
		}
		out.add_term(tuple, embed(t.coeff));
	}
	return out;
}

std::string Workspace::render_element(TensorElement const &z) const
{
	if (z.is_zero())
		return "0";
	std::string s;
	std::vector<int> t(z.power());
	for (auto const &[i, c] : z.coeffs())
	{
		z.host()->decode_into(i, t);
		auto cs = to_declared(c).to_string();
		if (cs.find(' ') != std::string::npos)
			cs = "(" + cs + ")";
		if (!s.empty())
			s += " + ";
		s += cs + " * (";
		for (std::size_t k = 0; k < t.size(); ++k)
			s += (k ? "," : "") + z.host()->name(t[k]);
		s += ")";
	}
	return s;
}

std::string Workspace::render_subspace(Subspace const &s) const
{
	std::string out = "power " + std::to_string(s.power()) + " dim " + std::to_string(s.dimension()) + "\n";
	for (auto const &b : s.basis())
		out += render_element(b) + "\n";
	return out;
}

Report Workspace::declared(Report const &r) const
{
	if (ambient_ == spec_.root)
		return r;
	Report out;
	for (auto line : r.lines())
	{
		if (line.zeta && line.zeta->rfind("z^", 0) == 0)
			line.zeta = render_zeta(RootOfUnity(ambient_, std::stoll(line.zeta->substr(2))));
		out.add(std::move(line));
	}
	return out;
}

// ---------------------------------------------------------------------------
// command line

namespace {

struct Options
{
	std::string spec;
	std::string target;
	std::string form;
	std::optional<int> n;
	std::string zeta;
	std::optional<std::string> degree;
	std::string format = "text";
	std::string out;
	int max_n = 3;
	int cap = 2;
	int max_slack = 2;
	std::string element;
	std::string method = "graded";
	std::string check;
};

struct InputError : std::invalid_argument
{
	using std::invalid_argument::invalid_argument;
};

struct Result
{
	std::string text;
	int code = 0;
};

std::string read_file(std::string const &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw InputError("cannot read '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

using json = nlohmann::ordered_json;

class Session
{
  public:
	explicit Session(Options const &o) : o_(o)
	{
		auto text = read_file(o.spec);
		try
		{
			ws_ = std::make_unique<Workspace>(parse_spec(text));
		}
		catch (SpecError const &e)
		{
			throw InputError(o.spec + ":" + e.what());
		}
	}

	Result run(std::string const &command)
	{
		if (command == "families")
			return families();
		if (command == "symmetrize")
			return subspace_output(symmetrized());
		if (command == "minus-one-zeta")
			return subspace_output(minus_one());
		if (command == "bracket")
			return bracket_cmd();
		if (command == "verify")
			return verify();
		if (command == "uenv")
			return uenv();
		if (command == "primitives")
			return primitives_cmd();
		if (command == "og")
			return og();
		if (command == "der")
			return der();
		throw InputError("unknown command '" + command + "'");
	}

  private:
	bool json_out() const { return o_.format == "json"; }

	std::string default_target() const
	{
		auto const &s = ws_->spec();
		if (!s.algebras.empty())
			return s.algebras.front().name;
		if (!s.modules.empty())
			return s.modules.front().name;
		throw InputError("the problem file declares no module or algebra; pass --target");
	}
	std::string target() const { return o_.target.empty() ? default_target() : o_.target; }
	std::string lie_target() const
	{
		if (!o_.target.empty())
			return o_.target;
		auto const &s = ws_->spec();
		if (s.lies.empty())
			throw InputError("the problem file declares no lie structure; pass --target");
		return s.lies.front().name;
	}
	bool is_lie(std::string const &name) const
	{
		auto const &l = ws_->spec().lies;
		return std::any_of(l.begin(), l.end(), [&](auto const &x) { return x.name == name; });
	}
	bool is_algebra(std::string const &name) const
	{
		auto const &l = ws_->spec().algebras;
		return std::any_of(l.begin(), l.end(), [&](auto const &x) { return x.name == name; });
	}
	ModulePtr carrier() const
	{
		auto t = target();
		if (!ws_->has(t))
			throw InputError("no module, algebra, form or lie structure named '" + t + "'");
		return ws_->carrier_of(t);
	}

	int need_n() const
	{
		if (!o_.n)
			throw InputError("--n is required");
		if (*o_.n < 1 || *o_.n > 12)
			throw InputError("--n must be between 1 and 12");
		return *o_.n;
	}
	RootOfUnity need_zeta(int n) const
	{
		if (o_.zeta.empty())
			throw InputError("--zeta is required");
		auto z = ws_->parse_zeta(o_.zeta);
		if (!z.is_primitive_root(n))
			throw InputError("zeta " + o_.zeta + " is not a primitive " + std::to_string(n) + "-th root of unity");
		return z;
	}
	/// (n, zeta) pairs selected by --n/--zeta, or every available pair up to max_n.
	std::vector<std::pair<int, RootOfUnity>> pairs(int from) const
	{
		std::vector<std::pair<int, RootOfUnity>> out;
		if (o_.n)
		{
			int n = need_n();
			if (!o_.zeta.empty())
				out.emplace_back(n, need_zeta(n));
			else
			{
				for (auto const &z : primitive_roots(ws_->ambient(), n))
					out.emplace_back(n, z);
				if (out.empty())
					throw InputError("no primitive " + std::to_string(n) + "-th root of unity in the ambient field");
			}
			return out;
		}
		if (!o_.zeta.empty())
			throw InputError("--zeta needs --n");
		for (auto const &[n, z] : available_arities(ws_->ambient(), o_.max_n))
			if (n >= from)
				out.emplace_back(n, z);
		return out;
	}
	std::optional<int> degree_filter() const
	{
		if (!o_.degree)
			return std::nullopt;
		auto d = trim(*o_.degree);
		try
		{
			return ws_->group().parse(d.find(',') != std::string::npos && d.front() != '(' ? "(" + d + ")" : d);
		}
		catch (std::exception const &e)
		{
			throw InputError("bad --degree '" + d + "': " + e.what());
		}
	}

	Subspace restrict_degree(Subspace const &s) const
	{
		auto d = degree_filter();
		if (!d)
			return s;
		auto const &m = s.host();
		std::vector<Index> tuples;
		for (Index i = 0; i < m->tuple_count(s.power()); ++i)
			if (m->total_degree(m->decode(i, s.power())) == *d)
				tuples.push_back(i);
		return intersect(s, Subspace::coordinate(m, s.power(), tuples));
	}

	Subspace symmetrized() const
	{
		int n = need_n();
		auto z = need_zeta(n);
		auto m = carrier();
		if (o_.method == "graded")
			return restrict_degree(symmetrize_graded(m, n, z));
		if (o_.method == "kernel")
			return restrict_degree(symmetrize_kernel(m, n, z));
		throw InputError("--method must be graded or kernel");
	}
	Subspace minus_one() const
	{
		int n = need_n();
		auto z = need_zeta(n);
		return restrict_degree(minus_one_zeta_subspace(carrier(), n, z));
	}

	json element_list(Subspace const &s) const
	{
		json arr = json::array();
		for (auto const &b : s.basis())
			arr.push_back(ws_->render_element(b));
		return arr;
	}

	Result subspace_output(Subspace const &s) const
	{
		if (!json_out())
			return {ws_->render_subspace(s), 0};
		json j;
		j["power"] = s.power();
		j["dimension"] = s.dimension();
		j["basis"] = element_list(s);
		return {j.dump(2) + "\n", 0};
	}

	Result families() const
	{
		int n = need_n();
		auto z = need_zeta(n);
		auto m = carrier();
		auto fams = zeta_families(m->chi(), m->degrees_present(), n, z);
		auto d = degree_filter();
		auto const &G = ws_->group();
		std::vector<std::vector<int>> kept;
		for (auto const &f : fams)
		{
			int total = G.zero();
			for (int g : f.degrees)
				total = G.add(total, g);
			if (!d || total == *d)
				kept.push_back(f.degrees);
		}
		if (json_out())
		{
			json j;
			j["n"] = n;
			j["zeta"] = ws_->render_zeta(z);
			json arr = json::array();
			for (auto const &f : kept)
			{
				json row = json::array();
				for (int g : f)
					row.push_back(G.to_string(g));
				arr.push_back(row);
			}
			j["families"] = arr;
			return {j.dump(2) + "\n", 0};
		}
		std::string s = "families n=" + std::to_string(n) + " zeta=" + ws_->render_zeta(z) +
		                " count=" + std::to_string(kept.size()) + "\n";
		for (auto const &f : kept)
		{
			s += "(";
			for (std::size_t k = 0; k < f.size(); ++k)
				s += (k ? "," : "") + G.to_string(f[k]);
			s += ")\n";
		}
		return {s, 0};
	}

	Result bracket_cmd() const
	{
		int n = need_n();
		auto z = need_zeta(n);
		if (o_.element.empty())
			throw InputError("--element is required");
		auto t = target();
		TensorElement value(ws_->carrier_of(t), 1);
		if (is_algebra(t))
		{
			auto a = ws_->algebra(t);
			value = bracket(*a, n, z, ws_->parse_element(a->carrier(), n, o_.element));
		}
		else if (is_lie(t))
		{
			auto const &l = ws_->lie(t).lie;
			value = l.apply(n, z, ws_->parse_element(l.carrier(), n, o_.element));
		}
		else
			throw InputError("bracket needs an algebra or a lie structure, not '" + t + "'");
		if (json_out())
		{
			json j;
			j["n"] = n;
			j["zeta"] = ws_->render_zeta(z);
			j["value"] = ws_->render_element(value);
			return {j.dump(2) + "\n", 0};
		}
		return {ws_->render_element(value) + "\n", 0};
	}

	Result report_output(Report const &r) const
	{
		auto d = ws_->declared(r);
		return {json_out() ? d.to_json() : d.to_text(), d.passed() ? 0 : 1};
	}

	BracketStructure structure(int max_n) const
	{
		auto t = o_.target.empty() && !ws_->spec().lies.empty() && ws_->spec().algebras.empty() ? lie_target() : target();
		if (is_lie(t))
			return ws_->lie(t).lie;
		if (is_algebra(t))
			return lie_from_algebra(*ws_->algebra(t), max_n);
		throw InputError("'" + t + "' is neither an algebra nor a lie structure");
	}

	Enveloping enveloping() const
	{
		auto t = lie_target();
		if (!is_lie(t))
			throw InputError("'" + t + "' is not a lie structure");
		if (o_.cap < 0 || o_.cap > 8 || o_.max_slack < 0 || o_.max_slack > 4)
			throw InputError("--cap must be in 0..8 and --max-slack in 0..4");
		return Enveloping(ws_->lie(t).lie, {o_.cap, o_.max_slack});
	}

	Result verify() const
	{
		auto const &c = o_.check;
		Report r;
		if (c == "antisym" || c == "jacobi1" || c == "jacobi2")
		{
			auto ps = pairs(2);
			int top = 2;
			for (auto const &[n, z] : ps)
				top = std::max(top, n);
			auto l = structure(top);
			for (auto const &[n, z] : ps)
			{
				if (c == "antisym")
					r.merge(check_antisymmetry(l, n, z));
				else if (c == "jacobi1")
					r.merge(check_jacobi1(l, n, z));
				else
					r.merge(check_jacobi2(l, n, z));
			}
		}
		else if (c == "mainthm")
		{
			auto t = target();
			if (!is_algebra(t))
				throw InputError("mainthm needs an algebra target");
			auto a = ws_->algebra(t);
			for (auto const &[n, z] : pairs(1))
				r.merge(verify_main_theorem(*a, n, z));
		}
		else if (c == "yangbaxter")
		{
			auto m = carrier();
			int top = o_.n ? need_n() : o_.max_n;
			for (int n = 2; n <= top; ++n)
			{
				auto w = yang_baxter_witness(*m, n);
				if (w)
					r.fail("yangbaxter", n, std::nullopt, 0, *w);
				else
					r.pass("yangbaxter", n, std::nullopt, 0);
			}
		}
		else if (c == "antipode")
		{
			auto u = enveloping();
			r.merge(check_antipode(u.hopf()));
			r.merge(u.check_antipode_preserves_ideal());
		}
		else if (c == "primitives-lie")
		{
			auto u = enveloping();
			r.merge(check_generators_primitive(u.hopf()));
			r.merge(check_primitives_lie(u.hopf(), std::max(2, o_.cap)));
		}
		else
			throw InputError("unknown check '" + c +
			                 "'; expected antisym, jacobi1, jacobi2, mainthm, yangbaxter, antipode or primitives-lie");
		return report_output(r);
	}

	Result uenv() const
	{
		auto u = enveloping();
		auto const &h = u.hopf();
		if (!json_out())
			return {h.dump(), 0};
		json j;
		j["dims"] = h.dims_by_length();
		j["slack"] = u.slack();
		j["stabilized"] = u.stabilized();
		j["relations"] = u.relation_count();
		j["dump"] = h.dump();
		return {j.dump(2) + "\n", 0};
	}

	Result primitives_cmd() const
	{
		auto u = enveloping();
		auto const &h = u.hopf();
		auto p = primitives(h);
		if (json_out())
		{
			json j;
			j["dims"] = h.dims_by_length();
			j["dimension"] = p.dimension();
			j["basis"] = element_list(p);
			return {j.dump(2) + "\n", 0};
		}
		std::string s = "dims";
		for (int d : h.dims_by_length())
			s += " " + std::to_string(d);
		s += "\nprimitives dim " + std::to_string(p.dimension()) + "\n";
		for (auto const &b : p.basis())
			s += ws_->render_element(b) + "\n";
		return {s, 0};
	}

	Result subspace_with_report(Subspace const &s, Report const &closure) const
	{
		auto d = ws_->declared(closure);
		std::map<int, int> dims;
		for (auto const &b : homogeneous_basis(s))
			dims[*b.homogeneous_degree()]++;
		auto const &G = ws_->group();
		int code = d.passed() ? 0 : 1;
		if (json_out())
		{
			json j;
			j["dimension"] = s.dimension();
			json dj = json::object();
			for (auto const &[g, k] : dims)
				dj[G.to_string(g)] = k;
			j["dims"] = dj;
			j["basis"] = element_list(s);
			j["closure"] = json::parse(d.to_json());
			return {j.dump(2) + "\n", code};
		}
		std::string out = "dimension " + std::to_string(s.dimension()) + "\ndims";
		for (auto const &[g, k] : dims)
			out += " " + G.to_string(g) + ":" + std::to_string(k);
		out += "\n" + ws_->render_subspace(s) + d.to_text();
		return {out, code};
	}

	Result og() const
	{
		std::string name = !o_.form.empty() ? o_.form : o_.target;
		if (name.empty())
		{
			if (ws_->spec().forms.empty())
				throw InputError("the problem file declares no form; pass --form");
			name = ws_->spec().forms.front().name;
		}
		auto const &b = ws_->form(name);
		auto end = graded_end(b.host());
		return subspace_with_report(og_subspace(*end, b), check_og_closure(b, o_.max_n));
	}

	Result der() const
	{
		auto t = target();
		if (!is_algebra(t))
			throw InputError("der needs an algebra target");
		auto a = ws_->algebra(t);
		auto end = graded_end(a->carrier());
		return subspace_with_report(derivation_space(*a, *end), check_der_closure(*a, o_.max_n));
	}

	Options const &o_;
	std::unique_ptr<Workspace> ws_;
};

} // namespace

int run_command(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Lie algebras in Yetter-Drinfeld categories over finite abelian groups", "ydlie"};
	app.require_subcommand(1);
	Options o;
	auto common = [&](CLI::App *sub) {
		sub->add_option("--spec", o.spec, "problem description (.yd)")->required();
		sub->add_option("--target", o.target, "module, algebra or lie structure name");
		sub->add_option("--n", o.n, "arity");
		sub->add_option("--zeta", o.zeta, "root of unity as z^k, a power of the declared root");
		sub->add_option("--degree", o.degree, "restrict to a total degree");
		sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
		sub->add_option("--out", o.out, "write the output to a file");
	};
	auto hopf_opts = [&](CLI::App *sub) {
		sub->add_option("--cap", o.cap, "degree cap of the truncated enveloping algebra");
		sub->add_option("--max-slack", o.max_slack, "extra sandwich length for saturation");
	};
	std::vector<CLI::App *> subs;
	subs.push_back(app.add_subcommand("families", "list zeta-families of degrees"));
	auto sym = app.add_subcommand("symmetrize", "basis of the zeta-symmetrized subspace");
	sym->add_option("--method", o.method, "graded or kernel");
	subs.push_back(sym);
	subs.push_back(app.add_subcommand("minus-one-zeta", "basis of the mixed subspace P^{n+1}(-1, zeta)"));
	auto br = app.add_subcommand("bracket", "evaluate a bracket");
	br->add_option("--element", o.element, "element of the n-th tensor power");
	subs.push_back(br);
	auto ver = app.add_subcommand("verify", "run a check and print a report");
	ver->add_option("check", o.check, "antisym, jacobi1, jacobi2, mainthm, yangbaxter, antipode, primitives-lie")
	    ->required();
	ver->add_option("--max-n", o.max_n, "largest arity when --n is not given");
	hopf_opts(ver);
	subs.push_back(ver);
	auto ue = app.add_subcommand("uenv", "build and dump a truncated enveloping algebra");
	hopf_opts(ue);
	subs.push_back(ue);
	auto pr = app.add_subcommand("primitives", "primitive elements of a truncated enveloping algebra");
	hopf_opts(pr);
	subs.push_back(pr);
	auto ogc = app.add_subcommand("og", "og(V) for a bilinear form, with its closure report");
	ogc->add_option("--form", o.form, "form name");
	ogc->add_option("--max-n", o.max_n, "largest arity for the closure check");
	subs.push_back(ogc);
	auto dc = app.add_subcommand("der", "derivations of an algebra, with their closure report");
	dc->add_option("--max-n", o.max_n, "largest arity for the closure check");
	subs.push_back(dc);
	for (auto *s : subs)
		common(s);

	try
	{
		std::vector<std::string> rev(args.rbegin(), args.rend());
		app.parse(rev);
	}
	catch (CLI::ParseError const &e)
	{
		int code = app.exit(e, out, err);
		return code == 0 ? 0 : 2;
	}

	std::string command = app.get_subcommands().front()->get_name();
	try
	{
		Session session(o);
		auto result = session.run(command);
		if (o.out.empty())
			out << result.text;
		else
		{
			std::ofstream f(o.out, std::ios::binary);
			if (!f)
				throw InputError("cannot write '" + o.out + "'");
			f << result.text;
		}
		if (result.code != 0)
			err << "check failed\n";
		return result.code;
	}
	catch (InvariantViolation const &e)
	{
		err << "check failed: " << e.what() << "\n";
		return 1;
	}
	catch (std::exception const &e)
	{
		err << "error: " << e.what() << "\n";
		return 2;
	}
}

} // namespace ydlie
