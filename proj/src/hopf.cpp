#include "ydlie/hopf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ydlie {

namespace {

int isqrt_exact(int v)
{
	int r = 0;
	while (r * r < v)
		++r;
	if (r * r != v)
		throw std::invalid_argument("not a tensor square");
	return r;
}

template <class F>
Report per_basis(std::string const &name, int n, RootOfUnity const &zeta, Subspace const &dom, F body)
{
	Report r;
	auto basis = dom.basis();
	if (basis.empty())
		r.skip(name, n, zeta.to_string(), 0, "empty domain");
	for (std::size_t k = 0; k < basis.size(); ++k)
	{
		std::string witness;
		try
		{
			witness = body(basis[k]);
		}
		catch (InvariantViolation const &err)
		{
			witness = "z = " + basis[k].to_string() + ": " + err.what();
		}
		catch (DomainError const &err)
		{
			witness = "z = " + basis[k].to_string() + ": " + err.what();
		}
		if (witness.empty())
			r.pass(name, n, zeta.to_string(), k);
		else
			r.fail(name, n, zeta.to_string(), k, witness);
	}
	return r;
}

} // namespace

AlgebraPtr tensor_square(GradedAlgebra const &a)
{
	auto const &m = *a.carrier();
	int const d = m.dim();
	auto const &G = m.group();
	auto const &chi = m.chi();
	std::vector<int> degrees;
	std::vector<std::string> names;
	for (int x = 0; x < d; ++x)
		for (int y = 0; y < d; ++y)
		{
			degrees.push_back(G.add(m.degree(x), m.degree(y)));
			names.push_back(m.name(x) + "|" + m.name(y));
		}
	auto carrier = std::make_shared<const GradedModule>(m.chi_ptr(), degrees, names);
	std::size_t const D = static_cast<std::size_t>(d) * d;
	std::vector<SparseVector> products(D * D);
	for (int x = 0; x < d; ++x)
		for (int y = 0; y < d; ++y)
			for (int u = 0; u < d; ++u)
			{
				auto const &xu = a.product(x, u);
				if (xu.empty())
					continue;
				for (int v = 0; v < d; ++v)
				{
					auto const &yv = a.product(y, v);
					if (yv.empty())
						continue;
					// (x (x) y)(u (x) v) = chi(deg y, deg u) xu (x) yv
					auto scale = chi.value(m.degree(y), m.degree(u)).value();
					std::vector<SparseVector::Entry> entries;
					for (auto const &[i, ci] : xu)
						for (auto const &[j, cj] : yv)
							entries.emplace_back(i * d + j, scale * ci * cj);
					products[static_cast<std::size_t>(x * d + y) * D + (u * d + v)] =
					    SparseVector::from_unsorted(std::move(entries));
				}
			}
	SparseVector unit;
	for (auto const &[i, ci] : a.unit())
		for (auto const &[j, cj] : a.unit())
			unit.add(i * d + j, ci * cj);
	return std::make_shared<const GradedAlgebra>(carrier, std::move(products), std::move(unit), false);
}

TensorElement pair_element(GradedAlgebra const &sq, TensorElement const &x, TensorElement const &y)
{
	int const d = isqrt_exact(sq.dim());
	if (x.power() != 1 || y.power() != 1 || x.host()->dim() != d || y.host()->dim() != d)
		throw std::invalid_argument("pair_element expects two algebra elements");
	std::vector<SparseVector::Entry> entries;
	for (auto const &[i, ci] : x.coeffs())
		for (auto const &[j, cj] : y.coeffs())
			entries.emplace_back(i * d + j, ci * cj);
	return TensorElement(sq.carrier(), 1, SparseVector::from_unsorted(std::move(entries)));
}

TensorElement tensor_square_multiply(GradedAlgebra const &sq, TensorElement const &u, TensorElement const &v)
{
	return sq.multiply(u, v);
}

TensorElement p_map(GradedAlgebra const &a, GradedAlgebra const &sq, TensorElement const &x)
{
	auto one = a.unit_element();
	return pair_element(sq, x, one) + pair_element(sq, one, x);
}

TensorElement p_power(GradedAlgebra const &a, GradedAlgebra const &sq, TensorElement const &z)
{
	int const n = z.power();
	std::vector<TensorElement> images;
	for (int l = 0; l < a.dim(); ++l)
		images.push_back(p_map(a, sq, TensorElement::basis(a.carrier(), {l})));
	TensorElement out(sq.carrier(), n);
	std::vector<int> t(n);
	for (auto const &[i, c] : z.coeffs())
	{
		a.carrier()->decode_into(i, t);
		TensorElement acc = images[t[0]];
		for (int k = 1; k < n; ++k)
			acc = tensor_product(acc, images[t[k]]);
		out += acc.scaled(c);
	}
	return out;
}

Report verify_main_theorem(GradedAlgebra const &a, int n, RootOfUnity const &zeta)
{
	if (!zeta.is_primitive_root(n))
		throw std::invalid_argument(zeta.to_string() + " is not a primitive root of order " + std::to_string(n));
	auto sq = tensor_square(a);
	return per_basis("mainthm", n, zeta, symmetrize_graded(a.carrier(), n, zeta),
	                 [&](TensorElement const &z) -> std::string {
		                 auto y = p_power(a, *sq, z);
		                 if (!in_zeta_symmetrized(y, zeta))
			                 throw InvariantViolation("p^n(z) is not in (A (x) A)^n(zeta)");
		                 auto lhs = sq->nabla(symmetrized_sum(zeta, y));
		                 auto rhs = p_map(a, *sq, bracket(a, n, zeta, z));
		                 if (lhs == rhs)
			                 return {};
		                 return "z = " + z.to_string() + ": [p^n(z)] = " + lhs.to_string() + " but p([z]) = " +
		                        rhs.to_string();
	                 });
}

TensorElement c_expansion(GradedAlgebra const &a, GradedAlgebra const &sq, int n, RootOfUnity const &zeta,
                          TensorElement const &z)
{
	auto s = symmetrized_sum(zeta, z);
	TensorElement out(sq.carrier(), 1);
	std::vector<int> t(n);
	for (int i = 0; i <= n; ++i)
	{
		auto c = c_coefficient(n, i, zeta);
		if (c.is_zero())
			continue;
		for (auto const &[idx, coeff] : s.coeffs())
		{
			a.carrier()->decode_into(idx, t);
			std::vector<int> left(t.begin(), t.begin() + i), right(t.begin() + i, t.end());
			auto l = TensorElement(a.carrier(), 1, a.multiply_tuple(left));
			auto r = TensorElement(a.carrier(), 1, a.multiply_tuple(right));
			out += pair_element(sq, l, r).scaled(c * coeff);
		}
	}
	return out;
}

Report verify_c_expansion(GradedAlgebra const &a, int n, RootOfUnity const &zeta)
{
	auto sq = tensor_square(a);
	for (int i = 1; i < n; ++i)
		if (!c_coefficient(n, i, zeta).is_zero())
		{
			Report r;
			r.fail("c-expansion", n, zeta.to_string(), 0, "c_" + std::to_string(i) + " is nonzero");
			return r;
		}
	return per_basis("c-expansion", n, zeta, symmetrize_graded(a.carrier(), n, zeta),
	                 [&](TensorElement const &z) -> std::string {
		                 auto lhs = sq->nabla(symmetrized_sum(zeta, p_power(a, *sq, z)));
		                 auto rhs = c_expansion(a, *sq, n, zeta, z);
		                 if (lhs == rhs)
			                 return {};
		                 return "z = " + z.to_string() + ": " + lhs.to_string() + " != " + rhs.to_string();
	                 });
}

// ---------------------------------------------------------------------------

namespace {

ModulePtr monomial_module(ModulePtr const &gens, std::vector<std::vector<int>> const &words)
{
	auto const &G = gens->group();
	std::vector<int> degrees;
	for (auto const &w : words)
	{
		int g = G.zero();
		for (int l : w)
			g = G.add(g, gens->degree(l));
		degrees.push_back(g);
	}
	auto render = [&](bool by_index) {
		std::vector<std::string> names;
		for (auto const &w : words)
		{
			if (w.empty())
			{
				names.push_back("1");
				continue;
			}
			std::string s;
			for (std::size_t k = 0; k < w.size(); ++k)
			{
				if (k)
					s += '.';
				s += by_index ? "g" + std::to_string(w[k]) : gens->name(w[k]);
			}
			names.push_back(s);
		}
		return names;
	};
	auto names = render(false);
	std::set<std::string> seen(names.begin(), names.end());
	bool clash = seen.size() != names.size();
	for (auto const &nm : gens->names())
		clash = clash || nm.find('.') != std::string::npos;
	if (clash)
		names = render(true);
	return std::make_shared<const GradedModule>(gens->chi_ptr(), degrees, names);
}

std::string coeff_text(CycNumber const &c)
{
	auto const &v = c.coeffs();
	std::size_t last = v.size();
	while (last > 0 && v[last - 1] == 0)
		--last;
	if (last == 0)
		return "0";
	std::string s;
	for (std::size_t k = 0; k < last; ++k)
	{
		if (k)
			s += ',';
		s += v[k].get_str();
	}
	return s;
}

CycNumber parse_coeff(CyclotomicField const &f, std::string const &text)
{
	std::vector<Rational> v;
	std::stringstream ss(text);
	std::string part;
	while (std::getline(ss, part, ','))
	{
		Rational q;
		if (q.set_str(part, 10) != 0)
			throw std::invalid_argument("bad rational in dump: " + part);
		v.push_back(q);
	}
	return CycNumber(f, std::move(v));
}

std::string vector_text(SparseVector const &v)
{
	std::string s;
	for (auto const &[i, c] : v)
		s += " " + std::to_string(i) + ":" + coeff_text(c);
	return s;
}

SparseVector parse_vector(CyclotomicField const &f, std::istringstream &in)
{
	std::vector<SparseVector::Entry> entries;
	std::string tok;
	while (in >> tok)
	{
		auto colon = tok.find(':');
		if (colon == std::string::npos)
			throw std::invalid_argument("bad vector entry in dump: " + tok);
		entries.emplace_back(static_cast<Index>(std::stoull(tok.substr(0, colon))), parse_coeff(f, tok.substr(colon + 1)));
	}
	return SparseVector::from_unsorted(std::move(entries));
}

} // namespace

TruncatedHopf::TruncatedHopf(ModulePtr generators, int cap, Tables tables)
    : generators_(std::move(generators)), cap_(cap), tables_(std::move(tables))
{
	std::size_t const N = tables_.words.size();
	if (N == 0 || !tables_.words[0].empty())
		throw std::invalid_argument("the first basis monomial must be the empty word");
	if (tables_.mult.size() != N || tables_.coproduct.size() != N || tables_.counit.size() != N ||
	    tables_.antipode.size() != N)
		throw std::invalid_argument("Hopf tables do not match the basis size");
	for (auto const &row : tables_.mult)
		if (row.size() != N)
			throw std::invalid_argument("multiplication table is not square");
	if (tables_.generator_images.size() != static_cast<std::size_t>(generators_->dim()))
		throw std::invalid_argument("one image per generator is required");
	for (auto const &w : tables_.words)
	{
		if (static_cast<int>(w.size()) > cap_)
			throw std::invalid_argument("basis monomial longer than the cap");
		for (int l : w)
			if (l < 0 || l >= generators_->dim())
				throw std::invalid_argument("basis monomial uses an unknown generator");
	}
	carrier_ = monomial_module(generators_, tables_.words);
}

std::vector<int> TruncatedHopf::dims_by_length() const
{
	std::vector<int> out(cap_ + 1, 0);
	for (auto const &w : tables_.words)
		out[w.size()]++;
	return out;
}

int TruncatedHopf::filtration_degree(SparseVector const &x) const
{
	int m = 0;
	for (auto const &[i, c] : x)
		m = std::max(m, length(static_cast<int>(i)));
	return m;
}

std::optional<int> TruncatedHopf::label_of_word(std::vector<int> const &w) const
{
	for (std::size_t u = 0; u < tables_.words.size(); ++u)
		if (tables_.words[u] == w)
			return static_cast<int>(u);
	return std::nullopt;
}

std::optional<SparseVector> TruncatedHopf::multiply(SparseVector const &x, SparseVector const &y) const
{
	SparseVector out;
	for (auto const &[i, ci] : x)
		for (auto const &[j, cj] : y)
		{
			auto const &p = product(static_cast<int>(i), static_cast<int>(j));
			if (!p)
				return std::nullopt;
			out.axpy(ci * cj, *p);
		}
	return out;
}

std::optional<SparseVector> TruncatedHopf::multiply_pairs(SparseVector const &x, SparseVector const &y) const
{
	Index const N = static_cast<Index>(dim());
	auto const &chi = carrier_->chi();
	std::vector<SparseVector::Entry> entries;
	for (auto const &[i, ci] : x)
		for (auto const &[j, cj] : y)
		{
			int a = static_cast<int>(i / N), b = static_cast<int>(i % N);
			int c = static_cast<int>(j / N), e = static_cast<int>(j % N);
			auto const &ac = product(a, c);
			auto const &be = product(b, e);
			if (!ac || !be)
				return std::nullopt;
			auto scale = chi.value(carrier_->degree(b), carrier_->degree(c)).value() * ci * cj;
			for (auto const &[p, cp] : *ac)
				for (auto const &[q, cq] : *be)
					entries.emplace_back(p * N + q, scale * cp * cq);
		}
	return SparseVector::from_unsorted(std::move(entries));
}

SparseVector TruncatedHopf::apply_antipode(SparseVector const &x) const
{
	SparseVector out;
	for (auto const &[i, c] : x)
		out.axpy(c, antipode(static_cast<int>(i)));
	return out;
}

SparseVector TruncatedHopf::apply_coproduct(SparseVector const &x) const
{
	SparseVector out;
	for (auto const &[i, c] : x)
		out.axpy(c, coproduct(static_cast<int>(i)));
	return out;
}

std::string TruncatedHopf::dump() const
{
	std::ostringstream os;
	auto const &chi = generators_->chi();
	os << "truncated-hopf 1\n";
	os << "group";
	for (int o : chi.group().orders())
		os << ' ' << o;
	os << "\nroot " << chi.ambient() << "\nbichar";
	for (auto const &row : chi.generator_exponents())
		for (int k : row)
			os << ' ' << k;
	os << "\ngenerators " << generators_->dim() << '\n';
	for (int l = 0; l < generators_->dim(); ++l)
		os << "gen " << generators_->name(l) << ' ' << generators_->degree(l) << '\n';
	os << "cap " << cap_ << "\ndims";
	for (int d : dims_by_length())
		os << ' ' << d;
	os << "\nbasis " << dim() << '\n';
	for (auto const &w : tables_.words)
	{
		os << "word " << w.size();
		for (int l : w)
			os << ' ' << l;
		os << '\n';
	}
	for (int u = 0; u < dim(); ++u)
		for (int v = 0; v < dim(); ++v)
		{
			auto const &p = product(u, v);
			os << "mult " << u << ' ' << v;
			if (!p)
				os << " beyond";
			else
				os << vector_text(*p);
			os << '\n';
		}
	for (int u = 0; u < dim(); ++u)
		os << "coproduct " << u << vector_text(coproduct(u)) << '\n';
	for (int u = 0; u < dim(); ++u)
		os << "counit " << u << ' ' << coeff_text(counit(u)) << '\n';
	for (int u = 0; u < dim(); ++u)
		os << "antipode " << u << vector_text(antipode(u)) << '\n';
	for (int k = 0; k < generators_->dim(); ++k)
		os << "image " << k << vector_text(generator_image(k)) << '\n';
	os << "end\n";
	return os.str();
}

TruncatedHopf TruncatedHopf::import(std::string_view text)
{
	std::istringstream in{std::string(text)};
	std::string line;
	auto next = [&](std::string const &key) {
		if (!std::getline(in, line))
			throw std::invalid_argument("truncated dump: expected " + key);
		std::istringstream ls(line);
		std::string k;
		ls >> k;
		if (k != key)
			throw std::invalid_argument("dump: expected '" + key + "', found '" + line + "'");
		return ls;
	};
	auto read_ints = [](std::istringstream &ls) {
		std::vector<int> v;
		int x;
		while (ls >> x)
			v.push_back(x);
		return v;
	};
	{
		auto ls = next("truncated-hopf");
		int version = 0;
		ls >> version;
		if (version != 1)
			throw std::invalid_argument("unsupported dump version");
	}
	auto orders = [&] {
		auto ls = next("group");
		return read_ints(ls);
	}();
	int root = 0;
	next("root") >> root;
	auto flat = [&] {
		auto ls = next("bichar");
		return read_ints(ls);
	}();
	std::size_t const r = orders.size();
	if (flat.size() != r * r)
		throw std::invalid_argument("dump: bicharacter table has the wrong size");
	std::vector<std::vector<int>> gen(r, std::vector<int>(r));
	for (std::size_t a = 0; a < r; ++a)
		for (std::size_t b = 0; b < r; ++b)
			gen[a][b] = flat[a * r + b];
	auto chi = std::make_shared<const Bicharacter>(FiniteAbelianGroup(orders), root, gen);
	int ngen = 0;
	next("generators") >> ngen;
	std::vector<int> degrees;
	std::vector<std::string> names;
	for (int k = 0; k < ngen; ++k)
	{
		auto ls = next("gen");
		std::string nm;
		int g = -1;
		ls >> nm >> g;
		names.push_back(nm);
		degrees.push_back(g);
	}
	auto gens = std::make_shared<const GradedModule>(chi, degrees, names);
	int cap = 0;
	next("cap") >> cap;
	auto dims = [&] {
		auto ls = next("dims");
		return read_ints(ls);
	}();
	int N = 0;
	next("basis") >> N;
	Tables t;
	for (int u = 0; u < N; ++u)
	{
		auto ls = next("word");
		auto v = read_ints(ls);
		if (v.empty() || v[0] != static_cast<int>(v.size()) - 1)
			throw std::invalid_argument("dump: malformed word line");
		t.words.emplace_back(v.begin() + 1, v.end());
	}
	auto const &f = chi->field();
	t.mult.assign(N, std::vector<std::optional<SparseVector>>(N));
	for (int u = 0; u < N; ++u)
		for (int v = 0; v < N; ++v)
		{
			auto ls = next("mult");
			int a = -1, b = -1;
			ls >> a >> b;
			if (a != u || b != v)
				throw std::invalid_argument("dump: multiplication entries out of order");
			auto pos = ls.tellg();
			std::string tok;
			if (ls >> tok && tok == "beyond")
				continue;
			ls.clear();
			ls.seekg(pos);
			t.mult[u][v] = parse_vector(f, ls);
		}
	auto indexed = [&](std::string const &key, int count, auto &&body) {
		for (int u = 0; u < count; ++u)
		{
			auto ls = next(key);
			int a = -1;
			ls >> a;
			if (a != u)
				throw std::invalid_argument("dump: " + key + " entries out of order");
			body(ls);
		}
	};
	indexed("coproduct", N, [&](std::istringstream &ls) { t.coproduct.push_back(parse_vector(f, ls)); });
	indexed("counit", N, [&](std::istringstream &ls) {
		std::string tok;
		ls >> tok;
		t.counit.push_back(parse_coeff(f, tok));
	});
	indexed("antipode", N, [&](std::istringstream &ls) { t.antipode.push_back(parse_vector(f, ls)); });
	indexed("image", ngen, [&](std::istringstream &ls) { t.generator_images.push_back(parse_vector(f, ls)); });
	next("end");
	TruncatedHopf h(gens, cap, std::move(t));
	if (h.dims_by_length() != dims)
		throw std::invalid_argument("dump: dimension line does not match the basis");
	return h;
}

// ---------------------------------------------------------------------------

Enveloping::Enveloping(BracketStructure const &p, EnvelopingOptions const &opts) : gens_(p.carrier()), m_(gens_->dim())
{
	int const d = opts.cap;
	if (d < 0 || opts.max_slack < 0)
		throw std::invalid_argument("cap and slack must be nonnegative");
	max_len_ = d + opts.max_slack;
	offset_.assign(max_len_ + 2, 0);
	Index pw = 1;
	for (int k = 0; k <= max_len_; ++k)
	{
		offset_[k + 1] = offset_[k] + pw;
		if (offset_[k + 1] > Index(4'000'000))
			throw std::invalid_argument("tensor algebra truncation too large; lower the cap or the slack");
		pw *= static_cast<Index>(m_);
	}
	int const L = gens_->ambient();

	// relations [z] - sum_sigma sigma(z) for every available arity
	for (int n = 2; n <= max_len_; ++n)
	{
		if (L % n != 0)
		{
			if (arity_possible(*gens_, n))
				throw std::invalid_argument("the ambient field lacks a primitive root of order " + std::to_string(n) +
				                            " needed for relations of degree " + std::to_string(n));
			continue;
		}
		for (auto const &zeta : primitive_roots(L, n))
		{
			auto const *e = p.find(n, zeta);
			if (!e)
			{
				if (!symmetrize_graded(gens_, n, zeta).is_zero())
					throw std::invalid_argument("the bracket structure has no arity " + std::to_string(n) + " at " +
					                            zeta.to_string() + "; build it with max_n >= " +
					                            std::to_string(max_len_));
				continue;
			}
			auto basis = e->domain.basis();
			for (std::size_t k = 0; k < basis.size(); ++k)
			{
				SparseVector r;
				auto sym = symmetrized_sum(zeta, basis[k]);
				for (auto const &[i, c] : sym.coeffs())
					r.add(offset_[n] + i, -c);
				for (auto const &[i, c] : e->values[k].coeffs())
					r.add(offset_[1] + i, c);
				if (!r.empty())
					relations_.emplace_back(std::move(r), n);
			}
		}
	}

	auto offsets = offset_;
	ideal_ = std::make_unique<EchelonBasis>(gens_->field(), [offsets](Index i) {
		int len = static_cast<int>(std::upper_bound(offsets.begin(), offsets.end(), i) - offsets.begin()) - 1;
		return (static_cast<Index>(64 - len) << 40) + (i - offsets[len]);
	});

	auto quotient_dims = [&] {
		std::vector<int> dims(d + 1, 0);
		for (int k = 0; k <= d; ++k)
			dims[k] = static_cast<int>(offset_[k + 1] - offset_[k]);
		for (Index piv : ideal_->pivots())
		{
			int len = static_cast<int>(std::upper_bound(offset_.begin(), offset_.end(), piv) - offset_.begin()) - 1;
			if (len <= d)
				dims[len]--;
		}
		return dims;
	};

	for (int total = 2; total <= d; ++total)
		add_sandwiches(total);
	history_.push_back(quotient_dims());
	for (int s = 1; s <= opts.max_slack; ++s)
	{
		add_sandwiches(d + s);
		history_.push_back(quotient_dims());
		slack_ = s;
		if (history_[s] == history_[s - 1])
		{
			stabilized_ = true;
			break;
		}
	}
	build_tables(d);
}

Index Enveloping::word_index(std::vector<int> const &w) const
{
	Index i = 0;
	for (int l : w)
		i = i * static_cast<Index>(m_) + static_cast<Index>(l);
	return offset_[w.size()] + i;
}

std::vector<int> Enveloping::index_word(Index i) const
{
	int len = static_cast<int>(std::upper_bound(offset_.begin(), offset_.end(), i) - offset_.begin()) - 1;
	std::vector<int> w(len);
	Index r = i - offset_[len];
	for (int k = len - 1; k >= 0; --k)
	{
		w[k] = static_cast<int>(r % static_cast<Index>(m_));
		r /= static_cast<Index>(m_);
	}
	return w;
}

void Enveloping::add_sandwiches(int total)
{
	Index const m = static_cast<Index>(m_);
	for (auto const &[r, n] : relations_)
	{
		if (n > total)
			continue;
		int const outer = total - n;
		std::vector<std::pair<std::vector<int>, Index>> terms;
		for (auto const &[i, c] : r)
			terms.emplace_back(index_word(i), i);
		for (int la = 0; la <= outer; ++la)
		{
			int const lb = outer - la;
			Index const na = offset_[la + 1] - offset_[la];
			Index const nb = offset_[lb + 1] - offset_[lb];
			for (Index a = 0; a < na; ++a)
				for (Index b = 0; b < nb; ++b)
				{
					std::vector<SparseVector::Entry> entries;
					for (std::size_t k = 0; k < terms.size(); ++k)
					{
						auto const &w = terms[k].first;
						int len = la + static_cast<int>(w.size()) + lb;
						Index mid = terms[k].second - offset_[w.size()];
						Index pw_w = 1, pw_b = 1;
						for (std::size_t q = 0; q < w.size(); ++q)
							pw_w *= m;
						for (int q = 0; q < lb; ++q)
							pw_b *= m;
						Index idx = offset_[len] + ((a * pw_w + mid) * pw_b + b);
						entries.emplace_back(idx, r.entries()[k].second);
					}
					ideal_->insert(SparseVector::from_unsorted(std::move(entries)));
				}
		}
	}
}

SparseVector Enveloping::normal_form(Index word) const
{
	auto rem = ideal_->reduce(SparseVector::unit(gens_->field(), word));
	SparseVector out;
	for (auto const &[i, c] : rem)
	{
		if (i >= standard_label_.size() || standard_label_[i] < 0)
			throw std::logic_error("normal form left the truncated basis");
		out.add(static_cast<Index>(standard_label_[i]), c);
	}
	return out;
}

void Enveloping::build_tables(int cap)
{
	std::set<Index> pivots(ideal_->pivots().begin(), ideal_->pivots().end());
	TruncatedHopf::Tables t;
	standard_label_.assign(offset_[cap + 1], -1);
	for (Index i = 0; i < offset_[cap + 1]; ++i)
		if (!pivots.count(i))
		{
			standard_label_[i] = static_cast<int>(t.words.size());
			t.words.push_back(index_word(i));
		}
	if (t.words.empty() || !t.words[0].empty())
		throw std::logic_error("the unit was absorbed into the ideal");
	int const N = static_cast<int>(t.words.size());
	auto const &f = gens_->field();
	auto const &chi = gens_->chi();
	int const L = gens_->ambient();

	std::map<Index, SparseVector> nf_cache;
	auto nf = [&](std::vector<int> const &w) -> SparseVector const & {
		Index i = word_index(w);
		auto it = nf_cache.find(i);
		if (it == nf_cache.end())
			it = nf_cache.emplace(i, normal_form(i)).first;
		return it->second;
	};

	t.mult.assign(N, std::vector<std::optional<SparseVector>>(N));
	for (int u = 0; u < N; ++u)
		for (int v = 0; v < N; ++v)
		{
			if (t.words[u].size() + t.words[v].size() > static_cast<std::size_t>(cap))
				continue;
			auto w = t.words[u];
			w.insert(w.end(), t.words[v].begin(), t.words[v].end());
			t.mult[u][v] = nf(w);
		}

	for (int u = 0; u < N; ++u)
	{
		auto const &w = t.words[u];
		int const k = static_cast<int>(w.size());
		std::vector<SparseVector::Entry> entries;
		for (unsigned mask = 0; mask < (1u << k); ++mask)
		{
			std::vector<int> left, right;
			long long e = 0;
			for (int i = 0; i < k; ++i)
			{
				if (mask >> i & 1u)
				{
					left.push_back(w[i]);
					// every earlier factor sent right is braided past this one
					for (int j = 0; j < i; ++j)
						if (!(mask >> j & 1u))
							e += chi.exponent(gens_->degree(w[j]), gens_->degree(w[i]));
				}
				else
					right.push_back(w[i]);
			}
			auto const &l = nf(left);
			auto const &r = nf(right);
			auto scale = CycNumber::root(f, e % L);
			for (auto const &[a, ca] : l)
				for (auto const &[b, cb] : r)
					entries.emplace_back(a * N + b, scale * ca * cb);
		}
		t.coproduct.push_back(SparseVector::from_unsorted(std::move(entries)));
		t.counit.push_back(k == 0 ? CycNumber::one(f) : CycNumber::zero(f));

		long long e = 0;
		for (int i = 0; i < k; ++i)
			for (int j = i + 1; j < k; ++j)
				e += chi.exponent(gens_->degree(w[i]), gens_->degree(w[j]));
		std::vector<int> rev(w.rbegin(), w.rend());
		auto s = nf(rev).scaled(CycNumber::root(f, e % L) * Rational(k % 2 ? -1 : 1));
		t.antipode.push_back(std::move(s));
	}
	for (int g = 0; g < m_; ++g)
		t.generator_images.push_back(cap >= 1 ? nf({g}) : SparseVector{});
	hopf_.emplace(gens_, cap, std::move(t));
}

Report Enveloping::check_antipode_preserves_ideal() const
{
	Report r;
	auto const &chi = gens_->chi();
	auto const &f = gens_->field();
	int const L = gens_->ambient();
	int const cap = hopf().cap();
	std::size_t index = 0;
	for (auto const &row : ideal_->rows())
	{
		int top = 0;
		for (auto const &[i, c] : row)
			top = std::max(top, static_cast<int>(index_word(i).size()));
		if (top > cap)
			continue;
		SparseVector image;
		for (auto const &[i, c] : row)
		{
			auto w = index_word(i);
			int const k = static_cast<int>(w.size());
			long long e = 0;
			for (int a = 0; a < k; ++a)
				for (int b = a + 1; b < k; ++b)
					e += chi.exponent(gens_->degree(w[a]), gens_->degree(w[b]));
			std::vector<int> rev(w.rbegin(), w.rend());
			image.add(word_index(rev), c * CycNumber::root(f, e % L) * Rational(k % 2 ? -1 : 1));
		}
		if (ideal_->contains(image))
			r.pass("antipode-ideal", std::nullopt, std::nullopt, index);
		else
			r.fail("antipode-ideal", std::nullopt, std::nullopt, index, "S maps an ideal element outside the ideal");
		++index;
	}
	return r;
}

Report Enveloping::check_universal_map(GradedAlgebra const &a, std::vector<TensorElement> const &images) const
{
	if (static_cast<int>(images.size()) != m_)
		throw std::invalid_argument("one image per generator is required");
	for (int k = 0; k < m_; ++k)
	{
		auto const &x = images[k];
		if (x.host() != a.carrier() || x.power() != 1)
			throw std::invalid_argument("generator images must be algebra elements");
		if (!x.is_zero() && x.homogeneous_degree() != gens_->degree(k))
			throw std::invalid_argument("generator images must preserve degrees");
	}
	std::map<Index, TensorElement> cache;
	std::function<TensorElement const &(Index)> g = [&](Index i) -> TensorElement const & {
		auto it = cache.find(i);
		if (it != cache.end())
			return it->second;
		auto w = index_word(i);
		TensorElement v = a.unit_element();
		if (!w.empty())
		{
			int last = w.back();
			w.pop_back();
			v = a.multiply(g(word_index(w)), images[last]);
		}
		return cache.emplace(i, std::move(v)).first->second;
	};
	Report r;
	int const cap = hopf().cap();
	std::size_t index = 0;
	for (auto const &row : ideal_->rows())
	{
		int top = 0;
		for (auto const &[i, c] : row)
			top = std::max(top, static_cast<int>(index_word(i).size()));
		if (top > cap)
			continue;
		TensorElement sum(a.carrier(), 1);
		for (auto const &[i, c] : row)
			sum += g(i).scaled(c);
		if (sum.is_zero())
			r.pass("universal-map", std::nullopt, std::nullopt, index);
		else
			r.fail("universal-map", std::nullopt, std::nullopt, index, "ideal element maps to " + sum.to_string());
		++index;
	}
	return r;
}

// ---------------------------------------------------------------------------

namespace {

std::string vec_string(TruncatedHopf const &h, SparseVector const &v)
{
	return TensorElement(h.carrier(), 1, v).to_string();
}

} // namespace

Report check_antipode(TruncatedHopf const &h)
{
	Report r;
	Index const N = static_cast<Index>(h.dim());
	for (int u = 0; u < h.dim(); ++u)
	{
		SparseVector expect;
		if (!h.counit(u).is_zero())
			expect.add(static_cast<Index>(h.unit_label()), h.counit(u));
		SparseVector left, right;
		bool beyond = false;
		for (auto const &[i, c] : h.coproduct(u))
		{
			int a = static_cast<int>(i / N), b = static_cast<int>(i % N);
			auto sa = h.multiply(h.antipode(a), SparseVector::unit(h.field(), static_cast<Index>(b)));
			auto sb = h.multiply(SparseVector::unit(h.field(), static_cast<Index>(a)), h.antipode(b));
			if (!sa || !sb)
			{
				beyond = true;
				break;
			}
			left.axpy(c, *sa);
			right.axpy(c, *sb);
		}
		if (beyond)
			r.skip("antipode", std::nullopt, std::nullopt, u, "product beyond the cap");
		else if (!(left == expect))
			r.fail("antipode", std::nullopt, std::nullopt, u,
			       "u = " + h.carrier()->name(u) + ": nabla(S x 1)Delta(u) = " + vec_string(h, left));
		else if (!(right == expect))
			r.fail("antipode", std::nullopt, std::nullopt, u,
			       "u = " + h.carrier()->name(u) + ": nabla(1 x S)Delta(u) = " + vec_string(h, right));
		else
			r.pass("antipode", std::nullopt, std::nullopt, u);
	}
	return r;
}

Report check_coassociativity(TruncatedHopf const &h)
{
	Report r;
	Index const N = static_cast<Index>(h.dim());
	for (int u = 0; u < h.dim(); ++u)
	{
		std::vector<SparseVector::Entry> left, right;
		for (auto const &[i, c] : h.coproduct(u))
		{
			Index a = i / N, b = i % N;
			for (auto const &[j, cj] : h.coproduct(static_cast<int>(a)))
				left.emplace_back(j * N + b, c * cj);
			for (auto const &[j, cj] : h.coproduct(static_cast<int>(b)))
				right.emplace_back(a * N * N + j, c * cj);
		}
		if (SparseVector::from_unsorted(std::move(left)) == SparseVector::from_unsorted(std::move(right)))
			r.pass("coassociativity", std::nullopt, std::nullopt, u);
		else
			r.fail("coassociativity", std::nullopt, std::nullopt, u, "u = " + h.carrier()->name(u));
	}
	return r;
}

Report check_counit(TruncatedHopf const &h)
{
	Report r;
	Index const N = static_cast<Index>(h.dim());
	for (int u = 0; u < h.dim(); ++u)
	{
		SparseVector left, right;
		for (auto const &[i, c] : h.coproduct(u))
		{
			int a = static_cast<int>(i / N), b = static_cast<int>(i % N);
			left.add(static_cast<Index>(b), c * h.counit(a));
			right.add(static_cast<Index>(a), c * h.counit(b));
		}
		auto e = SparseVector::unit(h.field(), static_cast<Index>(u));
		if (left == e && right == e)
			r.pass("counit", std::nullopt, std::nullopt, u);
		else
			r.fail("counit", std::nullopt, std::nullopt, u, "u = " + h.carrier()->name(u));
	}
	return r;
}

Report check_coproduct_multiplicative(TruncatedHopf const &h)
{
	Report r;
	std::size_t index = 0;
	for (int u = 0; u < h.dim(); ++u)
		for (int v = 0; v < h.dim(); ++v)
		{
			if (h.length(u) + h.length(v) > h.cap())
				continue;
			auto const &uv = h.product(u, v);
			auto rhs = h.multiply_pairs(h.coproduct(u), h.coproduct(v));
			if (!uv || !rhs)
				r.skip("coproduct-multiplicative", std::nullopt, std::nullopt, index, "product beyond the cap");
			else if (h.apply_coproduct(*uv) == *rhs)
				r.pass("coproduct-multiplicative", std::nullopt, std::nullopt, index);
			else
				r.fail("coproduct-multiplicative", std::nullopt, std::nullopt, index,
				       "u = " + h.carrier()->name(u) + ", v = " + h.carrier()->name(v));
			++index;
		}
	return r;
}

Subspace primitives(TruncatedHopf const &h)
{
	std::vector<int> cols;
	for (int u = 0; u < h.dim(); ++u)
		if (h.length(u) <= h.cap() - 1)
			cols.push_back(u);
	Index const N = static_cast<Index>(h.dim());
	Index const one = static_cast<Index>(h.unit_label());
	auto kernel = kernel_of_columns(h.field(), cols.size(), [&](Index c) {
		Index u = static_cast<Index>(cols[c]);
		SparseVector v = h.coproduct(cols[c]);
		v.add(u * N + one, -CycNumber::one(h.field()));
		v.add(one * N + u, -CycNumber::one(h.field()));
		return v;
	});
	Subspace out(h.carrier(), 1);
	for (auto const &k : kernel)
	{
		SparseVector w;
		for (auto const &[c, x] : k)
			w.add(static_cast<Index>(cols[c]), x);
		out.insert(TensorElement(h.carrier(), 1, std::move(w)));
	}
	return out;
}

Report check_generators_primitive(TruncatedHopf const &h)
{
	Report r;
	Index const N = static_cast<Index>(h.dim());
	Index const one = static_cast<Index>(h.unit_label());
	for (int k = 0; k < h.generators()->dim(); ++k)
	{
		auto const &x = h.generator_image(k);
		SparseVector expect;
		for (auto const &[i, c] : x)
		{
			expect.add(i * N + one, c);
			expect.add(one * N + i, c);
		}
		if (h.apply_coproduct(x) == expect)
			r.pass("generator-primitive", std::nullopt, std::nullopt, k);
		else
			r.fail("generator-primitive", std::nullopt, std::nullopt, k,
			       h.generators()->name(k) + " maps to the non-primitive " + vec_string(h, x));
	}
	return r;
}

Report check_primitives_lie(TruncatedHopf const &h, int max_n)
{
	auto prims = primitives(h);
	std::vector<std::pair<int, RootOfUnity>> keys;
	for (auto const &k : available_arities(h.carrier()->ambient(), max_n))
		if (k.first >= 2)
			keys.push_back(k);
	auto bracket_in_h = [&](int n, RootOfUnity const &zeta, TensorElement const &z) -> std::optional<TensorElement> {
		auto s = symmetrized_sum(zeta, z);
		SparseVector out;
		std::vector<int> t(n);
		for (auto const &[i, c] : s.coeffs())
		{
			h.carrier()->decode_into(i, t);
			SparseVector acc = SparseVector::unit(h.field(), static_cast<Index>(t[0]));
			for (int k = 1; k < n; ++k)
			{
				auto next = h.multiply(acc, SparseVector::unit(h.field(), static_cast<Index>(t[k])));
				if (!next)
					return std::nullopt;
				acc = std::move(*next);
			}
			out.axpy(c, acc);
		}
		if (h.filtration_degree(out) > h.cap() - 1)
			return std::nullopt;
		return TensorElement(h.carrier(), 1, std::move(out));
	};
	return subalgebra_report(h.carrier(), keys, bracket_in_h, prims, "primitives-lie");
}

} // namespace ydlie
