#include "ydlie/symzeta.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ydlie {

Subspace::Subspace(ModulePtr host, int power) : host_(std::move(host)), power_(power), basis_(host_->field())
{
}

Subspace Subspace::whole(ModulePtr host, int power)
{
	std::vector<Index> all(host->tuple_count(power));
	std::iota(all.begin(), all.end(), Index{0});
	return coordinate(std::move(host), power, std::move(all));
}

Subspace Subspace::span(ModulePtr host, int power, std::vector<TensorElement> const &gens)
{
	Subspace s(std::move(host), power);
	for (auto const &g : gens)
		s.insert(g);
	return s;
}

Subspace Subspace::coordinate(ModulePtr host, int power, std::vector<Index> tuples)
{
	std::sort(tuples.begin(), tuples.end());
	tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
	Subspace s(host, power);
	auto const &f = host->field();
	for (Index t : tuples)
		s.basis_.insert(SparseVector::unit(f, t));
	return s;
}

bool Subspace::insert(TensorElement const &z)
{
	if (z.host() != host_ || z.power() != power_)
		throw std::invalid_argument("element does not belong to the subspace's tensor power");
	bool added = basis_.insert(z.coeffs());
	if (added)
		order_valid_ = false;
	return added;
}

bool Subspace::contains(TensorElement const &z) const
{
	if (z.host() != host_ || z.power() != power_)
		throw std::invalid_argument("element does not belong to the subspace's tensor power");
	return basis_.contains(z.coeffs());
}

bool Subspace::contains(Subspace const &other) const
{
	for (auto const &row : other.basis_.rows())
		if (!basis_.contains(row))
			return false;
	return true;
}

void Subspace::refresh_order() const
{
	if (order_valid_)
		return;
	auto const &piv = basis_.pivots();
	order_.resize(piv.size());
	std::iota(order_.begin(), order_.end(), std::size_t{0});
	std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return piv[a] < piv[b]; });
	order_valid_ = true;
}

std::optional<std::vector<CycNumber>> Subspace::coordinates(TensorElement const &z) const
{
	auto raw = basis_.coordinates(z.coeffs());
	if (!raw)
		return std::nullopt;
	refresh_order();
	std::vector<CycNumber> out;
	out.reserve(raw->size());
	for (auto r : order_)
		out.push_back((*raw)[r]);
	return out;
}

std::vector<TensorElement> Subspace::basis() const
{
	refresh_order();
	auto const &rows = basis_.rows();
	std::vector<TensorElement> out;
	out.reserve(rows.size());
	for (auto r : order_)
		out.emplace_back(host_, power_, rows[r]);
	return out;
}

bool operator==(Subspace const &a, Subspace const &b)
{
	return a.host_ == b.host_ && a.power_ == b.power_ && a.dimension() == b.dimension() &&
	       a.basis_.sorted_rows() == b.basis_.sorted_rows();
}

std::string Subspace::export_text() const
{
	std::string out = "power " + std::to_string(power_) + " dim " + std::to_string(dimension()) + "\n";
	for (auto const &b : basis())
		out += b.to_string() + "\n";
	return out;
}

namespace {

std::string trim(std::string_view s)
{
	auto b = s.find_first_not_of(" \t\r");
	if (b == std::string_view::npos)
		return {};
	auto e = s.find_last_not_of(" \t\r");
	return std::string(s.substr(b, e - b + 1));
}

// Splits "a + (b - c) * (x) + d" at top-level " + " separators.
std::vector<std::string> split_terms(std::string const &line)
{
	std::vector<std::string> out;
	int depth = 0;
	std::size_t start = 0;
	for (std::size_t k = 0; k < line.size(); ++k)
	{
		char c = line[k];
		if (c == '(')
			++depth;
		else if (c == ')')
			--depth;
		else if (c == '+' && depth == 0 && k > 0 && line[k - 1] == ' ')
		{
			out.push_back(trim(std::string_view(line).substr(start, k - start)));
			start = k + 1;
		}
	}
	out.push_back(trim(std::string_view(line).substr(start)));
	return out;
}

TensorElement parse_element(ModulePtr const &host, int power, std::string const &line)
{
	TensorElement z(host, power);
	if (trim(line) == "0")
		return z;
	for (auto const &term : split_terms(line))
	{
		auto star = term.rfind("* (");
		if (star == std::string::npos || term.back() != ')')
			throw std::invalid_argument("bad subspace term '" + term + "'");
		auto coef = trim(std::string_view(term).substr(0, star));
		if (coef.size() >= 2 && coef.front() == '(' && coef.back() == ')')
			coef = coef.substr(1, coef.size() - 2);
		auto labels = term.substr(star + 3, term.size() - star - 4);
		std::vector<int> tuple;
		std::stringstream ss(labels);
		std::string name;
		while (std::getline(ss, name, ','))
		{
			auto l = host->label_of(trim(name));
			if (!l)
				throw std::invalid_argument("unknown basis label '" + trim(name) + "'");
			tuple.push_back(*l);
		}
		z.add_term(tuple, CycNumber::parse(host->field(), coef));
	}
	return z;
}

} // namespace

Subspace Subspace::import_text(ModulePtr host, std::string_view text)
{
	std::istringstream in{std::string(text)};
	std::string line;
	if (!std::getline(in, line))
		throw std::invalid_argument("empty subspace text");
	std::istringstream head(line);
	std::string w1, w2;
	int power = -1;
	std::size_t dim = 0;
	if (!(head >> w1 >> power >> w2 >> dim) || w1 != "power" || w2 != "dim" || power < 0)
		throw std::invalid_argument("bad subspace header '" + line + "'");
	Subspace s(host, power);
	std::size_t read = 0;
	while (std::getline(in, line))
	{
		if (trim(line).empty())
			continue;
		s.insert(parse_element(host, power, line));
		++read;
	}
	if (read != dim || s.dimension() != dim)
		throw std::invalid_argument("subspace text declares dim " + std::to_string(dim) + " but lists " +
		                            std::to_string(read) + " independent elements");
	return s;
}

Subspace tensor_subspaces(Subspace const &a, Subspace const &b)
{
	if (a.host() != b.host())
		throw std::invalid_argument("tensor of subspaces over different modules");
	Subspace out(a.host(), a.power() + b.power());
	auto ba = a.basis();
	auto bb = b.basis();
	for (auto const &x : ba)
		for (auto const &y : bb)
			out.insert(tensor_product(x, y));
	return out;
}

Subspace common_eigenspace(Subspace const &domain, std::vector<BraidWord> const &words, CycNumber const &eigen)
{
	auto const basis = domain.basis();
	auto const &m = *domain.host();
	Index const count = m.tuple_count(domain.power());
	auto kernel = kernel_of_columns(m.field(), basis.size(), [&](Index j) {
		std::vector<SparseVector::Entry> entries;
		SparseVector shifted = basis[j].coeffs().scaled(-eigen);
		for (std::size_t w = 0; w < words.size(); ++w)
		{
			auto image = apply_word(words[w], basis[j]);
			SparseVector diff = image.coeffs();
			diff += shifted;
			for (auto const &[i, c] : diff)
				entries.emplace_back(w * count + i, c);
		}
		return SparseVector::from_unsorted(std::move(entries));
	});
	Subspace out(domain.host(), domain.power());
	for (auto const &k : kernel)
	{
		TensorElement z(domain.host(), domain.power());
		SparseVector v;
		for (auto const &[j, c] : k)
			v.axpy(c, basis[j].coeffs());
		out.insert(TensorElement(domain.host(), domain.power(), std::move(v)));
	}
	return out;
}

Subspace intersect(Subspace const &a, Subspace const &b)
{
	if (a.host() != b.host() || a.power() != b.power())
		throw std::invalid_argument("intersection of subspaces of different spaces");
	// x in a with x in b: kernel of the combined coordinate map a (+) b -> ambient
	auto ba = a.basis();
	auto bb = b.basis();
	auto const &f = a.host()->field();
	std::size_t const na = ba.size();
	auto kernel = kernel_of_columns(f, na + bb.size(), [&](Index j) {
		if (j < na)
			return ba[j].coeffs();
		return bb[j - na].coeffs().scaled(-CycNumber::one(f));
	});
	Subspace out(a.host(), a.power());
	for (auto const &k : kernel)
	{
		SparseVector v;
		for (auto const &[j, c] : k)
			if (j < na)
				v.axpy(c, ba[j].coeffs());
		out.insert(TensorElement(a.host(), a.power(), std::move(v)));
	}
	return out;
}

std::vector<BraidWord> zeta_condition_words(int n)
{
	std::vector<BraidWord> words;
	for (int i = 1; i <= n - 1; ++i)
		for (int j = i; j <= n - 1; ++j)
		{
			std::vector<BraidLetter> letters;
			for (int k = i; k <= j - 1; ++k)
				letters.push_back({k, -1});
			letters.push_back({j, 1});
			letters.push_back({j, 1});
			for (int k = j - 1; k >= i; --k)
				letters.push_back({k, 1});
			words.emplace_back(n, std::move(letters));
		}
	return words;
}

bool in_zeta_symmetrized(TensorElement const &z, RootOfUnity const &zeta)
{
	if (zeta.ambient() != z.host()->ambient())
		throw ArithmeticError("root of unity from a different ambient order");
	// The condition words are pure braids: every basis tuple is an
	// eigenvector, so membership is decided term by term.
	auto const &m = *z.host();
	int const L = m.ambient();
	int const target = static_cast<int>(((2LL * zeta.exponent()) % L + L) % L);
	auto words = zeta_condition_words(z.power());
	std::vector<int> t(z.power()), u(z.power());
	for (auto const &[i, c] : z.coeffs())
	{
		m.decode_into(i, t);
		for (auto const &w : words)
		{
			u = t;
			int e = ((m.apply_word(u, w) % L) + L) % L;
			if (u != t)
				throw std::logic_error("condition word is not a pure braid");
			if (e != target)
				return false;
		}
	}
	return true;
}

Subspace symmetrize_kernel(ModulePtr m, int n, RootOfUnity const &zeta)
{
	if (n < 1)
		throw std::invalid_argument("tensor power must be at least 1");
	if (zeta.ambient() != m->ambient())
		throw ArithmeticError("root of unity from a different ambient order");
	auto whole = Subspace::whole(m, n);
	if (n == 1)
		return whole;
	return common_eigenspace(whole, zeta_condition_words(n), (zeta * zeta).value());
}

std::vector<std::vector<int>> degree_families(Bicharacter const &chi, std::vector<int> const &degrees, int n,
                                              int square_exponent)
{
	std::vector<int> degs = degrees;
	std::sort(degs.begin(), degs.end());
	degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
	int const L = chi.ambient();
	int const target = ((square_exponent % L) + L) % L;
	std::vector<std::vector<int>> out;
	std::vector<int> cur;
	// depth-first in lexicographic order, pruning on the pairwise condition
	std::function<void()> rec = [&] {
		if (static_cast<int>(cur.size()) == n)
		{
			out.push_back(cur);
			return;
		}
		for (int g : degs)
		{
			bool ok = true;
			for (int h : cur)
				if (chi.double_exponent(g, h) != target)
				{
					ok = false;
					break;
				}
			if (!ok)
				continue;
			cur.push_back(g);
			rec();
			cur.pop_back();
		}
	};
	if (n >= 0)
		rec();
	return out;
}

std::vector<ZetaFamily> zeta_families(Bicharacter const &chi, std::vector<int> const &degrees, int n,
                                      RootOfUnity const &zeta)
{
	if (zeta.ambient() != chi.ambient())
		throw ArithmeticError("root of unity from a different ambient order");
	std::vector<ZetaFamily> out;
	for (auto &d : degree_families(chi, degrees, n, 2 * zeta.exponent()))
		out.push_back({std::move(d), zeta});
	return out;
}

namespace {

// All encoded tuples whose labels have the given degrees slot by slot.
void append_block(GradedModule const &m, std::vector<int> const &degrees, std::vector<Index> &out)
{
	std::vector<std::vector<int>> labels;
	for (int g : degrees)
	{
		labels.push_back(m.labels_of_degree(g));
		if (labels.back().empty())
			return;
	}
	std::vector<std::size_t> pos(degrees.size(), 0);
	std::vector<int> t(degrees.size());
	while (true)
	{
		for (std::size_t k = 0; k < pos.size(); ++k)
			t[k] = labels[k][pos[k]];
		out.push_back(m.encode(t));
		std::size_t k = pos.size();
		while (k > 0)
		{
			--k;
			if (++pos[k] < labels[k].size())
				break;
			pos[k] = 0;
			if (k == 0)
				return;
		}
		if (pos.empty())
			return;
	}
}

} // namespace

Subspace symmetrize_graded(ModulePtr m, int n, RootOfUnity const &zeta)
{
	if (n < 1)
		throw std::invalid_argument("tensor power must be at least 1");
	std::vector<Index> tuples;
	for (auto const &fam : zeta_families(m->chi(), m->degrees_present(), n, zeta))
		append_block(*m, fam.degrees, tuples);
	return Subspace::coordinate(std::move(m), n, std::move(tuples));
}

Subspace minus_one_zeta_kernel(ModulePtr p, int n, RootOfUnity const &zeta)
{
	if (n < 1)
		throw std::invalid_argument("minus_one_zeta needs n >= 1");
	auto domain = tensor_subspaces(Subspace::whole(p, 1), symmetrize_kernel(p, n, zeta));
	std::vector<BraidWord> words;
	auto const t1sq = BraidWord::positive(n + 1, {1, 1});
	for (auto const &phi : all_permutations(n))
	{
		auto lift = minimal_lift(phi).shifted(1, n + 1);
		words.push_back(lift.inverse() * t1sq * lift);
	}
	return common_eigenspace(domain, words, CycNumber::one(p->field()));
}

Subspace minus_one_zeta_subspace(ModulePtr p, int n, RootOfUnity const &zeta)
{
	if (n < 1)
		throw std::invalid_argument("minus_one_zeta needs n >= 1");
	auto const &chi = p->chi();
	std::vector<Index> tuples;
	auto families = zeta_families(chi, p->degrees_present(), n, zeta);
	for (int g0 : p->degrees_present())
		for (auto const &fam : families)
		{
			bool ok = true;
			for (int g : fam.degrees)
				ok = ok && chi.double_exponent(g0, g) == 0;
			if (!ok)
				continue;
			std::vector<int> degs{g0};
			degs.insert(degs.end(), fam.degrees.begin(), fam.degrees.end());
			append_block(*p, degs, tuples);
		}
	return Subspace::coordinate(std::move(p), n + 1, std::move(tuples));
}

std::map<int, TensorElement> degree_components(TensorElement const &z)
{
	std::map<int, TensorElement> out;
	std::vector<int> t(z.power());
	for (auto const &[i, c] : z.coeffs())
	{
		z.host()->decode_into(i, t);
		int g = z.host()->total_degree(t);
		auto it = out.try_emplace(g, z.host(), z.power()).first;
		it->second.add_term(t, c);
	}
	return out;
}

bool is_graded(Subspace const &s)
{
	for (auto const &b : s.basis())
		for (auto const &[g, part] : degree_components(b))
			if (!s.contains(part))
				return false;
	return true;
}

std::vector<TensorElement> homogeneous_basis(Subspace const &s)
{
	if (!is_graded(s))
		throw std::invalid_argument("subspace is not graded");
	std::map<int, Subspace> parts;
	for (auto const &b : s.basis())
		for (auto const &[g, part] : degree_components(b))
			parts.try_emplace(g, s.host(), s.power()).first->second.insert(part);
	std::vector<TensorElement> out;
	for (auto const &[g, sub] : parts)
		for (auto const &b : sub.basis())
			out.push_back(b);
	return out;
}

} // namespace ydlie
