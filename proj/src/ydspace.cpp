#include "ydlie/ydspace.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ydlie {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders) : orders_(std::move(orders)), size_(1)
{
	for (int n : orders_)
	{
		if (n < 2)
			throw std::invalid_argument("cyclic factor orders must be at least 2");
		if (size_ > (1 << 20) / n)
			throw std::invalid_argument("group too large");
		size_ *= n;
	}
	strides_.assign(orders_.size(), 1);
	for (int k = rank() - 2; k >= 0; --k)
		strides_[k] = strides_[k + 1] * orders_[k + 1];
}

int FiniteAbelianGroup::add(int a, int b) const
{
	int r = 0;
	for (int k = 0; k < rank(); ++k)
	{
		int ta = (a / strides_[k]) % orders_[k];
		int tb = (b / strides_[k]) % orders_[k];
		r += ((ta + tb) % orders_[k]) * strides_[k];
	}
	return r;
}

int FiniteAbelianGroup::neg(int a) const
{
	int r = 0;
	for (int k = 0; k < rank(); ++k)
	{
		int ta = (a / strides_[k]) % orders_[k];
		r += ((orders_[k] - ta) % orders_[k]) * strides_[k];
	}
	return r;
}

int FiniteAbelianGroup::multiple(int a, long long m) const
{
	int r = 0;
	for (int k = 0; k < rank(); ++k)
	{
		long long ta = (a / strides_[k]) % orders_[k];
		long long v = (ta * (m % orders_[k])) % orders_[k];
		if (v < 0)
			v += orders_[k];
		r += static_cast<int>(v) * strides_[k];
	}
	return r;
}

int FiniteAbelianGroup::element_order(int g) const
{
	int ord = 1;
	for (int k = 0; k < rank(); ++k)
	{
		int t = (g / strides_[k]) % orders_[k];
		int o = orders_[k] / std::gcd(orders_[k], t);
		ord = std::lcm(ord, o);
	}
	return ord;
}

int FiniteAbelianGroup::generator(int k) const
{
	if (k < 0 || k >= rank())
		throw std::out_of_range("group generator index out of range");
	return strides_[k];
}

std::vector<int> FiniteAbelianGroup::tuple(int g) const
{
	std::vector<int> t(orders_.size());
	for (int k = 0; k < rank(); ++k)
		t[k] = (g / strides_[k]) % orders_[k];
	return t;
}

int FiniteAbelianGroup::from_tuple(std::vector<int> const &t) const
{
	if (static_cast<int>(t.size()) != rank())
		throw std::invalid_argument("group element has wrong number of components");
	int r = 0;
	for (int k = 0; k < rank(); ++k)
		r += (((t[k] % orders_[k]) + orders_[k]) % orders_[k]) * strides_[k];
	return r;
}

std::string FiniteAbelianGroup::to_string(int g) const
{
	auto t = tuple(g);
	if (rank() == 1)
		return std::to_string(t[0]);
	std::string out = "(";
	for (int k = 0; k < rank(); ++k)
	{
		if (k)
			out += ',';
		out += std::to_string(t[k]);
	}
	return out + ")";
}

int FiniteAbelianGroup::parse(std::string_view text) const
{
	std::string s;
	for (char c : text)
		if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')')
			s += c;
	std::vector<int> t;
	std::size_t pos = 0;
	while (pos <= s.size())
	{
		auto end = s.find(',', pos);
		if (end == std::string::npos)
			end = s.size();
		auto part = s.substr(pos, end - pos);
		if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) {
			    return std::isdigit(static_cast<unsigned char>(c)) || c == '-';
		    }))
			throw std::invalid_argument("bad group element '" + std::string(text) + "'");
		t.push_back(std::stoi(part));
		pos = end + 1;
	}
	if (rank() == 0 && t.size() == 1 && t[0] == 0)
		return 0;
	if (static_cast<int>(t.size()) != rank())
		throw std::invalid_argument("group element '" + std::string(text) + "' has wrong number of components");
	return from_tuple(t);
}

// ---------------------------------------------------------------------------

Bicharacter::Bicharacter(FiniteAbelianGroup group, int ambient, std::vector<std::vector<int>> gen)
    : group_(std::move(group)), ambient_(ambient), field_(&CyclotomicField::get(ambient)), gen_(std::move(gen))
{
	int const r = group_.rank();
	if (static_cast<int>(gen_.size()) != r)
		throw std::invalid_argument("bicharacter table must be rank x rank");
	for (int a = 0; a < r; ++a)
	{
		if (static_cast<int>(gen_[a].size()) != r)
			throw std::invalid_argument("bicharacter table must be rank x rank");
		for (int b = 0; b < r; ++b)
		{
			int &k = gen_[a][b];
			k = ((k % ambient) + ambient) % ambient;
			long long na = group_.orders()[a], nb = group_.orders()[b];
			if ((na * k) % ambient != 0 || (nb * k) % ambient != 0)
				throw std::invalid_argument("bicharacter value on generators " + std::to_string(a + 1) + "," +
				                            std::to_string(b + 1) + " has order not dividing both factor orders");
		}
	}
	int const n = group_.size();
	if (static_cast<long long>(n) * n > (1LL << 24))
		throw std::invalid_argument("group too large for a bicharacter table");
	table_.resize(static_cast<std::size_t>(n) * n);
	std::vector<std::vector<int>> tuples(n);
	for (int g = 0; g < n; ++g)
		tuples[g] = group_.tuple(g);
	for (int g = 0; g < n; ++g)
		for (int h = 0; h < n; ++h)
		{
			long long e = 0;
			for (int a = 0; a < r; ++a)
				for (int b = 0; b < r; ++b)
					e += static_cast<long long>(tuples[g][a]) * tuples[h][b] * gen_[a][b];
			table_[static_cast<std::size_t>(g) * n + h] = static_cast<int>(e % ambient_);
		}
}

Bicharacter Bicharacter::trivial(FiniteAbelianGroup group, int ambient)
{
	int r = group.rank();
	return Bicharacter(std::move(group), ambient, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
}

Bicharacter Bicharacter::cyclic_power(int n, int k, int ambient)
{
	if (ambient % n != 0)
		throw std::invalid_argument("ambient order must be divisible by the group order");
	return Bicharacter(FiniteAbelianGroup::cyclic(n), ambient, {{k * (ambient / n)}});
}

RootOfUnity braiding(Bicharacter const &chi, int h, int g)
{
	return chi.value(h, g);
}

// ---------------------------------------------------------------------------

GradedModule::GradedModule(BicharacterPtr chi, std::vector<int> degrees, std::vector<std::string> names)
    : chi_(std::move(chi)), degrees_(std::move(degrees)), names_(std::move(names))
{
	if (!chi_)
		throw std::invalid_argument("graded module needs a bicharacter");
	for (int g : degrees_)
		if (g < 0 || g >= chi_->group().size())
			throw std::invalid_argument("basis degree outside the group");
	if (names_.empty())
		for (int i = 0; i < dim(); ++i)
			names_.push_back("e" + std::to_string(i));
	if (static_cast<int>(names_.size()) != dim())
		throw std::invalid_argument("one name per basis label required");
	std::set<std::string> seen(names_.begin(), names_.end());
	if (static_cast<int>(seen.size()) != dim())
		throw std::invalid_argument("basis label names must be distinct");
}

ModulePtr GradedModule::from_dims(BicharacterPtr chi, std::map<int, int> const &dims, std::string const &prefix)
{
	std::vector<int> degrees;
	for (auto const &[g, d] : dims)
	{
		if (d < 0)
			throw std::invalid_argument("negative dimension");
		degrees.insert(degrees.end(), d, g);
	}
	std::vector<std::string> names;
	for (std::size_t i = 0; i < degrees.size(); ++i)
		names.push_back(prefix + std::to_string(i));
	return std::make_shared<GradedModule>(std::move(chi), std::move(degrees), std::move(names));
}

std::optional<int> GradedModule::label_of(std::string_view name) const
{
	for (int i = 0; i < dim(); ++i)
		if (names_[i] == name)
			return i;
	return std::nullopt;
}

std::vector<int> GradedModule::degrees_present() const
{
	std::set<int> s(degrees_.begin(), degrees_.end());
	return {s.begin(), s.end()};
}

std::vector<int> GradedModule::labels_of_degree(int g) const
{
	std::vector<int> out;
	for (int i = 0; i < dim(); ++i)
		if (degrees_[i] == g)
			out.push_back(i);
	return out;
}

std::map<int, int> GradedModule::dims_by_degree() const
{
	std::map<int, int> out;
	for (int g : degrees_)
		++out[g];
	return out;
}

Index GradedModule::tuple_count(int n) const
{
	Index c = 1;
	for (int k = 0; k < n; ++k)
	{
		if (dim() != 0 && c > static_cast<Index>(-1) / static_cast<Index>(dim()))
			throw std::overflow_error("tensor power too large to index");
		c *= static_cast<Index>(dim());
	}
	return c;
}

Index GradedModule::encode(std::span<const int> tuple) const
{
	Index r = 0;
	for (int l : tuple)
		r = r * static_cast<Index>(dim()) + static_cast<Index>(l);
	return r;
}

std::vector<int> GradedModule::decode(Index index, int n) const
{
	std::vector<int> t(n);
	decode_into(index, t);
	return t;
}

void GradedModule::decode_into(Index index, std::vector<int> &tuple) const
{
	for (std::size_t k = tuple.size(); k-- > 0;)
	{
		tuple[k] = static_cast<int>(index % static_cast<Index>(dim()));
		index /= static_cast<Index>(dim());
	}
}

int GradedModule::total_degree(std::span<const int> tuple) const
{
	int g = 0;
	for (int l : tuple)
		g = group().add(g, degrees_[l]);
	return g;
}

int GradedModule::apply_letter(std::vector<int> &tuple, BraidLetter const &l) const
{
	int &a = tuple[l.index - 1];
	int &b = tuple[l.index];
	int e;
	if (l.sign > 0)
		e = chi_->exponent(degrees_[a], degrees_[b]);
	else
		e = (ambient() - chi_->exponent(degrees_[b], degrees_[a])) % ambient();
	std::swap(a, b);
	return e;
}

int GradedModule::apply_word(std::vector<int> &tuple, BraidWord const &w) const
{
	if (static_cast<int>(tuple.size()) != w.strands())
		throw std::invalid_argument("braid word on " + std::to_string(w.strands()) + " strands applied to a " +
		                            std::to_string(tuple.size()) + "-fold tensor");
	long long e = 0;
	auto const &letters = w.letters();
	for (auto it = letters.rbegin(); it != letters.rend(); ++it)
		e += apply_letter(tuple, *it);
	return static_cast<int>(e % ambient());
}

// ---------------------------------------------------------------------------

TensorElement::TensorElement(ModulePtr host, int power) : host_(std::move(host)), power_(power)
{
	if (!host_)
		throw std::invalid_argument("tensor element needs a host module");
	if (power < 0)
		throw std::invalid_argument("negative tensor power");
}

TensorElement::TensorElement(ModulePtr host, int power, SparseVector coeffs)
    : TensorElement(std::move(host), power)
{
	coeffs_ = std::move(coeffs);
}

TensorElement TensorElement::basis(ModulePtr host, std::vector<int> const &tuple)
{
	TensorElement z(host, static_cast<int>(tuple.size()));
	z.add_term(tuple, CycNumber::one(host->field()));
	return z;
}

void TensorElement::add_term(std::vector<int> const &tuple, CycNumber const &c)
{
	if (static_cast<int>(tuple.size()) != power_)
		throw std::invalid_argument("basis tuple length does not match tensor power");
	for (int l : tuple)
		if (l < 0 || l >= host_->dim())
			throw std::invalid_argument("basis label out of range");
	coeffs_.add(host_->encode(tuple), c);
}

void TensorElement::check_compatible(TensorElement const &b) const
{
	if (host_ != b.host_ || power_ != b.power_)
		throw std::invalid_argument("tensor elements live in different spaces");
}

TensorElement &TensorElement::operator+=(TensorElement const &b)
{
	check_compatible(b);
	coeffs_ += b.coeffs_;
	return *this;
}

TensorElement &TensorElement::operator-=(TensorElement const &b)
{
	check_compatible(b);
	coeffs_ -= b.coeffs_;
	return *this;
}

TensorElement TensorElement::scaled(CycNumber const &c) const
{
	return TensorElement(host_, power_, coeffs_.scaled(c));
}

bool operator==(TensorElement const &a, TensorElement const &b)
{
	return a.host_ == b.host_ && a.power_ == b.power_ && a.coeffs_ == b.coeffs_;
}

std::optional<int> TensorElement::homogeneous_degree() const
{
	std::optional<int> deg;
	std::vector<int> t(power_);
	for (auto const &[i, c] : coeffs_)
	{
		host_->decode_into(i, t);
		int g = host_->total_degree(t);
		if (deg && *deg != g)
			return std::nullopt;
		deg = g;
	}
	return deg ? deg : std::optional<int>(0);
}

std::string TensorElement::to_string() const
{
	if (coeffs_.empty())
		return "0";
	std::string out;
	std::vector<int> t(power_);
	for (auto const &[i, c] : coeffs_)
	{
		if (!out.empty())
			out += " + ";
		auto s = c.to_string();
		if (s.find(' ') != std::string::npos || (s[0] == '-' && out.size()))
			out += "(" + s + ")";
		else
			out += s;
		out += " * (";
		host_->decode_into(i, t);
		for (int k = 0; k < power_; ++k)
		{
			if (k)
				out += ',';
			out += host_->name(t[k]);
		}
		out += ")";
	}
	return out;
}

TensorElement tensor_product(TensorElement const &a, TensorElement const &b)
{
	if (a.host() != b.host())
		throw std::invalid_argument("tensor product of elements over different modules");
	auto const &m = *a.host();
	Index const shift = m.tuple_count(b.power());
	std::vector<SparseVector::Entry> entries;
	for (auto const &[i, c] : a.coeffs())
		for (auto const &[j, d] : b.coeffs())
			entries.emplace_back(i * shift + j, c * d);
	return TensorElement(a.host(), a.power() + b.power(), SparseVector::from_unsorted(std::move(entries)));
}

TensorElement apply_word(BraidWord const &w, TensorElement const &z)
{
	if (w.strands() != z.power())
		throw std::invalid_argument("braid word on " + std::to_string(w.strands()) + " strands applied to a " +
		                            std::to_string(z.power()) + "-fold tensor");
	auto const &m = *z.host();
	std::vector<SparseVector::Entry> entries;
	entries.reserve(z.coeffs().size());
	std::vector<int> t(z.power());
	for (auto const &[i, c] : z.coeffs())
	{
		m.decode_into(i, t);
		int e = m.apply_word(t, w);
		CycNumber v = c;
		v.mul_root(e);
		entries.emplace_back(m.encode(t), std::move(v));
	}
	return TensorElement(z.host(), z.power(), SparseVector::from_unsorted(std::move(entries)));
}

TensorElement sn_action(Permutation const &s, RootOfUnity const &zeta, TensorElement const &z)
{
	if (s.size() != z.power())
		throw std::invalid_argument("permutation size does not match tensor power");
	if (zeta.ambient() != z.host()->ambient())
		throw ArithmeticError("root of unity from a different ambient order");
	auto r = apply_word(minimal_lift(s), z);
	CycNumber scale = CycNumber::root(z.field(), -static_cast<long long>(s.length()) * zeta.exponent());
	return r.scaled(scale);
}

std::optional<std::string> yang_baxter_witness(GradedModule const &m, int n)
{
	if (n < 2)
		return std::nullopt;
	std::vector<std::pair<BraidWord, BraidWord>> relations;
	for (int i = 1; i + 1 < n; ++i)
		relations.emplace_back(BraidWord::positive(n, {i, i + 1, i}), BraidWord::positive(n, {i + 1, i, i + 1}));
	for (int i = 1; i < n; ++i)
		for (int j = i + 2; j < n; ++j)
			relations.emplace_back(BraidWord::positive(n, {i, j}), BraidWord::positive(n, {j, i}));
	Index const count = m.tuple_count(n);
	std::vector<int> a(n), b(n);
	for (Index idx = 0; idx < count; ++idx)
		for (auto const &[lhs, rhs] : relations)
		{
			m.decode_into(idx, a);
			b = a;
			int ea = m.apply_word(a, lhs);
			int eb = m.apply_word(b, rhs);
			if (a != b || ea != eb)
			{
				auto z = TensorElement::basis(std::make_shared<GradedModule>(m), m.decode(idx, n));
				return lhs.to_string() + " vs " + rhs.to_string() + " on " + z.to_string();
			}
		}
	return std::nullopt;
}

// ---------------------------------------------------------------------------

GradedMap::GradedMap(ModulePtr source, int source_power, ModulePtr target, int target_power, int degree_shift,
                     std::vector<SparseVector> columns)
    : source_(std::move(source)), target_(std::move(target)), source_power_(source_power),
      target_power_(target_power), shift_(degree_shift), columns_(std::move(columns))
{
	if (!source_ || !target_)
		throw std::invalid_argument("graded map needs source and target");
	if (&source_->chi() != &target_->chi() && !(source_->group() == target_->group()))
		throw std::invalid_argument("graded map between modules over different groups");
	if (columns_.size() != source_->tuple_count(source_power_))
		throw std::invalid_argument("graded map needs one column per source basis tuple");
}

GradedMap GradedMap::from_function(ModulePtr source, int source_power, ModulePtr target, int target_power,
                                   int degree_shift, std::function<SparseVector(std::vector<int> const &)> const &f)
{
	Index const n = source->tuple_count(source_power);
	std::vector<SparseVector> cols(n);
	for (Index i = 0; i < n; ++i)
		cols[i] = f(source->decode(i, source_power));
	return GradedMap(std::move(source), source_power, std::move(target), target_power, degree_shift,
	                 std::move(cols));
}

bool GradedMap::respects_grading() const
{
	std::vector<int> s(source_power_), t(target_power_);
	for (Index i = 0; i < columns_.size(); ++i)
	{
		source_->decode_into(i, s);
		int want = source_->group().add(source_->total_degree(s), shift_);
		for (auto const &[j, c] : columns_[i])
		{
			target_->decode_into(j, t);
			if (target_->total_degree(t) != want)
				return false;
		}
	}
	return true;
}

TensorElement GradedMap::apply(TensorElement const &z) const
{
	if (z.host() != source_ || z.power() != source_power_)
		throw std::invalid_argument("graded map applied outside its source");
	SparseVector out;
	for (auto const &[i, c] : z.coeffs())
		out.axpy(c, columns_[i]);
	return TensorElement(target_, target_power_, std::move(out));
}

TensorElement contract_slots(TensorElement const &z, int slot, int m, int q,
                             std::function<TensorElement(TensorElement const &)> const &f)
{
	int const n = z.power();
	if (slot < 1 || m < 0 || slot + m - 1 > n)
		throw std::invalid_argument("slot range outside the tensor power");
	auto const &mod = *z.host();
	int const before = slot - 1;
	int const after = n - before - m;
	Index const mid_count = mod.tuple_count(m);
	Index const after_count = mod.tuple_count(after);
	Index const q_count = mod.tuple_count(q);

	// group by context (labels outside the contracted range)
	std::map<Index, std::vector<SparseVector::Entry>> groups;
	std::vector<int> t(n);
	for (auto const &[i, c] : z.coeffs())
	{
		Index suffix = i % after_count;
		Index rest = i / after_count;
		Index mid = rest % mid_count;
		Index prefix = rest / mid_count;
		groups[prefix * after_count + suffix].emplace_back(mid, c);
	}
	std::vector<SparseVector::Entry> out;
	for (auto &[ctx, entries] : groups)
	{
		TensorElement part(z.host(), m, SparseVector::from_unsorted(std::move(entries)));
		TensorElement image = f(part);
		if (image.host() != z.host() || image.power() != q)
			throw std::logic_error("contraction returned an element of the wrong space");
		Index prefix = ctx / after_count;
		Index suffix = ctx % after_count;
		for (auto const &[j, c] : image.coeffs())
			out.emplace_back((prefix * q_count + j) * after_count + suffix, c);
	}
	return TensorElement(z.host(), n - m + q, SparseVector::from_unsorted(std::move(out)));
}

TensorElement apply_at_slot(GradedMap const &f, TensorElement const &z, int slot)
{
	if (f.source() != z.host() || f.target() != z.host())
		throw std::invalid_argument("apply_at_slot needs an endomorphism-type map on the host module");
	return contract_slots(z, slot, f.source_power(), f.target_power(),
	                      [&](TensorElement const &part) { return f.apply(part); });
}

} // namespace ydlie
