#include "ydlie/brlie.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace ydlie {

namespace {

RootOfUnity minus_one(int ambient)
{
	if (ambient % 2 != 0)
		throw DomainError("-1 is not a power of z_L for odd L = " + std::to_string(ambient));
	return RootOfUnity(ambient, ambient / 2);
}

RootOfUnity one(int ambient) { return RootOfUnity(ambient, 0); }

std::string key_text(int n, RootOfUnity const &zeta) { return "n=" + std::to_string(n) + " zeta=" + zeta.to_string(); }

TensorElement bracket_parts(BracketStructure const &l, TensorElement const &z, int slot, int n,
                            RootOfUnity const &zeta)
{
	return contract_slots(z, slot, n, 1, [&](TensorElement const &part) { return l.apply(n, zeta, part); });
}

TensorElement second_bracket(BracketStructure const &l, TensorElement const &y)
{
	int const L = l.carrier()->ambient();
	if (y.is_zero())
		return TensorElement(l.carrier(), 1);
	if (!in_zeta_symmetrized(y, one(L)))
		throw InvariantViolation("intermediate pairing is not in P^2(-1): " + y.to_string());
	return l.apply(2, minus_one(L), y);
}

} // namespace

TensorElement symmetrized_sum(RootOfUnity const &zeta, TensorElement const &z)
{
	if (zeta.ambient() != z.host()->ambient())
		throw ArithmeticError("root of unity from a different ambient order");
	auto const &m = *z.host();
	auto const &f = m.field();
	int const n = z.power();
	int const L = f.order();
	std::vector<std::pair<BraidWord, long long>> lifts;
	for (auto const &s : all_permutations(n))
		lifts.emplace_back(minimal_lift(s), -static_cast<long long>(s.length()) * zeta.exponent());

	// Terms sharing a coefficient are summed as integer combinations of
	// powers of z before any field multiplication.
	std::vector<CycNumber const *> classes;
	std::unordered_map<std::string, int> class_of;
	struct Hit
	{
		Index out;
		int cls;
		int exponent;
	};
	std::vector<Hit> hits;
	hits.reserve(z.coeffs().size() * lifts.size());
	std::vector<int> t(n);
	for (auto const &[i, c] : z.coeffs())
	{
		auto [it, fresh] = class_of.try_emplace(c.to_string(), static_cast<int>(classes.size()));
		if (fresh)
			classes.push_back(&c);
		for (auto const &[w, shift] : lifts)
		{
			m.decode_into(i, t);
			long long e = (m.apply_word(t, w) + shift) % L;
			if (e < 0)
				e += L;
			hits.push_back({m.encode(t), it->second, static_cast<int>(e)});
		}
	}
	std::sort(hits.begin(), hits.end(), [](Hit const &a, Hit const &b) {
		return a.out != b.out ? a.out < b.out : a.cls < b.cls;
	});
	int const d = f.degree();
	std::vector<long> acc(d);
	std::vector<SparseVector::Entry> entries;
	std::size_t k = 0;
	while (k < hits.size())
	{
		Index const out = hits[k].out;
		CycNumber total(f);
		while (k < hits.size() && hits[k].out == out)
		{
			int const cls = hits[k].cls;
			std::fill(acc.begin(), acc.end(), 0);
			for (; k < hits.size() && hits[k].out == out && hits[k].cls == cls; ++k)
			{
				auto p = f.power(hits[k].exponent);
				for (int j = 0; j < d; ++j)
					acc[j] += p[j];
			}
			std::vector<Rational> q(acc.begin(), acc.end());
			CycNumber sum(f, std::move(q));
			if (sum.is_zero())
				continue;
			if (classes[cls]->is_one())
				total += sum;
			else
				total += sum * *classes[cls];
		}
		if (!total.is_zero())
			entries.emplace_back(out, std::move(total));
	}
	return TensorElement(z.host(), n, SparseVector::from_unsorted(std::move(entries)));
}

TensorElement bracket(GradedAlgebra const &a, int n, RootOfUnity const &zeta, TensorElement const &z)
{
	if (z.host() != a.carrier() || z.power() != n)
		throw std::invalid_argument("bracket expects an element of the n-th tensor power of the algebra");
	if (!zeta.is_primitive_root(n))
		throw std::invalid_argument(zeta.to_string() + " is not a primitive " + std::to_string(n) + "-th root of unity");
	if (!in_zeta_symmetrized(z, zeta))
		throw DomainError("element is not in A^" + std::to_string(n) + "(" + zeta.to_string() + ")");
	return a.nabla(symmetrized_sum(zeta, z));
}

void BracketStructure::set(int n, RootOfUnity const &zeta, Subspace domain, std::vector<TensorElement> values)
{
	if (domain.host() != carrier_ || domain.power() != n)
		throw std::invalid_argument("bracket domain must be a subspace of the n-th tensor power of the carrier");
	if (zeta.ambient() != carrier_->ambient())
		throw ArithmeticError("root of unity from a different ambient order");
	if (values.size() != domain.dimension())
		throw std::invalid_argument("one bracket value per domain basis element is required");
	auto basis = domain.basis();
	for (std::size_t k = 0; k < values.size(); ++k)
	{
		auto const &v = values[k];
		if (v.host() != carrier_ || v.power() != 1)
			throw std::invalid_argument("bracket values must be elements of the carrier");
		auto g = basis[k].homogeneous_degree();
		if (g && !v.is_zero() && v.homogeneous_degree() != g)
			throw std::invalid_argument("bracket value of " + basis[k].to_string() + " does not preserve the degree");
	}
	entries_.insert_or_assign(Key{n, zeta.exponent()}, Entry{std::move(domain), std::move(values)});
}

void BracketStructure::set_value(int n, RootOfUnity const &zeta, std::size_t k, TensorElement value)
{
	auto it = entries_.find(Key{n, zeta.exponent()});
	if (it == entries_.end() || k >= it->second.values.size())
		throw std::out_of_range("no such bracket value");
	it->second.values[k] = std::move(value);
}

BracketStructure::Entry const *BracketStructure::find(int n, RootOfUnity const &zeta) const
{
	auto it = entries_.find(Key{n, zeta.exponent()});
	return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::pair<int, RootOfUnity>> BracketStructure::keys() const
{
	std::vector<std::pair<int, RootOfUnity>> out;
	for (auto const &[k, e] : entries_)
		out.emplace_back(k.first, RootOfUnity(carrier_->ambient(), k.second));
	return out;
}

int BracketStructure::max_n() const
{
	int m = 0;
	for (auto const &[k, e] : entries_)
		m = std::max(m, k.first);
	return m;
}

TensorElement BracketStructure::apply(int n, RootOfUnity const &zeta, TensorElement const &z) const
{
	if (z.host() != carrier_ || z.power() != n)
		throw std::invalid_argument("bracket argument has the wrong tensor power");
	TensorElement out(carrier_, 1);
	if (z.is_zero())
		return out;
	auto const *e = find(n, zeta);
	if (!e)
		throw DomainError("no bracket defined at " + key_text(n, zeta));
	auto coords = e->domain.coordinates(z);
	if (!coords)
		throw DomainError("element is outside the bracket domain at " + key_text(n, zeta) + ": " + z.to_string());
	for (std::size_t k = 0; k < coords->size(); ++k)
		if (!(*coords)[k].is_zero())
			out += e->values[k].scaled((*coords)[k]);
	return out;
}

bool arity_possible(GradedModule const &m, int n)
{
	if (n <= 1)
		return m.dim() > 0;
	int const L = m.ambient();
	int const square_order = n % 2 == 0 ? n / 2 : n;
	if (L % square_order != 0)
		return false;
	for (int e = 0; e < L; ++e)
		if (RootOfUnity(L, e).multiplicative_order() == square_order &&
		    !degree_families(m.chi(), m.degrees_present(), n, e).empty())
			return true;
	return false;
}

std::vector<std::pair<int, RootOfUnity>> available_arities(int ambient, int max_n)
{
	std::vector<std::pair<int, RootOfUnity>> out;
	for (int n = 1; n <= max_n; ++n)
		if (ambient % n == 0)
			for (auto const &z : primitive_roots(ambient, n))
				out.emplace_back(n, z);
	return out;
}

BracketStructure lie_from_algebra(GradedAlgebra const &a, int max_n)
{
	if (max_n < 1)
		throw std::invalid_argument("max_n must be at least 1");
	auto const &m = a.carrier();
	int const L = m->ambient();
	BracketStructure out(m);
	for (int n = 1; n <= max_n; ++n)
	{
		if (L % n != 0)
		{
			if (arity_possible(*m, n))
				throw std::invalid_argument("the ambient field Q(z_" + std::to_string(L) + ") lacks a primitive root of unity of order " +
				                            std::to_string(n) + ", needed for brackets of arity " + std::to_string(n));
			continue;
		}
		for (auto const &zeta : primitive_roots(L, n))
		{
			auto dom = symmetrize_graded(m, n, zeta);
			if (dom.is_zero())
				continue;
			std::vector<TensorElement> values;
			for (auto const &b : dom.basis())
				values.push_back(bracket(a, n, zeta, b));
			out.set(n, zeta, std::move(dom), std::move(values));
		}
	}
	return out;
}

BracketStructure abelian_lie(ModulePtr p, int max_n)
{
	BracketStructure out(p);
	for (auto const &[n, zeta] : available_arities(p->ambient(), max_n))
	{
		auto dom = symmetrize_graded(p, n, zeta);
		if (dom.is_zero())
			continue;
		std::vector<TensorElement> values;
		for (auto const &b : dom.basis())
			values.push_back(n == 1 ? b : TensorElement(p, 1));
		out.set(n, zeta, std::move(dom), std::move(values));
	}
	return out;
}

TensorElement inner_then_outer(BracketStructure const &l, int n, RootOfUnity const &zeta, TensorElement const &z)
{
	if (z.power() != n + 1)
		throw std::invalid_argument("inner_then_outer expects the (n+1)-th tensor power");
	return second_bracket(l, bracket_parts(l, z, 2, n, zeta));
}

TensorElement outer_then_inner(BracketStructure const &l, int n, RootOfUnity const &zeta, TensorElement const &z)
{
	if (z.power() != n + 1)
		throw std::invalid_argument("outer_then_inner expects the (n+1)-th tensor power");
	return second_bracket(l, bracket_parts(l, z, 1, n, zeta));
}

TensorElement nested_bracket_at(BracketStructure const &l, int n, RootOfUnity const &zeta, int i,
                                TensorElement const &z)
{
	if (z.power() != n + 1)
		throw std::invalid_argument("nested_bracket_at expects the (n+1)-th tensor power");
	if (i < 1 || i > n)
		throw std::invalid_argument("slot out of range");
	int const L = l.carrier()->ambient();
	auto y = apply_word(descending_run(i - 1, n + 1), z);
	auto inner = contract_slots(y, i, 2, 1, [&](TensorElement const &part) {
		if (!in_zeta_symmetrized(part, one(L)))
			throw InvariantViolation("pair at slot " + std::to_string(i) + " is not in P^2(-1): " + part.to_string());
		return l.apply(2, minus_one(L), part);
	});
	if (!in_zeta_symmetrized(inner, zeta))
		throw InvariantViolation("slot contraction at " + std::to_string(i) + " left P^" + std::to_string(n) + "(" +
		                         zeta.to_string() + "): " + inner.to_string());
	return l.apply(n, zeta, inner);
}

Report check_antisymmetry(BracketStructure const &l, int n, RootOfUnity const &zeta)
{
	Report r;
	std::string const name = "antisym";
	auto const *e = l.find(n, zeta);
	if (!e)
	{
		r.skip(name, n, zeta.to_string(), 0, "empty domain");
		return r;
	}
	auto basis = e->domain.basis();
	auto perms = all_permutations(n);
	for (std::size_t k = 0; k < basis.size(); ++k)
	{
		std::string witness;
		for (auto const &s : perms)
		{
			try
			{
				auto v = l.apply(n, zeta, sn_action(s, zeta, basis[k]));
				if (!(v == e->values[k]))
					witness = "sigma = " + s.to_string() + ", z = " + basis[k].to_string() + ": [sigma z] = " +
					          v.to_string() + " but [z] = " + e->values[k].to_string();
			}
			catch (DomainError const &err)
			{
				witness = "sigma = " + s.to_string() + ", z = " + basis[k].to_string() + ": " + err.what();
			}
			if (!witness.empty())
				break;
		}
		if (witness.empty())
			r.pass(name, n, zeta.to_string(), k);
		else
			r.fail(name, n, zeta.to_string(), k, witness);
	}
	return r;
}

namespace {

// Runs body for every basis element and turns exceptions into failures.
template <class F> Report per_basis(std::string const &name, int n, RootOfUnity const &zeta, Subspace const &dom, F body)
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

Report check_jacobi1(BracketStructure const &l, int n, RootOfUnity const &zeta)
{
	std::vector<Permutation> cycles;
	for (int i = 1; i <= n + 1; ++i)
	{
		std::vector<int> pts(i);
		std::iota(pts.begin(), pts.end(), 1);
		cycles.push_back(Permutation::cycle(n + 1, pts));
	}
	return per_basis("jacobi1", n, zeta, symmetrize_graded(l.carrier(), n + 1, zeta),
	                 [&](TensorElement const &z) -> std::string {
		                 TensorElement sum(l.carrier(), 1);
		                 for (auto const &c : cycles)
			                 sum += inner_then_outer(l, n, zeta, sn_action(c, zeta, z));
		                 if (sum.is_zero())
			                 return {};
		                 return "z = " + z.to_string() + ": sum of cyclic terms = " + sum.to_string();
	                 });
}

Report check_jacobi2(BracketStructure const &l, int n, RootOfUnity const &zeta)
{
	return per_basis("jacobi2", n, zeta, minus_one_zeta_subspace(l.carrier(), n, zeta),
	                 [&](TensorElement const &z) -> std::string {
		                 auto lhs = inner_then_outer(l, n, zeta, z);
		                 TensorElement rhs(l.carrier(), 1);
		                 for (int i = 1; i <= n; ++i)
			                 rhs += nested_bracket_at(l, n, zeta, i, z);
		                 if (lhs == rhs)
			                 return {};
		                 return "z = " + z.to_string() + ": left = " + lhs.to_string() + ", right = " + rhs.to_string();
	                 });
}

Report check_bracket_transport(BracketStructure const &l, int n, RootOfUnity const &zeta)
{
	auto const swap = BraidWord::positive(2, {1});
	return per_basis("transport", n, zeta, symmetrize_graded(l.carrier(), n + 1, zeta),
	                 [&](TensorElement const &z) -> std::string {
		                 auto lhs1 = apply_word(swap, bracket_parts(l, z, 2, n, zeta));
		                 auto rhs1 = bracket_parts(l, apply_word(descending_run(n, n + 1), z), 1, n, zeta);
		                 if (!(lhs1 == rhs1))
			                 return "z = " + z.to_string() + ": tau(1 x [.]) = " + lhs1.to_string() +
			                        " but ([.] x 1) t_n...t_1 = " + rhs1.to_string();
		                 auto lhs2 = apply_word(swap, bracket_parts(l, z, 1, n, zeta));
		                 auto rhs2 = bracket_parts(l, apply_word(ascending_run(n, n + 1), z), 2, n, zeta);
		                 if (!(lhs2 == rhs2))
			                 return "z = " + z.to_string() + ": tau([.] x 1) = " + lhs2.to_string() +
			                        " but (1 x [.]) t_1...t_n = " + rhs2.to_string();
		                 return {};
	                 });
}

Report check_lifted_braids(ModulePtr p, int n, RootOfUnity const &zeta, std::vector<BraidWord> const &phis)
{
	for (auto const &phi : phis)
		if (phi.strands() != n)
			throw std::invalid_argument("lifted braid check needs braids on n strands");
	return per_basis("lifted-braids", n, zeta, minus_one_zeta_subspace(p, n, zeta),
	                 [&](TensorElement const &z) -> std::string {
		                 for (auto const &phi : phis)
		                 {
			                 auto one_phi = phi.shifted(1, n + 1);
			                 auto moved = apply_word(one_phi, z);
			                 for (int i = 1; i <= n; ++i)
			                 {
				                 auto [lift, j] = phi_lift(phi, i);
				                 for (int extra = 0; extra <= 1; ++extra)
				                 {
					                 auto lhs = apply_word(lift * descending_run(i - 1 + extra, n + 1), z);
					                 auto rhs = apply_word(descending_run(j - 1 + extra, n + 1), moved);
					                 if (!(lhs == rhs))
						                 return "phi = " + phi.to_string() + ", i = " + std::to_string(i) +
						                        ", z = " + z.to_string() + ": " + lhs.to_string() +
						                        " != " + rhs.to_string();
				                 }
			                 }
		                 }
		                 return {};
	                 });
}

Report check_slot_contraction(ModulePtr p, int n, RootOfUnity const &zeta, GradedMap const &f)
{
	if (f.source() != p || f.target() != p || f.source_power() != 2 || f.target_power() != 1)
		throw std::invalid_argument("slot contraction needs a map P^2 -> P");
	if (f.degree_shift() != 0 || !f.respects_grading())
		throw std::invalid_argument("slot contraction needs a degree preserving map");
	return per_basis("slot-contraction", n, zeta, minus_one_zeta_subspace(p, n, zeta),
	                 [&](TensorElement const &z) -> std::string {
		                 for (int i = 1; i <= n; ++i)
		                 {
			                 auto w = apply_at_slot(f, apply_word(descending_run(i - 1, n + 1), z), i);
			                 if (!in_zeta_symmetrized(w, zeta))
				                 return "i = " + std::to_string(i) + ", z = " + z.to_string() +
				                        ": contraction not in P^n(zeta): " + w.to_string();
		                 }
		                 return {};
	                 });
}

Report subalgebra_report(ModulePtr carrier, std::vector<std::pair<int, RootOfUnity>> const &keys,
                         BracketFn const &bracket_fn, Subspace const &s, std::string const &check)
{
	if (s.host() != carrier || s.power() != 1)
		throw std::invalid_argument("subalgebra check needs a subspace of the carrier");
	if (!is_graded(s))
		throw std::invalid_argument("subalgebra check needs a graded subspace");
	auto const hb = homogeneous_basis(s);
	std::vector<int> deg;
	for (auto const &b : hb)
		deg.push_back(*b.homogeneous_degree());
	auto const &chi = carrier->chi();
	Report r;
	for (auto const &[n, zeta] : keys)
	{
		int const target = (2 * zeta.exponent()) % carrier->ambient();
		std::size_t index = 0;
		std::vector<std::size_t> cur;
		std::function<void()> rec = [&] {
			if (static_cast<int>(cur.size()) == n)
			{
				TensorElement z = hb[cur[0]];
				for (std::size_t k = 1; k < cur.size(); ++k)
					z = tensor_product(z, hb[cur[k]]);
				std::string witness;
				try
				{
					auto v = bracket_fn(n, zeta, z);
					if (!v)
					{
						r.skip(check, n, zeta.to_string(), index++, "z = " + z.to_string() + ": bracket not available");
						return;
					}
					if (!s.contains(*v))
						witness = "z = " + z.to_string() + ": bracket = " + v->to_string() + " leaves the subspace";
				}
				catch (DomainError const &err)
				{
					witness = "z = " + z.to_string() + ": " + err.what();
				}
				if (witness.empty())
					r.pass(check, n, zeta.to_string(), index);
				else
					r.fail(check, n, zeta.to_string(), index, witness);
				++index;
				return;
			}
			for (std::size_t b = 0; b < hb.size(); ++b)
			{
				bool ok = true;
				for (auto c : cur)
					ok = ok && chi.double_exponent(deg[b], deg[c]) == target;
				if (!ok)
					continue;
				cur.push_back(b);
				rec();
				cur.pop_back();
			}
		};
		if (!hb.empty() && n >= 1)
			rec();
	}
	return r;
}

Report subalgebra_report(BracketStructure const &l, Subspace const &s, std::string const &check)
{
	return subalgebra_report(
	    l.carrier(), l.keys(),
	    [&](int n, RootOfUnity const &zeta, TensorElement const &z) { return l.apply(n, zeta, z); }, s, check);
}

bool is_lie_subalgebra(BracketStructure const &l, Subspace const &s) { return subalgebra_report(l, s).passed(); }

} // namespace ydlie
