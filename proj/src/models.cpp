#include "ydlie/models.hpp"

#include <stdexcept>

#include "ydlie/errors.hpp"

namespace ydlie {

AlgebraPtr graded_end(ModulePtr v)
{
	int const d = v->dim();
	auto const &G = v->group();
	std::vector<int> degrees;
	std::vector<std::string> names;
	for (int a = 0; a < d; ++a)
		for (int b = 0; b < d; ++b)
		{
			degrees.push_back(G.sub(v->degree(a), v->degree(b)));
			names.push_back("E" + std::to_string(a) + "_" + std::to_string(b));
		}
	auto carrier = std::make_shared<const GradedModule>(v->chi_ptr(), degrees, names);
	auto const &f = v->field();
	std::size_t const D = static_cast<std::size_t>(d) * d;
	std::vector<SparseVector> products(D * D);
	for (int a = 0; a < d; ++a)
		for (int b = 0; b < d; ++b)
			for (int c = 0; c < d; ++c)
				products[static_cast<std::size_t>(a * d + b) * D + (b * d + c)] =
				    SparseVector::unit(f, static_cast<Index>(a * d + c));
	SparseVector unit;
	for (int a = 0; a < d; ++a)
		unit.add(static_cast<Index>(a * d + a), CycNumber::one(f));
	return std::make_shared<const GradedAlgebra>(carrier, std::move(products), std::move(unit));
}

TensorElement evaluate(GradedAlgebra const &end, ModulePtr const &v, TensorElement const &f, TensorElement const &x)
{
	int const d = v->dim();
	if (end.dim() != d * d || f.host() != end.carrier() || x.host() != v || f.power() != 1 || x.power() != 1)
		throw std::invalid_argument("evaluate expects an endomorphism of v and an element of v");
	TensorElement out(v, 1);
	for (auto const &[i, c] : f.coeffs())
	{
		int a = static_cast<int>(i) / d, b = static_cast<int>(i) % d;
		if (auto const *xb = x.coeffs().find(static_cast<Index>(b)))
			out.add_term({a}, c * *xb);
	}
	return out;
}

AlgebraPtr ground_field(BicharacterPtr chi)
{
	auto carrier = std::make_shared<const GradedModule>(chi, std::vector<int>{0}, std::vector<std::string>{"1"});
	auto const &f = carrier->field();
	return std::make_shared<const GradedAlgebra>(carrier, std::vector<SparseVector>{SparseVector::unit(f, 0)},
	                                             SparseVector::unit(f, 0));
}

AlgebraPtr truncated_polynomial(BicharacterPtr chi, int g, int length)
{
	if (length < 1)
		throw std::invalid_argument("truncated polynomial algebra needs length >= 1");
	auto const &G = chi->group();
	std::vector<int> degrees;
	std::vector<std::string> names;
	for (int k = 0; k < length; ++k)
	{
		degrees.push_back(G.multiple(g, k));
		names.push_back(k == 0 ? "1" : k == 1 ? "x" : "x^" + std::to_string(k));
	}
	auto carrier = std::make_shared<const GradedModule>(chi, degrees, names);
	auto const &f = carrier->field();
	std::vector<SparseVector> products(static_cast<std::size_t>(length) * length);
	for (int a = 0; a < length; ++a)
		for (int b = 0; a + b < length; ++b)
			products[static_cast<std::size_t>(a) * length + b] = SparseVector::unit(f, static_cast<Index>(a + b));
	return std::make_shared<const GradedAlgebra>(carrier, std::move(products), SparseVector::unit(f, 0));
}

Subspace derivation_space(GradedAlgebra const &a, GradedAlgebra const &end)
{
	auto const &m = *a.carrier();
	int const d = m.dim();
	if (end.dim() != d * d || end.carrier()->chi_ptr() != a.carrier()->chi_ptr())
		throw std::invalid_argument("derivation_space needs graded_end of the algebra's carrier");
	auto const &f = a.field();
	auto const &chi = m.chi();
	auto const &E = *end.carrier();
	Subspace out(end.carrier(), 1);
	std::map<int, std::vector<int>> unknowns;
	for (int e = 0; e < E.dim(); ++e)
		unknowns[E.degree(e)].push_back(e);

	// d = E_uv applied to a vector: the e_v coefficient moved to e_u
	auto apply_unit = [&](int u, int v, SparseVector const &x) {
		SparseVector r;
		if (auto const *c = x.find(static_cast<Index>(v)))
			r.add(static_cast<Index>(u), *c);
		return r;
	};
	for (auto const &[delta, labels] : unknowns)
	{
		auto kernel = kernel_of_columns(f, labels.size(), [&](Index col) {
			int const u = labels[col] / d, v = labels[col] % d;
			SparseVector residual;
			for (int x = 0; x < d; ++x)
				for (int y = 0; y < d; ++y)
				{
					auto ex = SparseVector::unit(f, static_cast<Index>(x));
					auto ey = SparseVector::unit(f, static_cast<Index>(y));
					SparseVector r = apply_unit(u, v, a.product(x, y));
					auto left = apply_unit(u, v, ex);
					if (!left.empty())
						r -= a.multiply(TensorElement(a.carrier(), 1, left), TensorElement(a.carrier(), 1, ey)).coeffs();
					auto right = apply_unit(u, v, ey);
					if (!right.empty())
					{
						auto prod = a.multiply(TensorElement(a.carrier(), 1, ex), TensorElement(a.carrier(), 1, right));
						r.axpy(-chi.value(delta, m.degree(x)).value(), prod.coeffs());
					}
					Index const base = static_cast<Index>(x * d + y) * d;
					for (auto const &[k, c] : r)
						residual.add(base + k, c);
				}
			return residual;
		});
		for (auto const &kv : kernel)
		{
			SparseVector w;
			for (auto const &[col, c] : kv)
				w.add(static_cast<Index>(labels[col]), c);
			out.insert(TensorElement(end.carrier(), 1, std::move(w)));
		}
	}
	return out;
}

BilinearForm::BilinearForm(ModulePtr host, std::map<std::pair<int, int>, CycNumber> const &entries)
    : host_(std::move(host))
{
	int const d = host_->dim();
	matrix_.assign(static_cast<std::size_t>(d) * d, CycNumber::zero(host_->field()));
	auto const &G = host_->group();
	for (auto const &[ab, c] : entries)
	{
		auto [a, b] = ab;
		if (a < 0 || b < 0 || a >= d || b >= d)
			throw std::invalid_argument("bilinear form entry outside the module");
		if (c.is_zero())
			continue;
		if (G.add(host_->degree(a), host_->degree(b)) != G.zero())
			throw std::invalid_argument("bilinear form pairs " + host_->name(a) + " and " + host_->name(b) +
			                            " whose degrees do not add up to 0");
		matrix_[static_cast<std::size_t>(a) * d + b] = c;
	}
}

std::map<std::pair<int, int>, CycNumber> BilinearForm::nonzero_entries() const
{
	std::map<std::pair<int, int>, CycNumber> out;
	int const d = host_->dim();
	for (int a = 0; a < d; ++a)
		for (int b = 0; b < d; ++b)
			if (!value(a, b).is_zero())
				out.emplace(std::pair{a, b}, value(a, b));
	return out;
}

Subspace og_subspace(GradedAlgebra const &end, BilinearForm const &form)
{
	auto const &v = *form.host();
	int const d = v.dim();
	if (end.dim() != d * d || end.carrier()->chi_ptr() != form.host()->chi_ptr())
		throw std::invalid_argument("og_subspace needs graded_end of the form's module");
	auto const &E = *end.carrier();
	auto const &chi = v.chi();
	auto const &f = v.field();
	Subspace out(end.carrier(), 1);
	std::map<int, std::vector<int>> unknowns;
	for (int e = 0; e < E.dim(); ++e)
		unknowns[E.degree(e)].push_back(e);
	for (auto const &[i, labels] : unknowns)
	{
		auto kernel = kernel_of_columns(f, labels.size(), [&](Index col) {
			int const a = labels[col] / d, b = labels[col] % d;
			// <f e_j, e_k> + chi(i, deg j) <e_j, f e_k> for f = E_ab
			SparseVector r;
			for (int k = 0; k < d; ++k)
				if (!form.value(a, k).is_zero())
					r.add(static_cast<Index>(b * d + k), form.value(a, k));
			for (int j = 0; j < d; ++j)
				if (!form.value(j, a).is_zero())
					r.add(static_cast<Index>(j * d + b), form.value(j, a) * chi.value(i, v.degree(j)).value());
			return r;
		});
		for (auto const &kv : kernel)
		{
			SparseVector w;
			for (auto const &[col, c] : kv)
				w.add(static_cast<Index>(labels[col]), c);
			out.insert(TensorElement(end.carrier(), 1, std::move(w)));
		}
	}
	return out;
}

Report closure_report(GradedAlgebra const &a, int max_n, Subspace const &s, std::string const &check)
{
	int const L = a.carrier()->ambient();
	for (int n = 1; n <= max_n; ++n)
		if (L % n != 0 && arity_possible(*a.carrier(), n))
			throw std::invalid_argument("the ambient field Q(z_" + std::to_string(L) + ") lacks a primitive root of unity of order " +
			                            std::to_string(n) + ", needed for brackets of arity " + std::to_string(n));
	return subalgebra_report(
	    a.carrier(), available_arities(L, max_n),
	    [&](int n, RootOfUnity const &zeta, TensorElement const &z) { return bracket(a, n, zeta, z); }, s, check);
}

Report check_der_closure(GradedAlgebra const &a, int max_n)
{
	auto end = graded_end(a.carrier());
	return closure_report(*end, max_n, derivation_space(a, *end), "der-closure");
}

Report check_og_closure(BilinearForm const &form, int max_n)
{
	auto end = graded_end(form.host());
	return closure_report(*end, max_n, og_subspace(*end, form), "og-closure");
}

RestrictedLie restrict_lie(GradedAlgebra const &a, Subspace const &s, int max_n)
{
	if (s.host() != a.carrier() || s.power() != 1)
		throw std::invalid_argument("restrict_lie expects a subspace of the algebra");
	auto hb = homogeneous_basis(s);
	std::vector<int> degrees;
	std::vector<std::string> names;
	for (std::size_t k = 0; k < hb.size(); ++k)
	{
		degrees.push_back(*hb[k].homogeneous_degree());
		names.push_back("p" + std::to_string(k));
	}
	auto p = std::make_shared<const GradedModule>(a.carrier()->chi_ptr(), degrees, names);
	auto const &f = a.field();

	auto push = [&](TensorElement const &z) {
		// multilinear image of a tensor over p in the same power over A
		int const n = z.power();
		TensorElement out(a.carrier(), n);
		std::vector<int> t(n);
		for (auto const &[i, c] : z.coeffs())
		{
			p->decode_into(i, t);
			TensorElement acc = hb[t[0]];
			for (int k = 1; k < n; ++k)
				acc = tensor_product(acc, hb[t[k]]);
			out += acc.scaled(c);
		}
		return out;
	};
	auto pull = [&](TensorElement const &y) {
		std::size_t const k = hb.size();
		auto kernel = kernel_of_columns(f, k + 1, [&](Index c) {
			return c < k ? hb[c].coeffs() : y.coeffs().scaled(CycNumber(f, Rational(-1)));
		});
		for (auto const &v : kernel)
			if (auto const *last = v.find(k))
			{
				auto inv = CycNumber::one(f) / *last;
				TensorElement out(p, 1);
				for (auto const &[c, x] : v)
					if (c < k)
						out.add_term({static_cast<int>(c)}, x * inv);
				return out;
			}
		throw InvariantViolation("bracket value " + y.to_string() + " leaves the subspace");
	};

	RestrictedLie out{BracketStructure(p), hb};
	int const L = a.carrier()->ambient();
	for (auto const &[n, zeta] : available_arities(L, max_n))
	{
		auto dom = symmetrize_graded(p, n, zeta);
		if (dom.is_zero())
			continue;
		std::vector<TensorElement> values;
		for (auto const &b : dom.basis())
			values.push_back(pull(bracket(a, n, zeta, push(b))));
		out.lie.set(n, zeta, std::move(dom), std::move(values));
	}
	return out;
}

} // namespace ydlie
