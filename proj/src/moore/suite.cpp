#include "quintics/moore/suite.hpp"

#include <algorithm>
#include <map>

#include "quintics/scalars/roots.hpp"

namespace quintics {
namespace {

ClaimRecord tag(ClaimRecord c) {
    c.suite = "moore";
    return c;
}

template <class S>
std::string render_vector(const std::vector<S>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
    return out + ")";
}

// Which reindexings r make pred(r) true; the stated one is reported first when it holds.
template <class Pred>
nlohmann::json holding_reindexings(Pred&& pred) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : all_reindexings())
        if (pred(r)) out.push_back(r.to_string());
    return out;
}

bool contains(const nlohmann::json& list, const std::string& s) {
    return std::find(list.begin(), list.end(), s) != list.end();
}

// The symbolic run takes a as an indeterminate over Q(e15) and clears its denominators; the
// specialized run fixes a in Q(e15).
template <class S>
Claims moore_claims(const S& a, bool clear_denominators, const UnityRoots<S>& roots, const std::string& a_label) {
    using SPoly = MultiPoly<S>;
    Claims claims;
    const MooreSystem<S> ms(a, clear_denominators);
    const auto& q = ms.quadrics();

    // symmetry of M and antisymmetry of A
    {
        const auto& m = ms.moore();
        const auto& am = ms.syzygy();
        SPoly xax(ms.x_ring());
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                xax += am(i, j) * SPoly::variable(ms.x_ring(), i) * SPoly::variable(ms.x_ring(), j);
        claims.push_back(tag(hard_claim("moore.symmetry", "M(y) is symmetric", m == m.transpose(), {{"a", a_label}})));
        claims.push_back(tag(hard_claim("moore.antisymmetry", "A is antisymmetric and x A x^T vanishes", am == -am.transpose() && xax.is_zero(),
                                        {{"quadratic_form_zero", xax.is_zero()}})));
    }

    // 2 Q_{3i} = x M(e_i) x^T
    {
        std::vector<SPoly> forms;
        for (std::size_t i = 0; i < 5; ++i) forms.push_back(ms.quadratic_form(i));
        const S two = S::from_int(a.context(), 2);
        const auto holds = holding_reindexings([&](const Reindexing& r) {
            for (std::size_t i = 0; i < 5; ++i)
                if (q[static_cast<std::size_t>(r(static_cast<long>(i)))].scaled(two) != forms[i]) return false;
            return true;
        });
        claims.push_back(tag(hard_claim("moore.quadric-forms", "2 Q_{3i}(x) = x M(e_i) x^T for every i", contains(holds, "3j"),
                                        {{"stated_index", "3j"}, {"holding_reindexings", holds}, {"form_0", forms[0].to_string()}})));
    }

    // M' from the bilinear identity against the Jacobian
    {
        const auto holds = holding_reindexings([&](const Reindexing& r) { return ms.dual() == ms.jacobian(r); });
        bool closed_form = true;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t k = 0; k < 5; ++k) {
                const long src = mod5(static_cast<long>(k) - static_cast<long>(i));
                closed_form = closed_form && ms.dual()(i, k) == SPoly::variable(ms.x_ring(), static_cast<std::size_t>(src))
                                                                    .scaled(ms.z(2 * static_cast<long>(i) - static_cast<long>(k)));
            }
        claims.push_back(tag(hard_claim("moore.jacobian", "M'(x) equals the Jacobian (dQ_{3j}/dx_i)", contains(holds, "3j"),
                                        {{"stated_index", "3j"},
                                         {"holding_reindexings", holds},
                                         {"closed_form_z_{2i-k} x_{k-i}", closed_form},
                                         {"row_0", [&] {
                                              nlohmann::json r = nlohmann::json::array();
                                              for (std::size_t k = 0; k < 5; ++k) r.push_back(ms.dual()(0, k).to_string());
                                              return r;
                                          }()}})));
    }

    // the two quintics
    const auto [det_m, det_mp] = quintic_equations(ms);
    {
        const bool ok = !det_m.is_zero() && !det_mp.is_zero() && det_m.is_homogeneous() && det_mp.is_homogeneous() &&
                        det_m.degree() == 5 && det_mp.degree() == 5;
        claims.push_back(tag(hard_claim("moore.quintic-degree", "det M(y) and det M'(x) are nonzero quintic forms", ok,
                                        {{"det_M_terms", det_m.term_count()},
                                         {"det_M_prime_terms", det_mp.term_count()},
                                         {"det_M_degree", det_m.degree()},
                                         {"det_M_prime_degree", det_mp.degree()},
                                         {"scale", clear_denominators ? "entries multiplied by a; determinants carry a^5" : "unscaled"}})));
    }
    {
        const auto conv = Convention::kLevel5;
        const auto sigma = HeisenbergElement::sigma_of(conv), tau = HeisenbergElement::tau_of(conv);
        nlohmann::json detail;
        bool ok = true;
        for (const auto& [name, f] : {std::pair<const char*, const SPoly*>{"det_M", &det_m}, {"det_M_prime", &det_mp}}) {
            const bool s = act_on_polynomial(sigma, *f, conv, roots) == *f;
            const bool t = act_on_polynomial(tau, *f, conv, roots) == *f;
            detail[name] = {{"sigma", s}, {"tau", t}};
            ok = ok && s && t;
        }
        // sigma permutes the quadrics cyclically
        int shift = -1;
        for (int d = 0; d < 5 && shift < 0; ++d) {
            bool all = true;
            for (long i = 0; i < 5; ++i)
                all = all && act_on_polynomial(sigma, q[static_cast<std::size_t>(i)], conv, roots) == q[static_cast<std::size_t>(mod5(i + d))];
            if (all) shift = d;
        }
        detail["sigma_on_quadrics"] = shift < 0 ? nlohmann::json("not a cyclic shift") : nlohmann::json("Q_i -> Q_{i+" + std::to_string(shift) + "}");
        claims.push_back(tag(hard_claim("moore.h5-invariance", "det M and det M' are fixed by sigma_5 and tau_5", ok && shift > 0, detail)));
    }

    // A M'^T entries in span{Q}
    {
        const auto prod = ms.syzygy() * ms.dual().transpose();
        std::size_t in_span = 0;
        nlohmann::json failures = nlohmann::json::array();
        std::string entry00;
        nlohmann::json first_nonzero;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                const auto c = in_linear_span(prod(i, j), q);
                if (c) {
                    ++in_span;
                    if (i == 0 && j == 0) entry00 = render_vector(*c);
                    if (first_nonzero.is_null() && !prod(i, j).is_zero())
                        first_nonzero = {{"entry", {i, j}}, {"poly", prod(i, j).to_string()}, {"coefficients", render_vector(*c)}};
                } else {
                    failures.push_back({{"entry", {i, j}}, {"poly", prod(i, j).to_string()}});
                }
            }
        claims.push_back(tag(hard_claim("moore.span", "all 25 entries of A M'^T lie in span{Q_i}", in_span == 25,
                                        {{"entries_in_span", in_span}, {"entry_00_coefficients", entry00}, {"first_nonzero_entry", first_nonzero}, {"failures", failures}})));
    }

    // linear syzygies: A (Q_{r(0)}, ..., Q_{r(4)})^T = 0, and the per-row kernel dimensions
    {
        const auto holds = holding_reindexings([&](const Reindexing& r) {
            for (std::size_t i = 0; i < 5; ++i) {
                SPoly s(ms.x_ring());
                for (std::size_t j = 0; j < 5; ++j) s += ms.syzygy()(i, j) * q[static_cast<std::size_t>(r(static_cast<long>(j)))];
                if (!s.is_zero()) return false;
            }
            return true;
        });
        nlohmann::json dims = nlohmann::json::array();
        bool kernels_ok = true;
        for (std::size_t i = 0; i < 5; ++i) {
            // unknowns C_{jk}: sum_j A_ij sum_k C_jk Q_k = 0
            std::vector<SPoly> cols;
            std::map<Monomial, std::size_t, GrevlexLess> index;
            for (std::size_t j = 0; j < 5; ++j)
                for (std::size_t k = 0; k < 5; ++k) {
                    cols.push_back(ms.syzygy()(i, j) * q[k]);
                    for (const auto& t : cols.back().terms()) index.emplace(t.first, index.size());
                }
            Matrix<S> sys(std::max<std::size_t>(index.size(), 1), cols.size(), {});
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (const auto& [mono, coef] : cols[c].terms()) sys(index.at(mono), c) = coef;
            // the (j, j) unknowns for A_ii = 0 are free and carry no content
            const std::size_t trivial = 5;
            const std::size_t dim = sys.kernel().size();
            dims.push_back(dim - trivial);
            kernels_ok = kernels_ok && dim > trivial;
        }
        claims.push_back(tag(hard_claim("moore.syzygy", "A annihilates a reindexing of (Q_0, ..., Q_4)", !holds.empty() && kernels_ok,
                                        {{"holding_reindexings", holds}, {"nontrivial_kernel_dims_per_row", dims}})));
    }

    // excluded moduli
    {
        const auto ex = excluded_moduli();
        std::vector<CycloNum> finite;
        for (const auto& e : ex)
            if (e) finite.push_back(*e);
        bool distinct = true;
        for (std::size_t i = 0; i < finite.size(); ++i)
            for (std::size_t j = i + 1; j < finite.size(); ++j) distinct = distinct && finite[i] != finite[j];
        // recorded only: does det M'(x) vanish identically at each finite nonzero excluded value
        nlohmann::json degenerate = nlohmann::json::array();
        for (const auto& e : finite) {
            if (e.is_zero()) continue;
            const MooreSystem<CycloNum> at(e, false);
            degenerate.push_back({{"a", e.to_string()}, {"det_M_prime_identically_zero", determinant_cofactor(at.dual()).is_zero()}});
        }
        claims.push_back(tag(hard_claim("moore.excluded-moduli", "there are 12 excluded moduli counted projectively", distinct && ex.size() == 12,
                                        {{"count", ex.size()}, {"finite_distinct", distinct}, {"degeneracy", degenerate}})));
    }
    return claims;
}

}  // namespace

std::vector<std::optional<CycloNum>> excluded_moduli() {
    std::vector<std::optional<CycloNum>> out{CycloNum(0), std::nullopt};
    const auto e = [](long k) { return cyclo_root_of_unity(5, k); };
    for (long k = 0; k < 5; ++k) out.emplace_back(e(k) * (e(2) + e(3)));
    for (long k = 0; k < 5; ++k) out.emplace_back(e(k) * (e(1) + e(4)));
    return out;
}

std::vector<std::uint32_t> excluded_residues(std::uint32_t p) {
    const CycloEmbedding phi(p);
    std::vector<std::uint32_t> out;
    for (const auto& a : excluded_moduli())
        if (a) out.push_back(phi(*a).residue());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Claims verify_moore() {
    const auto base = CycloNum::zero({});
    return moore_claims(SymbolicScalar::parameter(base.context()), true, lift_roots(cyclo_roots()), "indeterminate");
}

Claims verify_moore_at(const CycloNum& a) {
    for (const auto& e : excluded_moduli())
        if (e && *e == a) throw std::invalid_argument("a = " + a.to_string() + " is an excluded modulus");
    return moore_claims(a, false, cyclo_roots(), a.to_string());
}

}  // namespace quintics
