#include "charsum/rfunc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace charsum {

FactoredRational::FactoredRational(FieldPtr ctx, int n, int constant,
                                   std::vector<std::pair<MPoly, int>> factors,
                                   bool absolutely_irreducible, int degree_cap)
    : ctx_(std::move(ctx)), n_(n), c_(constant), abs_irred_(absolutely_irreducible), cap_(degree_cap) {
    const FieldCtx& F = *ctx_;
    if (c_ == 0) throw ConfigError("rational function: constant must be nonzero");
    std::map<MPoly, int> merged;
    for (auto& [f, b] : factors) {
        if (b == 0) continue;
        if (f.vars() != n_) throw ConfigError("rational function: factor has wrong variable count");
        if (f.is_zero()) throw ConfigError("rational function: zero polynomial factor");
        if (f.degree() == 0) {  // constant factor folds into c
            c_ = F.mul(c_, F.pow(f.terms().begin()->second, b));
            continue;
        }
        MPoly g = f;
        int lc = g.make_monic(F);
        c_ = F.mul(c_, F.pow(lc, b));
        merged[std::move(g)] += b;
    }
    for (auto& [f, b] : merged)
        if (b != 0) factors_.emplace_back(f, b);
    // merged map iteration is already sorted by the MPoly order
    int pos = 0, neg = 0;
    for (const auto& [f, b] : factors_) {
        if (b > 0) pos += b * f.degree();
        else neg += -b * f.degree();
    }
    if (std::max(pos, neg) > cap_)
        throw ConfigError("rational function: degree " + std::to_string(std::max(pos, neg)) +
                          " exceeds cap " + std::to_string(cap_));
}

int FactoredRational::degree() const {
    int pos = 0, neg = 0;
    for (const auto& [f, b] : factors_) {
        if (b > 0) pos += b * f.degree();
        else neg += -b * f.degree();
    }
    return std::max(pos, neg);
}

bool FactoredRational::all_factors_linear() const {
    for (const auto& [f, b] : factors_)
        if (f.degree() > 1) return false;
    return true;
}

EvalResult FactoredRational::evaluate(const std::vector<int>& x) const {
    const FieldCtx& F = *ctx_;
    if (static_cast<int>(x.size()) != n_) throw ConfigError("evaluate: point has wrong dimension");
    long long t = F.log(c_);
    for (const auto& [f, b] : factors_) {
        int v = f.evaluate(F, x);
        if (v == 0) return EvalResult::pole();
        t += static_cast<long long>(F.log(v)) * b;
    }
    return EvalResult::of(F.exp(t));
}

FactoredRational FactoredRational::translate(const std::vector<int>& m) const {
    const FieldCtx& F = *ctx_;
    std::vector<std::pair<MPoly, int>> out;
    out.reserve(factors_.size());
    for (const auto& [f, b] : factors_) out.emplace_back(f.translate(F, m), b);
    return FactoredRational(ctx_, n_, c_, std::move(out), abs_irred_, cap_);
}

FactoredRational FactoredRational::lift(const Embedding& emb) const {
    std::vector<std::pair<MPoly, int>> out;
    out.reserve(factors_.size());
    for (const auto& [f, b] : factors_) out.emplace_back(f.map_coeffs(emb), b);
    return FactoredRational(emb.ext_ptr(), n_, emb(c_), std::move(out), abs_irred_, cap_);
}

FactoredRational product_of_translates(const FactoredRational& F,
                                       const std::vector<std::pair<std::vector<int>, int>>& offsets) {
    const FieldCtx& K = F.ctx();
    int c = 1;
    std::vector<std::pair<MPoly, int>> parts;
    for (const auto& [m, a] : offsets) {
        if (a == 0) continue;
        c = K.mul(c, K.pow(F.constant(), a));
        for (const auto& [f, b] : F.factors()) parts.emplace_back(f.translate(K, m), b * a);
    }
    return FactoredRational(F.ctx_ptr(), F.vars(), c, std::move(parts), F.absolutely_irreducible(),
                            F.degree_cap());
}

bool is_dth_power_free(const FactoredRational& F, int d) {
    if (d < 1) throw ConfigError("power-free test: d must be positive");
    for (const auto& [f, b] : F.factors())
        if (b <= -d || b >= d) return false;
    return true;
}

SplitResult univariate_split(FieldPtr ctx, const MPoly& f, const Budget& budget) {
    if (f.vars() != 1) throw ConfigError("univariate_split: polynomial must be univariate");
    if (f.is_zero()) throw ConfigError("univariate_split: zero polynomial");
    const int deg = f.degree();
    if (deg == 0)
        return SplitResult{1, ctx, f.terms().begin()->second, {}};

    // The splitting degree is the lcm of the irreducible factor degrees,
    // so it is at most lcm(1..deg); scanning e upward finds it.
    long long e_cap = 1;
    for (int i = 1; i <= deg; ++i) e_cap = std::lcm(e_cap, static_cast<long long>(i));
    for (int e = 1; e <= e_cap; ++e) {
        std::uint64_t qe = sat_pow(static_cast<std::uint64_t>(ctx->q), static_cast<unsigned>(e));
        budget.require_table(qe, "univariate_split");
        FieldPtr ext = (e == 1) ? ctx : make_field(ctx->p, ctx->k * e, budget);
        Embedding emb(ctx, ext);
        MPoly g = f.map_coeffs(emb);
        std::vector<std::pair<int, int>> roots;
        for (int v = 0; v < ext->q && g.degree() > 0; ++v) {
            int mult = 0;
            while (g.degree() > 0) {
                auto [q2, rem] = divmod_linear(*ext, g, v);
                if (rem != 0) break;
                g = std::move(q2);
                ++mult;
            }
            if (mult > 0) roots.emplace_back(v, mult);
        }
        if (g.degree() == 0)
            return SplitResult{e, ext, g.terms().begin()->second, std::move(roots)};
    }
    throw std::logic_error("univariate_split: failed to split within the degree bound");
}

std::pair<int, std::vector<std::pair<MPoly, int>>> factor_univariate(FieldPtr ctx, const MPoly& f,
                                                                     const Budget& budget) {
    SplitResult split = univariate_split(ctx, f, budget);
    const FieldCtx& E = *split.ext;
    Embedding emb(ctx, split.ext);

    std::map<int, int> pending;  // root -> multiplicity
    for (auto [r, m] : split.roots) pending.emplace(r, m);

    std::vector<std::pair<MPoly, int>> out;
    while (!pending.empty()) {
        auto [r0, mult] = *pending.begin();
        // Frobenius orbit of the root under x -> x^q.
        std::vector<int> orbit;
        int r = r0;
        do {
            orbit.push_back(r);
            auto it = pending.find(r);
            if (it == pending.end() || it->second != mult)
                throw std::logic_error("factor_univariate: inconsistent orbit multiplicities");
            pending.erase(it);
            r = E.pow(r, ctx->q);
        } while (r != r0);

        MPoly prod = MPoly::constant(1, 1);
        for (int rt : orbit) {
            MPoly lin(1);
            lin.add_term(E, Exponents{1}, 1);
            lin.add_term(E, Exponents{0}, E.neg(rt));
            prod = prod.mul(E, lin);
        }
        // Coefficients land in the embedded base field; pull them back.
        MPoly base_poly(1);
        for (const auto& [e, c] : prod.terms()) base_poly.add_term(*ctx, e, emb.pull_back(c));
        out.emplace_back(std::move(base_poly), mult);
    }
    int lead = (split.ext_degree == 1) ? split.leading : emb.pull_back(split.leading);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return {lead, std::move(out)};
}

FactoredRational canonical_univariate(const FactoredRational& F, const Budget& budget) {
    if (F.vars() != 1) throw ConfigError("canonical_univariate: univariate input required");
    int c = F.constant();
    const FieldCtx& K = F.ctx();
    std::vector<std::pair<MPoly, int>> out;
    for (const auto& [f, b] : F.factors()) {
        if (f.degree() <= 1) {
            out.emplace_back(f, b);
            continue;
        }
        auto [lead, parts] = factor_univariate(F.ctx_ptr(), f, budget);
        c = K.mul(c, K.pow(lead, b));
        for (auto& [g, m] : parts) out.emplace_back(std::move(g), m * b);
    }
    // Irreducible over the base and linear over the base coincide only in
    // degree 1; the flag records what is known over the closure.
    bool linear = true;
    for (const auto& [g, m] : out)
        if (g.degree() > 1) linear = false;
    return FactoredRational(F.ctx_ptr(), 1, c, std::move(out),
                            F.absolutely_irreducible() || linear, F.degree_cap());
}

FactoredRational FactoredRational::from_dense(FieldPtr ctx, const MPoly& numer, const MPoly& denom,
                                              const Budget& budget, int degree_cap) {
    if (numer.vars() != 1 || denom.vars() != 1)
        throw ConfigError("from_dense: dense numerator/denominator input is univariate-only");
    if (numer.is_zero() || denom.is_zero())
        throw ConfigError("from_dense: numerator and denominator must be nonzero");
    const FieldCtx& K = *ctx;
    auto [ln, fn] = factor_univariate(ctx, numer, budget);
    auto [ld, fd] = factor_univariate(ctx, denom, budget);
    std::vector<std::pair<MPoly, int>> parts = std::move(fn);
    for (auto& [g, m] : fd) parts.emplace_back(std::move(g), -m);
    int c = K.mul(ln, K.inv(ld));
    FactoredRational out(std::move(ctx), 1, c, std::move(parts), false, degree_cap);
    bool linear = out.all_factors_linear();
    if (!linear) return out;
    return FactoredRational(out.ctx_ptr(), 1, out.constant(), out.factors(), true, degree_cap);
}

bool is_perfect_dth_power(const FactoredRational& F, int d, const Budget& budget) {
    if (d < 1) throw ConfigError("perfect-power test: d must be positive");
    if (F.absolutely_irreducible() || F.all_factors_linear()) {
        for (const auto& [f, b] : F.factors())
            if (b % d != 0) return false;
        return true;
    }
    if (F.vars() != 1)
        throw ConfigError("perfect-power test: absolute irreducibility not established for "
                          "multivariate factors (set the assertion flag)");

    // Split every factor over a common extension and merge root multiplicities.
    int e = 1;
    for (const auto& [f, b] : F.factors()) {
        int ej = univariate_split(F.ctx_ptr(), f, budget).ext_degree;
        e = static_cast<int>(std::lcm(static_cast<long long>(e), static_cast<long long>(ej)));
    }
    budget.require_table(sat_pow(static_cast<std::uint64_t>(F.ctx().q), static_cast<unsigned>(e)),
                         "perfect-power test");
    FieldPtr common = (e == 1) ? F.ctx_ptr() : make_field(F.ctx().p, F.ctx().k * e, budget);
    Embedding emb(F.ctx_ptr(), common);
    std::map<int, long long> mult;  // root in the common extension -> total multiplicity
    for (const auto& [f, b] : F.factors()) {
        MPoly g = f.map_coeffs(emb);
        const FieldCtx& E = *common;
        for (int v = 0; v < E.q && g.degree() > 0; ++v) {
            int m = 0;
            while (g.degree() > 0) {
                auto [q2, rem] = divmod_linear(E, g, v);
                if (rem != 0) break;
                g = std::move(q2);
                ++m;
            }
            if (m > 0) mult[v] += static_cast<long long>(m) * b;
        }
        if (g.degree() != 0) throw std::logic_error("perfect-power test: factor failed to split");
    }
    for (const auto& [root, m] : mult)
        if (m % d != 0) return false;
    return true;
}

std::vector<std::vector<int>> stabilizer(const FactoredRational& F, int ext_degree,
                                         const Budget& budget) {
    if (ext_degree < 1) throw ConfigError("stabilizer: extension degree must be >= 1");
    const FieldCtx& K = F.ctx();
    std::uint64_t qe = sat_pow(static_cast<std::uint64_t>(K.q), static_cast<unsigned>(ext_degree));
    budget.require_table(qe, "stabilizer");
    budget.require_iterations(sat_pow(qe, static_cast<unsigned>(F.vars())), "stabilizer");

    FieldPtr ext = (ext_degree == 1) ? F.ctx_ptr() : make_field(K.p, K.k * ext_degree, budget);
    FactoredRational G = (ext_degree == 1) ? F : F.lift(Embedding(F.ctx_ptr(), ext));

    std::vector<std::vector<int>> out;
    std::vector<int> m(static_cast<std::size_t>(F.vars()), 0);
    do {
        if (G.translate(m) == G) out.push_back(m);
    } while (next_point(m, ext->q));
    return out;
}

}  // namespace charsum
