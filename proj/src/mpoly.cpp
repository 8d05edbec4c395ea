#include "charsum/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace charsum {

namespace {

// Binomial coefficient reduced into the field's prime subfield.
int binom_mod(const FieldCtx& F, int n, int j) {
    long long acc = 1;
    for (int i = 1; i <= j; ++i) {
        acc = acc * (n - j + i) / i;  // exact at each step
        if (acc > (1LL << 60)) throw ConfigError("binomial overflow: degree too large");
    }
    return static_cast<int>(acc % F.p);
}

}  // namespace

MPoly MPoly::constant(int n, int c) {
    MPoly f(n);
    if (c != 0) f.terms_.emplace(Exponents(static_cast<std::size_t>(n), 0), c);
    return f;
}

MPoly MPoly::variable(int n, int i) {
    if (i < 0 || i >= n) throw ConfigError("variable index out of range");
    MPoly f(n);
    Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    f.terms_.emplace(std::move(e), 1);
    return f;
}

int MPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int total = 0;
        for (int x : e) total += x;
        d = std::max(d, total);
    }
    return d;
}

int MPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void MPoly::add_term(const FieldCtx& F, Exponents e, int c) {
    if (static_cast<int>(e.size()) != n_) throw ConfigError("exponent vector has wrong dimension");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
        it->second = F.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::add(const FieldCtx& F, const MPoly& o) const {
    MPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(F, e, c);
    return out;
}

MPoly MPoly::sub(const FieldCtx& F, const MPoly& o) const {
    MPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(F, e, F.neg(c));
    return out;
}

MPoly MPoly::mul(const FieldCtx& F, const MPoly& o) const {
    MPoly out(n_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(F, std::move(e), F.mul(ca, cb));
        }
    }
    return out;
}

MPoly MPoly::scale(const FieldCtx& F, int c) const {
    MPoly out(n_);
    if (c == 0) return out;
    for (const auto& [e, coef] : terms_) out.terms_.emplace(e, F.mul(coef, c));
    return out;
}

int MPoly::evaluate(const FieldCtx& F, const std::vector<int>& x) const {
    if (static_cast<int>(x.size()) != n_) throw ConfigError("evaluation point has wrong dimension");
    int acc = 0;
    for (const auto& [e, c] : terms_) {
        int term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (x[i] == 0) { term = 0; break; }
            term = F.mul(term, F.pow(x[i], e[i]));
        }
        acc = F.add(acc, term);
    }
    return acc;
}

MPoly MPoly::translate(const FieldCtx& F, const std::vector<int>& m) const {
    if (static_cast<int>(m.size()) != n_) throw ConfigError("translation vector has wrong dimension");
    MPoly out(n_);
    for (const auto& [e, c] : terms_) {
        // expand c * prod_i (x_i + m_i)^{e_i}
        MPoly term = MPoly::constant(n_, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (m[i] == 0) {
                MPoly xi(n_);
                Exponents ee(static_cast<std::size_t>(n_), 0);
                ee[i] = e[i];
                xi.terms_.emplace(std::move(ee), 1);
                term = term.mul(F, xi);
                continue;
            }
            MPoly expanded(n_);
            for (int j = 0; j <= e[i]; ++j) {
                int coef = F.mul(binom_mod(F, e[i], j), F.pow(m[i], e[i] - j));
                if (coef == 0) continue;
                Exponents ee(static_cast<std::size_t>(n_), 0);
                ee[i] = j;
                expanded.add_term(F, std::move(ee), coef);
            }
            term = term.mul(F, expanded);
        }
        out = out.add(F, term);
    }
    return out;
}

MPoly MPoly::map_coeffs(const Embedding& emb) const {
    MPoly out(n_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, emb(c));
    return out;
}

std::pair<Exponents, int> MPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

int MPoly::make_monic(const FieldCtx& F) {
    int lc = leading().second;
    if (lc != 1) {
        int ilc = F.inv(lc);
        for (auto& [e, c] : terms_) c = F.mul(c, ilc);
    }
    return lc;
}

bool MPoly::operator<(const MPoly& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return terms_ < o.terms_;
}

std::optional<int> assoc_scalar(const FieldCtx& F, const MPoly& f, const MPoly& g) {
    if (f.is_zero() && g.is_zero()) return 1;  // degenerate case, by convention
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    if (f.terms().size() != g.terms().size()) return std::nullopt;
    std::optional<int> ratio;
    auto it = f.terms().begin();
    auto jt = g.terms().begin();
    for (; it != f.terms().end(); ++it, ++jt) {
        if (it->first != jt->first) return std::nullopt;
        int c = F.mul(jt->second, F.inv(it->second));
        if (ratio && *ratio != c) return std::nullopt;
        ratio = c;
    }
    return ratio;
}

std::pair<MPoly, int> divmod_linear(const FieldCtx& F, const MPoly& f, int root) {
    if (f.vars() != 1) throw ConfigError("divmod_linear: univariate input required");
    int deg = f.degree();
    if (deg < 1) return {MPoly(1), f.is_zero() ? 0 : f.terms().begin()->second};
    std::vector<int> dense(static_cast<std::size_t>(deg) + 1, 0);
    for (const auto& [e, c] : f.terms()) dense[static_cast<std::size_t>(e[0])] = c;
    std::vector<int> quot(static_cast<std::size_t>(deg), 0);
    int carry = 0;
    for (int i = deg; i >= 1; --i) {
        carry = F.add(dense[static_cast<std::size_t>(i)], F.mul(carry, root));
        quot[static_cast<std::size_t>(i - 1)] = carry;
    }
    int rem = F.add(dense[0], F.mul(carry, root));
    MPoly q(1);
    for (int i = 0; i < deg; ++i)
        if (quot[static_cast<std::size_t>(i)] != 0) q.add_term(F, Exponents{i}, quot[static_cast<std::size_t>(i)]);
    return {q, rem};
}

}  // namespace charsum
