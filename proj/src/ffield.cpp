#include "charsum/ffield.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace charsum {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Polynomial coefficient vectors over F_p, low to high, used only while
// building the tables.
using PolyP = std::vector<int>;

PolyP decode(int e, int p) {
    PolyP c;
    while (e > 0) {
        c.push_back(e % p);
        e /= p;
    }
    return c;
}

int encode(const PolyP& c, int p) {
    int e = 0;
    for (std::size_t i = c.size(); i-- > 0;) e = e * p + c[i];
    return e;
}

PolyP poly_mul_mod(const PolyP& a, const PolyP& b, const PolyP& mod, int p) {
    if (a.empty() || b.empty()) return {};
    PolyP prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce mod the monic modulus
    const std::size_t dm = mod.size() - 1;
    for (std::size_t i = prod.size(); i-- > dm;) {
        int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::size_t t = 0; t < dm; ++t)
            prod[i - dm + t] = ((prod[i - dm + t] - c * mod[t]) % p + p) % p;
    }
    while (!prod.empty() && prod.back() == 0) prod.pop_back();
    return prod;
}

// Irreducibility by trial division against all monic polynomials of degree
// 1..deg/2. Fine at table-budget scale.
bool divides(const PolyP& d, PolyP num, int p) {
    while (num.size() >= d.size()) {
        int lead = num.back();
        if (lead == 0) { num.pop_back(); continue; }
        // d is monic
        std::size_t shift = num.size() - d.size();
        for (std::size_t t = 0; t < d.size(); ++t)
            num[shift + t] = ((num[shift + t] - lead * d[t]) % p + p) % p;
        while (!num.empty() && num.back() == 0) num.pop_back();
    }
    return num.empty();
}

bool is_irreducible(const PolyP& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int dd = 1; dd <= deg / 2; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long lo = 0; lo < count; ++lo) {
            PolyP d = decode(static_cast<int>(lo), p);
            d.resize(static_cast<std::size_t>(dd) + 1, 0);
            d[static_cast<std::size_t>(dd)] = 1;  // monic
            if (divides(d, f, p)) return false;
        }
    }
    return true;
}

PolyP smallest_irreducible(int p, int k) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long long lo = 0; lo < count; ++lo) {
        PolyP f = decode(static_cast<int>(lo), p);
        f.resize(static_cast<std::size_t>(k) + 1, 0);
        f[static_cast<std::size_t>(k)] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace

int FieldCtx::add(int a, int b) const {
    if (k == 1) return (a + b) % p;
    int out = 0, mult = 1;
    while (a > 0 || b > 0) {
        out += ((a % p + b % p) % p) * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return out;
}

int FieldCtx::neg(int a) const {
    if (k == 1) return (p - a) % p;
    int out = 0, mult = 1;
    while (a > 0) {
        out += ((p - a % p) % p) * mult;
        a /= p;
        mult *= p;
    }
    return out;
}

int FieldCtx::inv(int a) const {
    if (a == 0) throw ConfigError("field inverse of zero");
    return antilog_[static_cast<std::size_t>((q - 1 - log_[a]) % (q - 1))];
}

int FieldCtx::pow(int a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw ConfigError("field pow: negative power of zero");
        return 0;
    }
    long long t = (static_cast<long long>(log_[a]) * (e % (q - 1))) % (q - 1);
    return exp(t);
}

int FieldCtx::log(int a) const {
    if (a == 0) throw ConfigError("discrete log of zero");
    return log_[static_cast<std::size_t>(a)];
}

long long FieldCtx::order(int a) const {
    if (a == 0) throw ConfigError("multiplicative order of zero");
    long long n = q - 1;
    return n / std::gcd(n, static_cast<long long>(log_[a]));
}

FieldPtr make_field(int p, int k, const Budget& budget) {
    if (!is_prime(p)) throw ConfigError("make_field: p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw ConfigError("make_field: extension degree must be >= 1");
    std::uint64_t q64 = sat_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(k));
    budget.require_table(q64, "make_field");
    const int q = static_cast<int>(q64);

    auto ctx = std::make_shared<FieldCtx>();
    ctx->p = p;
    ctx->k = k;
    ctx->q = q;

    PolyP mod;
    if (k == 1) {
        mod = {0, 1};  // arithmetic is plain mod p; kept for uniform reporting
    } else {
        mod = smallest_irreducible(p, k);
    }
    ctx->modulus = mod;

    // Multiplication before tables exist.
    auto raw_mul = [&](int a, int b) -> int {
        if (k == 1) return static_cast<int>((static_cast<long long>(a) * b) % p);
        return encode(poly_mul_mod(decode(a, p), decode(b, p), mod, p), p);
    };
    auto raw_pow = [&](int a, long long e) -> int {
        int acc = 1, base = a;
        while (e > 0) {
            if (e & 1) acc = raw_mul(acc, base);
            base = raw_mul(base, base);
            e >>= 1;
        }
        return acc;
    };

    const long long n = q - 1;
    const auto factors = prime_factors(n);
    int gen = 0;
    for (int cand = 1; cand < q; ++cand) {
        bool full = true;
        for (long long f : factors) {
            if (raw_pow(cand, n / f) == 1) { full = false; break; }
        }
        if (full) { gen = cand; break; }
    }
    if (gen == 0) throw ConfigError("make_field: no generator found (non-prime p?)");
    ctx->generator = gen;

    ctx->log_.assign(static_cast<std::size_t>(q), -1);
    ctx->antilog_.assign(static_cast<std::size_t>(q - 1), 0);
    int cur = 1;
    for (int t = 0; t < q - 1; ++t) {
        if (ctx->log_[static_cast<std::size_t>(cur)] != -1)
            throw std::logic_error("make_field: generator order check failed");
        ctx->log_[static_cast<std::size_t>(cur)] = t;
        ctx->antilog_[static_cast<std::size_t>(t)] = cur;
        cur = raw_mul(cur, gen);
    }
    if (cur != 1) throw std::logic_error("make_field: generator does not have order q-1");
    return ctx;
}

int norm_to_subfield(const FieldCtx& ctx, int a, int m) {
    if (m < 1 || ctx.k % m != 0)
        throw ConfigError("norm_to_subfield: target degree " + std::to_string(m) +
                          " does not divide " + std::to_string(ctx.k));
    if (a == 0) return 0;
    long long pm = 1;
    for (int i = 0; i < m; ++i) pm *= ctx.p;
    return ctx.pow(a, (static_cast<long long>(ctx.q) - 1) / (pm - 1));
}

Embedding::Embedding(FieldPtr base, FieldPtr ext) : base_(std::move(base)), ext_(std::move(ext)) {
    const FieldCtx& B = *base_;
    const FieldCtx& E = *ext_;
    if (B.p != E.p) throw ConfigError("embedding: mismatched characteristic");
    if (E.k % B.k != 0) throw ConfigError("embedding: base degree does not divide extension degree");

    fwd_.assign(static_cast<std::size_t>(B.q), 0);
    sublog_.assign(static_cast<std::size_t>(E.q), -1);

    int ghat;
    if (B.q == E.q && B.modulus == E.modulus) {
        ghat = B.generator;  // same context
    } else {
        // Minimal polynomial of the base generator over F_p, by linear algebra
        // on its powers; a generator always has degree exactly k.
        const int p = B.p, k = B.k;
        std::vector<std::vector<int>> pows;  // digit vectors, length k
        int cur = 1;
        for (int i = 0; i <= k; ++i) {
            std::vector<int> digits(static_cast<std::size_t>(k), 0);
            int v = cur;
            for (int t = 0; t < k; ++t) { digits[static_cast<std::size_t>(t)] = v % p; v /= p; }
            pows.push_back(digits);
            cur = B.mul(cur, B.generator);
        }
        // Solve sum_{i<=k} c_i g^i = 0 with c_k = 1 over F_p by elimination.
        std::vector<std::vector<long long>> m(static_cast<std::size_t>(k), std::vector<long long>(static_cast<std::size_t>(k) + 1, 0));
        for (int row = 0; row < k; ++row)
            for (int col = 0; col <= k; ++col)
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = pows[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];
        // unknowns c_0..c_{k-1}; move the c_k column to the right-hand side
        std::vector<long long> rhs(static_cast<std::size_t>(k));
        for (int row = 0; row < k; ++row) {
            rhs[static_cast<std::size_t>(row)] = (p - m[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] % p) % p;
            m[static_cast<std::size_t>(row)].resize(static_cast<std::size_t>(k));
        }
        auto modinv = [&](long long a) {
            long long r = 1, b = a % p, e = p - 2;
            while (e > 0) { if (e & 1) r = r * b % p; b = b * b % p; e >>= 1; }
            return r;
        };
        int rank = 0;
        std::vector<int> pivot_col(static_cast<std::size_t>(k), -1);
        for (int col = 0; col < k && rank < k; ++col) {
            int sel = -1;
            for (int row = rank; row < k; ++row)
                if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] % p != 0) { sel = row; break; }
            if (sel < 0) continue;
            std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(rank)]);
            std::swap(rhs[static_cast<std::size_t>(sel)], rhs[static_cast<std::size_t>(rank)]);
            long long ipiv = modinv(m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)]);
            for (int c2 = 0; c2 < k; ++c2) m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c2)] = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c2)] * ipiv % p;
            rhs[static_cast<std::size_t>(rank)] = rhs[static_cast<std::size_t>(rank)] * ipiv % p;
            for (int row = 0; row < k; ++row) {
                if (row == rank) continue;
                long long f = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] % p;
                if (f == 0) continue;
                for (int c2 = 0; c2 < k; ++c2)
                    m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c2)] = ((m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c2)] - f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c2)]) % p + p) % p;
                rhs[static_cast<std::size_t>(row)] = ((rhs[static_cast<std::size_t>(row)] - f * rhs[static_cast<std::size_t>(rank)]) % p + p) % p;
            }
            pivot_col[static_cast<std::size_t>(rank)] = col;
            ++rank;
        }
        if (rank != k) throw std::logic_error("embedding: generator minimal polynomial is not degree k");
        std::vector<long long> minpoly(static_cast<std::size_t>(k) + 1, 0);
        minpoly[static_cast<std::size_t>(k)] = 1;
        for (int row = 0; row < k; ++row) minpoly[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(row)])] = rhs[static_cast<std::size_t>(row)];

        // Smallest root of the minimal polynomial in the extension.
        ghat = -1;
        for (int cand = 0; cand < E.q; ++cand) {
            int acc = 0;
            for (std::size_t i = minpoly.size(); i-- > 0;) {
                acc = E.mul(acc, cand);
                int c = static_cast<int>(minpoly[i] % p);
                acc = E.add(acc, c);  // F_p constants embed as themselves
            }
            if (acc == 0) { ghat = cand; break; }
        }
        if (ghat < 0) throw std::logic_error("embedding: minimal polynomial has no root in the extension");
    }

    fwd_[0] = 0;
    int cur = 1;  // ghat^t
    for (int t = 0; t < B.q - 1; ++t) {
        fwd_[static_cast<std::size_t>(B.exp(t))] = cur;
        sublog_[static_cast<std::size_t>(cur)] = t;
        cur = E.mul(cur, ghat);
    }
    if (cur != 1) throw std::logic_error("embedding: image of generator has wrong order");
}

int Embedding::pull_back(int ext_elt) const {
    if (ext_elt == 0) return 0;
    int t = sublog_[static_cast<std::size_t>(ext_elt)];
    if (t < 0) throw ConfigError("pull_back: element lies outside the embedded subfield");
    return base_->exp(t);
}

Character::Character(FieldPtr ctx, int d, long long e, unsigned D)
    : ctx_(std::move(ctx)), d_(d), e_(e), D_(D) {
    if (d < 1 || (ctx_->q - 1) % d != 0)
        throw ConfigError("character order " + std::to_string(d) + " does not divide q-1 = " +
                          std::to_string(ctx_->q - 1));
    if (D % static_cast<unsigned>(d) != 0)
        throw ConfigError("character order must divide the ambient cyclotomic order");
    long long em = ((e % d) + d) % d;
    step_ = (static_cast<long long>(D) / d) * em % D;
}

int Character::order() const {
    long long em = ((e_ % d_) + d_) % d_;
    return static_cast<int>(d_ / std::gcd(static_cast<long long>(d_), em));
}

Character make_character(FieldPtr ctx, int d, long long e, unsigned D) {
    return Character(std::move(ctx), d, e, D);
}

CharTable::CharTable(const Character& chi, const Embedding& emb) : D_(chi.ambient()) {
    const FieldCtx& B = emb.base();
    const FieldCtx& E = emb.ext();
    if (&B != &chi.ctx()) throw ConfigError("CharTable: character and embedding base mismatch");
    tab_.assign(static_cast<std::size_t>(E.q), -1);
    const long long ratio = (static_cast<long long>(E.q) - 1) / (B.q - 1);
    for (int a = 1; a < E.q; ++a) {
        int nv = E.exp(static_cast<long long>(E.log(a)) * ratio);
        int t = emb.sub_log(nv);
        if (t < 0) throw std::logic_error("CharTable: norm landed outside the subfield");
        tab_[static_cast<std::size_t>(a)] = chi.eval_exponent(B.exp(t));
    }
}

}  // namespace charsum
