#include "charsum/bounds.hpp"

#include "charsum/budget.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace charsum {

Rat::Rat(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

long long Rat::floor() const {
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

long long Rat::ceil() const {
    long long q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

bool Rat::operator<(const Rat& o) const { return num * o.den < o.num * den; }
Rat Rat::operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
Rat Rat::operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

namespace {

long long ceil_div(long long a, long long b) { return Rat(a, b).ceil(); }
long long floor_div(long long a, long long b) { return Rat(a, b).floor(); }

}  // namespace

ThetaParams theta_params(int n, long long r) {
    if (n < 2) throw ConfigError("theta_params: the division data needs n >= 2");
    if (r < 1) throw ConfigError("theta_params: r must be >= 1");
    long long half = (r - 1) / 2;
    return ThetaParams{half / (n - 1), half % (n - 1)};
}

long long theta(int n, long long r, int j) {
    if (n < 1 || r < 1) throw ConfigError("theta: need n >= 1 and r >= 1");
    if (j < 0 || j > n) throw ConfigError("theta: j out of range 0..n");
    if (j == 0) return 0;
    if (j == n) return ceil_div(static_cast<long long>(n) * r, 2);
    auto [a, b] = theta_params(n, r);  // n >= 2 here since 0 < j < n
    return j * a + std::max<long long>(0, b + j - (n - 1));
}

long long default_s_max(int n, long long r) {
    return std::max<long long>(2LL * n * r, n * ceil_div(r, 2) + 1);
}

long long c_lower_from_m(const std::vector<Rat>& m, long long j) {
    long long best = 0;
    for (std::size_t idx = 0; idx < m.size(); ++idx) {
        long long s = static_cast<long long>(idx) + 1;
        best = std::max(best, j * s - m[idx].floor());
    }
    return best;
}

Rat m_upper_from_c(const std::vector<long long>& c, long long s) {
    if (c.empty()) throw ConfigError("m_upper_from_c: empty bound table");
    Rat best(0 - c[0]);
    for (std::size_t j = 1; j < c.size(); ++j)
        best = rat_max(best, Rat(static_cast<long long>(j) * s - c[j]));
    return best;
}

Rat m_upper_from_cprime(const std::vector<long long>& cprime, int n, long long r, long long s) {
    if (static_cast<int>(cprime.size()) != n + 1)
        throw ConfigError("m_upper_from_cprime: table must cover j = 0..n");
    Rat best(-cprime[0]);
    for (int j = 1; j <= n; ++j)
        best = rat_max(best, Rat(static_cast<long long>(j) * r, 2) - Rat(cprime[static_cast<std::size_t>(j)]));
    return Rat(static_cast<long long>(n) * s) - Rat(static_cast<long long>(n) * r, 2) + best;
}

Rat initial_m_bound(int n, long long r, long long s) {
    if (n < 1 || r < 1 || s < 1) throw ConfigError("initial_m_bound: need n, r, s >= 1");
    return rat_max(Rat(0), Rat(static_cast<long long>(n) * s) - Rat(r, 2));
}

long long theta_plus(const std::function<long long(long long)>& prev, int n, long long r,
                     long long s_max) {
    if (n < 2) throw ConfigError("theta_plus: defined for n >= 2");
    long long best = 0;  // s = 1 already achieves >= 0 for r >= 1
    for (long long s = 1; s <= s_max; ++s) {
        long long v = std::min({static_cast<long long>(n - 1) * s,
                                ceil_div(r, 2) - s + prev(2 * s), r - s});
        best = std::max(best, v);
    }
    return best;
}

std::vector<std::vector<long long>> theta_iter_table(int n, long long r_max, int i_max,
                                                     long long width) {
    if (n < 2) throw ConfigError("theta iteration: defined for n >= 2");
    if (r_max < 1 || i_max < 0) throw ConfigError("theta iteration: bad table shape");
    if (width < 2 * r_max) width = 2 * r_max + 8;
    std::vector<std::vector<long long>> table(static_cast<std::size_t>(i_max) + 1,
                                              std::vector<long long>(static_cast<std::size_t>(width) + 1, 0));
    // Entries above width/2 use a truncated horizon; the doubled-window test
    // pins down that queried entries (<= r_max <= width/2) are unaffected.
    for (int i = 1; i <= i_max; ++i) {
        const auto& prev = table[static_cast<std::size_t>(i - 1)];
        auto& cur = table[static_cast<std::size_t>(i)];
        for (long long rr = 1; rr <= width; ++rr) {
            long long horizon = std::min(rr, width / 2);
            long long best = 0;
            for (long long s = 1; s <= horizon; ++s) {
                long long v = std::min({static_cast<long long>(n - 1) * s,
                                        ceil_div(rr, 2) - s + prev[static_cast<std::size_t>(2 * s)],
                                        rr - s});
                best = std::max(best, v);
            }
            cur[static_cast<std::size_t>(rr)] = best;
        }
    }
    for (auto& row : table) row.resize(static_cast<std::size_t>(r_max) + 1);
    return table;
}

long long theta_iter(int n, long long r, int i) {
    if (n < 2) throw ConfigError("theta_iter: defined for n >= 2");
    if (r < 1 || i < 0) throw ConfigError("theta_iter: need r >= 1 and i >= 0");
    auto table = theta_iter_table(n, r, i);
    return table[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
}

BoundTable bootstrap_fixed_point(int n, long long r) {
    if (n < 2) throw ConfigError("bootstrap: defined for n >= 2");
    if (r < 1) throw ConfigError("bootstrap: r must be >= 1");
    const long long s_max = default_s_max(n, r);

    // Seed: the Weil-bound moment estimate, as a universal function of the
    // shape parameter. It yields c(rho, j) >= max_s (js - floor(m0(rho, s))).
    auto c_seed = [&](long long rho, int j) {
        long long best = 0;
        long long horizon = default_s_max(n, rho);
        for (long long s = 1; s <= horizon; ++s)
            best = std::max(best, j * s - initial_m_bound(n, rho, s).floor());
        return best;
    };

    // Pass one, inequality (3) with the seed bounds for the companion shape
    // (n, 2s), then inequality (1). This pins c(r, n) = ceil(nr/2).
    std::vector<Rat> m1;
    for (long long s = 1; s <= s_max; ++s) {
        std::vector<long long> cprime(static_cast<std::size_t>(n) + 1, 0);
        for (int j = 0; j <= n; ++j) cprime[static_cast<std::size_t>(j)] = c_seed(2 * s, j);
        m1.push_back(m_upper_from_cprime(cprime, n, r, s));
    }
    long long c_top = c_lower_from_m(m1, n);
    if (c_top != ceil_div(static_cast<long long>(n) * r, 2))
        throw std::logic_error("bootstrap: c(r, n) did not reach ceil(nr/2)");

    // Iterate the improvement functional to its limit for c(r, n-1).
    int iters = static_cast<int>(std::max<long long>(r, 2));
    long long limit = theta_iter(n, r, iters);
    if (limit != (r - 1) / 2)
        throw std::logic_error("bootstrap: iteration did not reach floor((r-1)/2)");

    // Closing pass: with the limit bound for j = n-1 and ceil(n rho / 2) for
    // j = n, the moment bound becomes max{0, (n-1)s - r/2 + 1, ns - r} and
    // inequality (1) turns into the displayed max-min.
    std::vector<Rat> m2;
    for (long long s = 1; s <= s_max; ++s)
        m2.push_back(rat_max(rat_max(Rat(0), Rat(static_cast<long long>(n - 1) * s) - Rat(r, 2) + Rat(1)),
                             Rat(static_cast<long long>(n) * s - r)));

    BoundTable out{n, r, std::vector<long long>(static_cast<std::size_t>(n) + 1, 0), m2, s_max};
    for (int j = 0; j <= n; ++j) {
        long long via_m = c_lower_from_m(m2, j);
        long long via_minmax = 0;
        for (long long s = 1; s <= s_max; ++s) {
            long long v = std::min({static_cast<long long>(j) * s,
                                    (j - n + 1) * s + ceil_div(r, 2) - 1,
                                    (j - n) * s + r});
            via_minmax = std::max(via_minmax, v);
        }
        if (via_m != via_minmax)
            throw std::logic_error("bootstrap: the two closing-pass routes disagree");
        out.c[static_cast<std::size_t>(j)] = (j == n) ? std::max(via_m, c_top) : via_m;
    }

    for (int j = 0; j <= n; ++j)
        if (out.c[static_cast<std::size_t>(j)] != theta(n, r, j))
            throw std::logic_error("bootstrap: fixed point differs from the closed form at j = " +
                                   std::to_string(j));
    return out;
}

bool no_improvement_check(int n, long long r) {
    if (n < 2) throw ConfigError("no_improvement_check: defined for n >= 2");
    const long long s_max = default_s_max(n, r);

    // Improved inputs: c(rho, j) >= ceil(rho/2) - 1 for 0 < j < n and
    // c(rho, n) = ceil(n rho / 2), pushed through (3) then (1). The moment
    // bound becomes max{0, (n-1)s - r/2 + 1, ns - nr/2}.
    std::vector<Rat> m3;
    for (long long s = 1; s <= s_max; ++s) {
        std::vector<long long> cprime(static_cast<std::size_t>(n) + 1, 0);
        for (int j = 1; j < n; ++j) cprime[static_cast<std::size_t>(j)] = ceil_div(2 * s, 2) - 1;
        cprime[static_cast<std::size_t>(n)] = ceil_div(static_cast<long long>(n) * 2 * s, 2);
        m3.push_back(m_upper_from_cprime(cprime, n, r, s));
        Rat expect = rat_max(rat_max(Rat(0), Rat(static_cast<long long>(n - 1) * s) - Rat(r, 2) + Rat(1)),
                             Rat(static_cast<long long>(n) * s) - Rat(static_cast<long long>(n) * r, 2));
        if (!(m3.back() == expect)) return false;
    }

    for (int j = 1; j < n; ++j)
        if (c_lower_from_m(m3, j) > theta(n, r, j)) return false;
    return c_lower_from_m(m3, static_cast<long long>(n)) ==
           ceil_div(static_cast<long long>(n) * r, 2);
}

}  // namespace charsum
