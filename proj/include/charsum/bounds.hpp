#pragma once

#include <functional>
#include <string>
#include <vector>

namespace charsum {

/// Exact rational with int64 numerator/denominator, enough for the bound
/// calculus where the only denominators are small powers of 2.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d);

    long long floor() const;
    long long ceil() const;
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rat& o) const;
    bool operator<=(const Rat& o) const { return *this < o || *this == o; }
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    std::string str() const;
};

Rat rat_max(const Rat& a, const Rat& b);

/// floor((r-1)/2) = (n-1)a + b with 0 <= b < n-1; defined for n >= 2.
struct ThetaParams {
    long long a;
    long long b;
};
ThetaParams theta_params(int n, long long r);

/// The codimension lower bound theta_j(n, r): 0 at j = 0, ceil(nr/2) at
/// j = n, ja + max(0, b + j - (n-1)) in between (n >= 2). For n = 1 the only
/// middle-free values are theta_0 = 0 and theta_1 = ceil(r/2).
long long theta(int n, long long r, int j);

/// Search horizon for every max-over-s in the calculus; provably contains
/// the optimizers, which sit at s <= n ceil(r/2).
long long default_s_max(int n, long long r);

/// c(r, j) >= max_s (j s - floor(m(s))), clamped at 0. m is indexed from
/// s = 1; the horizon is m.size().
long long c_lower_from_m(const std::vector<Rat>& m, long long j);

/// m(r, s) <= max_{0<=j<=n} (j s - c(j)); c is indexed from j = 0.
Rat m_upper_from_c(const std::vector<long long>& c, long long s);

/// m(r, s) <= ns - nr/2 + max_{0<=j<=n} (j r/2 - c'(j)), where c' holds
/// bounds for the companion shape (n, 2s).
Rat m_upper_from_cprime(const std::vector<long long>& cprime, int n, long long r, long long s);

/// The Weil-bound seed: 0 for s <= r/2n, ns - r/2 beyond.
Rat initial_m_bound(int n, long long r, long long s);

/// One application of the improvement functional:
/// theta+(r) = max_s min{(n-1)s, ceil(r/2) - s + prev(2s), r - s}.
long long theta_plus(const std::function<long long(long long)>& prev, int n, long long r,
                     long long s_max);

/// i-th iterate of the functional starting from the zero function.
long long theta_iter(int n, long long r, int i);

/// Table of iterates: result[i][rr] = theta^(i)(rr) for 0 <= rr <= r_max and
/// 0 <= i <= i_max (index 0 of each row unused). A window wider than
/// 2 * r_max may be requested to double-check horizon stability.
std::vector<std::vector<long long>> theta_iter_table(int n, long long r_max, int i_max,
                                                     long long width = 0);

/// The bound pair manipulated by the calculus.
struct BoundTable {
    int n;
    long long r;
    std::vector<long long> c;  // j = 0..n
    std::vector<Rat> m;        // s = 1..s_max
    long long s_max;
};

/// Full pipeline: Weil-bound seed, c(r, n) = ceil(nr/2), iteration to the
/// floor((r-1)/2) limit for c(r, n-1), and the closing max-min pass for all
/// j. Checks internally that the output matches the closed form theta.
BoundTable bootstrap_fixed_point(int n, long long r);

/// Feeding the improved bounds c(., j) >= ceil(./2) - 1 (0 < j < n) and
/// c(., n) = ceil(n./2) back through inequalities (3) then (1) gains nothing:
/// the middle values stay at theta_j and c(r, n) stays ceil(nr/2).
bool no_improvement_check(int n, long long r);

}  // namespace charsum
