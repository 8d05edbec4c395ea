#include "charsum/cyclo.hpp"

#include "charsum/budget.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace charsum {

namespace {

using Poly = std::vector<long long>;

// Exact division in Z[x]; divisor must be monic and divide evenly.
Poly exact_div(Poly num, const Poly& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("cyclotomic: bad division");
    Poly quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        long long c = num[i];
        if (c == 0) continue;
        quot[i - dn] = c;
        for (std::size_t t = 0; t <= dn; ++t) num[i - dn + t] -= c * den[t];
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("cyclotomic: nonzero remainder");
    return quot;
}

Poly cyclotomic_impl(unsigned D, std::map<unsigned, Poly>& memo) {
    auto it = memo.find(D);
    if (it != memo.end()) return it->second;
    Poly poly(D + 1, 0);  // x^D - 1
    poly[0] = -1;
    poly[D] = 1;
    for (unsigned m = 1; m < D; ++m)
        if (D % m == 0) poly = exact_div(std::move(poly), cyclotomic_impl(m, memo));
    memo.emplace(D, poly);
    return poly;
}

std::map<unsigned, CycloRing>& ring_cache() {
    static std::map<unsigned, CycloRing> cache;
    return cache;
}
std::mutex ring_mutex;

void check_range(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("CycloInt coefficient overflow");
}

// Reduce an arbitrary-length coefficient vector mod Phi_D.
std::vector<long long> reduce(const CycloRing& ring, std::vector<__int128> v) {
    const unsigned deg = ring.deg();
    for (std::size_t i = v.size(); i-- > deg;) {
        __int128 c = v[i];
        if (c == 0) continue;
        v[i] = 0;
        for (unsigned t = 0; t < deg; ++t) v[i - deg + t] -= c * ring.phi[t];
    }
    std::vector<long long> out(deg, 0);
    for (unsigned i = 0; i < deg && i < v.size(); ++i) {
        check_range(v[i]);
        out[i] = static_cast<long long>(v[i]);
    }
    return out;
}

}  // namespace

std::vector<long long> cyclotomic_poly(unsigned D) {
    if (D == 0) throw ConfigError("cyclotomic order D must be positive");
    std::map<unsigned, Poly> memo;
    return cyclotomic_impl(D, memo);
}

const CycloRing& cyclo_ring(unsigned D) {
    std::lock_guard<std::mutex> lock(ring_mutex);
    auto& cache = ring_cache();
    auto it = cache.find(D);
    if (it == cache.end())
        it = cache.emplace(D, CycloRing{D, cyclotomic_poly(D)}).first;
    return it->second;
}

CycloInt::CycloInt(unsigned D) : ring_(&cyclo_ring(D)), coeffs_(ring_->deg(), 0) {}

CycloInt CycloInt::integer(unsigned D, long long v) {
    CycloInt z(D);
    z.coeffs_[0] = v;
    return z;
}

CycloInt CycloInt::root_power(unsigned D, long long t) {
    CycloInt z(D);
    long long tt = ((t % D) + D) % D;
    std::vector<__int128> v(D, 0);
    v[static_cast<std::size_t>(tt)] = 1;
    z.coeffs_ = reduce(*z.ring_, std::move(v));
    return z;
}

CycloInt CycloInt::from_power_counts(unsigned D, const std::vector<long long>& counts) {
    if (counts.size() != D) throw ConfigError("from_power_counts: counts length must equal D");
    CycloInt z(D);
    std::vector<__int128> v(counts.begin(), counts.end());
    z.coeffs_ = reduce(*z.ring_, std::move(v));
    return z;
}

bool CycloInt::is_zero() const {
    for (long long c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloInt::is_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

long long CycloInt::integer_value() const {
    if (!is_integer()) throw std::logic_error("CycloInt is not a rational integer");
    return coeffs_[0];
}

CycloInt CycloInt::operator+(const CycloInt& o) const {
    if (ring_ != o.ring_) throw ConfigError("CycloInt: mismatched cyclotomic orders");
    CycloInt z(*this);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        __int128 s = static_cast<__int128>(coeffs_[i]) + o.coeffs_[i];
        check_range(s);
        z.coeffs_[i] = static_cast<long long>(s);
    }
    return z;
}

CycloInt CycloInt::operator-(const CycloInt& o) const { return *this + (-o); }

CycloInt CycloInt::operator-() const {
    CycloInt z(*this);
    for (auto& c : z.coeffs_) c = -c;
    return z;
}

CycloInt CycloInt::operator*(const CycloInt& o) const {
    if (ring_ != o.ring_) throw ConfigError("CycloInt: mismatched cyclotomic orders");
    const std::size_t na = coeffs_.size(), nb = o.coeffs_.size();
    std::vector<__int128> v(na + nb - 1, 0);
    for (std::size_t i = 0; i < na; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < nb; ++j)
            v[i + j] += static_cast<__int128>(coeffs_[i]) * o.coeffs_[j];
    }
    CycloInt z(ring_->D);
    z.coeffs_ = reduce(*ring_, std::move(v));
    return z;
}

bool CycloInt::operator==(const CycloInt& o) const {
    return ring_->D == o.ring_->D && coeffs_ == o.coeffs_;
}

CycloInt CycloInt::galois(unsigned u) const {
    const unsigned D = ring_->D;
    if (std::gcd(u % D, D) != 1)
        throw ConfigError("galois: automorphism index " + std::to_string(u) +
                          " not coprime to D = " + std::to_string(D));
    std::vector<__int128> v(D, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[(i * (u % D)) % D] += coeffs_[i];
    CycloInt z(D);
    z.coeffs_ = reduce(*ring_, std::move(v));
    return z;
}

CycloInt CycloInt::conj() const {
    const unsigned D = ring_->D;
    return galois(D - 1 == 0 ? 1 : D - 1);  // D = 1: conjugation is trivial
}

CycloInt CycloInt::pow(unsigned e) const {
    CycloInt acc = CycloInt::integer(ring_->D, 1);
    CycloInt base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

std::complex<double> CycloInt::to_complex() const {
    const double tau = 2.0 * 3.14159265358979323846;
    std::complex<double> z(0.0, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        double angle = tau * static_cast<double>(i) / static_cast<double>(ring_->D);
        z += static_cast<double>(coeffs_[i]) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
}

double CycloInt::abs() const { return std::abs(to_complex()); }

}  // namespace charsum
