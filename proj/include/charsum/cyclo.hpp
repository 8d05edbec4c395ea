#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace charsum {

/// Shared arithmetic data for Z[x]/(Phi_D): the D-th cyclotomic polynomial.
/// Instances are interned per D and never evicted, so raw pointers into the
/// cache stay valid for the lifetime of the process.
struct CycloRing {
    unsigned D;
    std::vector<long long> phi;  // monic, coefficients of Phi_D, low to high
    unsigned deg() const { return static_cast<unsigned>(phi.size() - 1); }
};

const CycloRing& cyclo_ring(unsigned D);

/// Phi_D as an integer polynomial, by exact division of x^D - 1 by Phi_m over
/// all proper divisors m | D.
std::vector<long long> cyclotomic_poly(unsigned D);

/// An element of Z[zeta_D], kept reduced on the power basis
/// 1, zeta, ..., zeta^(deg Phi_D - 1). Equality is coefficient equality.
class CycloInt {
public:
    CycloInt() : CycloInt(2u) {}
    explicit CycloInt(unsigned D);                       // zero
    static CycloInt integer(unsigned D, long long v);
    static CycloInt root_power(unsigned D, long long t);  // zeta_D^t
    /// sum over t of counts[t] * zeta_D^t; counts has length D.
    static CycloInt from_power_counts(unsigned D, const std::vector<long long>& counts);

    unsigned order() const { return ring_->D; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_integer() const;          // lies in Z
    long long integer_value() const;  // valid when is_integer()

    CycloInt operator+(const CycloInt& o) const;
    CycloInt operator-(const CycloInt& o) const;
    CycloInt operator*(const CycloInt& o) const;
    CycloInt operator-() const;
    CycloInt& operator+=(const CycloInt& o) { return *this = *this + o; }
    CycloInt& operator*=(const CycloInt& o) { return *this = *this * o; }
    bool operator==(const CycloInt& o) const;
    bool operator!=(const CycloInt& o) const { return !(*this == o); }

    CycloInt conj() const;             // zeta -> zeta^{-1}
    CycloInt galois(unsigned u) const; // zeta -> zeta^u, requires gcd(u, D) = 1
    CycloInt pow(unsigned e) const;

    std::complex<double> to_complex() const;
    double abs() const;

private:
    const CycloRing* ring_;
    std::vector<long long> coeffs_;  // size deg Phi_D
};

inline CycloInt cyclo_add(const CycloInt& a, const CycloInt& b) { return a + b; }
inline CycloInt cyclo_mul(const CycloInt& a, const CycloInt& b) { return a * b; }
inline CycloInt cyclo_conj(const CycloInt& z) { return z.conj(); }
inline double cyclo_abs(const CycloInt& z) { return z.abs(); }

}  // namespace charsum
