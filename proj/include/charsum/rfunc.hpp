#pragma once

#include "charsum/mpoly.hpp"

#include <utility>
#include <vector>

namespace charsum {

inline constexpr int kDefaultDegreeCap = 64;

/// Outcome of evaluating a rational function at a point. A vanishing factor
/// in either the numerator or denominator is one and the same marker, since
/// the character convention maps both to the value 0.
struct EvalResult {
    bool zero_or_pole;
    int value;  // nonzero field element when !zero_or_pole

    static EvalResult pole() { return {true, 0}; }
    static EvalResult of(int v) { return {false, v}; }
};

/// Rational function in factored form: constant * prod f_j^{b_j}. Factors are
/// monic under the lex term order, pairwise distinct, sorted, with nonzero
/// multiplicities; the factored form is therefore canonical and comparable by
/// operator==. Immutable after construction.
class FactoredRational {
public:
    FactoredRational(FieldPtr ctx, int n, int constant,
                     std::vector<std::pair<MPoly, int>> factors,
                     bool absolutely_irreducible = false,
                     int degree_cap = kDefaultDegreeCap);

    /// Canonicalizes a dense numerator/denominator pair. Univariate only:
    /// both sides are factored into monic irreducibles over the base field,
    /// so multiplicity bookkeeping downstream is sound.
    static FactoredRational from_dense(FieldPtr ctx, const MPoly& numer, const MPoly& denom,
                                       const Budget& budget = {}, int degree_cap = kDefaultDegreeCap);

    const FieldCtx& ctx() const { return *ctx_; }
    FieldPtr ctx_ptr() const { return ctx_; }
    int vars() const { return n_; }
    int constant() const { return c_; }
    const std::vector<std::pair<MPoly, int>>& factors() const { return factors_; }
    bool absolutely_irreducible() const { return abs_irred_; }
    int degree_cap() const { return cap_; }
    /// max(sum of positive-part degrees, sum of negative-part degrees)
    int degree() const;
    bool all_factors_linear() const;

    EvalResult evaluate(const std::vector<int>& x) const;
    FactoredRational translate(const std::vector<int>& m) const;
    FactoredRational lift(const Embedding& emb) const;

    bool operator==(const FactoredRational& o) const {
        return c_ == o.c_ && factors_ == o.factors_;
    }
    bool operator!=(const FactoredRational& o) const { return !(*this == o); }

private:
    FieldPtr ctx_;
    int n_;
    int c_;
    std::vector<std::pair<MPoly, int>> factors_;
    bool abs_irred_;
    int cap_;
};

/// prod over (m, a) of F(x + m)^a, with associate factors merged. Zero
/// exponents drop out; F/F collapses to the constant 1.
FactoredRational product_of_translates(const FactoredRational& F,
                                       const std::vector<std::pair<std::vector<int>, int>>& offsets);

/// Every stored multiplicity lies strictly between -d and d. Expects the
/// associate-merged canonical form that the constructor maintains.
bool is_dth_power_free(const FactoredRational& F, int d);

/// All multiplicities of absolutely irreducible factors are divisible by d.
/// For n = 1 this is established by splitting; for n >= 2 the
/// absolutely_irreducible flag must have been asserted by the caller.
bool is_perfect_dth_power(const FactoredRational& F, int d, const Budget& budget = {});

/// Full splitting of a univariate polynomial over the smallest extension
/// containing all roots, found by exhaustive search with repeated division.
struct SplitResult {
    int ext_degree;
    FieldPtr ext;
    int leading;  // leading coefficient, in the extension's encoding
    std::vector<std::pair<int, int>> roots;  // (root, multiplicity), sorted by root
};
SplitResult univariate_split(FieldPtr ctx, const MPoly& f, const Budget& budget = {});

/// Monic irreducible factorization over the base field, from Frobenius orbits
/// of the roots. Returns the leading constant and the factor list.
std::pair<int, std::vector<std::pair<MPoly, int>>> factor_univariate(FieldPtr ctx, const MPoly& f,
                                                                     const Budget& budget = {});

/// Re-expresses a univariate factored rational with irreducible factors.
FactoredRational canonical_univariate(const FactoredRational& F, const Budget& budget = {});

/// All m in F_{q^e}^n with F(x + m) = F(x) as rational functions (equal
/// canonical factored forms). Always contains 0; a subgroup under addition.
std::vector<std::vector<int>> stabilizer(const FactoredRational& F, int ext_degree,
                                         const Budget& budget = {});

/// Odometer over F_q^n points in row-major order; returns false after the
/// last point. Shared by every exhaustive enumeration so results are
/// deterministic under any partitioning.
inline bool next_point(std::vector<int>& x, int q) {
    for (std::size_t i = x.size(); i-- > 0;) {
        if (++x[i] < q) return true;
        x[i] = 0;
    }
    return false;
}

}  // namespace charsum
