#pragma once

#include "charsum/ffield.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace charsum {

using Exponents = std::vector<int>;

/// Multivariate polynomial over a field context: map from exponent vector to
/// nonzero coefficient. The zero polynomial has an empty term map. Terms are
/// ordered lexicographically on the exponent vectors; "leading" means the
/// lex-largest term, which translation x -> x + m never disturbs.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(int n) : n_(n) {}
    static MPoly constant(int n, int c);
    static MPoly variable(int n, int i);  // x_i (0-based)

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max total degree; -1 for the zero polynomial
    const std::map<Exponents, int>& terms() const { return terms_; }
    int coeff(const Exponents& e) const;

    /// Accumulates c * x^e, dropping the term if the sum cancels.
    void add_term(const FieldCtx& F, Exponents e, int c);

    MPoly add(const FieldCtx& F, const MPoly& o) const;
    MPoly sub(const FieldCtx& F, const MPoly& o) const;
    MPoly mul(const FieldCtx& F, const MPoly& o) const;
    MPoly scale(const FieldCtx& F, int c) const;
    int evaluate(const FieldCtx& F, const std::vector<int>& x) const;
    MPoly translate(const FieldCtx& F, const std::vector<int>& m) const;
    MPoly map_coeffs(const Embedding& emb) const;  // lift to the extension

    std::pair<Exponents, int> leading() const;  // lex-largest term
    /// Divides by the leading coefficient; returns the removed constant.
    int make_monic(const FieldCtx& F);

    bool operator==(const MPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }
    bool operator<(const MPoly& o) const;  // arbitrary total order for canonical containers

private:
    int n_ = 0;
    std::map<Exponents, int> terms_;
};

/// The constant c with g = c * f, if one exists. f = g = 0 gives c = 1.
std::optional<int> assoc_scalar(const FieldCtx& F, const MPoly& f, const MPoly& g);

/// Quotient and remainder of a univariate polynomial divided by (x - root).
std::pair<MPoly, int> divmod_linear(const FieldCtx& F, const MPoly& f, int root);

}  // namespace charsum
