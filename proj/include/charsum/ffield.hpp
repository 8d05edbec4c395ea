#pragma once

#include "charsum/budget.hpp"
#include "charsum/cyclo.hpp"

#include <memory>
#include <vector>

namespace charsum {

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Arithmetic context for F_{p^k}, q = p^k within the table budget.
///
/// Elements are integers 0..q-1 encoding polynomials over F_p in base p
/// (digit i is the coefficient of t^i), reduced mod a fixed monic irreducible
/// degree-k polynomial. Multiplication goes through log/antilog tables for the
/// fixed generator; addition is digit-wise mod p. Immutable after
/// construction and safe to share across workers.
class FieldCtx {
public:
    int p;
    int k;
    int q;          // p^k
    int generator;  // smallest element (integer order) of multiplicative order q-1
    std::vector<int> modulus;  // monic degree-k defining polynomial (size k+1); {0,1} style even for k=1

    int add(int a, int b) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const;
    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[(log_[a] + log_[b]) % (q - 1)];
    }
    int inv(int a) const;
    /// a^e; negative e uses the inverse, a must be nonzero then. 0^0 = 1.
    int pow(int a, long long e) const;
    int log(int a) const;           // discrete log base the generator, a != 0
    int exp(long long t) const {    // antilog, exponent taken mod q-1
        long long m = ((t % (q - 1)) + (q - 1)) % (q - 1);
        return antilog_[static_cast<std::size_t>(m)];
    }
    int frobenius(int a) const { return pow(a, p); }
    long long order(int a) const;   // multiplicative order, a != 0

private:
    friend FieldPtr make_field(int, int, const Budget&);
    std::vector<int> log_;      // size q, log_[0] = -1
    std::vector<int> antilog_;  // size q-1
};

/// Builds F_{p^k}. The defining polynomial is the smallest monic irreducible
/// of degree k in the integer encoding; the generator is the smallest element
/// of full order. Both choices make runs reproducible.
FieldPtr make_field(int p, int k, const Budget& budget = {});

/// Norm down to the subfield F_{p^m} (m | k): a^((q-1)/(p^m-1)) for a != 0,
/// 0 for a = 0. The result is expressed in ctx's own encoding.
int norm_to_subfield(const FieldCtx& ctx, int a, int m);

/// Deterministic embedding of a base field into an extension of the same
/// characteristic: the base generator maps to the smallest root of its
/// minimal polynomial over F_p.
class Embedding {
public:
    Embedding(FieldPtr base, FieldPtr ext);
    int operator()(int base_elt) const { return fwd_[static_cast<std::size_t>(base_elt)]; }
    /// Base-field discrete log of an element of the embedded subfield, -1 outside.
    int sub_log(int ext_elt) const { return sublog_[static_cast<std::size_t>(ext_elt)]; }
    /// Pull a subfield element back to the base encoding; throws if outside.
    int pull_back(int ext_elt) const;
    const FieldCtx& base() const { return *base_; }
    const FieldCtx& ext() const { return *ext_; }
    FieldPtr base_ptr() const { return base_; }
    FieldPtr ext_ptr() const { return ext_; }

private:
    FieldPtr base_, ext_;
    std::vector<int> fwd_;     // base elt -> ext elt
    std::vector<int> sublog_;  // ext elt -> base dlog of that subfield element, -1 outside
};

/// Multiplicative character of order d | q-1 valued in Z[zeta_D]:
/// chi(g^t) = zeta_D^{(D/d) e t}, chi(0) = 0.
class Character {
public:
    Character(FieldPtr ctx, int d, long long e, unsigned D);

    const FieldCtx& ctx() const { return *ctx_; }
    FieldPtr ctx_ptr() const { return ctx_; }
    int order_parameter() const { return d_; }       // the d in chi = chi_d^e
    long long exponent() const { return e_; }
    unsigned ambient() const { return D_; }
    /// Exact multiplicative order d / gcd(d, e).
    int order() const;
    bool trivial() const { return order() == 1; }

    /// Exponent t with chi(a) = zeta_D^t, or -1 for a = 0.
    long long eval_exponent(int a) const {
        if (a == 0) return -1;
        return (step_ * ctx_->log(a)) % D_;
    }
    CycloInt operator()(int a) const {
        long long t = eval_exponent(a);
        return t < 0 ? CycloInt(D_) : CycloInt::root_power(D_, t);
    }

private:
    FieldPtr ctx_;
    int d_;
    long long e_;
    unsigned D_;
    long long step_;  // (D/d) * e mod D
};

Character make_character(FieldPtr ctx, int d, long long e, unsigned D);

/// chi composed with the norm from an extension, tabulated once: entry a is
/// the zeta_D-exponent of chi(Norm(a)), or -1 for the zero value. This makes
/// character evaluation in enumeration loops a table lookup.
class CharTable {
public:
    CharTable(const Character& chi, const Embedding& emb);
    long long exponent(int ext_elt) const { return tab_[static_cast<std::size_t>(ext_elt)]; }
    unsigned ambient() const { return D_; }

private:
    unsigned D_;
    std::vector<long long> tab_;
};

}  // namespace charsum
