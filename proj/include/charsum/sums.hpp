#pragma once

#include "charsum/rfunc.hpp"

#include <optional>
#include <vector>

namespace charsum {

/// An exact character-sum value together with its complex-embedding magnitude.
struct SumValue {
    CycloInt value;
    double abs;

    static SumValue of(CycloInt v) {
        double a = v.abs();
        return {std::move(v), a};
    }
};

/// An offset family of character sums: r characters chi_i over the base field
/// paired with r rational functions F_i. Construction fixes the ambient
/// cyclotomic order D = lcm(2, d_1, ..., d_r), checks that each F_i is
/// d_i-th-power-free, and optionally probes that the translation stabilizer
/// of each F_i is trivial at the given extension degrees.
class SumFamily {
public:
    SumFamily(FieldPtr ctx, int n, int r,
              std::vector<std::pair<int, long long>> characters,  // (d_i, e_i)
              std::vector<FactoredRational> rationals,
              int degree_cap = kDefaultDegreeCap,
              const std::vector<int>& stabilizer_probes = {},
              const Budget& budget = {});

    const FieldCtx& ctx() const { return *ctx_; }
    FieldPtr ctx_ptr() const { return ctx_; }
    int n() const { return n_; }
    int r() const { return r_; }
    unsigned ambient() const { return D_; }
    const std::vector<Character>& characters() const { return chars_; }
    const std::vector<FactoredRational>& rationals() const { return rationals_; }
    int degree_cap() const { return cap_; }

private:
    FieldPtr ctx_;
    int n_, r_;
    unsigned D_;
    std::vector<Character> chars_;
    std::vector<FactoredRational> rationals_;
    int cap_;
};

/// Prepared evaluation state for one extension degree: the extension field,
/// the embedding, the lifted rationals, and tabulated chi_i o Norm values.
/// All evaluation is exact in Z[zeta_D]; enumeration is row-major.
class SumEvaluator {
public:
    SumEvaluator(const SumFamily& fam, int ext_degree, const Budget& budget = {});

    const SumFamily& family() const { return *fam_; }
    const FieldCtx& ext() const { return *ext_; }
    FieldPtr ext_ptr() const { return ext_; }
    int ext_degree() const { return e_; }
    std::uint64_t points() const;  // q^{e n}

    /// S(x^{(1)}, ..., x^{(r)}) = sum over m of prod_i chi_i(Norm(F_i(m + x^{(i)}))).
    CycloInt S(const std::vector<std::vector<int>>& offsets) const;

    /// T_i with s plain and s conjugated slots (offsets has length 2s).
    CycloInt T(int i, const std::vector<std::vector<int>>& offsets, int s) const;

    /// General twisted sum: each slot carries a Galois automorphism
    /// zeta_D -> zeta_D^{u_j} applied to its character value.
    CycloInt T_general(int i,
                       const std::vector<std::pair<std::vector<int>, unsigned>>& slots) const;

private:
    CycloInt accumulate(const std::vector<FactoredRational>& translated,
                        const std::vector<int>& char_index,
                        const std::vector<long long>& twist) const;

    const SumFamily* fam_;
    FieldPtr ext_;
    int e_;
    std::optional<Embedding> emb_;
    std::vector<CharTable> tables_;
    std::vector<FactoredRational> lifted_;
};

SumValue sum_S(const SumFamily& fam, int ext_degree, const std::vector<std::vector<int>>& offsets,
               const Budget& budget = {});
SumValue sum_T(const SumFamily& fam, int i, int ext_degree,
               const std::vector<std::vector<int>>& offsets, int s, const Budget& budget = {});
SumValue sum_general(const SumFamily& fam, int i, int ext_degree,
                     const std::vector<std::pair<std::vector<int>, unsigned>>& slots,
                     const Budget& budget = {});

}  // namespace charsum
