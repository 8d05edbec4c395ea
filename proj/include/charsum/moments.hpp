#pragma once

#include "charsum/sums.hpp"

namespace charsum {

/// Both sides of the transformation identity for an arbitrary tuple of Galois
/// automorphisms sigma (units mod D, one per slot). The moment specializes
/// sigma to s identity slots followed by s conjugation slots.
///
/// lhs: sum over offset tuples x in (F_{q^e}^n)^r of prod_j sigma_j(S(x)).
/// rhs: sum over slot tuples m in (F_{q^e}^n)^|sigma| of prod_i T_i(m; sigma).
CycloInt transform_lhs(const SumFamily& fam, const std::vector<unsigned>& sigma, int ext_degree,
                       const Budget& budget = {});
CycloInt transform_rhs(const SumFamily& fam, const std::vector<unsigned>& sigma, int ext_degree,
                       const Budget& budget = {});

/// 2s-th moment, directly: sum over offset tuples of S^s conj(S)^s.
CycloInt moment_direct(const SumFamily& fam, int s, int ext_degree, const Budget& budget = {});

/// 2s-th moment through the transformation: sum over 2s-tuples of prod_i T_i.
CycloInt moment_via_transform(const SumFamily& fam, int s, int ext_degree,
                              const Budget& budget = {});

struct IdentityReport {
    bool equal;
    CycloInt lhs, rhs;
};

/// Runs both routes and compares exactly. A mismatch would falsify the
/// implementation, not the identity.
IdentityReport verify_identity(const SumFamily& fam, int s, int ext_degree,
                               const Budget& budget = {});

}  // namespace charsum
