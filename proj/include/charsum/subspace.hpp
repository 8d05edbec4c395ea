#pragma once

#include <vector>

namespace charsum {

/// Subspace of F_p^dim held as a reduced-row-echelon basis, which makes the
/// representation canonical: equal subspaces compare equal.
class Subspace {
public:
    Subspace(int p, int dim);  // zero subspace
    static Subspace from_vectors(int p, int dim, const std::vector<std::vector<int>>& gens);
    static Subspace full(int p, int dim);

    int p() const { return p_; }
    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    int codim() const { return dim_ - rank(); }
    const std::vector<std::vector<int>>& basis() const { return rows_; }

    bool contains(const std::vector<int>& v) const;
    bool contains(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    Subspace perp() const;  // orthogonal complement under the standard dot product
    /// Span of the standard basis vectors at non-pivot positions; a
    /// deterministic complement of this subspace in the ambient space.
    Subspace standard_complement() const;
    bool operator==(const Subspace& o) const {
        return p_ == o.p_ && dim_ == o.dim_ && rows_ == o.rows_;
    }

private:
    int p_, dim_;
    std::vector<std::vector<int>> rows_;  // RREF, no zero rows
    std::vector<int> pivots_;
    void reduce(std::vector<std::vector<int>> gens);
};

/// Enlarges each V_j to W_j so that V_j lies in W_j, the prefix sums
/// (W_1 cap .. cap W_i) + W_{i+1} fill the space, and the total intersection
/// is unchanged. Complements are chosen deterministically.
std::vector<Subspace> extend_transverse(const std::vector<Subspace>& V);

/// Basis E of the ambient space with pairwise disjoint index sets E_j such
/// that V_j lies in span(E minus E_j) and the intersection of the V_j is
/// span(E minus the union of the E_j).
struct TransverseBasis {
    std::vector<std::vector<int>> basis;  // rows of E
    std::vector<std::vector<int>> parts;  // E_j as index lists into basis
};
TransverseBasis transverse_basis(const std::vector<Subspace>& V);

/// Checks the transverse-basis postconditions for a given input family.
bool transverse_basis_valid(const std::vector<Subspace>& V, const TransverseBasis& tb);

/// Four equivalent mutual-transversality conditions, each computed by its own
/// route; they must agree on every input.
struct TransversalityReport {
    bool prefix_sums;       // (W_1 cap .. cap W_i) + W_{i+1} = V for each prefix
    bool rank_condition;    // the assembled quotient map V -> sum V/W_j has full rank
    bool leave_one_out;     // (cap_{j != i} W_j) + W_i = V for each i
    bool codim_additivity;  // codim of the intersection = sum of codims
    bool all() const { return prefix_sums && rank_condition && leave_one_out && codim_additivity; }
    bool agree() const {
        return prefix_sums == rank_condition && rank_condition == leave_one_out &&
               leave_one_out == codim_additivity;
    }
};
TransversalityReport check_transversality(const std::vector<Subspace>& W);

}  // namespace charsum
