#include "charsum/subspace.hpp"

#include "charsum/budget.hpp"

#include <algorithm>
#include <stdexcept>

namespace charsum {

namespace {

int modinv(int a, int p) {
    int r = 1, b = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// In-place RREF; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<int>>& m, int p) {
    std::vector<int> pivots;
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][col] % p == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[rank]);
        int inv = modinv(m[rank][col], p);
        for (auto& x : m[rank]) x = x * inv % p;
        for (std::size_t row = 0; row < m.size(); ++row) {
            if (row == rank || m[row][col] == 0) continue;
            int f = m[row][col];
            for (std::size_t c = 0; c < cols; ++c)
                m[row][c] = ((m[row][c] - f * m[rank][c]) % p + p) % p;
        }
        pivots.push_back(static_cast<int>(col));
        ++rank;
    }
    m.resize(rank);
    return pivots;
}

}  // namespace

Subspace::Subspace(int p, int dim) : p_(p), dim_(dim) {
    if (p < 2 || dim < 0) throw ConfigError("subspace: need prime p >= 2 and dim >= 0");
}

void Subspace::reduce(std::vector<std::vector<int>> gens) {
    for (auto& g : gens) {
        if (static_cast<int>(g.size()) != dim_) throw ConfigError("subspace: vector has wrong dimension");
        for (auto& x : g) x = ((x % p_) + p_) % p_;
    }
    pivots_ = rref(gens, p_);
    rows_ = std::move(gens);
}

Subspace Subspace::from_vectors(int p, int dim, const std::vector<std::vector<int>>& gens) {
    Subspace s(p, dim);
    s.reduce(gens);
    return s;
}

Subspace Subspace::full(int p, int dim) {
    std::vector<std::vector<int>> id(static_cast<std::size_t>(dim),
                                     std::vector<int>(static_cast<std::size_t>(dim), 0));
    for (int i = 0; i < dim; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return from_vectors(p, dim, id);
}

bool Subspace::contains(const std::vector<int>& v) const {
    std::vector<int> w(v);
    for (auto& x : w) x = ((x % p_) + p_) % p_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        int f = w[static_cast<std::size_t>(pivots_[r])];
        if (f == 0) continue;
        for (int c = 0; c < dim_; ++c)
            w[static_cast<std::size_t>(c)] =
                ((w[static_cast<std::size_t>(c)] - f * rows_[r][static_cast<std::size_t>(c)]) % p_ + p_) % p_;
    }
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

bool Subspace::contains(const Subspace& o) const {
    return std::all_of(o.rows_.begin(), o.rows_.end(),
                       [&](const std::vector<int>& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& o) const {
    if (p_ != o.p_ || dim_ != o.dim_) throw ConfigError("subspace: mismatched ambient spaces");
    std::vector<std::vector<int>> gens = rows_;
    gens.insert(gens.end(), o.rows_.begin(), o.rows_.end());
    return from_vectors(p_, dim_, gens);
}

Subspace Subspace::perp() const {
    // Solutions of B x = 0: free coordinates are the non-pivot columns.
    std::vector<bool> is_pivot(static_cast<std::size_t>(dim_), false);
    for (int c : pivots_) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<int>> gens;
    for (int free = 0; free < dim_; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<int> v(static_cast<std::size_t>(dim_), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r)
            v[static_cast<std::size_t>(pivots_[r])] =
                (p_ - rows_[r][static_cast<std::size_t>(free)] % p_) % p_;
        gens.push_back(std::move(v));
    }
    return from_vectors(p_, dim_, gens);
}

Subspace Subspace::intersect(const Subspace& o) const {
    return perp().sum(o.perp()).perp();
}

Subspace Subspace::standard_complement() const {
    std::vector<bool> is_pivot(static_cast<std::size_t>(dim_), false);
    for (int c : pivots_) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < dim_; ++i) {
        if (is_pivot[static_cast<std::size_t>(i)]) continue;
        std::vector<int> v(static_cast<std::size_t>(dim_), 0);
        v[static_cast<std::size_t>(i)] = 1;
        gens.push_back(std::move(v));
    }
    return from_vectors(p_, dim_, gens);
}

std::vector<Subspace> extend_transverse(const std::vector<Subspace>& V) {
    std::vector<Subspace> W;
    if (V.empty()) return W;
    const int p = V[0].p(), dim = V[0].dim();
    Subspace meet = Subspace::full(p, dim);
    for (const Subspace& v : V) {
        if (v.p() != p || v.dim() != dim) throw ConfigError("extend_transverse: mismatched spaces");
        // U is a deterministic complement of (cap W_j) + V_next.
        Subspace reach = meet.sum(v);
        Subspace u = reach.standard_complement();
        Subspace w = v.sum(u);
        W.push_back(w);
        meet = meet.intersect(w);
    }
    return W;
}

TransversalityReport check_transversality(const std::vector<Subspace>& W) {
    TransversalityReport rep{true, true, true, true};
    if (W.empty()) return rep;
    const int p = W[0].p(), dim = W[0].dim();
    const Subspace full = Subspace::full(p, dim);

    Subspace meet = full;
    for (std::size_t i = 0; i + 1 < W.size(); ++i) {
        meet = meet.intersect(W[i]);
        if (!(meet.sum(W[i + 1]) == full)) rep.prefix_sums = false;
    }

    Subspace total = full;
    int codim_sum = 0;
    for (const Subspace& w : W) {
        total = total.intersect(w);
        codim_sum += w.codim();
    }
    rep.codim_additivity = (total.codim() == codim_sum);

    // Assemble the map v -> (v mod W_j)_j from bases of the annihilators and
    // test that its rank is the sum of the codimensions.
    std::vector<std::vector<int>> stacked;
    for (const Subspace& w : W) {
        Subspace ann = w.perp();
        for (const auto& row : ann.basis()) stacked.push_back(row);
    }
    std::vector<std::vector<int>> copy = stacked;
    int rank = static_cast<int>(rref(copy, p).size());
    rep.rank_condition = (rank == codim_sum) && (dim - total.rank() == codim_sum);

    for (std::size_t i = 0; i < W.size(); ++i) {
        Subspace rest = full;
        for (std::size_t j = 0; j < W.size(); ++j)
            if (j != i) rest = rest.intersect(W[j]);
        if (!(rest.sum(W[i]) == full)) rep.leave_one_out = false;
    }
    return rep;
}

TransverseBasis transverse_basis(const std::vector<Subspace>& V) {
    TransverseBasis out;
    if (V.empty()) return out;
    const int p = V[0].p(), dim = V[0].dim();
    const Subspace full = Subspace::full(p, dim);
    std::vector<Subspace> W = extend_transverse(V);

    Subspace meet = full;
    for (const Subspace& w : W) meet = meet.intersect(w);

    // Start E with a basis of the total intersection; every E_j then draws
    // from a complement of it inside the intersection of the other W's.
    for (const auto& row : meet.basis()) out.basis.push_back(row);
    std::vector<std::vector<int>> working = out.basis;

    out.parts.resize(W.size());
    for (std::size_t j = 0; j < W.size(); ++j) {
        Subspace rest = full;
        for (std::size_t i = 0; i < W.size(); ++i)
            if (i != j) rest = rest.intersect(W[i]);
        // Greedily extend the meet basis to a basis of rest; the new vectors
        // form E_j.
        for (const auto& cand : rest.basis()) {
            std::vector<std::vector<int>> probe = working;
            probe.push_back(cand);
            std::vector<std::vector<int>> copy = probe;
            if (rref(copy, p).size() == probe.size()) {
                out.parts[j].push_back(static_cast<int>(out.basis.size()));
                out.basis.push_back(cand);
                working = probe;
            }
        }
    }
    // Top up to a full basis of the ambient space (vectors outside every E_j).
    for (int i = 0; i < dim && static_cast<int>(out.basis.size()) < dim; ++i) {
        std::vector<int> e(static_cast<std::size_t>(dim), 0);
        e[static_cast<std::size_t>(i)] = 1;
        std::vector<std::vector<int>> probe = working;
        probe.push_back(e);
        std::vector<std::vector<int>> copy = probe;
        if (rref(copy, p).size() == probe.size()) {
            out.basis.push_back(e);
            working = probe;
        }
    }
    if (static_cast<int>(out.basis.size()) != dim)
        throw std::logic_error("transverse_basis: failed to assemble a full basis");
    return out;
}

bool transverse_basis_valid(const std::vector<Subspace>& V, const TransverseBasis& tb) {
    if (V.empty()) return tb.basis.empty() && tb.parts.empty();
    const int p = V[0].p(), dim = V[0].dim();
    if (static_cast<int>(tb.basis.size()) != dim) return false;
    {
        std::vector<std::vector<int>> copy = tb.basis;
        if (static_cast<int>(rref(copy, p).size()) != dim) return false;
    }
    if (tb.parts.size() != V.size()) return false;
    std::vector<int> seen(tb.basis.size(), 0);
    for (const auto& part : tb.parts)
        for (int idx : part) {
            if (idx < 0 || idx >= static_cast<int>(tb.basis.size())) return false;
            if (seen[static_cast<std::size_t>(idx)]++) return false;  // parts must be disjoint
        }

    Subspace meet = Subspace::full(p, dim);
    for (const Subspace& v : V) meet = meet.intersect(v);

    std::vector<bool> in_union(tb.basis.size(), false);
    for (const auto& part : tb.parts)
        for (int idx : part) in_union[static_cast<std::size_t>(idx)] = true;
    std::vector<std::vector<int>> residual;
    for (std::size_t i = 0; i < tb.basis.size(); ++i)
        if (!in_union[i]) residual.push_back(tb.basis[i]);
    if (!(Subspace::from_vectors(p, dim, residual) == meet)) return false;

    for (std::size_t j = 0; j < V.size(); ++j) {
        std::vector<std::vector<int>> rest;
        for (std::size_t i = 0; i < tb.basis.size(); ++i)
            if (std::find(tb.parts[j].begin(), tb.parts[j].end(), static_cast<int>(i)) ==
                tb.parts[j].end())
                rest.push_back(tb.basis[i]);
        if (!Subspace::from_vectors(p, dim, rest).contains(V[j])) return false;
    }
    return true;
}

}  // namespace charsum
