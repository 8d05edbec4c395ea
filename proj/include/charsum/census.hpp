#pragma once

#include "charsum/sums.hpp"

#include <optional>

namespace charsum {

/// Match graph on the r copies of F in an offset tuple: an edge joins copies
/// whose translated factors coincide up to a scalar.
struct FactorGraph {
    int r = 0;
    std::vector<std::pair<int, int>> edges;  // i < i', 0-based

    bool has_isolated_vertex() const;
    int component_count() const;
};

struct CensusReport {
    long long q_ext = 0;  // #k = q^e
    int e = 1;
    int n = 1;
    int s = 0;            // half-count for the +1/-1 preset; 0 when exponents are custom
    int d = 2;
    std::vector<int> exponents;  // the a_i sequence actually used
    std::uint64_t tuples_scanned = 0;
    std::uint64_t perfect_count = 0;
    double ratio = 0.0;        // perfect_count / q^{e n s} (preset only)
    double max_abs_t = -1.0;   // max |T| over non-perfect tuples; -1 when not computed
    bool irreducibility_asserted = false;
    double stabilizer_size = 0.0;         // filled by the bound check
    double c_log2 = 0.0;                  // log2 of the proof constant
    double bound = 0.0;                   // clamped comparison bound
    bool bound_pass = true;
};

/// Counts offset tuples (m^(1), ..., m^(2s)) over F_{q^e}^n for which
/// prod_{j<=s} F(x+m^(j)) prod_{j>s} F(x+m^(j))^{-1} is a perfect d-th power
/// over the closure. When a character of order d exists on the base field and
/// the extra pass fits the budget, also reports max |T| over the non-perfect
/// tuples.
CensusReport perfect_power_census(const FactoredRational& F, int d, int s, int ext_degree,
                                  const Budget& budget = {}, bool with_t = true);

/// The match graph G_{m,j} for factor index j of F at the given tuple.
FactorGraph factor_graph(const FactoredRational& F, int d,
                         const std::vector<std::vector<int>>& tuple,
                         const std::vector<int>& exponents, int j, const Budget& budget = {});

/// Every tuple counted as a perfect power has, for every factor index j, a
/// match graph with no isolated vertex.
bool census_structure_check(const FactoredRational& F, int d, int s, int ext_degree,
                            const Budget& budget = {});

/// Census with a general exponent sequence (each a_i coprime to d), compared
/// against C (#k)^{n floor(r/2)} (#T)^{ceil(r/2)} with the proof's explicit
/// constant, clamped to the size of the tuple space where it is vacuous.
CensusReport census_bound_check(const FactoredRational& F, int d, const std::vector<int>& exponents,
                                int ext_degree, const Budget& budget = {});

struct WeilProbe {
    int e;
    long long q_ext;
    CycloInt sum;
    double abs;
    double ratio;  // abs / q^{e (n - 1/2)}
};

struct WeilReport {
    std::vector<WeilProbe> probes;
    double max_ratio = 0.0;
    double c_user = 0.0;
    bool pass = true;
};

/// |sum over x of chi(Norm(F(x)))| against C_user (#k)^{n - 1/2} at each probe
/// degree. Requires that F is not a perfect d-th power for d = ord(chi);
/// the bound does not apply otherwise.
WeilReport weil_check(const FactoredRational& F, const Character& chi,
                      const std::vector<int>& ext_degrees, double c_user,
                      const Budget& budget = {});

}  // namespace charsum
