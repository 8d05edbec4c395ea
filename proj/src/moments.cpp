#include "charsum/moments.hpp"

#include <algorithm>
#include <map>

namespace charsum {

namespace {

// Budget guard shared by both routes: the predicted inner iteration count is
// q^{e n (max(r, |sigma|) + 1)}.
void guard(const SumFamily& fam, std::size_t slots, int ext_degree, const Budget& budget) {
    std::uint64_t qe = sat_pow(static_cast<std::uint64_t>(fam.ctx().q),
                               static_cast<unsigned>(ext_degree));
    unsigned width = static_cast<unsigned>(std::max<std::size_t>(static_cast<std::size_t>(fam.r()), slots) + 1);
    budget.require_iterations(
        sat_pow(qe, static_cast<unsigned>(fam.n()) * width), "moment");
}

bool next_tuple(std::vector<std::vector<int>>& tuple, int q) {
    for (std::size_t i = tuple.size(); i-- > 0;) {
        if (next_point(tuple[i], q)) return true;
    }
    // next_point resets its vector on overflow, so walking the carries is
    // exactly the row-major odometer over the concatenated digits
    return false;
}

}  // namespace

CycloInt transform_lhs(const SumFamily& fam, const std::vector<unsigned>& sigma, int ext_degree,
                       const Budget& budget) {
    guard(fam, sigma.size(), ext_degree, budget);
    SumEvaluator ev(fam, ext_degree, budget);
    const unsigned D = fam.ambient();
    for (unsigned u : sigma) (void)CycloInt::integer(D, 1).galois(u);  // validates coprimality

    std::map<unsigned, unsigned> twist_counts;
    for (unsigned u : sigma) ++twist_counts[u % D];

    CycloInt total(D);
    std::vector<std::vector<int>> x(static_cast<std::size_t>(fam.r()),
                                    std::vector<int>(static_cast<std::size_t>(fam.n()), 0));
    do {
        CycloInt s_val = ev.S(x);
        CycloInt prod = CycloInt::integer(D, 1);
        for (const auto& [u, count] : twist_counts)
            prod = prod * s_val.galois(u).pow(count);
        total = total + prod;
    } while (next_tuple(x, ev.ext().q));
    return total;
}

CycloInt transform_rhs(const SumFamily& fam, const std::vector<unsigned>& sigma, int ext_degree,
                       const Budget& budget) {
    guard(fam, sigma.size(), ext_degree, budget);
    SumEvaluator ev(fam, ext_degree, budget);
    const unsigned D = fam.ambient();

    CycloInt total(D);
    std::vector<std::vector<int>> m(sigma.size(),
                                    std::vector<int>(static_cast<std::size_t>(fam.n()), 0));
    do {
        CycloInt prod = CycloInt::integer(D, 1);
        for (int i = 0; i < fam.r() && !prod.is_zero(); ++i) {
            std::vector<std::pair<std::vector<int>, unsigned>> slots;
            slots.reserve(sigma.size());
            for (std::size_t j = 0; j < sigma.size(); ++j) slots.emplace_back(m[j], sigma[j]);
            prod = prod * ev.T_general(i, slots);
        }
        total = total + prod;
    } while (next_tuple(m, ev.ext().q));
    return total;
}

namespace {

std::vector<unsigned> moment_sigma(const SumFamily& fam, int s) {
    if (s < 1) throw ConfigError("moment: s must be >= 1");
    const unsigned D = fam.ambient();
    std::vector<unsigned> sigma;
    sigma.reserve(static_cast<std::size_t>(2 * s));
    for (int j = 0; j < s; ++j) sigma.push_back(1);
    for (int j = 0; j < s; ++j) sigma.push_back(D > 1 ? D - 1 : 1);
    return sigma;
}

}  // namespace

CycloInt moment_direct(const SumFamily& fam, int s, int ext_degree, const Budget& budget) {
    return transform_lhs(fam, moment_sigma(fam, s), ext_degree, budget);
}

CycloInt moment_via_transform(const SumFamily& fam, int s, int ext_degree, const Budget& budget) {
    return transform_rhs(fam, moment_sigma(fam, s), ext_degree, budget);
}

IdentityReport verify_identity(const SumFamily& fam, int s, int ext_degree, const Budget& budget) {
    CycloInt lhs = moment_direct(fam, s, ext_degree, budget);
    CycloInt rhs = moment_via_transform(fam, s, ext_degree, budget);
    return IdentityReport{lhs == rhs, lhs, rhs};
}

}  // namespace charsum
