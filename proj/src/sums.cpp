#include "charsum/sums.hpp"

#include <numeric>

namespace charsum {

SumFamily::SumFamily(FieldPtr ctx, int n, int r,
                     std::vector<std::pair<int, long long>> characters,
                     std::vector<FactoredRational> rationals, int degree_cap,
                     const std::vector<int>& stabilizer_probes, const Budget& budget)
    : ctx_(std::move(ctx)), n_(n), r_(r), cap_(degree_cap) {
    if (n_ < 1) throw ConfigError("family: n must be >= 1");
    if (r_ < 0) throw ConfigError("family: r must be >= 0");
    if (static_cast<int>(characters.size()) != r_ || static_cast<int>(rationals.size()) != r_)
        throw ConfigError("family: need exactly r characters and r rational functions");

    long long D = 2;
    for (const auto& [d, e] : characters) D = std::lcm(D, static_cast<long long>(d));
    if (D > 1'000'000) throw ConfigError("family: ambient cyclotomic order too large");
    D_ = static_cast<unsigned>(D);

    for (int i = 0; i < r_; ++i) {
        chars_.push_back(make_character(ctx_, characters[static_cast<std::size_t>(i)].first,
                                        characters[static_cast<std::size_t>(i)].second, D_));
        FactoredRational F = std::move(rationals[static_cast<std::size_t>(i)]);
        if (F.vars() != n_) throw ConfigError("family: rational function has wrong variable count");
        if (&F.ctx() != ctx_.get()) throw ConfigError("family: rational function over a different field");
        if (F.degree() > cap_) throw ConfigError("family: rational function degree exceeds cap");
        if (n_ == 1) F = canonical_univariate(F, budget);
        else if (!F.absolutely_irreducible())
            throw ConfigError("family: multivariate factors require the absolute-irreducibility "
                              "assertion flag");
        int d = characters[static_cast<std::size_t>(i)].first;
        if (!is_dth_power_free(F, d))
            throw ConfigError("family: F_" + std::to_string(i + 1) + " is not " +
                              std::to_string(d) + "th-power-free");
        rationals_.push_back(std::move(F));
    }

    for (int e : stabilizer_probes) {
        for (int i = 0; i < r_; ++i) {
            auto stab = stabilizer(rationals_[static_cast<std::size_t>(i)], e, budget);
            if (stab.size() != 1)
                throw ConfigError("family: F_" + std::to_string(i + 1) +
                                  " has a nontrivial translation stabilizer at extension degree " +
                                  std::to_string(e));
        }
    }
}

SumEvaluator::SumEvaluator(const SumFamily& fam, int ext_degree, const Budget& budget)
    : fam_(&fam), e_(ext_degree) {
    if (ext_degree < 1) throw ConfigError("evaluator: extension degree must be >= 1");
    const FieldCtx& K = fam.ctx();
    budget.require_table(sat_pow(static_cast<std::uint64_t>(K.q), static_cast<unsigned>(ext_degree)),
                         "evaluator");
    ext_ = (ext_degree == 1) ? fam.ctx_ptr() : make_field(K.p, K.k * ext_degree, budget);
    emb_.emplace(fam.ctx_ptr(), ext_);
    for (int i = 0; i < fam.r(); ++i) {
        tables_.emplace_back(fam.characters()[static_cast<std::size_t>(i)], *emb_);
        lifted_.push_back(ext_degree == 1 ? fam.rationals()[static_cast<std::size_t>(i)]
                                          : fam.rationals()[static_cast<std::size_t>(i)].lift(*emb_));
    }
}

std::uint64_t SumEvaluator::points() const {
    return sat_pow(static_cast<std::uint64_t>(ext_->q), static_cast<unsigned>(fam_->n()));
}

CycloInt SumEvaluator::accumulate(const std::vector<FactoredRational>& translated,
                                  const std::vector<int>& char_index,
                                  const std::vector<long long>& twist) const {
    const unsigned D = fam_->ambient();
    const FieldCtx& E = *ext_;
    std::vector<long long> counts(D, 0);
    std::vector<int> m(static_cast<std::size_t>(fam_->n()), 0);
    do {
        long long t = 0;
        bool zero = false;
        for (std::size_t j = 0; j < translated.size(); ++j) {
            EvalResult v = translated[j].evaluate(m);
            if (v.zero_or_pole) { zero = true; break; }
            long long ex = tables_[static_cast<std::size_t>(char_index[j])].exponent(v.value);
            if (ex < 0) { zero = true; break; }
            t += ex * twist[j];
        }
        if (!zero) ++counts[static_cast<std::size_t>(((t % D) + D) % D)];
    } while (next_point(m, E.q));
    return CycloInt::from_power_counts(D, counts);
}

CycloInt SumEvaluator::S(const std::vector<std::vector<int>>& offsets) const {
    if (static_cast<int>(offsets.size()) != fam_->r())
        throw ConfigError("sum_S: need exactly r offset vectors");
    std::vector<FactoredRational> translated;
    std::vector<int> idx;
    std::vector<long long> twist;
    for (int i = 0; i < fam_->r(); ++i) {
        translated.push_back(lifted_[static_cast<std::size_t>(i)].translate(offsets[static_cast<std::size_t>(i)]));
        idx.push_back(i);
        twist.push_back(1);
    }
    return accumulate(translated, idx, twist);
}

CycloInt SumEvaluator::T(int i, const std::vector<std::vector<int>>& offsets, int s) const {
    if (static_cast<int>(offsets.size()) != 2 * s)
        throw ConfigError("sum_T: need exactly 2s offset vectors");
    std::vector<std::pair<std::vector<int>, unsigned>> slots;
    const unsigned D = fam_->ambient();
    for (int j = 0; j < 2 * s; ++j)
        slots.emplace_back(offsets[static_cast<std::size_t>(j)],
                           j < s ? 1u : (D > 1 ? D - 1 : 1u));
    return T_general(i, slots);
}

CycloInt SumEvaluator::T_general(
    int i, const std::vector<std::pair<std::vector<int>, unsigned>>& slots) const {
    if (i < 0 || i >= fam_->r()) throw ConfigError("sum index out of range");
    const unsigned D = fam_->ambient();
    std::vector<FactoredRational> translated;
    std::vector<int> idx;
    std::vector<long long> twist;
    for (const auto& [m, u] : slots) {
        if (std::gcd(static_cast<long long>(u % D == 0 ? D : u % D), static_cast<long long>(D)) != 1)
            throw ConfigError("automorphism index " + std::to_string(u) + " not coprime to D = " +
                              std::to_string(D));
        translated.push_back(lifted_[static_cast<std::size_t>(i)].translate(m));
        idx.push_back(i);
        twist.push_back(static_cast<long long>(u % D));
    }
    return accumulate(translated, idx, twist);
}

namespace {

Budget point_budget(const SumFamily& fam, int ext_degree, const Budget& budget) {
    std::uint64_t qe = sat_pow(static_cast<std::uint64_t>(fam.ctx().q),
                               static_cast<unsigned>(ext_degree));
    budget.require_iterations(sat_pow(qe, static_cast<unsigned>(fam.n())), "character sum");
    return budget;
}

}  // namespace

SumValue sum_S(const SumFamily& fam, int ext_degree, const std::vector<std::vector<int>>& offsets,
               const Budget& budget) {
    SumEvaluator ev(fam, ext_degree, point_budget(fam, ext_degree, budget));
    return SumValue::of(ev.S(offsets));
}

SumValue sum_T(const SumFamily& fam, int i, int ext_degree,
               const std::vector<std::vector<int>>& offsets, int s, const Budget& budget) {
    SumEvaluator ev(fam, ext_degree, point_budget(fam, ext_degree, budget));
    return SumValue::of(ev.T(i, offsets, s));
}

SumValue sum_general(const SumFamily& fam, int i, int ext_degree,
                     const std::vector<std::pair<std::vector<int>, unsigned>>& slots,
                     const Budget& budget) {
    SumEvaluator ev(fam, ext_degree, point_budget(fam, ext_degree, budget));
    return SumValue::of(ev.T_general(i, slots));
}

}  // namespace charsum
