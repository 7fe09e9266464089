#pragma once

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "arrival/error.hpp"

namespace arrival {

struct ChiSquareResult {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

namespace detail {

inline double chi_square_p_value(double statistic, int dof) {
    if (dof <= 0) return 1.0;
    boost::math::chi_squared_distribution<double> dist(dof);
    return cdf(complement(dist, statistic));
}

}  // namespace detail

// Goodness of fit of observed counts against expected probabilities over the
// same bins (index = arrival time; one trailing bin may hold the remaining
// mass). Adjacent bins are pooled until each expected count reaches
// min_expected, the usual validity rule for the chi-square approximation.
inline ChiSquareResult chi_square_goodness(const std::vector<std::uint64_t>& observed,
                                           const std::vector<double>& expected_probs,
                                           std::uint64_t total, double min_expected = 5.0) {
    if (observed.size() != expected_probs.size())
        throw DomainError("observed and expected bin counts differ");

    std::vector<double> pooled_expected;
    std::vector<double> pooled_observed;
    double acc_exp = 0.0, acc_obs = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        acc_exp += expected_probs[i] * static_cast<double>(total);
        acc_obs += static_cast<double>(observed[i]);
        if (acc_exp >= min_expected) {
            pooled_expected.push_back(acc_exp);
            pooled_observed.push_back(acc_obs);
            acc_exp = acc_obs = 0.0;
        }
    }
    if (acc_exp > 0.0 || acc_obs > 0.0) {
        if (!pooled_expected.empty()) {
            pooled_expected.back() += acc_exp;
            pooled_observed.back() += acc_obs;
        } else {
            pooled_expected.push_back(acc_exp);
            pooled_observed.push_back(acc_obs);
        }
    }

    ChiSquareResult r;
    r.dof = static_cast<int>(pooled_expected.size()) - 1;
    for (std::size_t i = 0; i < pooled_expected.size(); ++i) {
        double diff = pooled_observed[i] - pooled_expected[i];
        if (pooled_expected[i] > 0.0) r.statistic += diff * diff / pooled_expected[i];
    }
    r.p_value = detail::chi_square_p_value(r.statistic, r.dof);
    return r;
}

// Two-sample chi-square homogeneity test over aligned histograms. Bins are
// pooled until the combined count reaches min_combined.
inline ChiSquareResult chi_square_two_sample(const std::vector<std::uint64_t>& a,
                                             const std::vector<std::uint64_t>& b,
                                             double min_combined = 10.0) {
    if (a.size() != b.size()) throw DomainError("histogram sizes differ");
    double total_a = 0, total_b = 0;
    for (auto x : a) total_a += static_cast<double>(x);
    for (auto x : b) total_b += static_cast<double>(x);
    if (total_a == 0 || total_b == 0) throw DomainError("empty histogram");
    const double ka = std::sqrt(total_b / total_a);
    const double kb = std::sqrt(total_a / total_b);

    std::vector<std::pair<double, double>> pooled;
    double acc_a = 0, acc_b = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc_a += static_cast<double>(a[i]);
        acc_b += static_cast<double>(b[i]);
        if (acc_a + acc_b >= min_combined) {
            pooled.emplace_back(acc_a, acc_b);
            acc_a = acc_b = 0;
        }
    }
    if (acc_a + acc_b > 0) {
        if (!pooled.empty()) {
            pooled.back().first += acc_a;
            pooled.back().second += acc_b;
        } else {
            pooled.emplace_back(acc_a, acc_b);
        }
    }

    ChiSquareResult r;
    r.dof = static_cast<int>(pooled.size()) - 1;
    for (const auto& [pa, pb] : pooled) {
        double diff = ka * pa - kb * pb;
        r.statistic += diff * diff / (pa + pb);
    }
    r.p_value = detail::chi_square_p_value(r.statistic, r.dof);
    return r;
}

}  // namespace arrival
