#include "scholarnet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/special_functions/beta.hpp>

#include "scholarnet/errors.hpp"
#include "scholarnet/metrics.hpp"

namespace scholarnet {

std::vector<double> average_ranks(const std::vector<double>& xs) {
    const int n = static_cast<int>(xs.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return xs[a] < xs[b]; });

    std::vector<double> ranks(n);
    int i = 0;
    while (i < n) {
        int j = i;
        while (j < n && xs[order[j]] == xs[order[i]]) ++j;
        const double rank = (i + 1 + j) / 2.0;  // mean of ranks i+1 .. j
        for (int k = i; k < j; ++k) ranks[order[k]] = rank;
        i = j;
    }
    return ranks;
}

double student_t_two_tailed_p(double t, int dof) {
    if (dof < 1)
        throw DegenerateInputError("t-distribution needs dof >= 1, got " +
                                   std::to_string(dof));
    const double x = dof / (dof + t * t);
    return boost::math::ibeta(dof / 2.0, 0.5, x);
}

double spearman_p_value(double rho, int n) {
    if (std::abs(rho) >= 1.0) return 0.0;
    if (n < 3)
        throw DegenerateInputError("p-value undefined for n < 3, got n = " +
                                   std::to_string(n));
    const int dof = n - 2;
    const double t = rho * std::sqrt(dof / (1.0 - rho * rho));
    return student_t_two_tailed_p(t, dof);
}

namespace {

bool is_constant(const std::vector<double>& xs) {
    return std::all_of(xs.begin(), xs.end(),
                       [&](double v) { return v == xs.front(); });
}

}  // namespace

CorrelationResult spearman(const std::vector<double>& xs,
                           const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw LengthMismatchError(xs.size(), ys.size());
    const int n = static_cast<int>(xs.size());
    if (n < 2) throw DegenerateInputError("need at least 2 observations");
    if (is_constant(xs)) throw DegenerateInputError("x values are constant");
    if (is_constant(ys)) throw DegenerateInputError("y values are constant");

    const auto rx = average_ranks(xs);
    const auto ry = average_ranks(ys);
    const double mean = (n + 1) / 2.0;  // both rank vectors sum to n(n+1)/2
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double dx = rx[i] - mean;
        const double dy = ry[i] - mean;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }

    CorrelationResult result;
    result.n = n;
    result.rho = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    result.p_value = spearman_p_value(result.rho, n);
    return result;
}

const std::vector<std::string> kCapitalMeasures = {
    "degree",          "weighted_degree", "avg_tie_strength",
    "effectiveness",   "ego_betweenness", "power_diversity",
    "power_tie_diversity"};

const std::vector<std::string> kPerformanceMeasures = {"citation_count",
                                                       "h_index"};

std::vector<CorrelationResult> correlation_table(
    const std::vector<AuthorMetrics>& metrics) {
    const int n = static_cast<int>(metrics.size());
    if (n < 3)
        throw DegenerateInputError("need >= 3 authors for correlation, have " +
                                   std::to_string(n));

    std::vector<CorrelationResult> table;
    table.reserve(kCapitalMeasures.size() * kPerformanceMeasures.size());
    for (const auto& capital : kCapitalMeasures) {
        std::vector<double> xs(n);
        for (int i = 0; i < n; ++i) xs[i] = metric_value(metrics[i], capital);
        for (const auto& performance : kPerformanceMeasures) {
            std::vector<double> ys(n);
            for (int i = 0; i < n; ++i)
                ys[i] = metric_value(metrics[i], performance);

            CorrelationResult result;
            try {
                result = spearman(xs, ys);
            } catch (const DegenerateInputError&) {
                result.defined = false;
                result.rho = std::numeric_limits<double>::quiet_NaN();
                result.p_value = std::numeric_limits<double>::quiet_NaN();
                result.n = n;
            }
            result.measure_x = capital;
            result.measure_y = performance;
            table.push_back(std::move(result));
        }
    }
    return table;
}

}  // namespace scholarnet
