#pragma once

#include <string>
#include <vector>

namespace scholarnet {

struct AuthorMetrics;

// Spearman rho and two-tailed significance for one measure pair.
struct CorrelationResult {
    std::string measure_x;
    std::string measure_y;
    double rho = 0.0;      // NaN when !defined
    double p_value = 1.0;  // NaN when !defined
    int n = 0;
    bool defined = true;  // false when an input column was constant

    bool significant_at(double alpha) const {
        return defined && p_value < alpha;
    }
};

// Fractional ranks: the smallest value gets rank 1, tied values share the
// mean of the ranks they span. Ranks always sum to n(n+1)/2.
std::vector<double> average_ranks(const std::vector<double>& xs);

// P(|T_dof| >= |t|) via the regularized incomplete beta function.
double student_t_two_tailed_p(double t, int dof);

// Significance of a Spearman rho at sample size n using the t
// approximation; rho = +-1 gives 0. Throws DegenerateInputError when
// n < 3 (no degrees of freedom left).
double spearman_p_value(double rho, int n);

// Pearson correlation of the average-rank vectors. Throws
// DegenerateInputError when either input is constant or shorter than 2.
CorrelationResult spearman(const std::vector<double>& xs,
                           const std::vector<double>& ys);

// The 7 capital measures crossed with {citation_count, h_index}: 14 rows in
// that order. A degenerate pair is reported with defined = false rather
// than failing the table. Throws DegenerateInputError when fewer than 3
// authors are supplied.
std::vector<CorrelationResult> correlation_table(
    const std::vector<AuthorMetrics>& metrics);

extern const std::vector<std::string> kCapitalMeasures;
extern const std::vector<std::string> kPerformanceMeasures;

}  // namespace scholarnet
