#pragma once

#include <string>
#include <vector>

#include "scholarnet/rational.hpp"

namespace scholarnet {

struct AuthorProfile;
struct Corpus;
struct CoauthorGraph;
struct EgoNetwork;

enum class EffectivenessVariant { Binary, Weighted };

// One row of the per-author metrics table. Column order matches the
// metrics CSV export.
struct AuthorMetrics {
    int author_id = -1;
    long long citation_count = 0;
    int h_index = 0;
    int degree = 0;  // network size
    long long weighted_degree = 0;
    double avg_tie_strength = 0.0;  // 0 for isolates
    double effectiveness = 0.0;
    double ego_betweenness = 0.0;
    int power_diversity = 0;
    int power_tie_diversity = 0;

    bool operator==(const AuthorMetrics&) const = default;
};

// Largest h such that at least h of the values are >= h. This one operator
// backs h_index, power_diversity and power_tie_diversity.
int h_operator(std::vector<long long> values);

long long citation_count(const AuthorProfile& profile);
int h_index(const std::vector<long long>& citations);

int degree(const EgoNetwork& eg);
long long weighted_degree(const EgoNetwork& eg);

// weighted_degree / degree as an exact fraction; 0 for isolates
Rational avg_tie_strength(const EgoNetwork& eg);

// n - 2t/n with n alters and t unweighted alter-alter ties; 0 when n = 0
Rational effectiveness_binary(const EgoNetwork& eg);

// Burt's effective size: sum over alters j of 1 - sum_q p_q * m_jq, where
// p_q is the share of the ego's tie weight invested in alter q and m_jq is
// j's tie to q scaled by j's strongest tie inside the ego network (the tie
// to the ego included).
double effectiveness_weighted(const EgoNetwork& eg);

// For each non-adjacent alter pair, 1/k where k counts the nodes connecting
// the pair inside the ego network (the ego always does, so k >= 1);
// adjacent pairs contribute 0. Adjacency ignores weights.
double ego_betweenness(const EgoNetwork& eg);

// The h operator applied to the alters' h-indices.
int power_diversity(const std::vector<int>& alter_h);

// The h operator applied to power-strengths: each alter's h-index times the
// ego-alter tie weight. Throws LengthMismatchError on misaligned inputs.
int power_tie_diversity(const std::vector<int>& alter_h,
                        const std::vector<long long>& tie_weights);

// One AuthorMetrics per author, ordered by author_id. Pure function of its
// inputs; alter h-indices come from this same corpus.
std::vector<AuthorMetrics> compute_all(
    const Corpus& corpus, const CoauthorGraph& g,
    EffectivenessVariant variant = EffectivenessVariant::Binary);

// Exported metric columns, in CSV order (author name excluded).
extern const std::vector<std::string> kMetricColumns;

// Column accessor by name; throws UnknownMeasureError.
double metric_value(const AuthorMetrics& m, const std::string& measure);

}  // namespace scholarnet
