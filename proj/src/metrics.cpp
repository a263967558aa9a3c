#include "scholarnet/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>

#include "scholarnet/errors.hpp"
#include "scholarnet/graph.hpp"
#include "scholarnet/ingest.hpp"

namespace scholarnet {

int h_operator(std::vector<long long> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    int h = 0;
    while (h < static_cast<int>(values.size()) && values[h] >= h + 1) ++h;
    return h;
}

long long citation_count(const AuthorProfile& profile) {
    return std::accumulate(profile.citation_vector.begin(),
                           profile.citation_vector.end(), 0LL);
}

int h_index(const std::vector<long long>& citations) {
    return h_operator(citations);
}

int degree(const EgoNetwork& eg) {
    return static_cast<int>(eg.alters.size());
}

long long weighted_degree(const EgoNetwork& eg) {
    return std::accumulate(eg.ego_ties.begin(), eg.ego_ties.end(), 0LL);
}

Rational avg_tie_strength(const EgoNetwork& eg) {
    if (eg.alters.empty()) return Rational(0);
    return Rational(weighted_degree(eg),
                    static_cast<long long>(eg.alters.size()));
}

Rational effectiveness_binary(const EgoNetwork& eg) {
    const long long n = static_cast<long long>(eg.alters.size());
    if (n == 0) return Rational(0);
    const long long t = static_cast<long long>(eg.alter_ties.size());
    return Rational(n * n - 2 * t, n);
}

double effectiveness_weighted(const EgoNetwork& eg) {
    const int n = static_cast<int>(eg.alters.size());
    if (n == 0) return 0.0;
    const double total = static_cast<double>(weighted_degree(eg));

    // each alter's strongest tie inside the ego network, ego tie included
    std::vector<long long> max_tie(eg.ego_ties.begin(), eg.ego_ties.end());
    for (const auto& t : eg.alter_ties) {
        max_tie[t.a] = std::max(max_tie[t.a], t.weight);
        max_tie[t.b] = std::max(max_tie[t.b], t.weight);
    }

    std::vector<double> redundancy(n, 0.0);
    for (const auto& t : eg.alter_ties) {
        const double pa = static_cast<double>(eg.ego_ties[t.a]) / total;
        const double pb = static_cast<double>(eg.ego_ties[t.b]) / total;
        redundancy[t.a] +=
            pb * (static_cast<double>(t.weight) / static_cast<double>(max_tie[t.a]));
        redundancy[t.b] +=
            pa * (static_cast<double>(t.weight) / static_cast<double>(max_tie[t.b]));
    }

    double effective = 0.0;
    for (int j = 0; j < n; ++j) effective += 1.0 - redundancy[j];
    return effective;
}

double ego_betweenness(const EgoNetwork& eg) {
    const int n = static_cast<int>(eg.alters.size());
    if (n < 2) return 0.0;

    // alter-alter adjacency as bitsets
    const int words = (n + 63) / 64;
    std::vector<std::uint64_t> nb(static_cast<std::size_t>(n) * words, 0);
    auto set_bit = [&](int row, int col) {
        nb[static_cast<std::size_t>(row) * words + col / 64] |=
            std::uint64_t{1} << (col % 64);
    };
    for (const auto& t : eg.alter_ties) {
        set_bit(t.a, t.b);
        set_bit(t.b, t.a);
    }

    double total = 0.0;
    for (int a = 0; a < n; ++a) {
        const std::uint64_t* ra = nb.data() + static_cast<std::size_t>(a) * words;
        for (int b = a + 1; b < n; ++b) {
            if (ra[b / 64] >> (b % 64) & 1) continue;  // connected pair
            const std::uint64_t* rb =
                nb.data() + static_cast<std::size_t>(b) * words;
            int common = 0;
            for (int w = 0; w < words; ++w)
                common += std::popcount(ra[w] & rb[w]);
            total += 1.0 / (1 + common);  // +1: the ego connects every pair
        }
    }
    return total;
}

int power_diversity(const std::vector<int>& alter_h) {
    return h_operator(std::vector<long long>(alter_h.begin(), alter_h.end()));
}

int power_tie_diversity(const std::vector<int>& alter_h,
                        const std::vector<long long>& tie_weights) {
    if (alter_h.size() != tie_weights.size())
        throw LengthMismatchError(alter_h.size(), tie_weights.size());
    std::vector<long long> power_strength(alter_h.size());
    for (std::size_t i = 0; i < alter_h.size(); ++i)
        power_strength[i] = alter_h[i] * tie_weights[i];
    return h_operator(std::move(power_strength));
}

std::vector<AuthorMetrics> compute_all(const Corpus& corpus,
                                       const CoauthorGraph& g,
                                       EffectivenessVariant variant) {
    const int n = g.n;
    std::vector<int> h(n);
    for (int i = 0; i < n; ++i)
        h[i] = h_index(corpus.authors[i].citation_vector);

    std::vector<AuthorMetrics> out(n);
    for (int u = 0; u < n; ++u) {
        const EgoNetwork eg = ego_network(g, u);
        AuthorMetrics& m = out[u];
        m.author_id = u;
        m.citation_count = citation_count(corpus.authors[u]);
        m.h_index = h[u];
        m.degree = degree(eg);
        m.weighted_degree = weighted_degree(eg);
        m.avg_tie_strength = to_double(avg_tie_strength(eg));
        m.effectiveness = variant == EffectivenessVariant::Binary
                              ? to_double(effectiveness_binary(eg))
                              : effectiveness_weighted(eg);
        m.ego_betweenness = ego_betweenness(eg);

        std::vector<int> alter_h;
        alter_h.reserve(eg.alters.size());
        for (int v : eg.alters) alter_h.push_back(h[v]);
        m.power_diversity = power_diversity(alter_h);
        m.power_tie_diversity = power_tie_diversity(alter_h, eg.ego_ties);
    }
    return out;
}

const std::vector<std::string> kMetricColumns = {
    "citation_count", "h_index",          "degree",
    "weighted_degree", "avg_tie_strength", "effectiveness",
    "ego_betweenness", "power_diversity",  "power_tie_diversity"};

double metric_value(const AuthorMetrics& m, const std::string& measure) {
    if (measure == "citation_count") return static_cast<double>(m.citation_count);
    if (measure == "h_index") return m.h_index;
    if (measure == "degree") return m.degree;
    if (measure == "weighted_degree") return static_cast<double>(m.weighted_degree);
    if (measure == "avg_tie_strength") return m.avg_tie_strength;
    if (measure == "effectiveness") return m.effectiveness;
    if (measure == "ego_betweenness") return m.ego_betweenness;
    if (measure == "power_diversity") return m.power_diversity;
    if (measure == "power_tie_diversity") return m.power_tie_diversity;
    throw UnknownMeasureError(measure);
}

}  // namespace scholarnet
