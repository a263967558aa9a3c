#include "scholarnet/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "scholarnet/csv.hpp"
#include "scholarnet/errors.hpp"
#include "scholarnet/ingest.hpp"

namespace scholarnet {

long long CoauthorGraph::weight(int u, int v) const {
    const auto& adj = adjacency[u];
    auto it = std::lower_bound(adj.begin(), adj.end(),
                               std::pair<int, long long>{v, 0});
    return (it != adj.end() && it->first == v) ? it->second : 0;
}

std::size_t CoauthorGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& adj : adjacency) twice += adj.size();
    return twice / 2;
}

CoauthorGraph build_graph(const Corpus& corpus) {
    CoauthorGraph g;
    g.n = static_cast<int>(corpus.authors.size());
    g.adjacency.resize(g.n);

    std::unordered_map<std::uint64_t, long long> weights;
    for (const auto& ids : corpus.pub_authors) {
        // ids are distinct and ascending, so a < b below
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                const std::uint64_t key =
                    (static_cast<std::uint64_t>(ids[i]) << 32) |
                    static_cast<std::uint32_t>(ids[j]);
                weights[key] += 1;
            }
        }
    }

    for (const auto& [key, w] : weights) {
        const int u = static_cast<int>(key >> 32);
        const int v = static_cast<int>(key & 0xffffffffu);
        g.adjacency[u].emplace_back(v, w);
        g.adjacency[v].emplace_back(u, w);
    }
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    return g;
}

EgoNetwork ego_network(const CoauthorGraph& g, int ego) {
    if (ego < 0 || ego >= g.n) throw UnknownAuthorError(ego);

    EgoNetwork eg;
    eg.ego = ego;
    eg.alters.reserve(g.adjacency[ego].size());
    eg.ego_ties.reserve(g.adjacency[ego].size());
    std::unordered_map<int, int> pos;  // author id -> index into alters
    for (const auto& [v, w] : g.adjacency[ego]) {
        pos.emplace(v, static_cast<int>(eg.alters.size()));
        eg.alters.push_back(v);
        eg.ego_ties.push_back(w);
    }

    // induced weighted subgraph on the alter set; iteration order keeps
    // (a, b) lexicographic
    for (int i = 0; i < static_cast<int>(eg.alters.size()); ++i) {
        for (const auto& [v, w] : g.adjacency[eg.alters[i]]) {
            auto it = pos.find(v);
            if (it != pos.end() && i < it->second)
                eg.alter_ties.push_back({i, it->second, w});
        }
    }
    return eg;
}

std::string edge_list_csv(const CoauthorGraph& g,
                          const std::vector<std::string>& names) {
    std::string out = "src,dst,weight\n";
    for (int u = 0; u < g.n; ++u) {
        for (const auto& [v, w] : g.adjacency[u]) {
            if (u < v) {
                out += csv_join({names[u], names[v], std::to_string(w)});
                out += '\n';
            }
        }
    }
    return out;
}

}  // namespace scholarnet
