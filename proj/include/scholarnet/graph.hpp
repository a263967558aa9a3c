#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace scholarnet {

struct Corpus;

// Undirected weighted co-authorship graph. The weight of an edge is the
// number of distinct publications the two authors share. Construction is
// single-threaded; the result is immutable and shareable.
struct CoauthorGraph {
    int n = 0;
    // adjacency[u]: (neighbor, weight) sorted by neighbor id; symmetric,
    // no self-loops, weights >= 1
    std::vector<std::vector<std::pair<int, long long>>> adjacency;

    int degree(int u) const { return static_cast<int>(adjacency[u].size()); }
    long long weight(int u, int v) const;  // 0 when no edge
    std::size_t edge_count() const;

    bool operator==(const CoauthorGraph&) const = default;
};

// A focal author, its co-authors and every tie among them.
struct EgoNetwork {
    struct AlterTie {
        int a = 0;  // indices into alters, a < b
        int b = 0;
        long long weight = 0;
        bool operator==(const AlterTie&) const = default;
    };

    int ego = -1;
    std::vector<int> alters;          // author ids, ascending
    std::vector<long long> ego_ties;  // aligned with alters
    std::vector<AlterTie> alter_ties;

    bool operator==(const EgoNetwork&) const = default;
};

// Every unordered author pair of a publication gains +1 weight; authors of
// single-author publications are present as isolated nodes.
CoauthorGraph build_graph(const Corpus& corpus);

// Pure read; throws UnknownAuthorError when ego is out of range.
EgoNetwork ego_network(const CoauthorGraph& g, int ego);

// Edge list "src,dst,weight" with src < dst, sorted; src/dst are canonical
// names looked up by author id.
std::string edge_list_csv(const CoauthorGraph& g,
                          const std::vector<std::string>& names);

}  // namespace scholarnet
