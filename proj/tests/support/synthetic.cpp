#include "support/synthetic.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "scholarnet/csv.hpp"

namespace scholarnet::testsupport {

namespace fs = std::filesystem;

std::uint64_t base_seed() {
    if (const char* env = std::getenv("SCHOLARNET_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 20011202;  // fixed default so runs are reproducible
}

namespace {

PublicationRecord make_record(int pub_index, std::vector<std::string> authors,
                              long long citations, std::string venue = "venue",
                              int year = 2005) {
    PublicationRecord rec;
    rec.pub_id = "p" + std::to_string(pub_index);
    rec.title = "title " + std::to_string(pub_index);
    rec.year = year;
    rec.venue = std::move(venue);
    rec.citations = citations;
    rec.authors = std::move(authors);
    return rec;
}

std::string author_label(int i, int width) {
    std::string digits = std::to_string(i);
    return "a" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

std::vector<PublicationRecord> star_records(int ego_solo_pubs,
                                            long long ego_solo_citations) {
    const int alter_h[7] = {6, 5, 5, 3, 3, 1, 1};
    const int alter_w[7] = {4, 3, 2, 3, 1, 2, 2};

    std::vector<PublicationRecord> records;
    int pub = 0;
    for (int j = 0; j < 7; ++j) {
        const std::string alter = "ca" + std::to_string(j + 1);
        for (int k = 0; k < alter_w[j]; ++k)
            records.push_back(make_record(pub++, {"ego", alter}, 0));
        for (int k = 0; k < alter_h[j]; ++k)
            records.push_back(make_record(pub++, {alter}, alter_h[j]));
    }
    for (int k = 0; k < ego_solo_pubs; ++k)
        records.push_back(make_record(pub++, {"ego"}, ego_solo_citations));
    return records;
}

Corpus star_corpus(int ego_solo_pubs, long long ego_solo_citations) {
    return build_corpus(star_records(ego_solo_pubs, ego_solo_citations));
}

std::vector<PublicationRecord> random_records(int n_pubs, int n_authors,
                                              Rng& rng) {
    std::vector<PublicationRecord> records;
    records.reserve(n_pubs);
    for (int i = 0; i < n_pubs; ++i) {
        const int k = std::min(rng.uniform_int(1, 4), n_authors);
        std::set<std::string> authors;
        while (static_cast<int>(authors.size()) < k)
            authors.insert(author_label(rng.uniform_int(0, n_authors - 1), 4));
        records.push_back(make_record(
            i, {authors.begin(), authors.end()}, rng.uniform_int(0, 100),
            "v" + std::to_string(rng.uniform_int(0, 9)),
            rng.uniform_int(2001, 2010)));
    }
    return records;
}

CoauthorGraph graph_from_edges(
    int n, const std::vector<std::tuple<int, int, long long>>& edges) {
    CoauthorGraph g;
    g.n = n;
    g.adjacency.resize(n);
    for (const auto& [u, v, w] : edges) {
        if (u == v) throw std::invalid_argument("self loop");
        g.adjacency[u].emplace_back(v, w);
        g.adjacency[v].emplace_back(u, w);
    }
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    return g;
}

CoauthorGraph random_graph(int n, double edge_prob, Rng& rng) {
    std::vector<std::tuple<int, int, long long>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform_real() < edge_prob) edges.emplace_back(u, v, 1);
    return graph_from_edges(n, edges);
}

EgoNetwork random_ego_network(Rng& rng, int max_alters) {
    const int n = rng.uniform_int(0, max_alters);
    EgoNetwork eg;
    eg.ego = 0;
    for (int i = 0; i < n; ++i) {
        eg.alters.push_back(i + 1);
        eg.ego_ties.push_back(rng.uniform_int(1, 5));
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.uniform_real() < 0.4)
                eg.alter_ties.push_back({a, b, rng.uniform_int(1, 5)});
    return eg;
}

Corpus performance_corpus(int n_authors, std::size_t target_edges, Rng& rng) {
    std::vector<PublicationRecord> records;
    std::unordered_set<std::uint64_t> pairs;
    std::vector<bool> seen(n_authors, false);
    int pub = 0;
    while (pairs.size() < target_edges) {
        const int k = rng.uniform_int(2, 5);
        std::set<int> ids;
        while (static_cast<int>(ids.size()) < k)
            ids.insert(rng.uniform_int(0, n_authors - 1));
        std::vector<std::string> authors;
        for (int id : ids) {
            authors.push_back(author_label(id, 5));
            seen[id] = true;
        }
        for (auto a = ids.begin(); a != ids.end(); ++a)
            for (auto b = std::next(a); b != ids.end(); ++b)
                pairs.insert((static_cast<std::uint64_t>(*a) << 32) |
                             static_cast<std::uint32_t>(*b));
        records.push_back(make_record(pub++, std::move(authors),
                                      rng.uniform_int(0, 200)));
    }
    for (int id = 0; id < n_authors; ++id) {
        if (!seen[id])
            records.push_back(make_record(pub++, {author_label(id, 5)},
                                          rng.uniform_int(0, 200)));
    }
    return build_corpus(records);
}

std::string records_to_csv(const std::vector<PublicationRecord>& records) {
    std::string out = "pub_id,title,year,venue,citations,authors,keywords\n";
    for (const auto& rec : records) {
        std::string authors;
        for (std::size_t i = 0; i < rec.authors.size(); ++i) {
            if (i > 0) authors += "; ";
            authors += rec.authors[i];
        }
        std::string keywords;
        for (std::size_t i = 0; i < rec.keywords.size(); ++i) {
            if (i > 0) keywords += "; ";
            keywords += rec.keywords[i];
        }
        out += csv_join({rec.pub_id, rec.title, std::to_string(rec.year),
                         rec.venue, std::to_string(rec.citations), authors,
                         keywords});
        out += '\n';
    }
    return out;
}

std::string temp_dir() {
    static const std::string dir = [] {
        std::string tmpl =
            (fs::temp_directory_path() / "scholarnet_tests_XXXXXX").string();
        if (!mkdtemp(tmpl.data()))
            throw std::runtime_error("mkdtemp failed");
        return tmpl;
    }();
    return dir;
}

std::string write_temp_file(const std::string& name,
                            const std::string& content) {
    const std::string path = (fs::path(temp_dir()) / name).string();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path);
    return path;
}

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace scholarnet::testsupport
