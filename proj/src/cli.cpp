#include "scholarnet/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <set>

#include "scholarnet/errors.hpp"
#include "scholarnet/graph.hpp"
#include "scholarnet/stats.hpp"

namespace scholarnet {

namespace {

namespace fs = std::filesystem;

Corpus load_corpus(const RunConfig& config) {
    auto records = parse_records(config.input_path, config.input_format);
    AliasMap aliases;
    if (config.alias_path) aliases = load_aliases(*config.alias_path);
    return build_corpus(records, aliases);
}

std::vector<AuthorMetrics> corpus_metrics(const RunConfig& config,
                                          const Corpus& corpus) {
    const CoauthorGraph g = build_graph(corpus);
    auto metrics = compute_all(corpus, g, config.effectiveness_variant);
    if (config.drop_isolates) {
        std::erase_if(metrics,
                      [](const AuthorMetrics& m) { return m.degree == 0; });
    }
    return metrics;
}

std::string output_path(const RunConfig& config, const std::string& stem,
                        const std::string& ext) {
    return (fs::path(config.output_dir) / (stem + "." + ext)).string();
}

template <typename Body>
int guarded(const RunConfig& config, std::ostream& err, Body&& body) {
    try {
        body();
        return 0;
    } catch (const MalformedRowError& e) {
        err << "scholarnet: error: " << config.input_path << ":" << e.line
            << ": " << e.reason << "\n";
        return 1;
    } catch (const Error& e) {
        err << "scholarnet: error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int run_ingest_check(const RunConfig& config, std::ostream& out,
                     std::ostream& err) {
    return guarded(config, err, [&] {
        const Corpus corpus = load_corpus(config);
        std::set<std::string> venues;
        int min_year = 0, max_year = 0;
        for (std::size_t i = 0; i < corpus.publications.size(); ++i) {
            const auto& pub = corpus.publications[i];
            venues.insert(pub.venue);
            if (i == 0) {
                min_year = max_year = pub.year;
            } else {
                min_year = std::min(min_year, pub.year);
                max_year = std::max(max_year, pub.year);
            }
        }
        out << "publications: " << corpus.publications.size() << "\n"
            << "authors: " << corpus.authors.size() << "\n"
            << "venues: " << venues.size() << "\n";
        if (!corpus.publications.empty())
            out << "years: " << min_year << "-" << max_year << "\n";
    });
}

int run_graph_export(const RunConfig& config, std::ostream& out,
                     std::ostream& err) {
    return guarded(config, err, [&] {
        const Corpus corpus = load_corpus(config);
        const CoauthorGraph g = build_graph(corpus);
        std::vector<std::string> names;
        names.reserve(corpus.authors.size());
        for (const auto& a : corpus.authors) names.push_back(a.canonical_name);
        const std::string path = output_path(config, "edges", "csv");
        atomic_write_file(path, edge_list_csv(g, names));
        out << path << "\n";
    });
}

int run_metrics(const RunConfig& config, std::ostream& out,
                std::ostream& err) {
    return guarded(config, err, [&] {
        const Corpus corpus = load_corpus(config);
        const auto metrics = corpus_metrics(config, corpus);
        const std::string path = output_path(
            config, "metrics", output_extension(config.output_format));
        atomic_write_file(path,
                          render_metrics(metrics, corpus, config.output_format));
        out << path << "\n";
    });
}

int run_correlate(const RunConfig& config, std::ostream& out,
                  std::ostream& err) {
    return guarded(config, err, [&] {
        const Corpus corpus = load_corpus(config);
        const auto metrics = corpus_metrics(config, corpus);
        const auto table = correlation_table(metrics);
        const std::string path = output_path(
            config, "correlations", output_extension(config.output_format));
        atomic_write_file(path,
                          render_correlations(table, config.output_format));
        out << path << "\n";
    });
}

int run_top(const RunConfig& config, const std::string& by, std::ostream& out,
            std::ostream& err) {
    return guarded(config, err, [&] {
        const Corpus corpus = load_corpus(config);
        const std::string ext = output_extension(config.output_format);
        const std::string path = output_path(config, "top_" + by, ext);
        std::string content;
        if (is_venue_measure(by)) {
            content = render_venues(top_venues(corpus, by, config.top_n),
                                    config.output_format);
        } else {
            const auto metrics = corpus_metrics(config, corpus);
            content = render_metrics(
                top_authors(metrics, corpus, by, config.top_n), corpus,
                config.output_format);
        }
        atomic_write_file(path, content);
        out << path << "\n";
    });
}

}  // namespace scholarnet
