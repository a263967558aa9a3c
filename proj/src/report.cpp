#include "scholarnet/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include <unistd.h>

#include "json.hpp"
#include "scholarnet/csv.hpp"
#include "scholarnet/errors.hpp"
#include "scholarnet/ingest.hpp"

namespace scholarnet {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

// shortest representation that round-trips
std::string format_full(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string format_compact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string markdown_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
    std::string out = "|";
    for (const auto& h : header) out += " " + h + " |";
    out += "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
    out += "\n";
    for (const auto& row : rows) {
        out += "|";
        for (const auto& cell : row) out += " " + cell + " |";
        out += "\n";
    }
    return out;
}

std::vector<std::string> metric_row(const AuthorMetrics& m,
                                    const std::string& name, bool full) {
    auto dbl = [&](double v) { return full ? format_full(v) : format_fixed(v, 2); };
    return {name,
            std::to_string(m.citation_count),
            std::to_string(m.h_index),
            std::to_string(m.degree),
            std::to_string(m.weighted_degree),
            dbl(m.avg_tie_strength),
            dbl(m.effectiveness),
            dbl(m.ego_betweenness),
            std::to_string(m.power_diversity),
            std::to_string(m.power_tie_diversity)};
}

const std::vector<std::string> kMetricsHeader = {
    "author",          "citation_count",   "h_index",
    "degree",          "weighted_degree",  "avg_tie_strength",
    "effectiveness",   "ego_betweenness",  "power_diversity",
    "power_tie_diversity"};

const std::vector<std::string> kCorrelationsHeader = {
    "measure_x", "measure_y", "rho", "p_value", "n", "significant_at_0.01"};

const std::vector<std::string> kVenuesHeader = {"venue", "publications",
                                                "citations"};

}  // namespace

std::string output_extension(OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
        case OutputFormat::Markdown: return "md";
    }
    return "csv";
}

std::vector<VenueStats> venue_stats(const Corpus& corpus) {
    std::map<std::string, VenueStats> by_venue;
    for (const auto& pub : corpus.publications) {
        auto& entry = by_venue[pub.venue];
        entry.venue = pub.venue;
        entry.publications += 1;
        entry.citations += pub.citations;
    }
    std::vector<VenueStats> out;
    out.reserve(by_venue.size());
    for (auto& [_, entry] : by_venue) out.push_back(std::move(entry));
    return out;
}

bool is_author_measure(const std::string& by) {
    return std::find(kMetricColumns.begin(), kMetricColumns.end(), by) !=
           kMetricColumns.end();
}

bool is_venue_measure(const std::string& by) {
    return by == "publications" || by == "citations";
}

std::vector<AuthorMetrics> top_authors(std::vector<AuthorMetrics> metrics,
                                       const Corpus& corpus,
                                       const std::string& by, int top_n) {
    if (!is_author_measure(by)) throw UnknownMeasureError(by);
    std::sort(metrics.begin(), metrics.end(),
              [&](const AuthorMetrics& a, const AuthorMetrics& b) {
                  const double va = metric_value(a, by);
                  const double vb = metric_value(b, by);
                  if (va != vb) return va > vb;
                  return corpus.authors[a.author_id].canonical_name <
                         corpus.authors[b.author_id].canonical_name;
              });
    if (static_cast<int>(metrics.size()) > top_n) metrics.resize(top_n);
    return metrics;
}

std::vector<VenueStats> top_venues(const Corpus& corpus, const std::string& by,
                                   int top_n) {
    if (!is_venue_measure(by)) throw UnknownMeasureError(by);
    auto venues = venue_stats(corpus);
    std::sort(venues.begin(), venues.end(),
              [&](const VenueStats& a, const VenueStats& b) {
                  const long long va = by == "publications" ? a.publications
                                                            : a.citations;
                  const long long vb = by == "publications" ? b.publications
                                                            : b.citations;
                  if (va != vb) return va > vb;
                  return a.venue < b.venue;
              });
    if (static_cast<int>(venues.size()) > top_n) venues.resize(top_n);
    return venues;
}

std::string render_metrics(const std::vector<AuthorMetrics>& metrics,
                           const Corpus& corpus, OutputFormat format) {
    if (format == OutputFormat::Json) {
        ordered_json rows = ordered_json::array();
        for (const auto& m : metrics) {
            ordered_json row;
            row["author"] = corpus.authors[m.author_id].canonical_name;
            row["citation_count"] = m.citation_count;
            row["h_index"] = m.h_index;
            row["degree"] = m.degree;
            row["weighted_degree"] = m.weighted_degree;
            row["avg_tie_strength"] = m.avg_tie_strength;
            row["effectiveness"] = m.effectiveness;
            row["ego_betweenness"] = m.ego_betweenness;
            row["power_diversity"] = m.power_diversity;
            row["power_tie_diversity"] = m.power_tie_diversity;
            rows.push_back(std::move(row));
        }
        return rows.dump(2) + "\n";
    }

    const bool full = format == OutputFormat::Csv;
    std::vector<std::vector<std::string>> rows;
    rows.reserve(metrics.size());
    for (const auto& m : metrics)
        rows.push_back(
            metric_row(m, corpus.authors[m.author_id].canonical_name, full));

    if (format == OutputFormat::Markdown)
        return markdown_table(kMetricsHeader, rows);
    std::string out = csv_join(kMetricsHeader) + "\n";
    for (const auto& row : rows) out += csv_join(row) + "\n";
    return out;
}

std::string render_correlations(const std::vector<CorrelationResult>& results,
                                OutputFormat format) {
    if (format == OutputFormat::Json) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : results) {
            ordered_json row;
            row["measure_x"] = r.measure_x;
            row["measure_y"] = r.measure_y;
            if (r.defined) {
                row["rho"] = r.rho;
                row["p_value"] = r.p_value;
            } else {
                row["rho"] = nullptr;
                row["p_value"] = nullptr;
            }
            row["n"] = r.n;
            row["significant_at_0.01"] = r.significant_at(0.01);
            rows.push_back(std::move(row));
        }
        return rows.dump(2) + "\n";
    }

    std::vector<std::vector<std::string>> rows;
    rows.reserve(results.size());
    for (const auto& r : results) {
        std::string rho, p;
        if (r.defined) {
            // markdown is for reading: 3 decimals; CSV keeps everything
            rho = format == OutputFormat::Csv ? format_full(r.rho)
                                              : format_fixed(r.rho, 3);
            p = format == OutputFormat::Csv ? format_full(r.p_value)
                                            : format_compact(r.p_value);
        } else {
            rho = "nan";
            p = "nan";
        }
        rows.push_back({r.measure_x, r.measure_y, rho, p, std::to_string(r.n),
                        r.significant_at(0.01) ? "true" : "false"});
    }

    if (format == OutputFormat::Markdown)
        return markdown_table(kCorrelationsHeader, rows);
    std::string out = csv_join(kCorrelationsHeader) + "\n";
    for (const auto& row : rows) out += csv_join(row) + "\n";
    return out;
}

std::string render_venues(const std::vector<VenueStats>& venues,
                          OutputFormat format) {
    if (format == OutputFormat::Json) {
        ordered_json rows = ordered_json::array();
        for (const auto& v : venues) {
            ordered_json row;
            row["venue"] = v.venue;
            row["publications"] = v.publications;
            row["citations"] = v.citations;
            rows.push_back(std::move(row));
        }
        return rows.dump(2) + "\n";
    }

    std::vector<std::vector<std::string>> rows;
    rows.reserve(venues.size());
    for (const auto& v : venues)
        rows.push_back({v.venue, std::to_string(v.publications),
                        std::to_string(v.citations)});
    if (format == OutputFormat::Markdown)
        return markdown_table(kVenuesHeader, rows);
    std::string out = csv_join(kVenuesHeader) + "\n";
    for (const auto& row : rows) out += csv_join(row) + "\n";
    return out;
}

void atomic_write_file(const std::string& path, const std::string& content) {
    const fs::path target(path);
    if (target.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(target.parent_path(), ec);
        if (ec)
            throw Error("cannot create directory: " +
                        target.parent_path().string());
    }

    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write file: " + tmp.string());
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw Error("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw Error("cannot rename " + tmp.string() + " to " + target.string());
    }
}

}  // namespace scholarnet
