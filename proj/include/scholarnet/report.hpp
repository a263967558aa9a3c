#pragma once

#include <string>
#include <vector>

#include "scholarnet/metrics.hpp"
#include "scholarnet/stats.hpp"

namespace scholarnet {

struct Corpus;

enum class OutputFormat { Csv, Json, Markdown };

// file extension without the dot
std::string output_extension(OutputFormat format);

// Aggregated row of the top-venue tables.
struct VenueStats {
    std::string venue;
    long long publications = 0;
    long long citations = 0;

    bool operator==(const VenueStats&) const = default;
};

std::vector<VenueStats> venue_stats(const Corpus& corpus);

bool is_author_measure(const std::string& by);
bool is_venue_measure(const std::string& by);

// Top-N rows sorted descending by `by`, ties broken by ascending canonical
// name / venue name. Throws UnknownMeasureError.
std::vector<AuthorMetrics> top_authors(std::vector<AuthorMetrics> metrics,
                                       const Corpus& corpus,
                                       const std::string& by, int top_n);
std::vector<VenueStats> top_venues(const Corpus& corpus, const std::string& by,
                                   int top_n);

// Renderers. CSV keeps full precision; markdown rounds non-integer metrics
// to 2 decimals; JSON is an array of row objects.
std::string render_metrics(const std::vector<AuthorMetrics>& metrics,
                           const Corpus& corpus, OutputFormat format);
std::string render_correlations(const std::vector<CorrelationResult>& results,
                                OutputFormat format);
std::string render_venues(const std::vector<VenueStats>& venues,
                          OutputFormat format);

// Writes through a temp file plus rename so a failure never leaves partial
// output behind. Creates missing parent directories.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace scholarnet
