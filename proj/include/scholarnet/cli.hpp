#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "scholarnet/ingest.hpp"
#include "scholarnet/metrics.hpp"
#include "scholarnet/report.hpp"

namespace scholarnet {

// Everything a subcommand needs; the CLI front end fills this from argv.
struct RunConfig {
    std::string input_path;
    InputFormat input_format = InputFormat::Csv;
    std::optional<std::string> alias_path;
    bool drop_isolates = false;
    EffectivenessVariant effectiveness_variant = EffectivenessVariant::Binary;
    int top_n = 20;  // >= 1
    std::string output_dir = ".";
    OutputFormat output_format = OutputFormat::Csv;
};

// Each command returns its exit code: 0 on success, 1 with a diagnostic on
// err otherwise. Output files are written atomically; the path of every
// written file is echoed on out.
int run_ingest_check(const RunConfig& config, std::ostream& out,
                     std::ostream& err);
int run_graph_export(const RunConfig& config, std::ostream& out,
                     std::ostream& err);
int run_metrics(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_correlate(const RunConfig& config, std::ostream& out,
                  std::ostream& err);
int run_top(const RunConfig& config, const std::string& by, std::ostream& out,
            std::ostream& err);

}  // namespace scholarnet
