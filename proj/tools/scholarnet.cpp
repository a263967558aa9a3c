// Command line front end: ingest-check, graph-export, metrics, correlate, top.

#include <iostream>
#include <limits>
#include <string>

#include "CLI11.hpp"
#include "scholarnet/cli.hpp"

namespace {

struct CliOptions {
    std::string input;
    std::string format = "csv";
    std::string aliases;
    bool drop_isolates = false;
    std::string effectiveness = "binary";
    int top_n = 20;
    std::string out = ".";
    std::string out_format = "csv";
    std::string by;
};

scholarnet::RunConfig to_config(const CliOptions& opt) {
    scholarnet::RunConfig config;
    config.input_path = opt.input;
    config.input_format = opt.format == "jsonl"
                              ? scholarnet::InputFormat::Jsonl
                              : scholarnet::InputFormat::Csv;
    if (!opt.aliases.empty()) config.alias_path = opt.aliases;
    config.drop_isolates = opt.drop_isolates;
    config.effectiveness_variant =
        opt.effectiveness == "weighted"
            ? scholarnet::EffectivenessVariant::Weighted
            : scholarnet::EffectivenessVariant::Binary;
    config.top_n = opt.top_n;
    config.output_dir = opt.out;
    if (opt.out_format == "json")
        config.output_format = scholarnet::OutputFormat::Json;
    else if (opt.out_format == "markdown")
        config.output_format = scholarnet::OutputFormat::Markdown;
    else
        config.output_format = scholarnet::OutputFormat::Csv;
    return config;
}

void add_input_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--input", opt.input, "publication records file")
        ->required();
    cmd->add_option("--format", opt.format, "input format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    cmd->add_option("--aliases", opt.aliases,
                    "author alias CSV (from_name,to_name)");
}

void add_pipeline_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_flag("--drop-isolates", opt.drop_isolates,
                  "exclude authors without co-authors");
    cmd->add_option("--effectiveness", opt.effectiveness,
                    "effectiveness variant")
        ->check(CLI::IsMember({"binary", "weighted"}));
}

void add_output_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--out", opt.out, "output directory");
    cmd->add_option("--out-format", opt.out_format, "output format")
        ->check(CLI::IsMember({"csv", "json", "markdown"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"co-authorship network and social capital metrics"};
    app.require_subcommand(1);
    CliOptions opt;

    CLI::App* ingest_check =
        app.add_subcommand("ingest-check", "parse and validate the input");
    add_input_options(ingest_check, opt);

    CLI::App* graph_export = app.add_subcommand(
        "graph-export", "write the co-authorship edge list CSV");
    add_input_options(graph_export, opt);
    add_output_options(graph_export, opt);

    CLI::App* metrics = app.add_subcommand(
        "metrics", "per-author performance and social capital metrics");
    add_input_options(metrics, opt);
    add_pipeline_options(metrics, opt);
    add_output_options(metrics, opt);

    CLI::App* correlate = app.add_subcommand(
        "correlate", "Spearman correlations of capital vs performance");
    add_input_options(correlate, opt);
    add_pipeline_options(correlate, opt);
    add_output_options(correlate, opt);

    CLI::App* top =
        app.add_subcommand("top", "top-N authors or venues by a measure");
    add_input_options(top, opt);
    add_pipeline_options(top, opt);
    add_output_options(top, opt);
    top->add_option("--by", opt.by,
                    "metric column for authors, or publications/citations "
                    "for venues")
        ->required();
    top->add_option("--top-n", opt.top_n, "number of rows")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));

    CLI11_PARSE(app, argc, argv);

    const scholarnet::RunConfig config = to_config(opt);
    if (app.got_subcommand(ingest_check))
        return scholarnet::run_ingest_check(config, std::cout, std::cerr);
    if (app.got_subcommand(graph_export))
        return scholarnet::run_graph_export(config, std::cout, std::cerr);
    if (app.got_subcommand(metrics))
        return scholarnet::run_metrics(config, std::cout, std::cerr);
    if (app.got_subcommand(correlate))
        return scholarnet::run_correlate(config, std::cout, std::cerr);
    if (app.got_subcommand(top))
        return scholarnet::run_top(config, opt.by, std::cout, std::cerr);
    return 1;
}
