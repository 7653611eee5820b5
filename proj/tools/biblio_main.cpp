#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "biblio/report.hpp"

namespace {

struct FormatOption {
    std::string text = "table";

    biblio::OutputFormat value() const {
        return *biblio::output_format_from_string(text);
    }
};

void add_format_option(CLI::App* command, FormatOption& format) {
    command->add_option("--format", format.text, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bibliometric index engine: corpus validation, quality and "
                 "direction indices, and cross-community collaboration "
                 "recommendations"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::vector<std::string> validate_paths, index_paths, recommend_paths, report_paths,
        graph_paths;

    CLI::App* validate =
        app.add_subcommand("validate", "Check corpus integrity and report all violations");
    validate->add_option("paths", validate_paths, "Corpus inputs (CSV bundle dir, .json, .bib)")
        ->required();

    biblio::IndexOptions index_options;
    FormatOption index_format;
    CLI::App* index = app.add_subcommand("index", "Compute index values per subject");
    index->add_option("paths", index_paths, "Corpus inputs")->required();
    index
        ->add_option("--index", index_options.index,
                     "Index to compute: h, if, cs, mean, selfcite, hcol, aii, rsi, all")
        ->check(CLI::IsMember({"h", "if", "cs", "mean", "selfcite", "hcol", "aii", "rsi", "all"}))
        ->capture_default_str();
    index->add_option("--year", index_options.year,
                      "Evaluation year (required for if, cs, aii; bounds h)");
    auto* subject_option = index->add_option("--subject", index_options.subject,
                                             "Subject id (author, venue, or pair a:b for hcol)");
    index->add_flag("--all-subjects", index_options.all_subjects, "Report every subject")
        ->excludes(subject_option);
    add_format_option(index, index_format);

    biblio::RecommendOptions recommend_options;
    FormatOption recommend_format;
    CLI::App* recommend = app.add_subcommand(
        "recommend", "Suggest cross-community collaboration pairs by the h*0.1 rule");
    recommend->add_option("paths", recommend_paths, "Corpus inputs")->required();
    recommend
        ->add_option("--tolerance", recommend_options.tolerance,
                     "Half-width of the acceptable partner h band")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    recommend->add_option("--limit", recommend_options.limit, "Maximum recommendations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format_option(recommend, recommend_format);

    biblio::ReportOptions report_options;
    CLI::App* report =
        app.add_subcommand("report", "Write the full index/community/recommendation report");
    report->add_option("paths", report_paths, "Corpus inputs")->required();
    report->add_option("--year", report_options.year, "Evaluation year")->required();
    report->add_option("--out", report_options.out_dir, "Output directory")->required();
    report
        ->add_option("--tolerance", report_options.tolerance,
                     "Recommendation band half-width")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    report->add_option("--limit", report_options.limit, "Maximum recommendations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* graph = app.add_subcommand(
        "graph", "Print the coauthorship graph as a tab-separated edge list");
    graph->add_option("paths", graph_paths, "Corpus inputs")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // usage problems exit 2; --help exits 0
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (validate->parsed()) return biblio::run_validate(validate_paths, std::cout, std::cerr);
    if (index->parsed()) {
        index_options.format = index_format.value();
        return biblio::run_index(index_paths, index_options, std::cout, std::cerr);
    }
    if (recommend->parsed()) {
        recommend_options.format = recommend_format.value();
        return biblio::run_recommend(recommend_paths, recommend_options, std::cout, std::cerr);
    }
    if (report->parsed()) return biblio::run_report(report_paths, report_options, std::cout,
                                                    std::cerr);
    if (graph->parsed()) return biblio::run_graph(graph_paths, std::cout, std::cerr);
    return 2;
}
