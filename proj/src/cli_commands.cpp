#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "biblio/alternative_indices.hpp"
#include "biblio/classic_indices.hpp"
#include "biblio/collab_graph.hpp"
#include "biblio/errors.hpp"
#include "biblio/ingest.hpp"
#include "biblio/report.hpp"

namespace biblio {

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

void print_issues(std::span<const Issue> issues, std::ostream& stream) {
    for (const Issue& issue : issues) stream << format_issue(issue) << '\n';
}

std::string read_file(const fs::path& path, bool& ok) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
        ok = false;
        return {};
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    ok = true;
    return buffer.str();
}

}  // namespace

LoadResult load_corpus(std::span<const std::string> paths) {
    LoadResult result;
    if (paths.empty()) {
        result.errors.push_back({Severity::error, "no corpus inputs given", ""});
        result.io_error = true;
        return result;
    }

    RawRecordBatch batch;
    for (const std::string& raw_path : paths) {
        const fs::path path(raw_path);
        std::error_code ec;
        if (fs::is_directory(path, ec)) {
            for (int k = 0; k < 6; ++k) {
                const fs::path file = path / csv_file_name(static_cast<CsvKind>(k));
                if (!fs::exists(file, ec)) {
                    result.errors.push_back(
                        {Severity::error, "missing file " + file.string(), ""});
                    result.io_error = true;
                }
            }
            if (result.io_error) return result;
            ParseResult parsed = parse_csv_bundle(path);
            result.errors.insert(result.errors.end(), parsed.errors.begin(),
                                 parsed.errors.end());
            result.warnings.insert(result.warnings.end(), parsed.warnings.begin(),
                                   parsed.warnings.end());
            batch.append(std::move(parsed.batch));
        } else if (path.extension() == ".json") {
            bool ok = false;
            const std::string text = read_file(path, ok);
            if (!ok) {
                result.errors.push_back({Severity::error, "cannot read " + path.string(), ""});
                result.io_error = true;
                return result;
            }
            ParseResult parsed = parse_json_corpus(text, path.filename().string());
            result.errors.insert(result.errors.end(), parsed.errors.begin(),
                                 parsed.errors.end());
            result.warnings.insert(result.warnings.end(), parsed.warnings.begin(),
                                   parsed.warnings.end());
            batch.append(std::move(parsed.batch));
        } else if (path.extension() == ".bib") {
            bool ok = false;
            const std::string text = read_file(path, ok);
            if (!ok) {
                result.errors.push_back({Severity::error, "cannot read " + path.string(), ""});
                result.io_error = true;
                return result;
            }
            // match BibTeX author names against authors gathered so far
            std::vector<std::pair<std::string, std::string>> known;
            for (const RawAuthor& author : batch.authors)
                known.emplace_back(author.name, author.id);
            ParseResult parsed = parse_bibtex_subset(text, known, path.filename().string());
            result.errors.insert(result.errors.end(), parsed.errors.begin(),
                                 parsed.errors.end());
            result.warnings.insert(result.warnings.end(), parsed.warnings.begin(),
                                   parsed.warnings.end());
            batch.append(std::move(parsed.batch));
        } else if (!fs::exists(path, ec)) {
            result.errors.push_back({Severity::error, "missing file " + path.string(), ""});
            result.io_error = true;
            return result;
        } else {
            result.errors.push_back(
                {Severity::error,
                 "unrecognized input " + path.string() + " (expected a directory, .json or .bib)",
                 ""});
            result.io_error = true;
            return result;
        }
    }
    if (!result.errors.empty()) return result;

    BuildReport built = corpus_from_batch(batch);
    result.errors.insert(result.errors.end(), built.errors.begin(), built.errors.end());
    result.warnings.insert(result.warnings.end(), built.warnings.begin(), built.warnings.end());
    if (built.ok()) result.corpus = std::move(*built.corpus);
    return result;
}

int run_validate(std::span<const std::string> paths, std::ostream& out, std::ostream& err) {
    LoadResult loaded = load_corpus(paths);
    print_issues(loaded.warnings, err);
    print_issues(loaded.errors, err);
    if (loaded.io_error) return kExitUsage;
    if (!loaded.ok()) return kExitDomain;
    const Corpus& corpus = *loaded.corpus;
    out << "corpus valid: " << corpus.authors().size() << " authors, "
        << corpus.venues().size() << " venues, " << corpus.publications().size()
        << " publications, " << corpus.citations().size() << " citations, "
        << corpus.feedback().size() << " feedback records, " << corpus.outreach().size()
        << " outreach actions";
    if (!loaded.warnings.empty()) out << " (" << loaded.warnings.size() << " warnings)";
    out << '\n';
    return kExitOk;
}

namespace {

bool is_author_index(IndexKind kind) {
    switch (kind) {
        case IndexKind::h:
        case IndexKind::mean_citations:
        case IndexKind::self_citation_rate:
        case IndexKind::aii:
        case IndexKind::rsi: return true;
        default: return false;
    }
}

bool is_venue_index(IndexKind kind) {
    return kind == IndexKind::impact_factor || kind == IndexKind::cite_score;
}

bool requires_year(IndexKind kind) {
    return kind == IndexKind::impact_factor || kind == IndexKind::cite_score ||
           kind == IndexKind::aii;
}

// One computed row; domain errors become the row's error string.
ReportRow index_row(const Corpus& corpus, IndexKind kind, const std::string& subject,
                    std::optional<int> year) {
    try {
        switch (kind) {
            case IndexKind::h: {
                IndexValue value;
                value.kind = kind;
                value.subject_id = subject;
                value.evaluation_year = year;
                CitationProfile profile{citation_counts_desc(corpus, subject, year)};
                value.value = static_cast<double>(h_from_counts(profile.counts_desc));
                value.inputs = std::move(profile);
                return row_from_index_value(value);
            }
            case IndexKind::mean_citations: {
                IndexValue value;
                value.kind = kind;
                value.subject_id = subject;
                value.value = mean_citations(corpus, subject);
                value.inputs = mean_citation_counts(corpus, subject);
                return row_from_index_value(value);
            }
            case IndexKind::self_citation_rate: {
                IndexValue value;
                value.kind = kind;
                value.subject_id = subject;
                value.value = self_citation_rate(corpus, subject);
                value.inputs = self_citation_counts(corpus, subject);
                return row_from_index_value(value);
            }
            case IndexKind::aii: {
                IndexValue value;
                value.kind = kind;
                value.subject_id = subject;
                value.evaluation_year = year;
                value.value = academic_impact_index_for_author(corpus, subject, *year);
                value.inputs = aii_inputs_for_author(corpus, subject, *year);
                return row_from_index_value(value);
            }
            case IndexKind::rsi: {
                IndexValue value;
                value.kind = kind;
                value.subject_id = subject;
                value.value = responsible_social_impact_for_author(corpus, subject);
                value.inputs = rsi_inputs_for_author(corpus, subject);
                return row_from_index_value(value);
            }
            case IndexKind::impact_factor:
                return row_from_index_value(impact_factor(corpus, subject, *year));
            case IndexKind::cite_score:
                return row_from_index_value(cite_score(corpus, subject, *year));
            case IndexKind::hcol:
                break;  // handled by hcol_row
        }
    } catch (const DomainError& e) {
        ReportRow row;
        row.subject_id = subject;
        row.index = std::string(to_string(kind));
        row.year = requires_year(kind) ? year : std::nullopt;
        row.error = e.what();
        return row;
    }
    ReportRow row;
    row.subject_id = subject;
    row.index = std::string(to_string(kind));
    row.error = "unsupported index";
    return row;
}

ReportRow hcol_row(const Corpus& corpus, const std::string& a, const std::string& b) {
    try {
        PairCollaboration pair = collaboration_for_pair(corpus, a, b);
        IndexValue value;
        value.kind = IndexKind::hcol;
        value.subject_id = pair.senior_id + ":" + pair.junior_id;
        value.value = h_col(pair.counts);
        value.inputs = RatioCounts{pair.counts.joint_publications,
                                   pair.counts.senior_total_publications};
        return row_from_index_value(value);
    } catch (const DomainError& e) {
        ReportRow row;
        row.subject_id = a + ":" + b;
        row.index = "hcol";
        row.error = e.what();
        return row;
    }
}

void sort_rows(std::vector<ReportRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        if (a.subject_id != b.subject_id) return a.subject_id < b.subject_id;
        return a.index < b.index;
    });
}

void emit(const ReportDocument& document, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::table: out << to_table(document); break;
        case OutputFormat::json: out << to_json(document).dump(2) << '\n'; break;
        case OutputFormat::csv: out << to_csv(document); break;
    }
}

// All coauthor pairs (graph edges) as oriented id pairs, deduplicated.
std::vector<std::pair<std::string, std::string>> coauthor_pairs(const Corpus& corpus,
                                                                const CoauthorGraph& graph) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        for (const auto& [neighbor, weight] : graph.adjacency[i]) {
            (void)weight;
            if (neighbor > i)
                pairs.push_back(
                    orient_pair(corpus, graph.node_ids[i], graph.node_ids[neighbor]));
        }
    }
    return pairs;
}

std::vector<ReportRow> rows_for_kind(const Corpus& corpus, IndexKind kind,
                                     std::optional<int> year) {
    std::vector<ReportRow> rows;
    if (is_author_index(kind)) {
        for (const Author& author : corpus.authors())
            rows.push_back(index_row(corpus, kind, author.id, year));
    } else if (is_venue_index(kind)) {
        for (const Venue& venue : corpus.venues())
            rows.push_back(index_row(corpus, kind, venue.id, year));
    } else {  // hcol
        CoauthorGraph graph = build_coauthor_graph(corpus);
        for (const auto& [senior, junior] : coauthor_pairs(corpus, graph))
            rows.push_back(hcol_row(corpus, senior, junior));
    }
    return rows;
}

}  // namespace

int run_index(std::span<const std::string> paths, const IndexOptions& options, std::ostream& out,
              std::ostream& err) {
    std::vector<IndexKind> kinds;
    if (options.index == "all") {
        kinds = {IndexKind::h,
                 IndexKind::impact_factor,
                 IndexKind::cite_score,
                 IndexKind::mean_citations,
                 IndexKind::self_citation_rate,
                 IndexKind::hcol,
                 IndexKind::aii,
                 IndexKind::rsi};
    } else if (auto kind = index_kind_from_string(options.index)) {
        kinds = {*kind};
    } else {
        err << "unknown index '" << options.index
            << "' (expected h, if, cs, mean, selfcite, hcol, aii, rsi or all)\n";
        return kExitUsage;
    }
    for (IndexKind kind : kinds) {
        if (requires_year(kind) && !options.year) {
            err << "--year is required for index '" << to_string(kind) << "'\n";
            return kExitUsage;
        }
    }
    if (!options.subject && !options.all_subjects) {
        err << "either --subject or --all-subjects is required\n";
        return kExitUsage;
    }

    LoadResult loaded = load_corpus(paths);
    print_issues(loaded.warnings, err);
    print_issues(loaded.errors, err);
    if (loaded.io_error) return kExitUsage;
    if (!loaded.ok()) return kExitDomain;
    const Corpus& corpus = *loaded.corpus;

    ReportDocument document;
    document.kind = "index";
    document.evaluation_year = options.year;
    document.corpus_fingerprint = corpus_fingerprint(corpus);

    if (options.all_subjects) {
        for (IndexKind kind : kinds) {
            auto rows = rows_for_kind(corpus, kind, options.year);
            document.rows.insert(document.rows.end(), std::make_move_iterator(rows.begin()),
                                 std::make_move_iterator(rows.end()));
        }
    } else {
        const std::string& subject = *options.subject;
        const auto colon = subject.find(':');
        const bool is_pair = colon != std::string::npos;
        const bool subject_is_author = corpus.find_author(subject) != nullptr;
        const bool subject_is_venue = corpus.find_venue(subject) != nullptr;
        if (!is_pair && !subject_is_author && !subject_is_venue) {
            err << "unknown subject id '" << subject << "'\n";
            return kExitDomain;
        }
        for (IndexKind kind : kinds) {
            if (kind == IndexKind::hcol) {
                if (!is_pair) {
                    if (options.index == "hcol") {
                        err << "--index hcol takes --subject <author_a>:<author_b>\n";
                        return kExitUsage;
                    }
                    continue;
                }
                const std::string a = subject.substr(0, colon);
                const std::string b = subject.substr(colon + 1);
                if (!corpus.find_author(a) || !corpus.find_author(b)) {
                    err << "unknown subject id '" << subject << "'\n";
                    return kExitDomain;
                }
                document.rows.push_back(hcol_row(corpus, a, b));
            } else if (is_pair) {
                if (options.index != "all") {
                    err << "index '" << to_string(kind) << "' takes a single subject id\n";
                    return kExitUsage;
                }
            } else if ((is_author_index(kind) && subject_is_author) ||
                       (is_venue_index(kind) && subject_is_venue)) {
                document.rows.push_back(index_row(corpus, kind, subject, options.year));
            } else if (kinds.size() == 1) {
                err << "subject '" << subject << "' does not match index '" << to_string(kind)
                    << "' (author vs venue)\n";
                return kExitDomain;
            }
        }
    }

    sort_rows(document.rows);
    emit(document, options.format, out);
    return kExitOk;
}

namespace {

ReportRow recommendation_row(const Recommendation& rec, int rank) {
    ReportRow row;
    row.subject_id = rec.senior_id + ":" + rec.junior_id;
    row.index = "recommendation";
    row.value = rec.score;
    row.inputs["rank"] = rank;
    row.inputs["senior_h"] = rec.senior_h;
    row.inputs["junior_h"] = rec.junior_h;
    row.inputs["target_h"] = rec.target_h;
    row.inputs["senior_community"] = rec.senior_community;
    row.inputs["junior_community"] = rec.junior_community;
    row.inputs["shared_coauthors"] = rec.shared_coauthors;
    return row;
}

}  // namespace

int run_recommend(std::span<const std::string> paths, const RecommendOptions& options,
                  std::ostream& out, std::ostream& err) {
    LoadResult loaded = load_corpus(paths);
    print_issues(loaded.warnings, err);
    print_issues(loaded.errors, err);
    if (loaded.io_error) return kExitUsage;
    if (!loaded.ok()) return kExitDomain;
    const Corpus& corpus = *loaded.corpus;

    CoauthorGraph graph = build_coauthor_graph(corpus);
    if (graph.total_weight == 0) {
        err << "no coauthorship structure: the corpus has no joint publications\n";
        return kExitDomain;
    }
    Partition partition = detect_communities(graph);
    std::vector<Recommendation> recommendations = recommend_pairs(
        corpus, graph, partition, options.tolerance, static_cast<std::size_t>(options.limit));

    ReportDocument document;
    document.kind = "recommendations";
    document.corpus_fingerprint = corpus_fingerprint(corpus);
    int rank = 1;
    for (const Recommendation& rec : recommendations)
        document.rows.push_back(recommendation_row(rec, rank++));
    sort_rows(document.rows);
    emit(document, options.format, out);
    return kExitOk;
}

int run_graph(std::span<const std::string> paths, std::ostream& out, std::ostream& err) {
    LoadResult loaded = load_corpus(paths);
    print_issues(loaded.warnings, err);
    print_issues(loaded.errors, err);
    if (loaded.io_error) return kExitUsage;
    if (!loaded.ok()) return kExitDomain;
    out << edge_list_text(build_coauthor_graph(*loaded.corpus));
    return kExitOk;
}

int run_report(std::span<const std::string> paths, const ReportOptions& options,
               std::ostream& out, std::ostream& err) {
    LoadResult loaded = load_corpus(paths);
    print_issues(loaded.warnings, err);
    print_issues(loaded.errors, err);
    if (loaded.io_error) return kExitUsage;
    if (!loaded.ok()) return kExitDomain;
    const Corpus& corpus = *loaded.corpus;
    const std::string fingerprint = corpus_fingerprint(corpus);

    std::error_code ec;
    fs::create_directories(options.out_dir, ec);
    if (ec) {
        err << "cannot create output directory " << options.out_dir << ": " << ec.message()
            << '\n';
        return kExitUsage;
    }

    auto write_file = [&](std::string_view name, const std::string& content) {
        const fs::path path = fs::path(options.out_dir) / name;
        std::ofstream stream(path, std::ios::binary);
        if (!stream) {
            err << "cannot write " << path.string() << '\n';
            return false;
        }
        stream << content;
        return static_cast<bool>(stream);
    };

    // author_indices.csv / venue_indices.csv: same rows the index command
    // emits, concatenated over the per-subject index kinds
    ReportDocument authors_doc;
    authors_doc.kind = "index";
    authors_doc.evaluation_year = options.year;
    authors_doc.corpus_fingerprint = fingerprint;
    for (IndexKind kind : {IndexKind::h, IndexKind::mean_citations,
                           IndexKind::self_citation_rate, IndexKind::aii, IndexKind::rsi}) {
        auto rows = rows_for_kind(corpus, kind, options.year);
        authors_doc.rows.insert(authors_doc.rows.end(), std::make_move_iterator(rows.begin()),
                                std::make_move_iterator(rows.end()));
    }
    sort_rows(authors_doc.rows);

    ReportDocument venues_doc;
    venues_doc.kind = "index";
    venues_doc.evaluation_year = options.year;
    venues_doc.corpus_fingerprint = fingerprint;
    for (IndexKind kind : {IndexKind::impact_factor, IndexKind::cite_score}) {
        auto rows = rows_for_kind(corpus, kind, options.year);
        venues_doc.rows.insert(venues_doc.rows.end(), std::make_move_iterator(rows.begin()),
                               std::make_move_iterator(rows.end()));
    }
    sort_rows(venues_doc.rows);

    // communities.csv + recommendations.csv; an edgeless corpus has neither
    // communities nor recommendations, the files still appear with headers
    std::string communities_csv = "# corpus_fingerprint=" + fingerprint + "\n";
    ReportDocument recommend_doc;
    recommend_doc.kind = "recommendations";
    recommend_doc.corpus_fingerprint = fingerprint;

    CoauthorGraph graph = build_coauthor_graph(corpus);
    if (graph.total_weight > 0) {
        Partition partition = detect_communities(graph);
        communities_csv += "# modularity_q=" + format_double(partition.modularity_q) + "\n";
        communities_csv += "author_id,community\n";
        for (std::size_t i = 0; i < graph.node_count(); ++i) {
            communities_csv +=
                graph.node_ids[i] + "," + std::to_string(partition.labels[i]) + "\n";
        }
        auto recommendations = recommend_pairs(corpus, graph, partition, options.tolerance,
                                               static_cast<std::size_t>(options.limit));
        int rank = 1;
        for (const Recommendation& rec : recommendations)
            recommend_doc.rows.push_back(recommendation_row(rec, rank++));
        sort_rows(recommend_doc.rows);
    } else {
        communities_csv += "# modularity_q=undefined\n";
        communities_csv += "author_id,community\n";
    }

    // plot_data.csv: long-format distribution of every defined value
    std::string plot_csv = "# corpus_fingerprint=" + fingerprint + "\n";
    plot_csv += "index,subject_id,value\n";
    {
        std::vector<const ReportRow*> defined;
        for (const ReportRow& row : authors_doc.rows)
            if (row.value) defined.push_back(&row);
        for (const ReportRow& row : venues_doc.rows)
            if (row.value) defined.push_back(&row);
        std::sort(defined.begin(), defined.end(), [](const ReportRow* a, const ReportRow* b) {
            if (a->index != b->index) return a->index < b->index;
            return a->subject_id < b->subject_id;
        });
        for (const ReportRow* row : defined) {
            plot_csv += row->index + "," + csv_escape(row->subject_id) + "," +
                        format_double(*row->value) + "\n";
        }
    }

    if (!write_file("author_indices.csv", to_csv(authors_doc))) return kExitUsage;
    if (!write_file("venue_indices.csv", to_csv(venues_doc))) return kExitUsage;
    if (!write_file("communities.csv", communities_csv)) return kExitUsage;
    if (!write_file("recommendations.csv", to_csv(recommend_doc))) return kExitUsage;
    if (!write_file("plot_data.csv", plot_csv)) return kExitUsage;

    out << "wrote 5 files to " << options.out_dir << " (fingerprint " << fingerprint << ")\n";
    return kExitOk;
}

std::span<const std::string_view> report_file_names() {
    static constexpr std::string_view kNames[] = {
        "author_indices.csv", "venue_indices.csv", "communities.csv",
        "recommendations.csv", "plot_data.csv",
    };
    return kNames;
}

}  // namespace biblio
