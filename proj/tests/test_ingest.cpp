#include <doctest.h>

#include <algorithm>

#include "biblio/ingest.hpp"
#include "test_util.hpp"

using namespace biblio;

namespace {

bool has_error_containing(const ParseResult& result, std::string_view text) {
    return std::any_of(result.errors.begin(), result.errors.end(), [&](const Issue& issue) {
        return issue.message.find(text) != std::string::npos ||
               issue.where.find(text) != std::string::npos;
    });
}

bool has_warning_containing(const ParseResult& result, std::string_view text) {
    return std::any_of(result.warnings.begin(), result.warnings.end(), [&](const Issue& issue) {
        return issue.message.find(text) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("authors.csv with only a valid header parses to an empty batch") {
    ParseResult result = parse_csv_file(CsvKind::authors, "id,name,birth_year,role\n",
                                        "authors.csv");
    CHECK(result.ok());
    CHECK(result.batch.size() == 0);
}

TEST_CASE("a non-integer year is reported with file, line and the bad value") {
    const std::string text =
        "id,title,year,venue_id,author_ids,undergrad_coauthor,feedback_registered\n"
        "p1,Title,201X,v1,a1,false,false\n";
    ParseResult result = parse_csv_file(CsvKind::publications, text, "publications.csv");
    REQUIRE_FALSE(result.ok());
    CHECK(result.errors.size() == 1);
    CHECK(result.errors[0].message.find("201X") != std::string::npos);
    CHECK(result.errors[0].where == "publications.csv:2");
    CHECK(result.batch.publications.empty());  // reported, not silently kept
}

TEST_CASE("malformed booleans, roles and dates are rejected with locations") {
    ParseResult bad_bool = parse_csv_file(
        CsvKind::publications,
        "id,title,year,venue_id,author_ids,undergrad_coauthor,feedback_registered\n"
        "p1,Title,2015,v1,a1,TRUE,false\n",
        "publications.csv");
    REQUIRE_FALSE(bad_bool.ok());
    CHECK(bad_bool.errors[0].message.find("TRUE") != std::string::npos);

    ParseResult bad_role =
        parse_csv_file(CsvKind::authors, "id,name,birth_year,role\na1,Ada,1970,professor\n",
                       "authors.csv");
    REQUIRE_FALSE(bad_role.ok());
    CHECK(bad_role.errors[0].message.find("professor") != std::string::npos);

    ParseResult bad_date = parse_csv_file(
        CsvKind::feedback,
        "publication_id,date,recipient,signatory\np1,2015-13-01,Site,Signer\n",
        "feedback.csv");
    REQUIRE_FALSE(bad_date.ok());
    CHECK(bad_date.errors[0].message.find("2015-13-01") != std::string::npos);
    CHECK(bad_date.errors[0].where == "feedback.csv:2");
}

TEST_CASE("wrong field counts and a wrong header are structural errors") {
    ParseResult short_row = parse_csv_file(CsvKind::venues, "id,name\nv1\n", "venues.csv");
    REQUIRE_FALSE(short_row.ok());
    CHECK(short_row.errors[0].message.find("expected 2 fields, got 1") != std::string::npos);

    ParseResult bad_header =
        parse_csv_file(CsvKind::venues, "ident,name\nv1,V\n", "venues.csv");
    REQUIRE_FALSE(bad_header.ok());
    CHECK(bad_header.errors[0].message.find("invalid header") != std::string::npos);
}

TEST_CASE("quoted CSV fields keep embedded commas, quotes and newlines") {
    const std::string text = "id,name\nv1,\"Data, Models & \"\"Methods\"\"\"\nv2,\"two\nlines\"\n";
    ParseResult result = parse_csv_file(CsvKind::venues, text, "venues.csv");
    REQUIRE(result.ok());
    REQUIRE(result.batch.venues.size() == 2);
    CHECK(result.batch.venues[0].name == "Data, Models & \"Methods\"");
    CHECK(result.batch.venues[1].name == "two\nlines");
    CHECK(result.batch.venues[1].where == "venues.csv:3");
}

TEST_CASE("12-row fixture bundle parses to exactly the recorded fields") {
    ParseResult result = parse_csv_bundle(testutil::fixture_root() / "ingest12");
    REQUIRE(result.ok());
    CHECK(result.batch.size() == 12);

    REQUIRE(result.batch.authors.size() == 2);
    CHECK(result.batch.authors[0].id == "i-a1");
    CHECK(result.batch.authors[0].name == "Ana Silva");
    CHECK(result.batch.authors[0].birth_year == "1980");
    CHECK(result.batch.authors[0].role == "researcher");
    CHECK(result.batch.authors[0].where == "authors.csv:2");
    CHECK(result.batch.authors[1].id == "i-a2");
    CHECK(result.batch.authors[1].birth_year == "");
    CHECK(result.batch.authors[1].role == "undergraduate");

    REQUIRE(result.batch.venues.size() == 1);
    CHECK(result.batch.venues[0].name == "Data, Models & \"Methods\"");

    REQUIRE(result.batch.publications.size() == 3);
    CHECK(result.batch.publications[0].id == "i-p1");
    CHECK(result.batch.publications[0].title == "First Steps");
    CHECK(result.batch.publications[0].year == "2015");
    CHECK(result.batch.publications[0].venue_id == "i-v1");
    CHECK(result.batch.publications[0].author_ids == "i-a1");
    CHECK(result.batch.publications[0].undergrad_coauthor == "false");
    CHECK(result.batch.publications[0].feedback_registered == "true");
    CHECK(result.batch.publications[1].author_ids == "i-a1;i-a2");

    REQUIRE(result.batch.citations.size() == 2);
    CHECK(result.batch.citations[0].citing_id == "i-p2");
    CHECK(result.batch.citations[0].cited_id == "i-p1");

    REQUIRE(result.batch.feedback.size() == 2);
    CHECK(result.batch.feedback[0].date == "2016-03-01");
    CHECK(result.batch.feedback[0].recipient == "Riverside Clinic");
    CHECK(result.batch.feedback[1].signatory == "Head Teacher");

    REQUIRE(result.batch.outreach.size() == 2);
    CHECK(result.batch.outreach[0].author_id == "i-a1");
    CHECK(result.batch.outreach[0].description == "Public lecture on findings");
    CHECK(result.batch.outreach[1].place == "Science Fair");
}

TEST_CASE("an explicit file set parses like the directory form") {
    const auto root = testutil::fixture_root() / "ingest12";
    const std::vector<std::filesystem::path> files{root / "authors.csv", root / "venues.csv",
                                                   root / "publications.csv"};
    ParseResult result = parse_csv_bundle(files);
    REQUIRE(result.ok());
    CHECK(result.batch.size() == 6);  // 2 authors + 1 venue + 3 publications
    CHECK(result.batch.citations.empty());

    const std::vector<std::filesystem::path> unknown{root / "authors.csv",
                                                     root / "extra.csv"};
    ParseResult bad = parse_csv_bundle(unknown);
    REQUIRE_FALSE(bad.ok());
    CHECK(has_error_containing(bad, "unrecognized bundle file name extra.csv"));
}

TEST_CASE("the empty JSON corpus parses to an empty batch") {
    ParseResult result = parse_json_corpus(
        R"({"authors":[],"venues":[],"publications":[],"citations":[],"feedback":[],"outreach":[]})");
    CHECK(result.ok());
    CHECK(result.batch.size() == 0);
}

TEST_CASE("unknown JSON keys are rejected with their path") {
    ParseResult result = parse_json_corpus(
        R"({"authors":[],"venues":[],"publications":[],"citiations":[],"citations":[],"feedback":[],"outreach":[]})");
    REQUIRE_FALSE(result.ok());
    CHECK(has_error_containing(result, "unknown key at $.citiations"));

    ParseResult nested = parse_json_corpus(
        R"({"authors":[{"id":"a","name":"A","role":"researcher","rank":3}],"venues":[],"publications":[],"citations":[],"feedback":[],"outreach":[]})");
    REQUIRE_FALSE(nested.ok());
    CHECK(has_error_containing(nested, "unknown key at $.authors[0].rank"));
}

TEST_CASE("JSON syntax errors carry a byte position") {
    ParseResult result = parse_json_corpus("{\"authors\": [", "broken.json");
    REQUIRE_FALSE(result.ok());
    CHECK(has_error_containing(result, "syntax error at byte"));
    CHECK(result.errors[0].where == "broken.json");
}

TEST_CASE("wrong JSON types are rejected with their path") {
    ParseResult stringly_year = parse_json_corpus(
        R"({"authors":[],"venues":[],"publications":[{"id":"p","title":"T","year":"2015","venue_id":"v","author_ids":["a"],"undergrad_coauthor":false,"feedback_registered":false}],"citations":[],"feedback":[],"outreach":[]})");
    REQUIRE_FALSE(stringly_year.ok());
    CHECK(has_error_containing(stringly_year, "$.publications[0].year: expected integer"));

    ParseResult non_array = parse_json_corpus(
        R"({"authors":{},"venues":[],"publications":[],"citations":[],"feedback":[],"outreach":[]})");
    REQUIRE_FALSE(non_array.ok());
    CHECK(has_error_containing(non_array, "$.authors: expected array"));

    ParseResult missing = parse_json_corpus(
        R"({"authors":[],"venues":[],"publications":[],"citations":[],"feedback":[]})");
    REQUIRE_FALSE(missing.ok());
    CHECK(has_error_containing(missing, "missing key $.outreach"));
}

TEST_CASE("the same corpus as CSV and JSON builds identical corpora") {
    ParseResult from_csv = parse_csv_bundle(testutil::fixture_root() / "micro");
    REQUIRE(from_csv.ok());
    BuildReport csv_report = corpus_from_batch(from_csv.batch);
    REQUIRE(csv_report.ok());

    ParseResult from_json = parse_json_corpus(
        testutil::read_file(testutil::fixture_root() / "micro" / "corpus.json"),
        "corpus.json");
    REQUIRE(from_json.ok());
    BuildReport json_report = corpus_from_batch(from_json.batch);
    REQUIRE(json_report.ok());

    CHECK(*csv_report.corpus == *json_report.corpus);
}

TEST_CASE("serializing and re-parsing a corpus is the identity") {
    for (const char* fixture : {"micro", "ingest12", "profiles", "window", "collab"}) {
        CAPTURE(fixture);
        Corpus corpus = testutil::load_fixture(fixture);
        ParseResult reparsed = parse_json_corpus(corpus_to_json_text(corpus));
        REQUIRE(reparsed.ok());
        BuildReport rebuilt = corpus_from_batch(reparsed.batch);
        REQUIRE(rebuilt.ok());
        CHECK(*rebuilt.corpus == corpus);
    }

    std::mt19937 rng(61);
    for (int round = 0; round < 20; ++round) {
        testutil::RandomCorpusOptions options;
        options.with_feedback = true;
        options.with_outreach = true;
        Corpus corpus = testutil::random_corpus(rng, options);
        ParseResult reparsed = parse_json_corpus(corpus_to_json_text(corpus));
        REQUIRE(reparsed.ok());
        BuildReport rebuilt = corpus_from_batch(reparsed.batch);
        REQUIRE(rebuilt.ok());
        CHECK(*rebuilt.corpus == corpus);
    }
}

TEST_CASE("every parse error carries a source location") {
    for (const ParseResult& result :
         {parse_csv_file(CsvKind::authors, "id,name,birth_year,role\n,A,,researcher\n",
                         "authors.csv"),
          parse_csv_file(CsvKind::publications,
                         "id,title,year,venue_id,author_ids,undergrad_coauthor,"
                         "feedback_registered\np1,T,bad,v,a,false,false\n",
                         "publications.csv"),
          parse_json_corpus("[1,2]", "doc.json"),
          parse_bibtex_subset("@article{x, title={T}, journal={J}, author={A B}}", {},
                              "refs.bib")}) {
        REQUIRE_FALSE(result.ok());
        for (const Issue& issue : result.errors) CHECK_FALSE(issue.where.empty());
    }
}

TEST_CASE("an empty BibTeX document parses to an empty batch") {
    ParseResult result = parse_bibtex_subset("");
    CHECK(result.ok());
    CHECK(result.batch.size() == 0);
}

TEST_CASE("a two-author article yields one publication, one venue, two authors") {
    ParseResult result = parse_bibtex_subset(
        "@article{k1, title={T}, year={2015}, journal={J}, author={Ana Silva and Bo Li}}");
    REQUIRE(result.ok());
    REQUIRE(result.batch.publications.size() == 1);
    REQUIRE(result.batch.venues.size() == 1);
    REQUIRE(result.batch.authors.size() == 2);

    const RawPublication& pub = result.batch.publications[0];
    CHECK(pub.id == "k1");
    CHECK(pub.title == "T");
    CHECK(pub.year == "2015");
    CHECK(pub.venue_id == result.batch.venues[0].id);
    CHECK(pub.author_ids == "ana-silva;bo-li");
    CHECK(result.batch.venues[0].name == "J");
    CHECK(result.batch.authors[0].name == "Ana Silva");
    CHECK(result.batch.authors[0].role == "researcher");
    CHECK(result.batch.authors[0].birth_year == "");
    CHECK(result.batch.authors[1].name == "Bo Li");
}

TEST_CASE("unbalanced braces are reported with the entry key") {
    ParseResult result = parse_bibtex_subset(
        "@article{k2, title={Unbalanced {brace}, year={2015}}");
    REQUIRE_FALSE(result.ok());
    CHECK(has_error_containing(result, "unbalanced braces in entry k2"));
}

TEST_CASE("missing required BibTeX fields are errors") {
    ParseResult no_year = parse_bibtex_subset(
        "@article{k3, title={T}, journal={J}, author={A B}}");
    REQUIRE_FALSE(no_year.ok());
    CHECK(has_error_containing(no_year, "missing required field year"));

    ParseResult no_booktitle = parse_bibtex_subset(
        "@inproceedings{k4, title={T}, year={2001}, author={A B}}");
    REQUIRE_FALSE(no_booktitle.ok());
    CHECK(has_error_containing(no_booktitle, "missing required field booktitle"));

    ParseResult bad_year = parse_bibtex_subset(
        "@article{k5, title={T}, year={MMXV}, journal={J}, author={A B}}");
    REQUIRE_FALSE(bad_year.ok());
    CHECK(has_error_containing(bad_year, "invalid year 'MMXV' in entry k5"));
}

TEST_CASE("duplicate BibTeX entry keys are errors") {
    ParseResult result = parse_bibtex_subset(
        "@article{k1, title={T}, year={2015}, journal={J}, author={A B}}\n"
        "@article{k1, title={U}, year={2016}, journal={J}, author={A B}}");
    REQUIRE_FALSE(result.ok());
    CHECK(has_error_containing(result, "duplicate entry key k1"));
}

TEST_CASE("known author names reuse their existing ids") {
    std::vector<std::pair<std::string, std::string>> known{{"Ana Silva", "i-a1"}};
    ParseResult result = parse_bibtex_subset(
        "@article{k1, title={T}, year={2015}, journal={J}, author={Ana Silva and Cid Reyes}}",
        known);
    REQUIRE(result.ok());
    // only the unmatched name becomes a new author record
    REQUIRE(result.batch.authors.size() == 1);
    CHECK(result.batch.authors[0].name == "Cid Reyes");
    CHECK(result.batch.publications[0].author_ids == "i-a1;cid-reyes");
}

TEST_CASE("the shipped BibTeX fixture parses to the documented record set") {
    ParseResult result = parse_bibtex_subset(
        testutil::read_file(testutil::fixture_root() / "bibtex" / "sample.bib"), {},
        "sample.bib");
    REQUIRE(result.ok());

    REQUIRE(result.batch.publications.size() == 2);
    const RawPublication& first = result.batch.publications[0];
    CHECK(first.id == "silva2015models");
    CHECK(first.title == "Collaborative Bibliometric Models");
    CHECK(first.year == "2015");
    CHECK(first.author_ids == "ana-silva;bo-li");
    const RawPublication& second = result.batch.publications[1];
    CHECK(second.id == "li2016networks");
    CHECK(second.title == "Coauthorship Networks at Scale");
    CHECK(second.year == "2016");
    CHECK(second.author_ids == "bo-li");

    REQUIRE(result.batch.venues.size() == 2);
    CHECK(result.batch.venues[0].name == "Journal of Data Studies");
    CHECK(result.batch.venues[1].name == "Metrics Workshop Proceedings");

    REQUIRE(result.batch.authors.size() == 2);
    CHECK(result.batch.authors[0].id == "ana-silva");
    CHECK(result.batch.authors[1].id == "bo-li");

    CHECK(has_warning_containing(result, "ignoring field 'note'"));
    CHECK(has_warning_containing(result, "ignoring unsupported entry type @book"));

    // the imported records form a valid corpus on their own
    BuildReport built = corpus_from_batch(result.batch);
    REQUIRE(built.ok());
    CHECK(built.corpus->publications().size() == 2);
}
