#include <doctest.h>

#include <algorithm>

#include "biblio/corpus.hpp"
#include "biblio/errors.hpp"
#include "test_util.hpp"

using namespace biblio;

namespace {

bool has_error_containing(const BuildReport& report, std::string_view text) {
    return std::any_of(report.errors.begin(), report.errors.end(), [&](const Issue& issue) {
        return issue.message.find(text) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("empty inputs build an empty valid corpus") {
    BuildReport report = build_corpus({});
    REQUIRE(report.ok());
    CHECK(report.errors.empty());
    CHECK(report.warnings.empty());
    CHECK(report.corpus->authors().empty());
    CHECK(report.corpus->publications().empty());
}

TEST_CASE("dangling author reference is reported by id") {
    CorpusSeed seed = make_seed({{"a1", "Ada", 1970, Role::researcher}}, {{"v1", "V"}},
                                {{"p1", "T", 2015, "v1", {"A9"}, false, false}}, {});
    BuildReport report = build_corpus(std::move(seed));
    REQUIRE_FALSE(report.ok());
    CHECK(has_error_containing(report, "dangling author reference A9"));
}

TEST_CASE("build reports the complete violation list, never a partial corpus") {
    CorpusSeed seed = make_seed(
        {{"a1", "Ada", 1970, Role::researcher}, {"a1", "Ada Again", {}, Role::researcher}},
        {{"v1", "V"}},
        {{"p1", "T", 2015, "v9", {"a1", "a1"}, false, false},
         {"p2", "U", 2016, "v1", {}, false, false}},
        {{"p1", "p1"}, {"p1", "p9"}});
    BuildReport report = build_corpus(std::move(seed));
    REQUIRE_FALSE(report.ok());
    CHECK(has_error_containing(report, "duplicate author id a1"));
    CHECK(has_error_containing(report, "dangling venue reference v9"));
    CHECK(has_error_containing(report, "lists author a1 twice"));
    CHECK(has_error_containing(report, "empty author list"));
    CHECK(has_error_containing(report, "cites itself"));
    CHECK(has_error_containing(report, "dangling cited publication reference p9"));
    CHECK(report.errors.size() >= 6);
}

TEST_CASE("duplicate citation pairs are rejected") {
    CorpusSeed seed = make_seed({{"a1", "Ada", {}, Role::researcher}}, {{"v1", "V"}},
                                {{"p1", "T", 2015, "v1", {"a1"}, false, false},
                                 {"p2", "U", 2016, "v1", {"a1"}, false, false}},
                                {{"p2", "p1"}, {"p2", "p1"}});
    BuildReport report = build_corpus(std::move(seed));
    REQUIRE_FALSE(report.ok());
    CHECK(has_error_containing(report, "duplicate citation p2 -> p1"));
}

TEST_CASE("citation predating the cited work is a warning, not an error") {
    CorpusSeed seed = make_seed({{"a1", "Ada", {}, Role::researcher}}, {{"v1", "V"}},
                                {{"p1", "T", 2014, "v1", {"a1"}, false, false},
                                 {"p2", "U", 2016, "v1", {"a1"}, false, false}},
                                {{"p1", "p2"}});
    BuildReport report = build_corpus(std::move(seed));
    REQUIRE(report.ok());
    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings[0].message.find("predates the cited work") != std::string::npos);
}

TEST_CASE("feedback_registered without a backing record is an error") {
    CorpusSeed seed = make_seed({{"a1", "Ada", {}, Role::researcher}}, {{"v1", "V"}},
                                {{"p1", "T", 2015, "v1", {"a1"}, false, true}}, {});
    BuildReport report = build_corpus(std::move(seed));
    REQUIRE_FALSE(report.ok());
    CHECK(has_error_containing(report, "no feedback record"));
}

TEST_CASE("feedback dated before the publication year is an error") {
    CorpusSeed seed = make_seed({{"a1", "Ada", {}, Role::researcher}}, {{"v1", "V"}},
                                {{"p1", "T", 2015, "v1", {"a1"}, false, true}}, {},
                                {{"p1", {2014, 5, 1}, "Site", "Signer"}});
    BuildReport report = build_corpus(std::move(seed));
    REQUIRE_FALSE(report.ok());
    CHECK(has_error_containing(report, "precedes publication year"));
}

TEST_CASE("birth year after a publication year is an error") {
    CorpusSeed seed = make_seed({{"a1", "Ada", 1990, Role::researcher}}, {{"v1", "V"}},
                                {{"p1", "T", 1985, "v1", {"a1"}, false, false}}, {});
    BuildReport report = build_corpus(std::move(seed));
    REQUIRE_FALSE(report.ok());
    CHECK(has_error_containing(report, "birth_year 1990"));
}

TEST_CASE("undergrad flag is seeded from author roles at build time") {
    CorpusSeed seed = make_seed(
        {{"a1", "Ada", {}, Role::researcher}, {"u1", "Uli", {}, Role::undergraduate}},
        {{"v1", "V"}},
        {{"p1", "T", 2015, "v1", {"a1", "u1"}, false, false},
         {"p2", "U", 2016, "v1", {"a1"}, true, false}},
        {});
    BuildReport report = build_corpus(std::move(seed));
    REQUIRE(report.ok());
    CHECK(report.corpus->find_publication("p1")->undergrad_coauthor);  // seeded from role
    CHECK(report.corpus->find_publication("p2")->undergrad_coauthor);  // explicit flag kept
}

TEST_CASE("micro fixture: derived citation table matches the hand count") {
    Corpus corpus = testutil::load_fixture("micro");

    CitationTally p1 = citations_received(corpus, "p1");
    CHECK(p1.total == 3);
    CHECK(p1.by_year == std::map<int, int>{{2015, 2}, {2016, 1}});

    CitationTally p2 = citations_received(corpus, "p2");
    CHECK(p2.total == 1);
    CHECK(p2.by_year == std::map<int, int>{{2015, 1}});

    CitationTally p3 = citations_received(corpus, "p3");
    CHECK(p3.total == 1);
    CHECK(p3.by_year == std::map<int, int>{{2016, 1}});

    CitationTally p4 = citations_received(corpus, "p4");
    CHECK(p4.total == 0);
    CHECK(p4.by_year.empty());
}

TEST_CASE("citations_received: unknown publication id throws") {
    Corpus corpus = testutil::load_fixture("micro");
    CHECK_THROWS_AS((void)citations_received(corpus, "nope"), DomainError);
    try {
        (void)citations_received(corpus, "nope");
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(e.code() == Errc::unknown_id);
    }
}

TEST_CASE("derived tables rebuild bit-identically") {
    Corpus micro = testutil::load_fixture("micro");
    DerivedTables rebuilt =
        rebuild_derived_tables(micro.authors(), micro.venues(), micro.publications(),
                               micro.citations(), micro.feedback(), micro.outreach());
    CHECK(rebuilt == micro.derived());

    std::mt19937 rng(7);
    for (int round = 0; round < 25; ++round) {
        testutil::RandomCorpusOptions options;
        options.with_feedback = true;
        options.with_outreach = true;
        Corpus corpus = testutil::random_corpus(rng, options);
        DerivedTables once =
            rebuild_derived_tables(corpus.authors(), corpus.venues(), corpus.publications(),
                                   corpus.citations(), corpus.feedback(), corpus.outreach());
        DerivedTables twice =
            rebuild_derived_tables(corpus.authors(), corpus.venues(), corpus.publications(),
                                   corpus.citations(), corpus.feedback(), corpus.outreach());
        CHECK(once == corpus.derived());
        CHECK(once == twice);
    }
}

TEST_CASE("citations_received equals a naive scan of the citation list") {
    std::mt19937 rng(11);
    for (int round = 0; round < 40; ++round) {
        Corpus corpus = testutil::random_corpus(rng);
        for (const Publication& pub : corpus.publications()) {
            CitationTally tally = citations_received(corpus, pub.id);
            CHECK(tally.total == testutil::naive_citation_count(corpus, pub.id));
            int breakdown_sum = 0;
            for (const auto& [year, count] : tally.by_year) {
                (void)year;
                breakdown_sum += count;
            }
            CHECK(breakdown_sum == tally.total);
        }
    }
}

TEST_CASE("corpus content identity is input-order independent") {
    std::vector<Author> authors{{"b", "B", {}, Role::researcher},
                                {"a", "A", {}, Role::researcher}};
    std::vector<Venue> venues{{"v", "V"}};
    std::vector<Publication> pubs{{"p2", "U", 2016, "v", {"b"}, false, false},
                                  {"p1", "T", 2015, "v", {"a"}, false, false}};
    BuildReport forward = build_corpus(make_seed(authors, venues, pubs, {}));
    std::reverse(authors.begin(), authors.end());
    std::reverse(pubs.begin(), pubs.end());
    BuildReport reversed = build_corpus(make_seed(authors, venues, pubs, {}));
    REQUIRE(forward.ok());
    REQUIRE(reversed.ok());
    CHECK(*forward.corpus == *reversed.corpus);
}
