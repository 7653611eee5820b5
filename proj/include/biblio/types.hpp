#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace biblio {

enum class Role { researcher, undergraduate };

std::string_view to_string(Role role);
std::optional<Role> role_from_string(std::string_view text);

// Calendar date, serialized as YYYY-MM-DD.
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    auto operator<=>(const Date&) const = default;
};

std::string to_string(const Date& date);
// Strict YYYY-MM-DD with real calendar validation (month lengths, leap years).
std::optional<Date> parse_date(std::string_view text);

struct Author {
    std::string id;
    std::string name;
    std::optional<int> birth_year;
    Role role = Role::researcher;

    bool operator==(const Author&) const = default;
};

struct Venue {
    std::string id;
    std::string name;

    bool operator==(const Venue&) const = default;
};

struct Publication {
    std::string id;
    std::string title;
    int year = 0;
    std::string venue_id;
    std::vector<std::string> author_ids;  // ordered, non-empty, no duplicates
    bool undergrad_coauthor = false;
    bool feedback_registered = false;

    bool operator==(const Publication&) const = default;
};

// Directed citation: citing publication references the cited one.
// The citation year is always the citing publication's year.
struct CitationEdge {
    std::string citing_id;
    std::string cited_id;

    bool operator==(const CitationEdge&) const = default;
};

// Signed return of findings to the place where the research happened.
struct FeedbackRecord {
    std::string publication_id;
    Date date;
    std::string recipient;
    std::string signatory;

    bool operator==(const FeedbackRecord&) const = default;
};

// Documented dissemination of findings to non-researchers.
struct OutreachAction {
    std::string author_id;
    Date date;
    std::string place;
    std::string description;
    std::string signatory;

    bool operator==(const OutreachAction&) const = default;
};

enum class Severity { warning, error };

// One validation or parse diagnostic. `where` is a source location:
// "file.csv:12" for CSV rows, "$.publications[3].year" for JSON, empty
// when the record was constructed in memory.
struct Issue {
    Severity severity = Severity::error;
    std::string message;
    std::string where;

    bool operator==(const Issue&) const = default;
};

std::string format_issue(const Issue& issue);

}  // namespace biblio
