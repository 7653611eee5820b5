#include "biblio/types.hpp"

#include <cctype>
#include <cstdio>

namespace biblio {

std::string_view to_string(Role role) {
    return role == Role::undergraduate ? "undergraduate" : "researcher";
}

std::optional<Role> role_from_string(std::string_view text) {
    if (text == "researcher") return Role::researcher;
    if (text == "undergraduate") return Role::undergraduate;
    return std::nullopt;
}

std::string to_string(const Date& date) {
    char buffer[16];
    std::snprintf(buffer, sizeof buffer, "%04d-%02d-%02d", date.year, date.month, date.day);
    return buffer;
}

namespace {

bool is_leap(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static constexpr int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap(year)) return 29;
    return lengths[month - 1];
}

bool all_digits(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

std::optional<Date> parse_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    std::string_view y = text.substr(0, 4);
    std::string_view m = text.substr(5, 2);
    std::string_view d = text.substr(8, 2);
    if (!all_digits(y) || !all_digits(m) || !all_digits(d)) return std::nullopt;
    Date date;
    date.year = (y[0] - '0') * 1000 + (y[1] - '0') * 100 + (y[2] - '0') * 10 + (y[3] - '0');
    date.month = (m[0] - '0') * 10 + (m[1] - '0');
    date.day = (d[0] - '0') * 10 + (d[1] - '0');
    if (date.month < 1 || date.month > 12) return std::nullopt;
    if (date.day < 1 || date.day > days_in_month(date.year, date.month)) return std::nullopt;
    return date;
}

std::string format_issue(const Issue& issue) {
    std::string text = issue.severity == Severity::error ? "error: " : "warning: ";
    if (!issue.where.empty()) {
        text += issue.where;
        text += ": ";
    }
    text += issue.message;
    return text;
}

}  // namespace biblio
