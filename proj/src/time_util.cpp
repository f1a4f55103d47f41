#include "extremis/time_util.hpp"

#include <cstdio>

namespace extremis {

namespace {

// Civil-date conversions after Howard Hinnant's date algorithms.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += m <= 2;
}

bool parse_uint(const std::string& s, size_t pos, size_t len, unsigned& out) {
    unsigned v = 0;
    if (pos + len > s.size()) return false;
    for (size_t i = pos; i < pos + len; ++i) {
        char c = s[i];
        if (c < '0' || c > '9') return false;
        v = v * 10 + static_cast<unsigned>(c - '0');
    }
    out = v;
    return true;
}

}  // namespace

std::optional<Timestamp> parse_iso8601(const std::string& s) {
    // YYYY-MM-DDTHH:MM:SS[.fff]Z
    unsigned y, mo, d, h, mi, se;
    if (s.size() < 20) return std::nullopt;
    if (!parse_uint(s, 0, 4, y) || s[4] != '-' ||
        !parse_uint(s, 5, 2, mo) || s[7] != '-' ||
        !parse_uint(s, 8, 2, d) || (s[10] != 'T' && s[10] != ' ') ||
        !parse_uint(s, 11, 2, h) || s[13] != ':' ||
        !parse_uint(s, 14, 2, mi) || s[16] != ':' ||
        !parse_uint(s, 17, 2, se))
        return std::nullopt;
    size_t pos = 19;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    }
    if (pos + 1 != s.size() || s[pos] != 'Z') return std::nullopt;
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || se > 60)
        return std::nullopt;
    std::int64_t days = days_from_civil(y, mo, d);
    return days * 86400 + h * 3600 + mi * 60 + se;
}

std::string format_iso8601(Timestamp t) {
    Day day = day_of(t);
    std::int64_t sod = t - day * 86400;
    std::int64_t y;
    unsigned mo, d;
    civil_from_days(day, y, mo, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                  static_cast<long long>(y), mo, d,
                  static_cast<long long>(sod / 3600),
                  static_cast<long long>((sod / 60) % 60),
                  static_cast<long long>(sod % 60));
    return buf;
}

Day day_of(Timestamp t) {
    return t >= 0 ? t / 86400 : (t - 86399) / 86400;
}

std::string format_day(Day d) {
    std::int64_t y;
    unsigned mo, dd;
    civil_from_days(d, y, mo, dd);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02u",
                  static_cast<long long>(y), mo, dd);
    return buf;
}

std::optional<Day> parse_day(const std::string& s) {
    unsigned y, mo, d;
    if (s.size() != 10) return std::nullopt;
    if (!parse_uint(s, 0, 4, y) || s[4] != '-' ||
        !parse_uint(s, 5, 2, mo) || s[7] != '-' ||
        !parse_uint(s, 8, 2, d))
        return std::nullopt;
    if (mo < 1 || mo > 12 || d < 1 || d > 31) return std::nullopt;
    return days_from_civil(y, mo, d);
}

}  // namespace extremis
