#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace extremis {

// Seconds since 1970-01-01T00:00:00Z.
using Timestamp = std::int64_t;

// Days since 1970-01-01 (UTC calendar day bucket; floor for pre-epoch).
using Day = std::int64_t;

// Parses "YYYY-MM-DDTHH:MM:SSZ" (a trailing fractional part before the
// 'Z' is accepted and discarded). Returns nullopt on malformed input.
std::optional<Timestamp> parse_iso8601(const std::string& s);

// Formats as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_iso8601(Timestamp t);

Day day_of(Timestamp t);

// "YYYY-MM-DD" for a day bucket.
std::string format_day(Day d);

std::optional<Day> parse_day(const std::string& s);

}  // namespace extremis
