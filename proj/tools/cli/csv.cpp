#include "cli/csv.hpp"

#include <cctype>
#include <cerrno>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "trevi/errors.hpp"

namespace trevi::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& path, std::int64_t row, int column,
                             const std::string& what) {
    throw Error(ErrorCode::ParseError,
                path + ":" + std::to_string(row) + " column " + std::to_string(column) + ": " + what);
}

// Days since 1970-01-01 for a proleptic Gregorian date (Howard Hinnant's
// days-from-civil algorithm).
std::int64_t days_from_civil(std::int64_t y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const auto yoe = static_cast<std::int64_t>(y - era * 400);
    const std::int64_t doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + doe - 719468;
}

bool parse_int64(const std::string& field, std::int64_t& out) {
    if (field.empty())
        return false;
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(field.c_str(), &end, 10);
    if (errno != 0 || end != field.c_str() + field.size())
        return false;
    out = v;
    return true;
}

// "YYYY-MM-DD HH:MM[:SS]" or with a 'T' separator, UTC.
bool parse_iso_timestamp(const std::string& field, std::int64_t& seconds) {
    int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
    char sep = 0;
    const int n = std::sscanf(field.c_str(), "%d-%d-%d%c%d:%d:%d", &year, &month, &day, &sep, &hour,
                              &minute, &second);
    if (n < 6 || (sep != 'T' && sep != ' '))
        return false;
    if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 || second > 59)
        return false;
    seconds = days_from_civil(year, month, day) * 86400 + hour * 3600 + minute * 60 + second;
    return true;
}

// First column: plain tick index, or an ISO timestamp on the 3-minute grid.
std::int64_t parse_tick(const std::string& path, std::int64_t row, const std::string& field) {
    std::int64_t tick = 0;
    if (parse_int64(field, tick))
        return tick;
    std::int64_t seconds = 0;
    if (parse_iso_timestamp(field, seconds)) {
        if (seconds % 180 != 0)
            parse_fail(path, row, 1, "timestamp '" + field + "' is not on the 3-minute grid");
        return seconds / 180;
    }
    parse_fail(path, row, 1, "expected tick index or ISO timestamp, got '" + field + "'");
}

double parse_value(const std::string& path, std::int64_t row, const std::string& field) {
    if (field.empty())
        parse_fail(path, row, 2, "empty value field");
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (errno != 0 || end != field.c_str() + field.size())
        parse_fail(path, row, 2, "expected real value, got '" + field + "'");
    if (!std::isfinite(v))
        throw Error(ErrorCode::NonFiniteValue,
                    path + ":" + std::to_string(row) + ": non-finite value '" + field + "'");
    return v;
}

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

} // namespace

RegularSeries load_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path);

    RegularSeries series;
    series.kind = SeriesKind::log_price;

    std::string line;
    std::int64_t row = 0;
    bool have_first = false;
    std::int64_t expected_tick = 0;

    while (std::getline(in, line)) {
        ++row;
        const std::string trimmed = strip(line);
        if (trimmed.empty())
            continue;

        const auto comma = trimmed.find(',');
        if (comma == std::string::npos)
            parse_fail(path, row, 1, "expected two comma-separated columns");
        const std::string left = strip(trimmed.substr(0, comma));
        const std::string right = strip(trimmed.substr(comma + 1));
        if (right.find(',') != std::string::npos)
            parse_fail(path, row, 3, "expected exactly two columns");

        // A single header row is tolerated.
        if (row == 1 && !left.empty() && !std::isdigit(static_cast<unsigned char>(left[0])) &&
            left[0] != '-' && left[0] != '+') {
            continue;
        }

        const std::int64_t tick = parse_tick(path, row, left);
        const double value = parse_value(path, row, right);

        if (!have_first) {
            series.start_index = tick;
            have_first = true;
        } else if (tick <= expected_tick - 1) {
            throw Error(ErrorCode::NonMonotonicTime,
                        path + ":" + std::to_string(row) + ": tick " + std::to_string(tick) +
                            " does not advance past " + std::to_string(expected_tick - 1));
        } else if (tick != expected_tick) {
            throw Error(ErrorCode::GapDetected,
                        path + ":" + std::to_string(row) + ": missing tick " +
                            std::to_string(expected_tick));
        }
        series.values.push_back(value);
        expected_tick = tick + 1;
    }

    if (series.values.empty())
        throw Error(ErrorCode::ParseError, path + ": no data rows");
    return series;
}

void save_series_csv(const std::string& path, const RegularSeries& series) {
    std::FILE* out = std::fopen(path.c_str(), "w");
    if (!out)
        throw Error(ErrorCode::IoError, "cannot write " + path);
    std::fputs("tick,log_price\n", out);
    for (std::int64_t i = 0; i < series.size(); ++i)
        std::fprintf(out, "%" PRId64 ",%.17g\n", series.start_index + i,
                     series.values[static_cast<std::size_t>(i)]);
    if (std::fclose(out) != 0)
        throw Error(ErrorCode::IoError, "error closing " + path);
}

} // namespace trevi::cli
