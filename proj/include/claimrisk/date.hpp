#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace claimrisk {

/// Calendar date stored as a serial day count (days since 1970-01-01,
/// proleptic Gregorian). Cheap to copy and to do day arithmetic on.
class Date {
public:
    Date() = default;
    explicit Date(std::int32_t serial) : serial_(serial) {}

    static Date from_ymd(int year, int month, int day) {
        if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month)) {
            throw std::runtime_error("invalid date: " + std::to_string(year) + "-" +
                                     std::to_string(month) + "-" + std::to_string(day));
        }
        return Date(days_from_civil(year, month, day));
    }

    /// Strict ISO-8601 YYYY-MM-DD.
    static Date parse(const std::string& text) {
        if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
            throw std::runtime_error("invalid date '" + text + "' (expected YYYY-MM-DD)");
        }
        auto num = [&](int pos, int len) {
            int value = 0;
            auto first = text.data() + pos;
            auto [ptr, ec] = std::from_chars(first, first + len, value);
            if (ec != std::errc() || ptr != first + len) {
                throw std::runtime_error("invalid date '" + text + "' (expected YYYY-MM-DD)");
            }
            return value;
        };
        return from_ymd(num(0, 4), num(5, 2), num(8, 2));
    }

    std::int32_t serial() const { return serial_; }

    std::string to_string() const {
        auto [y, m, d] = civil_from_days(serial_);
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
        return buf;
    }

    Date add_days(int n) const { return Date(serial_ + n); }
    int days_until(Date later) const { return later.serial_ - serial_; }

    friend auto operator<=>(Date, Date) = default;

private:
    std::int32_t serial_ = 0;

    static bool is_leap(int y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

    static int days_in_month(int y, int m) {
        static constexpr int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
        return m == 2 && is_leap(y) ? 29 : lengths[m - 1];
    }

    // Howard Hinnant's civil-from-days / days-from-civil algorithms.
    static std::int32_t days_from_civil(int y, int m, int d) {
        y -= m <= 2;
        const int era = (y >= 0 ? y : y - 399) / 400;
        const unsigned yoe = static_cast<unsigned>(y - era * 400);
        const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
        const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
        return era * 146097 + static_cast<int>(doe) - 719468;
    }

    struct Civil { int y, m, d; };

    static Civil civil_from_days(std::int32_t z) {
        z += 719468;
        const int era = (z >= 0 ? z : z - 146096) / 146097;
        const unsigned doe = static_cast<unsigned>(z - era * 146097);
        const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
        const int y = static_cast<int>(yoe) + era * 400;
        const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
        const unsigned mp = (5 * doy + 2) / 153;
        const unsigned d = doy - (153 * mp + 2) / 5 + 1;
        const unsigned m = mp + (mp < 10 ? 3 : -9);
        return {y + (m <= 2), static_cast<int>(m), static_cast<int>(d)};
    }
};

}  // namespace claimrisk
