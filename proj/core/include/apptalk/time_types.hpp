#pragma once

#include <optional>
#include <string>

#include "apptalk/feature_structure.hpp"

namespace apptalk {

// Weekdays are ISO style: 1 = Monday .. 7 = Sunday.
int weekdayOf(int year, int month, int day);
bool isLeapYear(int year);
int daysInMonth(int year, int month);
bool isValidDate(int year, int month, int day);

// Days since 1970-01-01 for valid calendar dates (negative before).
long long daysFromCivil(int year, int month, int day);
void civilFromDays(long long z, int& year, int& month, int& day);

const char* weekdayNameDe(int weekday);
const char* weekdayNameEn(int weekday);
const char* monthNameEn(int month);

// Two-digit years resolve to 19xx for values >= 70, 20xx otherwise.
int expandTwoDigitYear(int yy);

struct CalendarDate {
    int year = 0;
    int month = 0;
    int day = 0;

    auto operator<=>(const CalendarDate&) const = default;
    long long toDays() const { return daysFromCivil(year, month, day); }
    static CalendarDate fromDays(long long z) {
        CalendarDate d;
        civilFromDays(z, d.year, d.month, d.day);
        return d;
    }
    CalendarDate plusDays(long long n) const { return fromDays(toDays() + n); }
    int weekday() const { return weekdayOf(year, month, day); }
};

// A possibly underspecified point in calendar time. Absent fields mean the
// utterance did not determine them; anchoring fills them from context.
struct TimePoint {
    std::optional<int> year;
    std::optional<int> month;
    std::optional<int> day;
    std::optional<int> weekday;  // 1..7
    std::optional<int> hour;     // 0..23
    std::optional<int> minute;   // 0..59

    bool operator==(const TimePoint&) const = default;

    bool hasFullDate() const { return year && month && day; }
    bool hasClock() const { return hour.has_value(); }
    // Complete to the minute: what a client-ready IL requires of each bound.
    bool isComplete() const { return hasFullDate() && hour && minute; }
    bool empty() const {
        return !year && !month && !day && !weekday && !hour && !minute;
    }

    std::optional<CalendarDate> date() const {
        if (!hasFullDate()) return std::nullopt;
        return CalendarDate{*year, *month, *day};
    }
    void setDate(const CalendarDate& d) {
        year = d.year;
        month = d.month;
        day = d.day;
    }
    int clockMinutes() const { return (hour ? *hour : 0) * 60 + (minute ? *minute : 0); }

    // Minutes since the 1970 epoch; requires isComplete().
    long long epochMinutes() const;
    static TimePoint fromEpochMinutes(long long m);

    // Count of specified atomic fields (weekday excluded, it is derived).
    int specifiedFieldCount() const;

    FeatureStructure toFs() const;
    static TimePoint fromFs(const FeatureStructure& fs);
};

struct Interval {
    TimePoint left;
    TimePoint right;

    bool operator==(const Interval&) const = default;
    bool isComplete() const { return left.isComplete() && right.isComplete(); }
    // Set inclusion on the minute grid; both intervals must be complete.
    bool contains(const Interval& other) const;
    bool overlaps(const Interval& other) const;

    FeatureStructure toFs() const;
    static Interval fromFs(const FeatureStructure& fs);
};

// start + duration with full day/month/year carry.
TimePoint addMinutes(const TimePoint& start, long long minutes);

std::string formatDateIso(const CalendarDate& d);
std::string formatClock(int hour, int minute);

// "YYYY-MM-DD HH:MM" wall-clock stamps used by scenarios and send times.
struct WallClock {
    CalendarDate date;
    int hour = 0;
    int minute = 0;

    auto operator<=>(const WallClock&) const = default;
    long long epochMinutes() const {
        return date.toDays() * 24 * 60 + hour * 60 + minute;
    }
    std::string toString() const;
    static std::optional<WallClock> parse(const std::string& text);
};

}  // namespace apptalk
