#pragma once

#include <string>
#include <vector>

#include "planbench/course/types.hpp"

namespace planbench::course {

// True iff the slots share at least one day and their time intervals
// intersect. Intervals are half-open, so back-to-back classes do not
// conflict.
bool slots_overlap(const TimeSlot& a, const TimeSlot& b);

const char* day_name(Day d);
Day day_from_name(const std::string& name);

// "8:30AM", "12:45PM" — 12-hour clock, no leading zero, minutes padded.
std::string format_time(int minutes_from_midnight);
int parse_time(const std::string& text);

// "['Monday', 'Thursday'] at 11:30AM-12:45PM"; parsing and formatting are
// exact inverses, including day order.
std::string format_slot(const TimeSlot& slot);
TimeSlot parse_slot(const std::string& text);

// Fixed scheduling grid: every unordered weekday pair crossed with
// 75-minute periods starting 8:30, 10:00, 11:30, 13:00, 14:30, 16:00 and
// 17:30. Days in catalog entries are in week order; generators may reorder
// them for presentation.
std::vector<TimeSlot> slot_catalog();

}  // namespace planbench::course
