#include "planbench/course/slots.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace planbench::course {

namespace {

constexpr std::array<const char*, 5> kDayNames = {"Monday", "Tuesday", "Wednesday",
                                                  "Thursday", "Friday"};

}  // namespace

bool TimeSlot::same_pattern(const TimeSlot& other) const {
  if (start_minutes != other.start_minutes || end_minutes != other.end_minutes)
    return false;
  std::vector<Day> a = days, b = other.days;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool slots_overlap(const TimeSlot& a, const TimeSlot& b) {
  bool shared_day = false;
  for (Day da : a.days) {
    for (Day db : b.days) {
      if (da == db) {
        shared_day = true;
        break;
      }
    }
    if (shared_day) break;
  }
  if (!shared_day) return false;
  return a.start_minutes < b.end_minutes && b.start_minutes < a.end_minutes;
}

const char* day_name(Day d) { return kDayNames[static_cast<std::size_t>(d)]; }

Day day_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kDayNames.size(); ++i)
    if (name == kDayNames[i]) return static_cast<Day>(i);
  throw ParseError("unknown day name: '" + name + "'");
}

std::string format_time(int minutes_from_midnight) {
  const int h24 = minutes_from_midnight / 60;
  const int m = minutes_from_midnight % 60;
  const bool pm = h24 >= 12;
  int h12 = h24 % 12;
  if (h12 == 0) h12 = 12;
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%d:%02d%s", h12, m, pm ? "PM" : "AM");
  return buf;
}

int parse_time(const std::string& text) {
  int h = 0, m = 0;
  char suffix[3] = {0, 0, 0};
  if (std::sscanf(text.c_str(), "%d:%2d%2s", &h, &m, suffix) != 3)
    throw ParseError("bad time: '" + text + "'");
  const std::string ampm(suffix);
  if (h < 1 || h > 12 || m < 0 || m > 59 || (ampm != "AM" && ampm != "PM"))
    throw ParseError("bad time: '" + text + "'");
  int h24 = h % 12;
  if (ampm == "PM") h24 += 12;
  return h24 * 60 + m;
}

std::string format_slot(const TimeSlot& slot) {
  std::string out = "[";
  for (std::size_t i = 0; i < slot.days.size(); ++i) {
    if (i > 0) out += ", ";
    out += "'";
    out += day_name(slot.days[i]);
    out += "'";
  }
  out += "] at ";
  out += format_time(slot.start_minutes);
  out += "-";
  out += format_time(slot.end_minutes);
  return out;
}

TimeSlot parse_slot(const std::string& text) {
  const auto close = text.find(']');
  if (text.empty() || text.front() != '[' || close == std::string::npos)
    throw ParseError("bad slot: '" + text + "'");

  TimeSlot slot;
  std::size_t pos = 1;
  while (pos < close) {
    const auto quote_open = text.find('\'', pos);
    if (quote_open == std::string::npos || quote_open >= close) break;
    const auto quote_close = text.find('\'', quote_open + 1);
    if (quote_close == std::string::npos || quote_close > close)
      throw ParseError("bad slot: '" + text + "'");
    slot.days.push_back(day_from_name(text.substr(quote_open + 1, quote_close - quote_open - 1)));
    pos = quote_close + 1;
  }
  if (slot.days.empty()) throw ParseError("bad slot (no days): '" + text + "'");

  const std::string at = " at ";
  const auto at_pos = text.find(at, close);
  if (at_pos == std::string::npos) throw ParseError("bad slot (no time): '" + text + "'");
  const std::string times = text.substr(at_pos + at.size());
  const auto dash = times.find('-');
  if (dash == std::string::npos) throw ParseError("bad slot (no range): '" + text + "'");
  slot.start_minutes = parse_time(times.substr(0, dash));
  slot.end_minutes = parse_time(times.substr(dash + 1));
  if (slot.start_minutes >= slot.end_minutes)
    throw ParseError("bad slot (start must precede end): '" + text + "'");
  return slot;
}

std::vector<TimeSlot> slot_catalog() {
  static const std::vector<int> starts = {8 * 60 + 30,  10 * 60,      11 * 60 + 30,
                                          13 * 60,      14 * 60 + 30, 16 * 60,
                                          17 * 60 + 30};
  std::vector<TimeSlot> catalog;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      for (int start : starts) {
        TimeSlot slot;
        slot.days = {static_cast<Day>(a), static_cast<Day>(b)};
        slot.start_minutes = start;
        slot.end_minutes = start + 75;
        catalog.push_back(slot);
      }
    }
  }
  return catalog;
}

}  // namespace planbench::course
