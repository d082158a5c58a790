#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace planbench::course {

struct UnknownReference : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct GenerationExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateTask : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Day { Mon, Tue, Wed, Thu, Fri };

// Meeting pattern of one section. `days` preserves the order the source text
// listed them in (the dataset format allows unsorted pairs); comparisons
// treat it as a set.
struct TimeSlot {
  std::vector<Day> days;
  int start_minutes = 0;  // minutes from midnight
  int end_minutes = 0;    // start < end

  bool same_pattern(const TimeSlot& other) const;
};

struct Section {
  std::string course_id;
  std::string section_id;
  TimeSlot slot;
  int enrollment = 1;  // >= 1
};

struct Classroom {
  std::string room_id;
  int capacity = 1;  // >= 1
};

enum class Difficulty { Easy, Medium, Hard };

const char* to_string(Difficulty d);
Difficulty difficulty_from_string(const std::string& s);

struct CourseInstance {
  std::vector<Section> sections;
  std::vector<Classroom> classrooms;
  Difficulty difficulty = Difficulty::Easy;
  std::string text_description;
  std::uint64_t seed = 0;

  // Index lookups; throw UnknownReference on misses.
  std::size_t section_index(const std::string& course_id,
                            const std::string& section_id) const;
  std::size_t classroom_index(const std::string& room_id) const;
};

struct SectionRef {
  std::string course_id;
  std::string section_id;
  auto operator<=>(const SectionRef&) const = default;
};

// A possibly partial section -> room mapping; partiality represents an
// intermediate state on the way to a complete plan.
struct AssignmentPlan {
  std::map<SectionRef, std::string> assignments;
};

struct PlanAssessment {
  bool complete = false;
  bool feasible = false;  // implies complete
  std::vector<std::string> violations;
  int total_slack = 0;          // sum of (capacity - enrollment) over assigned pairs
  double occupancy_ratio = 0.0; // assigned capacity / enrollment
  bool threshold_pass = false;  // feasible and occupancy_ratio <= delta
};

}  // namespace planbench::course
