#include "planbench/course/assess.hpp"

#include <vector>

#include "planbench/course/slots.hpp"

namespace planbench::course {

PlanAssessment assess(const AssignmentPlan& plan, const CourseInstance& instance,
                      double delta) {
  PlanAssessment result;

  // Resolve every named pair first so dangling references fail loudly.
  std::vector<std::pair<std::size_t, std::size_t>> assigned;  // (section, room)
  assigned.reserve(plan.assignments.size());
  for (const auto& [ref, room_id] : plan.assignments) {
    const std::size_t s = instance.section_index(ref.course_id, ref.section_id);
    const std::size_t r = instance.classroom_index(room_id);
    assigned.emplace_back(s, r);
  }

  result.complete = assigned.size() == instance.sections.size();
  if (!result.complete) {
    result.violations.push_back(
        "incomplete plan: " + std::to_string(assigned.size()) + " of " +
        std::to_string(instance.sections.size()) + " sections assigned");
  }

  int slack = 0;
  long long capacity_sum = 0;
  long long enrollment_sum = 0;
  for (const auto& [s, r] : assigned) {
    const Section& sec = instance.sections[s];
    const Classroom& room = instance.classrooms[r];
    slack += room.capacity - sec.enrollment;
    capacity_sum += room.capacity;
    enrollment_sum += sec.enrollment;
    if (sec.enrollment > room.capacity) {
      result.violations.push_back(
          sec.course_id + " " + sec.section_id + " has " +
          std::to_string(sec.enrollment) + " students but " + room.room_id +
          " seats only " + std::to_string(room.capacity));
    }
  }
  result.total_slack = slack;
  result.occupancy_ratio =
      enrollment_sum > 0 ? static_cast<double>(capacity_sum) / static_cast<double>(enrollment_sum)
                         : 0.0;

  for (std::size_t i = 0; i < assigned.size(); ++i) {
    for (std::size_t j = i + 1; j < assigned.size(); ++j) {
      if (assigned[i].second != assigned[j].second) continue;
      const Section& a = instance.sections[assigned[i].first];
      const Section& b = instance.sections[assigned[j].first];
      if (slots_overlap(a.slot, b.slot)) {
        result.violations.push_back(
            instance.classrooms[assigned[i].second].room_id + " is double-booked: " +
            a.course_id + " " + a.section_id + " overlaps " + b.course_id + " " +
            b.section_id);
      }
    }
  }

  result.feasible = result.complete && result.violations.empty();
  result.threshold_pass = result.feasible && result.occupancy_ratio <= delta;
  return result;
}

bool raw_slack_exceeds_delta(const AssignmentPlan& plan, const CourseInstance& instance,
                             double delta) {
  return static_cast<double>(assess(plan, instance, delta).total_slack) > delta;
}

}  // namespace planbench::course
