#include "planbench/course/distance.hpp"

#include <algorithm>
#include <cmath>

namespace planbench::course {

int plan_distance(const AssignmentPlan& candidate, const AssignmentPlan& gold,
                  const CourseInstance& instance) {
  for (const auto& [ref, room] : candidate.assignments) {
    instance.section_index(ref.course_id, ref.section_id);
    instance.classroom_index(room);
  }
  int distance = 0;
  for (const auto& sec : instance.sections) {
    const SectionRef ref{sec.course_id, sec.section_id};
    const auto c = candidate.assignments.find(ref);
    const auto g = gold.assignments.find(ref);
    const bool in_candidate = c != candidate.assignments.end();
    const bool in_gold = g != gold.assignments.end();
    if (in_candidate != in_gold) {
      ++distance;
    } else if (in_candidate && c->second != g->second) {
      ++distance;
    }
  }
  return distance;
}

AssignmentPlan corrupt_plan(const AssignmentPlan& gold, const CourseInstance& instance,
                            double keep_fraction, double alter_rate, std::uint64_t seed) {
  if (keep_fraction < 0.0 || keep_fraction > 1.0 || alter_rate < 0.0 || alter_rate > 1.0)
    throw std::invalid_argument("corrupt_plan: rates must lie in [0, 1]");

  Rng rng(seed);
  std::vector<SectionRef> refs;
  refs.reserve(gold.assignments.size());
  for (const auto& [ref, room] : gold.assignments) refs.push_back(ref);
  rng.shuffle(refs);

  const auto m = static_cast<double>(refs.size());
  const auto keep = static_cast<std::size_t>(std::ceil(keep_fraction * m));

  AssignmentPlan out;
  for (std::size_t i = 0; i < keep && i < refs.size(); ++i) {
    const std::string& gold_room = gold.assignments.at(refs[i]);
    std::string room = gold_room;
    if (instance.classrooms.size() > 1 && rng.bernoulli(alter_rate)) {
      do {
        room = instance
                   .classrooms[static_cast<std::size_t>(rng.uniform_int(
                       0, static_cast<std::int64_t>(instance.classrooms.size()) - 1))]
                   .room_id;
      } while (room == gold_room);
    }
    out.assignments[refs[i]] = room;
  }
  return out;
}

}  // namespace planbench::course
