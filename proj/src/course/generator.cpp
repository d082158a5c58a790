#include "planbench/course/generator.hpp"

#include <sstream>

#include "planbench/course/slots.hpp"

namespace planbench::course {

GeneratorParams params_for(Difficulty difficulty) {
  GeneratorParams p;
  switch (difficulty) {
    case Difficulty::Easy:
      p.courses = 5;
      p.min_classrooms = 3;
      p.max_classrooms = 5;
      break;
    case Difficulty::Medium:
      p.courses = 7;
      p.min_classrooms = 4;
      p.max_classrooms = 5;
      break;
    case Difficulty::Hard:
      p.courses = 10;
      p.min_classrooms = 4;
      p.max_classrooms = 6;
      break;
  }
  return p;
}

CourseInstance sample_instance(const GeneratorParams& params, Rng& rng) {
  CourseInstance instance;
  const std::vector<TimeSlot> catalog = slot_catalog();

  const int n_rooms = static_cast<int>(rng.uniform_int(params.min_classrooms,
                                                       params.max_classrooms));
  for (int r = 1; r <= n_rooms; ++r) {
    Classroom room;
    room.room_id = "classroom " + std::to_string(r);
    room.capacity = static_cast<int>(rng.uniform_int(params.min_capacity,
                                                     params.max_capacity));
    instance.classrooms.push_back(std::move(room));
  }

  for (int c = 1; c <= params.courses; ++c) {
    const int n_sections = static_cast<int>(rng.uniform_int(params.min_sections,
                                                            params.max_sections));
    for (int s = 1; s <= n_sections; ++s) {
      Section section;
      section.course_id = "Course " + std::to_string(c);
      section.section_id = "Section " + std::to_string(s);
      section.enrollment = static_cast<int>(rng.uniform_int(params.min_enrollment,
                                                            params.max_enrollment));
      section.slot = catalog[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(catalog.size()) - 1))];
      // The dataset format lists day pairs in arbitrary order.
      if (rng.bernoulli(0.5)) std::swap(section.slot.days[0], section.slot.days[1]);
      instance.sections.push_back(std::move(section));
    }
  }
  return instance;
}

CourseInstanceRecord generate_instance(Difficulty difficulty, std::uint64_t seed) {
  const GeneratorParams params = params_for(difficulty);
  Rng root(seed);
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    Rng rng = root.fork(static_cast<std::uint64_t>(attempt));
    CourseInstance instance = sample_instance(params, rng);
    instance.difficulty = difficulty;
    instance.seed = seed;
    auto solution = solve_exact(instance);
    if (!solution) continue;
    instance.text_description = render_instance_text(instance);
    return CourseInstanceRecord{std::move(instance), std::move(solution->plan),
                                solution->optimal_slack};
  }
  throw GenerationExhausted("generate_instance: no solvable draw in " +
                            std::to_string(params.max_attempts) + " attempts (seed " +
                            std::to_string(seed) + ")");
}

std::string render_instance_text(const CourseInstance& instance) {
  std::ostringstream out;
  out << "The department must assign a classroom to every course section. "
      << "There " << (instance.classrooms.size() == 1 ? "is " : "are ")
      << instance.classrooms.size() << " classroom"
      << (instance.classrooms.size() == 1 ? "" : "s") << ": ";
  for (std::size_t r = 0; r < instance.classrooms.size(); ++r) {
    if (r > 0) out << (r + 1 == instance.classrooms.size() ? " and " : ", ");
    out << instance.classrooms[r].room_id << " with "
        << instance.classrooms[r].capacity << " seats";
  }
  out << ". ";
  for (const auto& sec : instance.sections) {
    out << sec.course_id << " " << sec.section_id << " expects " << sec.enrollment
        << " students and meets " << format_slot(sec.slot) << ". ";
  }
  out << "Each section must be assigned to exactly one classroom, a classroom "
      << "cannot host two sections whose meetings overlap in time, and every "
      << "section must fit within its classroom's seating capacity.";
  return out.str();
}

}  // namespace planbench::course
