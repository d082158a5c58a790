#include "planbench/course/types.hpp"

namespace planbench::course {

const char* to_string(Difficulty d) {
  switch (d) {
    case Difficulty::Easy: return "easy";
    case Difficulty::Medium: return "medium";
    case Difficulty::Hard: return "hard";
  }
  return "easy";
}

Difficulty difficulty_from_string(const std::string& s) {
  if (s == "easy") return Difficulty::Easy;
  if (s == "medium") return Difficulty::Medium;
  if (s == "hard") return Difficulty::Hard;
  throw std::invalid_argument("unknown difficulty: " + s);
}

std::size_t CourseInstance::section_index(const std::string& course_id,
                                          const std::string& section_id) const {
  for (std::size_t i = 0; i < sections.size(); ++i) {
    if (sections[i].course_id == course_id && sections[i].section_id == section_id)
      return i;
  }
  throw UnknownReference("no such section: " + course_id + " / " + section_id);
}

std::size_t CourseInstance::classroom_index(const std::string& room_id) const {
  for (std::size_t i = 0; i < classrooms.size(); ++i) {
    if (classrooms[i].room_id == room_id) return i;
  }
  throw UnknownReference("no such classroom: " + room_id);
}

}  // namespace planbench::course
