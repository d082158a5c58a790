#include "planbench/course/io.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <vector>

#include "planbench/course/slots.hpp"

namespace planbench::course {

namespace {

using ordered_json = nlohmann::ordered_json;

// Courses appear in first-section order; sections keep instance order.
std::vector<std::pair<std::string, std::vector<std::size_t>>> group_by_course(
    const CourseInstance& instance) {
  std::vector<std::pair<std::string, std::vector<std::size_t>>> groups;
  for (std::size_t i = 0; i < instance.sections.size(); ++i) {
    const std::string& course = instance.sections[i].course_id;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == course; });
    if (it == groups.end()) {
      groups.push_back({course, {i}});
    } else {
      it->second.push_back(i);
    }
  }
  return groups;
}

}  // namespace

std::string to_dataset_json(const CourseInstanceRecord& record) {
  const CourseInstance& instance = record.instance;
  const auto groups = group_by_course(instance);

  ordered_json periods = ordered_json::object();
  ordered_json seats = ordered_json::object();
  for (const auto& [course, indices] : groups) {
    ordered_json course_periods = ordered_json::object();
    ordered_json course_seats = ordered_json::object();
    for (std::size_t i : indices) {
      const Section& sec = instance.sections[i];
      course_periods[sec.section_id] = format_slot(sec.slot);
      course_seats[sec.section_id] = sec.enrollment;
    }
    periods[course] = std::move(course_periods);
    seats[course] = std::move(course_seats);
  }

  ordered_json rooms = ordered_json::object();
  for (const auto& room : instance.classrooms) rooms[room.room_id] = room.capacity;

  ordered_json solution = ordered_json::object();
  for (const auto& [course, indices] : groups) {
    ordered_json course_solution = ordered_json::object();
    for (std::size_t i : indices) {
      const Section& sec = instance.sections[i];
      const auto it = record.gold.assignments.find({sec.course_id, sec.section_id});
      if (it == record.gold.assignments.end()) continue;
      const Classroom& room =
          instance.classrooms[instance.classroom_index(it->second)];
      course_solution[sec.section_id] = {{"room", room.room_id},
                                         {"seat_diff", room.capacity - sec.enrollment}};
    }
    solution[course] = std::move(course_solution);
  }

  ordered_json doc;
  doc["raw_problem"] = {{"Class Periods", std::move(periods)},
                        {"number_of_seats", std::move(seats)},
                        {"Classrooms", std::move(rooms)}};
  doc["text_description"] = instance.text_description;
  doc["solution"] = std::move(solution);
  doc["optimal_score"] = static_cast<double>(record.optimal_slack);
  return doc.dump(4) + "\n";
}

CourseInstanceRecord from_dataset_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("dataset file is not valid JSON: ") + e.what());
  }

  CourseInstanceRecord record;
  CourseInstance& instance = record.instance;

  const auto& raw = doc.at("raw_problem");
  const auto& periods = raw.at("Class Periods");
  const auto& seats = raw.at("number_of_seats");
  for (const auto& [course, sections] : periods.items()) {
    for (const auto& [section_id, slot_text] : sections.items()) {
      Section sec;
      sec.course_id = course;
      sec.section_id = section_id;
      sec.slot = parse_slot(slot_text.get<std::string>());
      sec.enrollment = seats.at(course).at(section_id).get<int>();
      if (sec.enrollment < 1) throw ParseError("enrollment must be >= 1");
      instance.sections.push_back(std::move(sec));
    }
  }
  for (const auto& [room_id, capacity] : raw.at("Classrooms").items()) {
    const int cap = capacity.get<int>();
    if (cap < 1) throw ParseError("capacity must be >= 1");
    instance.classrooms.push_back({room_id, cap});
  }
  instance.text_description = doc.at("text_description").get<std::string>();

  if (doc.contains("solution")) {
    for (const auto& [course, sections] : doc.at("solution").items()) {
      for (const auto& [section_id, entry] : sections.items()) {
        record.gold.assignments[{course, section_id}] =
            entry.at("room").get<std::string>();
      }
    }
  }
  record.optimal_slack = static_cast<int>(doc.value("optimal_score", 0.0));

  // Course count is the only difficulty signal a bare dataset file carries.
  const std::size_t courses = periods.size();
  instance.difficulty = courses <= 5   ? Difficulty::Easy
                        : courses <= 8 ? Difficulty::Medium
                                       : Difficulty::Hard;
  return record;
}

void save_instance_file(const CourseInstanceRecord& record, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_dataset_json(record);
}

CourseInstanceRecord load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_dataset_json(text);
}

}  // namespace planbench::course
