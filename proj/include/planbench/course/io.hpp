#pragma once

#include <string>

#include "planbench/course/generator.hpp"

namespace planbench::course {

// Dataset file format: {"raw_problem": {"Class Periods", "number_of_seats",
// "Classrooms"}, "text_description", "solution" (room + seat_diff per
// section), "optimal_score"}. Serialization preserves key order and day
// order, so load followed by save reproduces a canonical file byte for
// byte.
std::string to_dataset_json(const CourseInstanceRecord& record);
CourseInstanceRecord from_dataset_json(const std::string& text);

void save_instance_file(const CourseInstanceRecord& record, const std::string& path);
CourseInstanceRecord load_instance_file(const std::string& path);

}  // namespace planbench::course
