#pragma once

#include <cstdint>

#include "planbench/course/solver.hpp"
#include "planbench/course/types.hpp"
#include "planbench/rng.hpp"

namespace planbench::course {

struct GeneratorParams {
  int courses = 5;
  int min_sections = 2, max_sections = 3;
  int min_enrollment = 20, max_enrollment = 30;
  int min_classrooms = 3, max_classrooms = 5;
  int min_capacity = 25, max_capacity = 35;
  int max_attempts = 1000;  // rejection budget before GenerationExhausted
};

// Difficulty presets: 5/7/10 courses with classroom ranges picked so the
// accepted-instance statistics land on the dataset's reference averages.
GeneratorParams params_for(Difficulty difficulty);

// One unchecked draw: may be unsolvable. Used directly by tests that need
// small custom shapes.
CourseInstance sample_instance(const GeneratorParams& params, Rng& rng);

// A generated instance together with its exhaustively verified optimum.
struct CourseInstanceRecord {
  CourseInstance instance;
  AssignmentPlan gold;
  int optimal_slack = 0;
};

// Rejection-samples until a solvable instance appears, attaches the exact
// solution, and renders the text description. Deterministic per seed.
CourseInstanceRecord generate_instance(Difficulty difficulty, std::uint64_t seed);

// Deterministic prose rendering of an instance (classrooms, sections, the
// assignment rules).
std::string render_instance_text(const CourseInstance& instance);

}  // namespace planbench::course
