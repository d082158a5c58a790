#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "planbench/course/generator.hpp"
#include "planbench/eval/tasks.hpp"
#include "planbench/fitness/episode.hpp"
#include "planbench/rng.hpp"

namespace planbench::agents {

// Offline baselines. "random" emits uniform well-shaped outputs, "oracle"
// cheats with full knowledge (hidden preferences, gold plans, hidden scores)
// to bound every metric from above, "hillclimb" adapts to received feedback,
// "zero" always abstains from selecting anything.

// --- fitness solver role -------------------------------------------------

std::unique_ptr<fitness::SolverAgent> make_random_fitness_solver(std::uint64_t seed);
std::unique_ptr<fitness::SolverAgent> make_zero_fitness_solver();
std::unique_ptr<fitness::SolverAgent> make_oracle_fitness_solver(
    fitness::UserProfile profile, fitness::ExerciseBank bank);
std::unique_ptr<fitness::SolverAgent> make_hill_climb_fitness_solver(std::uint64_t seed);

// --- ranking role ----------------------------------------------------------

// Uniform random permutation of the candidate indices.
std::vector<std::size_t> random_ranking(std::size_t n_candidates, Rng& rng);

// Reads the hidden oracle scores off the task.
std::vector<std::size_t> oracle_ranking(const eval::RankingTask& task);

// --- course solver role ----------------------------------------------------

// Uniform random room per section; complete but usually infeasible.
course::AssignmentPlan random_course_assignment(const course::CourseInstance& instance,
                                                Rng& rng);

}  // namespace planbench::agents
