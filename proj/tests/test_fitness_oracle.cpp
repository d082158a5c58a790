#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fitness_test_util.hpp"
#include "planbench/fitness/oracle.hpp"

using namespace planbench;
using namespace planbench::fitness;

TEST_CASE("desired_plan on the two-exercise example") {
  // Times [30, 15], preferences [5, 8], T = 60, max 2 reps: the optimum over
  // all (a, b) in {0,1,2}^2 is [1, 2] with objective 21.
  const auto bank = testutil::two_exercise_bank();
  const auto profile = testutil::profile_for(bank, {5.0, 8.0}, 60, 2);
  const FitnessPlan plan = desired_plan(profile, bank);
  CHECK(plan.reps == std::vector<int>{1, 2});
  CHECK(plan_utility(plan, profile.preferences) == doctest::Approx(21.0));
  CHECK(testutil::enumerate_desired(profile, bank).reps == plan.reps);
}

TEST_CASE("zero budget and zero preferences force the zero plan") {
  const auto bank = testutil::two_exercise_bank();
  CHECK(desired_plan(testutil::profile_for(bank, {5.0, 8.0}, 0, 2), bank).all_zero());
  CHECK(desired_plan(testutil::profile_for(bank, {0.0, 0.0}, 60, 2), bank).all_zero());
}

TEST_CASE("dimension mismatch is rejected") {
  const auto bank = testutil::two_exercise_bank();
  CHECK_THROWS_AS(desired_plan(testutil::profile_for(bank, {5.0}, 60, 2), bank),
                  MismatchedDimensions);
}

TEST_CASE("desired_plan equals exhaustive enumeration on small profiles") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto bank = testutil::random_small_bank(rng);
    const auto profile = testutil::random_small_profile(bank, rng);
    const FitnessPlan dp = desired_plan(profile, bank);
    const FitnessPlan brute = testutil::enumerate_desired(profile, bank);
    CHECK(dp.reps == brute.reps);
  }
}

TEST_CASE("desired_plan output is always feasible") {
  Rng rng(32);
  const auto bank = fitness::default_exercise_bank();
  for (int trial = 0; trial < 300; ++trial) {
    UserProfile profile;
    profile.preferences.resize(bank.size());
    for (auto& u : profile.preferences) u = rng.uniform_real(0, 10);
    profile.available_time_minutes = static_cast<int>(rng.uniform_int(0, 150));
    profile.gym_access = rng.bernoulli(0.5);
    profile.max_reps = static_cast<int>(rng.uniform_int(1, 6));
    if (rng.bernoulli(0.4)) profile.excluded_muscle_groups.insert("legs");

    const FitnessPlan plan = desired_plan(profile, bank);
    const auto check = check_feasibility(plan, profile, bank);
    CHECK(check.feasible);
  }
}

TEST_CASE("emergencies narrow the oracle") {
  const auto bank = testutil::two_exercise_bank();
  const auto profile = testutil::profile_for(bank, {5.0, 8.0}, 60, 2);

  // Cutting the budget to 30 minutes leaves only two reps of the short one.
  std::vector<EmergencyCondition> cut = {{"short on time", ReduceAvailableTime{30}}};
  CHECK(desired_plan(profile, bank, cut).reps == std::vector<int>{0, 2});
  CHECK(testutil::enumerate_desired(profile, bank, cut).reps == std::vector<int>{0, 2});

  // Banning the arms group removes the second exercise entirely.
  std::vector<EmergencyCondition> ban = {{"sore arms", ExcludeMuscleGroup{"arms"}}};
  CHECK(desired_plan(profile, bank, ban).reps == std::vector<int>{2, 0});

  // Banning by name behaves the same way.
  std::vector<EmergencyCondition> drop = {{"skip Beta", ExcludeExercise{"Beta"}}};
  CHECK(desired_plan(profile, bank, drop).reps == std::vector<int>{2, 0});
}

TEST_CASE("time reductions clamp at zero") {
  const auto bank = testutil::two_exercise_bank();
  const auto profile = testutil::profile_for(bank, {5.0, 8.0}, 20, 2);
  std::vector<EmergencyCondition> cuts = {{"a", ReduceAvailableTime{15}},
                                          {"b", ReduceAvailableTime{15}}};
  const auto eff = apply_emergencies(profile, cuts);
  CHECK(eff.available_time_minutes == 0);
  CHECK(desired_plan(profile, bank, cuts).all_zero());
}
