#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fitness_test_util.hpp"
#include "planbench/fitness/oracle.hpp"
#include "planbench/fitness/scoring.hpp"
#include "planbench/rng.hpp"

using namespace planbench;
using namespace planbench::fitness;

TEST_CASE("plan_score is the scaled mean preference of selected exercises") {
  CHECK(plan_score({{1, 2}}, {10.0, 10.0}) == doctest::Approx(1.0));
  CHECK(plan_score({{1, 0, 2}}, {5.0, 0.0, 7.0}) == doctest::Approx(0.6));
  CHECK(plan_score({{0, 0, 0}}, {5.0, 0.0, 7.0}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(plan_score({{1, 2}}, {5.0}), MismatchedDimensions);
}

TEST_CASE("rep_score combines cosine with the norm-ratio clamp") {
  const FitnessPlan x{{2, 1, 3}};
  CHECK(rep_score(x, x) == doctest::Approx(1.0));
  const FitnessPlan doubled{{4, 2, 6}};
  CHECK(rep_score(doubled, x) == doctest::Approx(0.5));
  CHECK(rep_score({{1, 0}}, {{0, 1}}) == doctest::Approx(0.0));
  CHECK(rep_score({{0, 0}}, {{1, 1}}) == doctest::Approx(0.0));
  CHECK(rep_score({{1, 1}}, {{0, 0}}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(rep_score({{1}}, {{1, 2}}), MismatchedDimensions);
}

TEST_CASE("rep_score is symmetric and scales as min(c, 1/c)") {
  Rng rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 6));
    FitnessPlan a, b;
    for (std::size_t i = 0; i < n; ++i) {
      a.reps.push_back(static_cast<int>(rng.uniform_int(0, 5)));
      b.reps.push_back(static_cast<int>(rng.uniform_int(0, 5)));
    }
    CHECK(rep_score(a, b) == doctest::Approx(rep_score(b, a)));
    if (!a.all_zero()) {
      CHECK(rep_score(a, a) == doctest::Approx(1.0));
      const int c = static_cast<int>(rng.uniform_int(1, 4));
      FitnessPlan scaled;
      for (int r : a.reps) scaled.reps.push_back(c * r);
      CHECK(rep_score(scaled, a) == doctest::Approx(std::min(double(c), 1.0 / c)));
    }
  }
}

TEST_CASE("overlap_score is minus the used fraction of the bank") {
  const FitnessPlan zero{{0, 0, 0, 0}};
  CHECK(overlap_score({zero, zero}) == doctest::Approx(0.0));
  const FitnessPlan all{{1, 2, 1, 1}};
  CHECK(overlap_score({all}) == doctest::Approx(-1.0));
  // Union of used indices {0, 2} over four exercises.
  const FitnessPlan first{{1, 0, 0, 0}};
  const FitnessPlan third{{0, 0, 2, 0}};
  CHECK(overlap_score({first, third}) == doctest::Approx(-0.5));
  CHECK_THROWS_AS(overlap_score({}), EmptyWindow);
  CHECK_THROWS_AS(overlap_score({first, FitnessPlan{{1}}}), MismatchedDimensions);
}

TEST_CASE("overlap_score positive-range remap") {
  const FitnessPlan first{{1, 0, 0, 0}};
  const FitnessPlan third{{0, 0, 2, 0}};
  CHECK(overlap_score({first, third}, true) == doctest::Approx(0.5));
  const FitnessPlan zero{{0, 0, 0, 0}};
  CHECK(overlap_score({zero}, true) == doctest::Approx(1.0));
}

TEST_CASE("feedback_score weight collapse and negative floor") {
  const auto bank = testutil::two_exercise_bank();
  auto profile = testutil::profile_for(bank, {10.0, 10.0}, 60, 2);

  EpisodeConfig config;
  config.alpha = 1.0;
  config.beta = 0.0;
  EpisodeState state;
  // alpha = 1 collapses the score to 10 * Plan regardless of Rep/Overlap.
  const FitnessPlan plan{{1, 2}};
  CHECK(feedback_score(plan, state, profile, bank, config) == doctest::Approx(10.0));

  // Plan = Rep = 0 with a fully-used window: F = 10 * (0.2 * -1) = -2.
  config.alpha = 0.4;
  config.beta = 0.4;
  config.overlap_window = 2;
  state.plan_history.push_back(FitnessPlan{{1, 1}});
  state.feedback_history.push_back({});
  const FitnessPlan zero{{0, 0}};
  CHECK(feedback_score(zero, state, profile, bank, config) == doctest::Approx(-2.0));
}

TEST_CASE("feedback_score equals the hand-combined weighted sum") {
  const auto bank = fitness::default_exercise_bank();
  Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    UserProfile profile;
    profile.preferences.resize(bank.size());
    for (auto& u : profile.preferences) u = rng.uniform_real(0, 10);
    profile.available_time_minutes = static_cast<int>(rng.uniform_int(30, 120));
    profile.gym_access = rng.bernoulli(0.5);
    profile.max_reps = 5;

    EpisodeConfig config;
    config.alpha = 0.4;
    config.beta = 0.4;
    config.overlap_window = 3;

    EpisodeState state;
    const int history = static_cast<int>(rng.uniform_int(0, 4));
    for (int h = 0; h < history; ++h) {
      FitnessPlan p;
      for (std::size_t i = 0; i < bank.size(); ++i)
        p.reps.push_back(static_cast<int>(rng.uniform_int(0, 2)));
      state.plan_history.push_back(std::move(p));
      state.feedback_history.push_back({});
    }

    FitnessPlan plan;
    for (std::size_t i = 0; i < bank.size(); ++i)
      plan.reps.push_back(static_cast<int>(rng.uniform_int(0, 2)));

    std::vector<FitnessPlan> window;
    const std::size_t take = std::min<std::size_t>(state.plan_history.size(), 2);
    for (std::size_t i = state.plan_history.size() - take; i < state.plan_history.size(); ++i)
      window.push_back(state.plan_history[i]);
    window.push_back(plan);

    const double expected =
        10.0 * (0.4 * plan_score(plan, profile.preferences) +
                0.4 * rep_score(plan, desired_plan(profile, bank)) +
                0.2 * overlap_score(window));
    CHECK(feedback_score(plan, state, profile, bank, config) == doctest::Approx(expected));
  }
}

TEST_CASE("score ranges hold over randomized inputs") {
  const auto bank = fitness::default_exercise_bank();
  Rng rng(23);
  for (int trial = 0; trial < 3000; ++trial) {
    UserProfile profile;
    profile.preferences.resize(bank.size());
    for (auto& u : profile.preferences) u = rng.uniform_real(0, 10);
    profile.available_time_minutes = static_cast<int>(rng.uniform_int(0, 150));
    profile.gym_access = rng.bernoulli(0.5);
    profile.max_reps = static_cast<int>(rng.uniform_int(1, 6));

    FitnessPlan plan;
    for (std::size_t i = 0; i < bank.size(); ++i)
      plan.reps.push_back(static_cast<int>(rng.uniform_int(0, 6)));

    const double ps = plan_score(plan, profile.preferences);
    CHECK(ps >= 0.0);
    CHECK(ps <= 1.0);

    const double rs = rep_score(plan, desired_plan(profile, bank));
    CHECK(rs >= 0.0);
    CHECK(rs <= 1.0);

    EpisodeState state;
    EpisodeConfig config;
    config.alpha = rng.uniform_real(0, 1);
    config.beta = rng.uniform_real(0, 1.0 - config.alpha);
    const double f = feedback_score(plan, state, profile, bank, config);
    CHECK(f >= -10.0);
    CHECK(f <= 10.0);

    const double os = overlap_score({plan});
    CHECK(os <= 0.0);
    CHECK(os >= -1.0);
  }
}
