#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "planbench/agents/scripted.hpp"
#include "planbench/eval/metrics.hpp"
#include "planbench/fitness/banks.hpp"
#include "planbench/fitness/episode.hpp"
#include "planbench/fitness/oracle.hpp"
#include "planbench/fitness/render.hpp"
#include "planbench/fitness/scoring.hpp"
#include "planbench/fitness/tasks.hpp"

using namespace planbench;
using namespace planbench::fitness;

namespace {

// Joe from the worked fitness example: 60 minutes, no gym, medium stamina.
UserProfile joe(const ExerciseBank& bank) {
  UserProfile p;
  p.name = "Joe";
  p.preferences.assign(bank.size(), 5.0);
  p.available_time_minutes = 60;
  p.gym_access = false;
  p.stamina = Stamina::Medium;
  p.max_reps = 5;
  return p;
}

FitnessPlan named_plan(const ExerciseBank& bank,
                       const std::map<std::string, int>& reps) {
  FitnessPlan plan;
  plan.reps.assign(bank.size(), 0);
  for (const auto& [name, count] : reps) {
    bool found = false;
    for (std::size_t i = 0; i < bank.size(); ++i) {
      if (bank[i].name == name) {
        plan.reps[i] = count;
        found = true;
      }
    }
    REQUIRE(found);
  }
  return plan;
}

}  // namespace

TEST_CASE("default bank starts with the eight canonical exercises") {
  const auto bank = default_exercise_bank();
  REQUIRE(bank.size() >= 8);
  CHECK(bank[0].name == "Jogging");
  CHECK(bank[0].duration_minutes == 30);
  CHECK(bank[0].intensity == Intensity::Low);
  CHECK_FALSE(bank[0].gym_required);
  CHECK(bank[0].category == Category::Aerobic);
  CHECK(bank[1].name == "Cycling");
  CHECK(bank[1].duration_minutes == 45);
  CHECK(bank[1].gym_required);
  CHECK(bank[2].name == "Swimming");
  CHECK(bank[2].duration_minutes == 60);
  CHECK(bank[3].name == "Jump Rope");
  CHECK(bank[3].duration_minutes == 15);
  CHECK(bank[4].name == "Push-Up");
  CHECK(bank[4].duration_minutes == 2);
  CHECK(bank[5].name == "Bench Press");
  CHECK(bank[5].duration_minutes == 5);
  CHECK(bank[5].gym_required);
  CHECK(bank[5].category == Category::Anaerobic);
  CHECK(bank[6].name == "Shoulder Shrugs");
  CHECK(bank[6].duration_minutes == 5);
  CHECK(bank[7].name == "Lunges");
  CHECK(bank[7].duration_minutes == 5);
}

TEST_CASE("shipped bank files load and match the built-in defaults") {
  const auto bank = load_exercise_bank(std::string(PLANBENCH_DATA_DIR) +
                                       "/fitness/exercise_bank.json");
  const auto builtin = default_exercise_bank();
  REQUIRE(bank.size() == builtin.size());
  for (std::size_t i = 0; i < bank.size(); ++i) {
    CHECK(bank[i].name == builtin[i].name);
    CHECK(bank[i].duration_minutes == builtin[i].duration_minutes);
    CHECK(bank[i].gym_required == builtin[i].gym_required);
    CHECK(bank[i].muscle_groups == builtin[i].muscle_groups);
  }
  const auto emergencies =
      load_emergency_bank(std::string(PLANBENCH_DATA_DIR) + "/fitness/emergency_bank.json");
  CHECK(emergencies.size() == 8);
  const auto users =
      load_user_bank(std::string(PLANBENCH_DATA_DIR) + "/fitness/user_bank.json");
  REQUIRE_FALSE(users.empty());
  for (const auto& u : users) CHECK(u.preferences.size() == bank.size());
}

TEST_CASE("the worked example's initial plan busts the time budget") {
  const auto bank = default_exercise_bank();
  const auto user = joe(bank);
  const FitnessPlan initial = named_plan(bank, {{"Jogging", 1},
                                                {"Jump Rope", 2},
                                                {"Push-Up", 2},
                                                {"Shoulder Shrugs", 1},
                                                {"Lunges", 2}});
  CHECK(plan_minutes(initial, bank) == 79);
  const auto check = check_feasibility(initial, user, bank);
  CHECK_FALSE(check.feasible);
  REQUIRE_FALSE(check.violations.empty());
  CHECK(check.violations.front().find("time budget exceeded") != std::string::npos);

  const FitnessPlan refined = named_plan(
      bank, {{"Jogging", 1}, {"Jump Rope", 1}, {"Push-Up", 3}, {"Lunges", 1}});
  CHECK(plan_minutes(refined, bank) == 56);
  CHECK(check_feasibility(refined, user, bank).feasible);
}

TEST_CASE("gym, rep-cap, exclusion and emergency violations") {
  const auto bank = default_exercise_bank();
  auto user = joe(bank);

  CHECK(check_feasibility(named_plan(bank, {}), user, bank).feasible);

  const auto gym = check_feasibility(named_plan(bank, {{"Bench Press", 1}}), user, bank);
  CHECK_FALSE(gym.feasible);
  CHECK(gym.violations.front().find("gym") != std::string::npos);

  const auto reps = check_feasibility(named_plan(bank, {{"Push-Up", 6}}), user, bank);
  CHECK_FALSE(reps.feasible);

  user.excluded_muscle_groups.insert("legs");
  const auto excl = check_feasibility(named_plan(bank, {{"Jogging", 1}}), user, bank);
  CHECK_FALSE(excl.feasible);
  CHECK(excl.violations.front().find("legs") != std::string::npos);

  user.excluded_muscle_groups.clear();
  std::vector<EmergencyCondition> back = {{"back pain", ExcludeMuscleGroup{"back"}}};
  const auto em = check_feasibility(named_plan(bank, {{"Shoulder Shrugs", 1}}), user,
                                    bank, back);
  CHECK_FALSE(em.feasible);
  CHECK(em.violations.front().find("back") != std::string::npos);
}

TEST_CASE("step draws emergencies per the configured probability") {
  const auto bank = default_exercise_bank();
  const auto user = joe(bank);
  const auto emergencies = default_emergency_bank();
  const FitnessPlan plan = named_plan(bank, {{"Push-Up", 2}});

  EpisodeConfig config;
  config.iterations = 20;

  config.emergency_probability = 0.0;
  {
    EpisodeState state;
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
      const Feedback fb = step(state, plan, user, bank, config, rng, emergencies);
      CHECK_FALSE(fb.emergency.has_value());
    }
    CHECK(state.active_emergencies.empty());
  }

  config.emergency_probability = 1.0;
  {
    EpisodeState state;
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
      const Feedback fb = step(state, plan, user, bank, config, rng, emergencies);
      CHECK(fb.emergency.has_value());
    }
    CHECK(state.active_emergencies.size() == 20);
  }
}

TEST_CASE("step is deterministic and refuses to run past the horizon") {
  const auto bank = default_exercise_bank();
  const auto user = joe(bank);
  const auto emergencies = default_emergency_bank();
  EpisodeConfig config;
  config.iterations = 2;
  config.emergency_probability = 0.7;
  const FitnessPlan plan = named_plan(bank, {{"Jump Rope", 1}});

  const auto run_two = [&] {
    EpisodeState state;
    Rng rng(99);
    step(state, plan, user, bank, config, rng, emergencies);
    step(state, plan, user, bank, config, rng, emergencies);
    return state;
  };
  const EpisodeState a = run_two();
  const EpisodeState b = run_two();
  CHECK(transcript_jsonl(a) == transcript_jsonl(b));

  EpisodeState done = run_two();
  Rng rng(1);
  CHECK_THROWS_AS(step(done, plan, user, bank, config, rng, emergencies),
                  EpisodeFinished);
}

TEST_CASE("infeasible plans get complaints instead of scores") {
  const auto bank = default_exercise_bank();
  const auto user = joe(bank);
  EpisodeConfig config;
  config.emergency_probability = 0.0;
  EpisodeState state;
  Rng rng(3);
  const FitnessPlan over = named_plan(bank, {{"Jogging", 3}});  // 90 > 60 minutes
  const Feedback fb = step(state, over, user, bank, config, rng, {});
  CHECK_FALSE(fb.feasible);
  CHECK(fb.satisfaction == 0.0);
  CHECK_FALSE(fb.violations.empty());
}

TEST_CASE("oracle agent achieves its analytic ceiling without emergencies") {
  const auto bank = default_exercise_bank();
  auto user = joe(bank);
  for (std::size_t i = 0; i < user.preferences.size(); ++i)
    user.preferences[i] = 3.0 + static_cast<double>(i % 7);

  EpisodeConfig config;
  config.alpha = 0.5;  // no overlap term
  config.beta = 0.5;
  config.iterations = 6;
  config.emergency_probability = 0.0;
  config.seed = 42;

  auto agent = agents::make_oracle_fitness_solver(user, bank);
  const EpisodeResult result = run_episode(*agent, user, bank, config, {});
  CHECK(result.metrics.feasibility == doctest::Approx(1.0));

  double analytic = 0.0;
  for (int i = 3; i >= 1; --i)
    analytic += std::max(result.max_feedback[result.max_feedback.size() - i], 0.0) / 10.0;
  analytic /= 3.0;
  CHECK(result.metrics.optimality == doctest::Approx(analytic).epsilon(0.01));
  CHECK(result.metrics.cost_utility == 1);
}

TEST_CASE("the all-zero agent is feasible but explores nothing") {
  const auto bank = default_exercise_bank();
  const auto user = joe(bank);
  EpisodeConfig config;
  config.iterations = 5;
  config.emergency_probability = 0.0;
  auto agent = agents::make_zero_fitness_solver();
  const EpisodeResult result = run_episode(*agent, user, bank, config, {});
  CHECK(result.metrics.feasibility == doctest::Approx(1.0));
  CHECK(result.metrics.diversity == doctest::Approx(0.0));
  CHECK(result.metrics.optimality == doctest::Approx(0.0));
  CHECK(result.metrics.cost_utility == config.iterations + 1);
}

TEST_CASE("feasibility times iterations counts the feasible feedback records") {
  const auto bank = default_exercise_bank();
  const auto user = joe(bank);
  EpisodeConfig config;
  config.iterations = 12;
  config.emergency_probability = 0.3;
  config.seed = 5;
  auto agent = agents::make_random_fitness_solver(17);
  const EpisodeResult result = run_episode(*agent, user, bank, config,
                                           default_emergency_bank());
  int feasible = 0;
  for (const auto& fb : result.state.feedback_history) feasible += fb.feasible ? 1 : 0;
  CHECK(result.metrics.feasibility * config.iterations == doctest::Approx(feasible));
  CHECK(result.state.plan_history.size() == result.state.feedback_history.size());
}

TEST_CASE("episodes are bit-reproducible under a fixed seed") {
  const auto bank = default_exercise_bank();
  const auto user = joe(bank);
  EpisodeConfig config;
  config.iterations = 10;
  config.emergency_probability = 0.4;
  config.seed = 2024;

  const auto run_once = [&] {
    auto agent = agents::make_hill_climb_fitness_solver(55);
    return run_episode(*agent, user, bank, config, default_emergency_bank());
  };
  const EpisodeResult a = run_once();
  const EpisodeResult b = run_once();
  CHECK(transcript_jsonl(a.state) == transcript_jsonl(b.state));
  CHECK(a.metrics.feasibility == b.metrics.feasibility);
  CHECK(a.metrics.optimality == b.metrics.optimality);
  CHECK(a.metrics.diversity == b.metrics.diversity);
  CHECK(a.metrics.cost_utility == b.metrics.cost_utility);
}

TEST_CASE("emergencies persist for the rest of the episode") {
  const auto bank = default_exercise_bank();
  const auto user = joe(bank);
  EpisodeConfig config;
  config.iterations = 8;
  config.emergency_probability = 1.0;
  config.seed = 9;
  auto agent = agents::make_zero_fitness_solver();
  const EpisodeResult result = run_episode(*agent, user, bank, config,
                                           default_emergency_bank());
  CHECK(result.state.active_emergencies.size() == 8);
}

TEST_CASE("verifier tasks carry labels that recheck independently") {
  const auto bank = default_exercise_bank();
  const auto emergencies = default_emergency_bank();
  int feasible_count = 0;
  const int n = 300;
  for (int i = 0; i < n; ++i) {
    const auto task =
        build_verifier_task(TaskMode::ZeroShot, 1000 + static_cast<std::uint64_t>(i),
                            bank, emergencies);
    const auto recheck =
        check_feasibility(task.candidate, task.profile, bank, task.active_emergencies);
    CHECK(task.ground_truth == recheck.feasible);
    feasible_count += task.ground_truth ? 1 : 0;
  }
  const double balance = static_cast<double>(feasible_count) / n;
  CHECK(balance > 0.40);
  CHECK(balance < 0.60);
}

TEST_CASE("few-shot verifier tasks expose the history protocol") {
  const auto bank = default_exercise_bank();
  const auto task = build_verifier_task(TaskMode::FewShot, 77, bank,
                                        default_emergency_bank());
  REQUIRE(task.rendered.context_text.has_value());
  const std::string& ctx = *task.rendered.context_text;
  CHECK(ctx.find("P_0") != std::string::npos);
  CHECK(ctx.find("F_0") != std::string::npos);
  CHECK(ctx.find("P_1") != std::string::npos);
  CHECK(ctx.find("F_1") != std::string::npos);
  // The question plan's own feedback is withheld: there is one F per listed P.
  const auto recheck =
      check_feasibility(task.candidate, task.profile, bank, task.active_emergencies);
  CHECK(task.ground_truth == recheck.feasible);
}

TEST_CASE("heuristic tasks rank the oracle plan over the zero plan") {
  const auto bank = default_exercise_bank();
  auto user = joe(bank);
  EpisodeConfig config;
  EpisodeState state;
  const FitnessPlan desired = desired_plan(user, bank);
  const FitnessPlan zero{std::vector<int>(bank.size(), 0)};
  const double f_desired = feedback_score(desired, state, user, bank, config);
  const double f_zero = feedback_score(zero, state, user, bank, config);
  CHECK(f_desired > f_zero);
  const auto order =
      eval::rank_by_scores({f_zero, f_desired}, eval::Orientation::HigherBetter);
  CHECK(order.front() == 1);
}

TEST_CASE("heuristic task builder emits distinct scores and a permutation") {
  const auto bank = default_exercise_bank();
  const auto emergencies = default_emergency_bank();
  for (int i = 0; i < 60; ++i) {
    const auto task = build_heuristic_task(TaskMode::ZeroShot, 4,
                                           500 + static_cast<std::uint64_t>(i), bank,
                                           emergencies);
    REQUIRE(task.candidates.size() == 4);
    REQUIRE(task.oracle_order.size() == 4);
    std::set<std::size_t> seen(task.oracle_order.begin(), task.oracle_order.end());
    CHECK(seen.size() == 4);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b)
        CHECK(std::abs(task.rendered.oracle_scores[a] - task.rendered.oracle_scores[b]) >
              1e-9);
    // All candidates feasible under the task's constraints.
    for (const auto& plan : task.candidates)
      CHECK(check_feasibility(plan, task.profile, bank, task.active_emergencies).feasible);
    // The oracle order really is descending satisfaction.
    for (std::size_t k = 0; k + 1 < 4; ++k)
      CHECK(task.rendered.oracle_scores[task.oracle_order[k]] >
            task.rendered.oracle_scores[task.oracle_order[k + 1]]);
  }
}

TEST_CASE("few-shot heuristic tasks come with context and stay consistent") {
  const auto bank = default_exercise_bank();
  const auto task =
      build_heuristic_task(TaskMode::FewShot, 2, 321, bank, default_emergency_bank());
  CHECK(task.rendered.context_text.has_value());
  REQUIRE(task.candidates.size() == 2);
  const double recomputed = feedback_score(task.candidates[0], task.history,
                                           task.profile, bank, task.config);
  CHECK(recomputed == doctest::Approx(task.rendered.oracle_scores[0]));
}
