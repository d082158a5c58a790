#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "planbench/course/assess.hpp"
#include "planbench/course/distance.hpp"
#include "planbench/course/generator.hpp"
#include "planbench/course/io.hpp"
#include "planbench/course/slots.hpp"
#include "planbench/course/solver.hpp"
#include "planbench/course/tasks.hpp"

using namespace planbench;
using namespace planbench::course;

namespace {

const std::string kGoldenPath =
    std::string(PLANBENCH_DATA_DIR) + "/course/appendix_instance.json";

TimeSlot slot(const std::string& text) { return parse_slot(text); }

// Small random instances sized for the brute-force guard.
CourseInstance small_instance(Rng& rng) {
  GeneratorParams params;
  params.courses = static_cast<int>(rng.uniform_int(2, 3));
  params.min_sections = 1;
  params.max_sections = 3;
  params.min_classrooms = 2;
  params.max_classrooms = 4;
  return sample_instance(params, rng);
}

}  // namespace

TEST_CASE("slots_overlap needs a shared day and intersecting times") {
  CHECK(slots_overlap(slot("['Monday', 'Thursday'] at 11:30AM-12:45PM"),
                      slot("['Monday', 'Friday'] at 11:30AM-12:45PM")));
  // Half-open intervals: back-to-back meetings do not clash.
  CHECK_FALSE(slots_overlap(slot("['Monday'] at 8:30AM-9:45AM"),
                            slot("['Monday'] at 9:45AM-11:00AM")));
  CHECK_FALSE(slots_overlap(slot("['Tuesday', 'Thursday'] at 11:30AM-12:45PM"),
                            slot("['Monday', 'Friday'] at 11:30AM-12:45PM")));
  // Partial containment counts.
  CHECK(slots_overlap(slot("['Monday'] at 8:30AM-11:00AM"),
                      slot("['Monday'] at 9:00AM-9:30AM")));
}

TEST_CASE("slots_overlap is symmetric, day order ignored") {
  Rng rng(41);
  const auto catalog = slot_catalog();
  for (int trial = 0; trial < 500; ++trial) {
    TimeSlot a = rng.pick(catalog);
    TimeSlot b = rng.pick(catalog);
    if (rng.bernoulli(0.5)) std::swap(a.days[0], a.days[1]);
    CHECK(slots_overlap(a, b) == slots_overlap(b, a));
  }
}

TEST_CASE("time parsing and formatting invert each other") {
  CHECK(parse_time("8:30AM") == 510);
  CHECK(parse_time("12:45PM") == 765);
  CHECK(parse_time("12:00AM") == 0);
  CHECK(parse_time("2:30PM") == 870);
  CHECK(format_time(510) == "8:30AM");
  CHECK(format_time(765) == "12:45PM");
  CHECK(format_time(0) == "12:00AM");
  CHECK(format_time(720) == "12:00PM");
  CHECK_THROWS_AS(parse_time("25:00AM"), ParseError);
  CHECK_THROWS_AS(parse_time("whenever"), ParseError);
}

TEST_CASE("slot strings round-trip bit-exactly, unsorted day pairs included") {
  const std::vector<std::string> samples = {
      "['Monday', 'Thursday'] at 11:30AM-12:45PM",
      "['Tuesday', 'Monday'] at 2:30PM-3:45PM",
      "['Friday', 'Tuesday'] at 4:00PM-5:15PM",
      "['Wednesday'] at 10:00AM-11:15AM",
  };
  for (const auto& text : samples) CHECK(format_slot(parse_slot(text)) == text);
  CHECK_THROWS_AS(parse_slot("Monday at 9:00AM-10:00AM"), ParseError);
  CHECK_THROWS_AS(parse_slot("['Monday'] at 10:00AM-9:00AM"), ParseError);
  CHECK_THROWS_AS(parse_slot("['Mon'] at 9:00AM-10:00AM"), ParseError);
}

TEST_CASE("the slot catalog spans every day pair and period") {
  const auto catalog = slot_catalog();
  CHECK(catalog.size() == 70);  // C(5,2) day pairs x 7 periods
  for (const auto& s : catalog) {
    CHECK(s.days.size() == 2);
    CHECK(s.end_minutes - s.start_minutes == 75);
  }
}

TEST_CASE("appendix golden file: lossless load, slack 32, solver agrees") {
  std::ifstream in(kGoldenPath, std::ios::binary);
  REQUIRE(in);
  const std::string original((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  const CourseInstanceRecord record = from_dataset_json(original);
  CHECK(to_dataset_json(record) == original);

  REQUIRE(record.instance.sections.size() == 8);
  REQUIRE(record.instance.classrooms.size() == 2);

  const PlanAssessment verdict = assess(record.gold, record.instance);
  CHECK(verdict.complete);
  CHECK(verdict.feasible);
  CHECK(verdict.total_slack == 32);
  CHECK(record.optimal_slack == 32);
  CHECK(verdict.threshold_pass);  // 240/208 is well under 1.3

  const auto solved = solve_exact(record.instance);
  REQUIRE(solved.has_value());
  CHECK(solved->optimal_slack == 32);

  const auto brute = brute_force_solve(record.instance);
  REQUIRE(brute.has_value());
  CHECK(brute->optimal_slack == 32);
}

TEST_CASE("assess flags incompleteness, conflicts and capacity violations") {
  CourseInstance instance;
  instance.classrooms = {{"room A", 30}, {"room B", 25}};
  Section s1{"Course 1", "Section 1", slot("['Monday'] at 11:30AM-12:45PM"), 28};
  Section s2{"Course 1", "Section 2", slot("['Monday'] at 11:30AM-12:45PM"), 22};
  instance.sections = {s1, s2};

  AssignmentPlan empty;
  const auto incomplete = assess(empty, instance);
  CHECK_FALSE(incomplete.complete);
  CHECK_FALSE(incomplete.feasible);

  AssignmentPlan clash;
  clash.assignments[{"Course 1", "Section 1"}] = "room A";
  clash.assignments[{"Course 1", "Section 2"}] = "room A";
  const auto conflicted = assess(clash, instance);
  CHECK(conflicted.complete);
  CHECK_FALSE(conflicted.feasible);
  bool saw_conflict = false;
  for (const auto& v : conflicted.violations)
    if (v.find("double-booked") != std::string::npos) saw_conflict = true;
  CHECK(saw_conflict);

  AssignmentPlan too_small;
  too_small.assignments[{"Course 1", "Section 1"}] = "room B";  // 28 > 25
  too_small.assignments[{"Course 1", "Section 2"}] = "room A";
  const auto cramped = assess(too_small, instance);
  CHECK_FALSE(cramped.feasible);

  AssignmentPlan good;
  good.assignments[{"Course 1", "Section 1"}] = "room A";
  good.assignments[{"Course 1", "Section 2"}] = "room B";
  const auto ok = assess(good, instance);
  CHECK(ok.feasible);
  CHECK(ok.total_slack == (30 - 28) + (25 - 22));

  AssignmentPlan dangling;
  dangling.assignments[{"Course 9", "Section 9"}] = "room A";
  CHECK_THROWS_AS(assess(dangling, instance), UnknownReference);
}

TEST_CASE("raw slack predicate is exposed alongside the ratio reading") {
  CourseInstance instance;
  instance.classrooms = {{"room A", 30}};
  instance.sections = {{"Course 1", "Section 1", slot("['Monday'] at 8:30AM-9:45AM"), 25}};
  AssignmentPlan plan;
  plan.assignments[{"Course 1", "Section 1"}] = "room A";
  CHECK(raw_slack_exceeds_delta(plan, instance, 1.3));  // slack 5 > 1.3
  CHECK_FALSE(raw_slack_exceeds_delta(plan, instance, 5.0));
  const auto verdict = assess(plan, instance, 1.3);
  CHECK(verdict.occupancy_ratio == doctest::Approx(30.0 / 25.0));
  CHECK(verdict.threshold_pass);
}

TEST_CASE("solver basics: single room, pigeonhole, empty instance") {
  CourseInstance single;
  single.classrooms = {{"room A", 30}};
  single.sections = {{"Course 1", "Section 1", slot("['Monday'] at 8:30AM-9:45AM"), 24}};
  const auto solo = solve_exact(single);
  REQUIRE(solo.has_value());
  CHECK(solo->optimal_slack == 6);
  CHECK(solo->plan.assignments.at({"Course 1", "Section 1"}) == "room A");

  CourseInstance pigeonhole = single;
  pigeonhole.sections.push_back(
      {"Course 1", "Section 2", slot("['Monday'] at 8:30AM-9:45AM"), 20});
  CHECK_FALSE(solve_exact(pigeonhole).has_value());
  CHECK_FALSE(brute_force_solve(pigeonhole).has_value());

  CourseInstance empty;
  empty.classrooms = {{"room A", 30}};
  const auto trivial = solve_exact(empty);
  REQUIRE(trivial.has_value());
  CHECK(trivial->optimal_slack == 0);
}

TEST_CASE("brute force guard rejects oversized search spaces") {
  Rng rng(42);
  GeneratorParams params;
  params.courses = 10;
  params.min_classrooms = 6;
  params.max_classrooms = 6;
  const CourseInstance big = sample_instance(params, rng);
  CHECK_THROWS_AS(brute_force_solve(big), TooLarge);
}

TEST_CASE("solve_exact matches brute force on random small instances") {
  Rng rng(43);
  int solvable = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const CourseInstance instance = small_instance(rng);
    const auto fast = solve_exact(instance);
    const auto slow = brute_force_solve(instance);
    REQUIRE(fast.has_value() == slow.has_value());
    if (!fast) continue;
    ++solvable;
    CHECK(fast->optimal_slack == slow->optimal_slack);
    const auto fast_verdict = assess(fast->plan, instance);
    CHECK(fast_verdict.feasible);
    CHECK(fast_verdict.total_slack == fast->optimal_slack);
    const auto slow_verdict = assess(slow->plan, instance);
    CHECK(slow_verdict.feasible);
    CHECK(slow_verdict.total_slack == slow->optimal_slack);
  }
  CHECK(solvable > 20);  // the sampler must not degenerate into all-unsolvable
}

TEST_CASE("no feasible plan beats the reported optimum on small instances") {
  Rng rng(44);
  for (int trial = 0; trial < 15; ++trial) {
    GeneratorParams params;
    params.courses = 2;
    params.min_sections = 1;
    params.max_sections = 2;
    params.min_classrooms = 2;
    params.max_classrooms = 3;
    const CourseInstance instance = sample_instance(params, rng);
    const auto best = solve_exact(instance);
    if (!best) continue;
    // Enumerate every complete assignment and compare.
    const std::size_t m = instance.sections.size();
    const std::size_t n = instance.classrooms.size();
    std::vector<std::size_t> rooms(m, 0);
    while (true) {
      AssignmentPlan plan;
      for (std::size_t s = 0; s < m; ++s)
        plan.assignments[{instance.sections[s].course_id,
                          instance.sections[s].section_id}] =
            instance.classrooms[rooms[s]].room_id;
      const auto verdict = assess(plan, instance);
      if (verdict.feasible) CHECK(best->optimal_slack <= verdict.total_slack);
      std::size_t pos = m;
      bool done = false;
      while (pos-- > 0) {
        if (++rooms[pos] < n) break;
        rooms[pos] = 0;
        if (pos == 0) done = true;
      }
      if (done) break;
    }
  }
}

TEST_CASE("difficulty presets fix the course counts") {
  CHECK(params_for(Difficulty::Easy).courses == 5);
  CHECK(params_for(Difficulty::Medium).courses == 7);
  CHECK(params_for(Difficulty::Hard).courses == 10);
}

TEST_CASE("generated instances are solvable and bit-reproducible") {
  for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
    const auto a = generate_instance(Difficulty::Easy, seed);
    const auto b = generate_instance(Difficulty::Easy, seed);
    CHECK(to_dataset_json(a) == to_dataset_json(b));
    CHECK(a.instance.text_description == b.instance.text_description);
    const auto verdict = assess(a.gold, a.instance);
    CHECK(verdict.feasible);
    CHECK(verdict.total_slack == a.optimal_slack);
  }
  // Different seeds should not collide.
  const auto x = generate_instance(Difficulty::Easy, 1);
  const auto y = generate_instance(Difficulty::Easy, 2);
  CHECK(to_dataset_json(x) != to_dataset_json(y));
}

TEST_CASE("dataset files round-trip through save and load") {
  const auto record = generate_instance(Difficulty::Medium, 31337);
  const std::string text = to_dataset_json(record);
  const auto reloaded = from_dataset_json(text);
  CHECK(to_dataset_json(reloaded) == text);
  CHECK(reloaded.instance.sections.size() == record.instance.sections.size());
  CHECK(reloaded.optimal_slack == record.optimal_slack);
  CHECK(reloaded.instance.difficulty == Difficulty::Medium);
  CHECK_THROWS_AS(from_dataset_json("{\"nope\": 1}"), std::exception);
  CHECK_THROWS_AS(from_dataset_json("not json at all"), ParseError);
}

TEST_CASE("plan_distance counts missing and rewired sections") {
  const auto record = generate_instance(Difficulty::Easy, 5);
  const auto& instance = record.instance;
  const std::size_t m = instance.sections.size();

  CHECK(plan_distance(record.gold, record.gold, instance) == 0);
  CHECK(plan_distance(AssignmentPlan{}, record.gold, instance) ==
        static_cast<int>(m));

  // Rewire exactly two sections to different rooms.
  AssignmentPlan two = record.gold;
  int moved = 0;
  for (auto& [ref, room] : two.assignments) {
    if (moved == 2) break;
    for (const auto& r : instance.classrooms) {
      if (r.room_id != room) {
        room = r.room_id;
        ++moved;
        break;
      }
    }
  }
  REQUIRE(moved == 2);
  CHECK(plan_distance(two, record.gold, instance) == 2);

  AssignmentPlan dangling;
  dangling.assignments[{"Course 99", "Section 1"}] = "classroom 1";
  CHECK_THROWS_AS(plan_distance(dangling, record.gold, instance), UnknownReference);
}

TEST_CASE("plan_distance is a metric on complete plans") {
  Rng rng(45);
  const auto record = generate_instance(Difficulty::Easy, 6);
  const auto& instance = record.instance;
  const auto random_complete = [&](Rng& r) {
    AssignmentPlan plan;
    for (const auto& sec : instance.sections) {
      const auto idx = static_cast<std::size_t>(
          r.uniform_int(0, static_cast<std::int64_t>(instance.classrooms.size()) - 1));
      plan.assignments[{sec.course_id, sec.section_id}] =
          instance.classrooms[idx].room_id;
    }
    return plan;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_complete(rng);
    const auto b = random_complete(rng);
    const auto c = random_complete(rng);
    const int ab = plan_distance(a, b, instance);
    const int ba = plan_distance(b, a, instance);
    const int ac = plan_distance(a, c, instance);
    const int cb = plan_distance(c, b, instance);
    CHECK(ab == ba);
    CHECK(plan_distance(a, a, instance) == 0);
    CHECK(ab <= ac + cb);
    if (ab == 0) CHECK(a.assignments == b.assignments);
  }
}

TEST_CASE("corrupt_plan honors its dials") {
  const auto record = generate_instance(Difficulty::Easy, 8);
  const auto& instance = record.instance;
  const int m = static_cast<int>(instance.sections.size());

  const auto untouched = corrupt_plan(record.gold, instance, 1.0, 0.0, 11);
  CHECK(plan_distance(untouched, record.gold, instance) == 0);

  const auto wiped = corrupt_plan(record.gold, instance, 0.0, 0.5, 11);
  CHECK(wiped.assignments.empty());
  CHECK(plan_distance(wiped, record.gold, instance) == m);

  const auto rewired = corrupt_plan(record.gold, instance, 1.0, 1.0, 11);
  CHECK(plan_distance(rewired, record.gold, instance) == m);

  // Determinism per seed.
  const auto again = corrupt_plan(record.gold, instance, 0.5, 0.3, 99);
  const auto once_more = corrupt_plan(record.gold, instance, 0.5, 0.3, 99);
  CHECK(again.assignments == once_more.assignments);
  CHECK_THROWS_AS(corrupt_plan(record.gold, instance, 1.5, 0.0, 1),
                  std::invalid_argument);
}

TEST_CASE("course heuristic tasks have pairwise distinct oracle distances") {
  const auto record = generate_instance(Difficulty::Medium, 13);
  for (int i = 0; i < 40; ++i) {
    const auto task = build_course_heuristic_task(record, 4, RankMode::ZeroShot,
                                                  700 + static_cast<std::uint64_t>(i));
    REQUIRE(task.candidates.size() == 4);
    std::set<int> distances(task.distances.begin(), task.distances.end());
    CHECK(distances.size() == 4);
    // Recheck the emitted distances independently.
    for (std::size_t c = 0; c < 4; ++c)
      CHECK(task.distances[c] ==
            plan_distance(task.candidates[c], record.gold, record.instance));
    // Ascending oracle order.
    for (std::size_t k = 0; k + 1 < 4; ++k)
      CHECK(task.distances[task.oracle_order[k]] <
            task.distances[task.oracle_order[k + 1]]);
  }
  const auto pair_task = build_course_heuristic_task(record, 2, RankMode::ZeroShot, 1);
  CHECK(pair_task.candidates.size() == 2);
  CHECK_THROWS_AS(build_course_heuristic_task(record, 3, RankMode::ZeroShot, 1),
                  std::invalid_argument);
}

TEST_CASE("one-shot ranking mode attaches the worked exemplar") {
  const auto record = generate_instance(Difficulty::Easy, 21);
  const auto task = build_course_heuristic_task(record, 2, RankMode::OneShot, 3);
  REQUIRE(task.rendered.context_text.has_value());
  CHECK(task.rendered.context_text->find("Worked example") != std::string::npos);
  CHECK(task.rendered.context_text->find("ranking") != std::string::npos);
}

TEST_CASE("course verifier tasks label by assessment and balance out") {
  const auto record = generate_instance(Difficulty::Easy, 77);
  int feasible = 0;
  const int n = 300;
  for (int i = 0; i < n; ++i) {
    const auto task =
        build_course_verifier_task(record, 4000 + static_cast<std::uint64_t>(i));
    const auto verdict = assess(task.candidate, record.instance);
    CHECK(task.ground_truth.feasible == verdict.feasible);
    CHECK(task.ground_truth.optimal == verdict.threshold_pass);
    feasible += task.ground_truth.feasible ? 1 : 0;
  }
  const double balance = static_cast<double>(feasible) / n;
  CHECK(balance > 0.40);
  CHECK(balance < 0.60);
}
