#include "planbench/course/solver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "planbench/course/slots.hpp"

namespace planbench::course {

namespace {

constexpr long long kBruteForceGuard = 10'000'000;

std::vector<std::vector<bool>> conflict_matrix(const CourseInstance& instance) {
  const std::size_t m = instance.sections.size();
  std::vector<std::vector<bool>> conflict(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool c = slots_overlap(instance.sections[i].slot, instance.sections[j].slot);
      conflict[i][j] = c;
      conflict[j][i] = c;
    }
  }
  return conflict;
}

AssignmentPlan to_plan(const CourseInstance& instance, const std::vector<int>& rooms) {
  AssignmentPlan plan;
  for (std::size_t s = 0; s < rooms.size(); ++s) {
    if (rooms[s] < 0) continue;
    plan.assignments[{instance.sections[s].course_id, instance.sections[s].section_id}] =
        instance.classrooms[static_cast<std::size_t>(rooms[s])].room_id;
  }
  return plan;
}

struct BranchState {
  const CourseInstance* instance = nullptr;
  const std::vector<std::vector<bool>>* conflict = nullptr;
  std::vector<std::size_t> order;                    // sections, decreasing enrollment
  std::vector<std::vector<std::size_t>> room_order;  // per section, increasing slack
  std::vector<int> suffix_bound;                     // best-case slack of order[i..]
  std::vector<int> assignment;                       // room per section, -1 unassigned
  std::vector<std::vector<std::size_t>> occupants;   // sections per room
  int best_slack = std::numeric_limits<int>::max();
  std::vector<int> best_assignment;

  bool clashes(std::size_t section, std::size_t room) const {
    for (std::size_t other : occupants[room]) {
      if ((*conflict)[section][other]) return true;
    }
    return false;
  }

  // Conflict-aware lower bound on the slack still to come: each unassigned
  // section contributes the slack of its cheapest non-clashing room
  // (room_order is slack-sorted, so the first open room is the cheapest).
  // A section with no open room makes the node a dead end.
  int remaining_bound(std::size_t pos) const {
    int total = 0;
    for (std::size_t i = pos; i < order.size(); ++i) {
      const std::size_t s = order[i];
      int cheapest = -1;
      for (std::size_t r : room_order[s]) {
        if (!clashes(s, r)) {
          cheapest = instance->classrooms[r].capacity - instance->sections[s].enrollment;
          break;
        }
      }
      if (cheapest < 0) return std::numeric_limits<int>::max();
      total += cheapest;
    }
    return total;
  }

  void search(std::size_t pos, int partial_slack) {
    if (partial_slack + suffix_bound[pos] >= best_slack) return;
    if (pos == order.size()) {
      best_slack = partial_slack;
      best_assignment = assignment;
      return;
    }
    const int bound = remaining_bound(pos);
    if (bound == std::numeric_limits<int>::max() ||
        partial_slack + bound >= best_slack)
      return;
    const std::size_t s = order[pos];
    const Section& sec = instance->sections[s];
    for (std::size_t r : room_order[s]) {
      if (clashes(s, r)) continue;
      const int slack = instance->classrooms[r].capacity - sec.enrollment;
      assignment[s] = static_cast<int>(r);
      occupants[r].push_back(s);
      search(pos + 1, partial_slack + slack);
      occupants[r].pop_back();
      assignment[s] = -1;
    }
  }
};

}  // namespace

std::optional<Solution> solve_exact(const CourseInstance& instance) {
  const std::size_t m = instance.sections.size();
  const std::size_t n = instance.classrooms.size();
  if (m == 0) return Solution{AssignmentPlan{}, 0};
  if (n == 0) return std::nullopt;

  const auto conflict = conflict_matrix(instance);

  BranchState state;
  state.instance = &instance;
  state.conflict = &conflict;
  state.assignment.assign(m, -1);
  state.occupants.assign(n, {});

  state.room_order.resize(m);
  std::vector<int> min_slack(m, -1);
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<std::size_t> rooms;
    for (std::size_t r = 0; r < n; ++r) {
      if (instance.classrooms[r].capacity >= instance.sections[s].enrollment)
        rooms.push_back(r);
    }
    if (rooms.empty()) return std::nullopt;  // nowhere large enough
    std::sort(rooms.begin(), rooms.end(), [&](std::size_t a, std::size_t b) {
      const int sa = instance.classrooms[a].capacity - instance.sections[s].enrollment;
      const int sb = instance.classrooms[b].capacity - instance.sections[s].enrollment;
      return sa != sb ? sa < sb : a < b;
    });
    min_slack[s] =
        instance.classrooms[rooms.front()].capacity - instance.sections[s].enrollment;
    state.room_order[s] = std::move(rooms);
  }

  state.order.resize(m);
  std::iota(state.order.begin(), state.order.end(), 0);
  std::sort(state.order.begin(), state.order.end(), [&](std::size_t a, std::size_t b) {
    const int ea = instance.sections[a].enrollment;
    const int eb = instance.sections[b].enrollment;
    return ea != eb ? ea > eb : a < b;
  });

  state.suffix_bound.assign(m + 1, 0);
  for (std::size_t i = m; i-- > 0;)
    state.suffix_bound[i] = state.suffix_bound[i + 1] + min_slack[state.order[i]];

  state.search(0, 0);
  if (state.best_assignment.empty()) return std::nullopt;
  return Solution{to_plan(instance, state.best_assignment), state.best_slack};
}

std::optional<Solution> brute_force_solve(const CourseInstance& instance) {
  const std::size_t m = instance.sections.size();
  const std::size_t n = instance.classrooms.size();
  if (m == 0) return Solution{AssignmentPlan{}, 0};
  if (n == 0) return std::nullopt;

  long long space = 1;
  for (std::size_t i = 0; i < m; ++i) {
    space *= static_cast<long long>(n);
    if (space > kBruteForceGuard)
      throw TooLarge("brute_force_solve: " + std::to_string(n) + "^" +
                     std::to_string(m) + " assignments exceed the guard");
  }

  const auto conflict = conflict_matrix(instance);
  std::vector<int> rooms(m, 0);
  std::vector<int> best;
  int best_slack = std::numeric_limits<int>::max();

  while (true) {
    int slack = 0;
    bool feasible = true;
    for (std::size_t s = 0; s < m && feasible; ++s) {
      const Section& sec = instance.sections[s];
      const Classroom& room = instance.classrooms[static_cast<std::size_t>(rooms[s])];
      if (sec.enrollment > room.capacity) {
        feasible = false;
        break;
      }
      slack += room.capacity - sec.enrollment;
      for (std::size_t t = 0; t < s; ++t) {
        if (rooms[t] == rooms[s] && conflict[s][t]) {
          feasible = false;
          break;
        }
      }
    }
    if (feasible && slack < best_slack) {
      best_slack = slack;
      best = rooms;
    }

    // Odometer increment, last section fastest.
    std::size_t pos = m;
    while (pos-- > 0) {
      if (++rooms[pos] < static_cast<int>(n)) break;
      rooms[pos] = 0;
      if (pos == 0) {
        if (best.empty()) return std::nullopt;
        return Solution{to_plan(instance, best), best_slack};
      }
    }
  }
}

}  // namespace planbench::course
