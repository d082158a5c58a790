#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "planbench/eval/heuristic.hpp"
#include "planbench/eval/metrics.hpp"
#include "planbench/eval/tasks.hpp"
#include "planbench/rng.hpp"

using namespace planbench;
using eval::Orientation;

namespace {

// Minimal concrete heuristic for the interface-level checks.
struct AbsDiff final : eval::OracleHeuristic<double, double, int> {
  Orientation orientation() const override { return Orientation::LowerBetter; }
  double score(const double& candidate, const double& gold, const int&) const override {
    return candidate > gold ? candidate - gold : gold - candidate;
  }
};

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  rng.shuffle(p);
  return p;
}

}  // namespace

TEST_CASE("compare_scores follows the pair-ordering case split") {
  CHECK(eval::compare_scores(3.0, 1.0, Orientation::HigherBetter) == 0);
  CHECK(eval::compare_scores(1.0, 3.0, Orientation::HigherBetter) == 1);
  // Ties go to the first argument.
  CHECK(eval::compare_scores(2.0, 2.0, Orientation::HigherBetter) == 0);
  CHECK(eval::compare_scores(2.0, 2.0, Orientation::LowerBetter) == 0);
  // Orientation flips the comparison.
  CHECK(eval::compare_scores(3.0, 1.0, Orientation::LowerBetter) == 1);
}

TEST_CASE("oracle heuristic interface composes with compare and rank") {
  AbsDiff f;
  const int problem = 0;
  CHECK(eval::compare(f, 4.0, 9.0, 5.0, problem) == 0);  // |4-5| < |9-5|
  CHECK(eval::compare(f, 9.0, 4.0, 5.0, problem) == 1);
  const std::vector<double> candidates = {9.0, 5.5, 2.0};
  const auto order = eval::oracle_rank(f, candidates, 5.0, problem);
  CHECK(order == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("rank_by_scores sorts best-first with stable ties") {
  CHECK(eval::rank_by_scores({5, 9, 1}, Orientation::HigherBetter) ==
        std::vector<std::size_t>{1, 0, 2});
  CHECK(eval::rank_by_scores({7, 7, 7}, Orientation::HigherBetter) ==
        std::vector<std::size_t>{0, 1, 2});
  CHECK(eval::rank_by_scores({5, 9, 1}, Orientation::LowerBetter) ==
        std::vector<std::size_t>{2, 0, 1});
}

TEST_CASE("rank restricted to pairs matches compare") {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const double a = rng.uniform_real(-5, 5);
    const double b = rng.uniform_real(-5, 5);
    const auto o = rng.bernoulli(0.5) ? Orientation::HigherBetter : Orientation::LowerBetter;
    const auto order = eval::rank_by_scores({a, b}, o);
    const int cmp = eval::compare_scores(a, b, o);
    CHECK(order.front() == static_cast<std::size_t>(cmp));
  }
}

TEST_CASE("compare transitivity over random triples") {
  Rng rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const double a = rng.uniform_real(0, 1);
    const double b = rng.uniform_real(0, 1);
    const double c = rng.uniform_real(0, 1);
    const auto o = Orientation::HigherBetter;
    if (eval::compare_scores(a, b, o) == 0 && eval::compare_scores(b, c, o) == 0)
      CHECK(eval::compare_scores(a, c, o) == 0);
  }
}

TEST_CASE("orientation flag is an argmax-level invariance") {
  Rng rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> scores;
    const int n = static_cast<int>(rng.uniform_int(2, 6));
    for (int i = 0; i < n; ++i) scores.push_back(rng.uniform_real(-10, 10));
    std::vector<double> negated;
    for (double s : scores) negated.push_back(-s);
    CHECK(eval::rank_by_scores(scores, Orientation::HigherBetter) ==
          eval::rank_by_scores(negated, Orientation::LowerBetter));
  }
}

TEST_CASE("hit_at_k basics") {
  const std::vector<std::size_t> oracle = {2, 0, 1, 3};
  CHECK(eval::hit_at_k(oracle, oracle, 1));
  // Best candidate (2) placed last of four.
  const std::vector<std::size_t> agent = {0, 1, 3, 2};
  CHECK_FALSE(eval::hit_at_k(agent, oracle, 3));
  CHECK(eval::hit_at_k(agent, oracle, 4));
  CHECK_THROWS_AS(eval::hit_at_k(agent, oracle, 0), eval::BadK);
  CHECK_THROWS_AS(eval::hit_at_k(agent, oracle, 5), eval::BadK);
}

TEST_CASE("hit_at_k is monotone in k") {
  Rng rng(14);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 6));
    const auto agent = random_permutation(n, rng);
    const auto oracle = random_permutation(n, rng);
    for (std::size_t k = 1; k + 1 <= n; ++k) {
      if (eval::hit_at_k(agent, oracle, k)) CHECK(eval::hit_at_k(agent, oracle, k + 1));
    }
  }
}

TEST_CASE("hit@1 of uniform rankings approaches 1/n") {
  Rng rng(15);
  int hits = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    const auto agent = random_permutation(4, rng);
    const auto oracle = random_permutation(4, rng);
    if (eval::hit_at_k(agent, oracle, 1)) ++hits;
  }
  const double rate = static_cast<double>(hits) / trials;
  CHECK(rate == doctest::Approx(0.25).epsilon(0.08));
}

TEST_CASE("pairwise_agreement endpoints and the adjacent-transposition value") {
  const std::vector<std::size_t> order = {0, 1, 2, 3};
  const std::vector<std::size_t> reversed = {3, 2, 1, 0};
  CHECK(eval::pairwise_agreement(order, order) == doctest::Approx(1.0));
  CHECK(eval::pairwise_agreement(reversed, order) == doctest::Approx(0.0));
  // One adjacent swap disagrees on exactly 1 of the 6 pairs.
  const std::vector<std::size_t> swapped = {0, 2, 1, 3};
  CHECK(eval::pairwise_agreement(swapped, order) == doctest::Approx(5.0 / 6.0));
}

TEST_CASE("pairwise_agreement reversal property on random permutations") {
  Rng rng(16);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 7));
    const auto sigma = random_permutation(n, rng);
    auto reversed = sigma;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(eval::pairwise_agreement(sigma, sigma) == doctest::Approx(1.0));
    CHECK(eval::pairwise_agreement(reversed, sigma) == doctest::Approx(0.0));
  }
}

TEST_CASE("pairwise_agreement over partial orders counts only present pairs") {
  const std::vector<std::size_t> oracle = {0, 1, 2, 3};
  const std::vector<std::size_t> partial = {1, 0};  // 2 and 3 missing
  CHECK(eval::pairwise_agreement(partial, oracle) == doctest::Approx(0.0));
  const std::vector<std::size_t> partial_good = {0, 3};
  CHECK(eval::pairwise_agreement(partial_good, oracle) == doctest::Approx(1.0));
}

TEST_CASE("pass_rate") {
  CHECK(eval::pass_rate({true, true}) == doctest::Approx(1.0));
  CHECK(eval::pass_rate({true, false, false, true}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(eval::pass_rate({}), eval::EmptySet);
}

TEST_CASE("grade_ranking marks malformed answers as misses") {
  const std::vector<std::size_t> oracle = {2, 0, 1, 3};
  const auto graded = eval::grade_ranking({}, oracle, true);
  CHECK(graded.malformed);
  for (const auto& [k, hit] : graded.hit_at) {
    (void)k;
    CHECK_FALSE(hit);
  }
  CHECK(graded.pairwise == doctest::Approx(0.0));

  const auto ok = eval::grade_ranking(oracle, oracle, false);
  CHECK(ok.hit_at.at(1));
  CHECK(ok.pairwise == doctest::Approx(1.0));
}
