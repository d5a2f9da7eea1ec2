#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cdtree/cart.hpp"
#include "cdtree/core.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace cdtree;

namespace {

struct Sample {
  std::vector<double> x;
  std::vector<Label> y;
};

Sample RandomSample(std::mt19937_64& rng, int max_n = 50, int max_distinct = 8) {
  std::uniform_int_distribution<int> len(1, max_n);
  std::uniform_int_distribution<int> distinct(1, max_distinct);
  const int n = len(rng);
  std::uniform_int_distribution<int> xv(0, distinct(rng) - 1);
  std::uniform_int_distribution<int> yv(0, distinct(rng) - 1);
  Sample s;
  for (int i = 0; i < n; ++i) {
    s.x.push_back(xv(rng) * 0.5 - 1.0);
    s.y.push_back(yv(rng));
  }
  return s;
}

// Leaf reached by each sample holds only samples sharing its label, or the
// samples in it cannot be separated by x.
void CheckLeafPurity(const Tree& t, const Sample& s) {
  std::map<std::size_t, std::set<Label>> labels;
  std::map<std::size_t, std::set<double>> values;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    std::int32_t node = 0;
    while (!t.nodes()[node].is_leaf()) {
      node = s.x[i] <= t.nodes()[node].threshold ? t.nodes()[node].left : t.nodes()[node].right;
    }
    labels[node].insert(s.y[i]);
    values[node].insert(s.x[i]);
  }
  for (const auto& [node, ls] : labels) {
    if (ls.size() > 1) {
      // impure leaves may only arise when every x-group shares one class mix
      CHECK(oracle::GroupByErrors(s.x, s.y) == oracle::TreeErrors(t, s.x, s.y));
    }
  }
}

}  // namespace

TEST_CASE("separable data is split once") {
  const std::vector<double> x{0, 1, 2, 3};
  const std::vector<Label> y{0, 0, 1, 1};
  const Tree t = FitTree(x, y);
  CHECK(t.Depth() == 1);
  CHECK(t.root().threshold == 1.5);
  CHECK(t.Predict(x) == y);
  CHECK(t.MeanPathLength(x) == 1.0);
}

TEST_CASE("alternating labels give a chain of splits") {
  const std::vector<double> x{0, 1, 2, 3};
  const std::vector<Label> y{0, 1, 0, 1};
  const Tree t = FitTree(x, y);
  const auto ref = oracle::Fit(x, y);
  CHECK(oracle::SameTree(*ref, t));
  CHECK(t.Depth() == 3);
  CHECK(oracle::Depth(*ref) == 3);
  CHECK(t.MeanPathLength(x) == 2.25);
  CHECK(t.root().threshold == 0.5);
  CHECK(t.Predict(x) == y);
}

TEST_CASE("constant labels give a single leaf") {
  const std::vector<double> x{0, 1, 2};
  const std::vector<Label> y{5, 5, 5};
  const Tree t = FitTree(x, y);
  CHECK(t.NodeCount() == 1);
  CHECK(t.Depth() == 0);
  CHECK(t.MeanPathLength(x) == 0.0);
  CHECK(t.Predict(100.0) == 5);
}

TEST_CASE("a single distinct x cannot be split") {
  const std::vector<double> x{2, 2, 2};
  const std::vector<Label> y{0, 1, 1};
  const Tree t = FitTree(x, y);
  CHECK(t.NodeCount() == 1);
  CHECK(t.Predict(2.0) == 1);
}

TEST_CASE("majority ties go to the smallest label") {
  const std::vector<double> x{1, 1};
  const std::vector<Label> y{9, 4};
  CHECK(FitTree(x, y).Predict(1.0) == 4);
}

TEST_CASE("fit rejects bad input") {
  const std::vector<double> x{0, 1};
  const std::vector<Label> y{0};
  CHECK_THROWS_AS(FitTree(x, y), Error);
  CHECK_THROWS_AS(FitTree({}, {}), Error);
  const Tree t = FitTree(std::vector<double>{0, 1}, std::vector<Label>{0, 1});
  CHECK_THROWS_AS(t.MeanPathLength({}), Error);
}

TEST_CASE("fitted trees agree with a reference CART on random data") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const Sample s = RandomSample(rng, 30, 6);
    const Tree t = FitTree(s.x, s.y);
    const auto ref = oracle::Fit(s.x, s.y);
    REQUIRE(oracle::SameTree(*ref, t));
    REQUIRE(t.Depth() == static_cast<std::size_t>(oracle::Depth(*ref)));
  }
}

TEST_CASE("tree invariants") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const Sample s = RandomSample(rng);
    const Tree t = FitTree(s.x, s.y);

    // a full binary tree
    REQUIRE(t.LeafCount() == t.InternalCount() + 1);
    REQUIRE(t.NodeCount() == 2 * t.InternalCount() + 1);
    // training loss equals the group-by-x majority loss
    REQUIRE(oracle::TreeErrors(t, s.x, s.y) == oracle::GroupByErrors(s.x, s.y));
    // path lengths are bounded by the depth
    double sum = 0.0;
    for (double v : s.x) {
      REQUIRE(t.PathLength(v) <= t.Depth());
      sum += static_cast<double>(t.PathLength(v));
    }
    REQUIRE(t.MeanPathLength(s.x) == doctest::Approx(sum / s.x.size()));
    std::set<double> distinct(s.x.begin(), s.x.end());
    REQUIRE(t.LeafCount() <= distinct.size());
    // child sample counts add up
    for (const TreeNode& node : t.nodes()) {
      if (!node.is_leaf()) {
        REQUIRE(t.nodes()[node.left].n_samples + t.nodes()[node.right].n_samples ==
                node.n_samples);
      }
    }
    REQUIRE(t.root().n_samples == s.x.size());
    CheckLeafPurity(t, s);

    // deterministic and independent of sample order
    REQUIRE(FitTree(s.x, s.y) == t);
    std::vector<std::size_t> perm(s.x.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Sample p;
    for (std::size_t i : perm) {
      p.x.push_back(s.x[i]);
      p.y.push_back(s.y[i]);
    }
    REQUIRE(FitTree(p.x, p.y) == t);
  }
}

TEST_CASE("non-finite x values are rejected") {
  const std::vector<double> x{0, std::numeric_limits<double>::quiet_NaN()};
  const std::vector<Label> y{0, 1};
  CHECK_THROWS_AS(FitTree(x, y), Error);
}
