#include <algorithm>
#include <cmath>
#include <random>

#include "cdtree/core.hpp"
#include "cdtree/stats.hpp"
#include "doctest.h"

using namespace cdtree;

TEST_CASE("entropy examples") {
  const std::vector<std::int64_t> four{1, 2, 3, 4};
  CHECK(Entropy(std::span<const std::int64_t>(four)) == doctest::Approx(2.0));
  const std::vector<std::int64_t> constant{7, 7, 7};
  CHECK(Entropy(std::span<const std::int64_t>(constant)) == 0.0);
  // -(2/3 log2 2/3 + 1/3 log2 1/3)
  const double expected = -(2.0 / 3 * std::log2(2.0 / 3) + 1.0 / 3 * std::log2(1.0 / 3));
  const std::vector<double> two_one{0.0, 0.0, 1.0};
  CHECK(Entropy(std::span<const double>(two_one)) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.9183).epsilon(1e-4));
  CHECK_THROWS_AS(Entropy(std::span<const double>()), Error);
}

TEST_CASE("real categories are formed after rounding") {
  const std::vector<double> noisy{0.1 + 0.2, 0.3, 0.3000000000000001};
  CHECK(Entropy(std::span<const double>(noisy)) == 0.0);
  CHECK(RoundToSignificant(123456789012345.0) == 123456789012000.0);
  CHECK(RoundToSignificant(0.0) == 0.0);
}

TEST_CASE("entropy properties") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> len(1, 40);
  std::uniform_int_distribution<std::int64_t> value(-4, 4);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::int64_t> v(len(rng));
    for (auto& x : v) x = value(rng);
    const double h = Entropy(std::span<const std::int64_t>(v));
    std::vector<std::int64_t> distinct = v;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    REQUIRE(h >= 0.0);
    REQUIRE(h <= std::log2(static_cast<double>(distinct.size())) + 1e-12);
    REQUIRE((h == 0.0) == (distinct.size() == 1));

    std::vector<std::int64_t> shuffled = v;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    REQUIRE(Entropy(std::span<const std::int64_t>(shuffled)) == doctest::Approx(h).epsilon(1e-12));
    std::vector<std::int64_t> relabeled = v;
    for (auto& x : relabeled) x = 1000 - 7 * x;  // bijection
    REQUIRE(Entropy(std::span<const std::int64_t>(relabeled)) == doctest::Approx(h).epsilon(1e-12));
  }
}

TEST_CASE("misclassification") {
  using V = std::vector<std::int64_t>;
  CHECK(Misclassification(V{1, 2, 3}, V{1, 2, 3}) == 0.0);
  CHECK(Misclassification(V{1, 2}, V{2, 1}) == 1.0);
  CHECK(Misclassification(V{1, 1, 2, 2}, V{1, 2, 2, 2}) == 0.25);
  CHECK_THROWS_AS(Misclassification(V{1}, V{1, 2}), Error);
  CHECK_THROWS_AS(Misclassification(V{}, V{}), Error);
}

TEST_CASE("mean squared error") {
  using V = std::vector<double>;
  CHECK(MeanSquaredError(V{1, 2}, V{1, 2}) == 0.0);
  CHECK(MeanSquaredError(V{0, 0}, V{1, -1}) == 1.0);
  CHECK(MeanSquaredError(V{3}, V{0}) == 9.0);
  CHECK_THROWS_AS(MeanSquaredError(V{1, 2}, V{1}), Error);
  CHECK_THROWS_AS(MeanSquaredError(V{}, V{}), Error);
}

TEST_CASE("residuals") {
  using V = std::vector<double>;
  CHECK(Residuals(V{5, 5}, V{5, 5}) == V{0, 0});
  CHECK(Residuals(V{3, 1}, V{1, 3}) == V{2, -2});
  CHECK(Residuals(V{0.875}, V{0.125}) == V{0.75});
  CHECK_THROWS_AS(Residuals(V{1}, V{1, 2}), Error);
}

TEST_CASE("losses vanish exactly on perfect predictions") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::int64_t> value(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> y(8), yhat(8);
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] = value(rng);
      yhat[i] = value(rng);
    }
    const bool equal = y == yhat;
    REQUIRE((Misclassification(y, yhat) == 0.0) == equal);
    std::vector<double> ry(y.begin(), y.end()), ryhat(yhat.begin(), yhat.end());
    REQUIRE((MeanSquaredError(ry, ryhat) == 0.0) == equal);
    const auto res = Residuals(ry, ryhat);
    REQUIRE(std::all_of(res.begin(), res.end(), [](double r) { return r == 0.0; }) == equal);
    REQUIRE(Entropy(std::span<const double>(Residuals(ry, ry))) == 0.0);
  }
}
