#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "dgdual/normal_form.hpp"
#include "dgdual/reduction.hpp"
#include "helpers.hpp"

using dgdual::BinaryMatrix;
using testutil::mat;

namespace {

const std::vector<std::string> kABC = {"a", "b", "c"};

// True iff the input digraph has a path x -> ... -> y whose interior
// vertices all belong to `removed`.
bool path_through_removed(const BinaryMatrix& input, const std::string& x, const std::string& y,
                          const std::set<std::string>& removed) {
  const auto n = input.order();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack;
  auto push = [&](std::size_t v) {
    if (!seen[v]) {
      seen[v] = true;
      stack.push_back(v);
    }
  };
  const auto target = input.col_index(y);
  for (std::size_t j = 0; j < n; ++j)
    if (input.at(input.row_index(x), j)) {
      if (j == target) return true;
      if (removed.count(input.labels()[j])) push(j);
    }
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j)
      if (input.at(v, j)) {
        if (j == target) return true;
        if (removed.count(input.labels()[j])) push(j);
      }
  }
  return false;
}

}  // namespace

TEST_CASE("sigma_diagonal anchors") {
  REQUIRE(dgdual::sigma_diagonal(mat(kABC, {"010", "001", "000"})) == std::vector<int>{0, 1, 0});
  REQUIRE(dgdual::sigma_diagonal(mat(kABC, {"010", "001", "100"})) == std::vector<int>{1, 1, 1});
  REQUIRE(dgdual::sigma_diagonal(mat({"11", "11"})) == std::vector<int>{4, 4});
}

TEST_CASE("reduce_step contracts a path vertex") {
  auto [out, rec] = dgdual::reduce_step(mat(kABC, {"010", "001", "000"}), "b");
  REQUIRE(out == mat({"a", "c"}, {"01", "00"}));
  REQUIRE(rec.alpha == "b");
  REQUIRE(rec.x == "a");
  REQUIRE(rec.y == "c");
  REQUIRE(dgdual::cyclomatic_number(out) == 0);
}

TEST_CASE("reduce_step contracts a cycle vertex") {
  auto tri = mat(kABC, {"010", "001", "100"});
  REQUIRE(dgdual::cyclomatic_number(tri) == 1);
  auto [out, rec] = dgdual::reduce_step(tri, "b");
  REQUIRE(out == mat({"a", "c"}, {"01", "10"}));
  REQUIRE(dgdual::cyclomatic_number(out) == 1);
  (void)rec;
}

TEST_CASE("reduce_step refuses illegal contractions") {
  REQUIRE_THROWS_AS(dgdual::reduce_step(mat(kABC, {"011", "001", "000"}), "b"),
                    dgdual::WouldMergeParallel);
  REQUIRE_THROWS_AS(dgdual::reduce_step(mat(kABC, {"010", "001", "000"}), "a"),
                    dgdual::NotContractible);
  REQUIRE_THROWS_AS(dgdual::reduce_step(mat({"a", "b"}, {"01", "10"}), "b"),
                    dgdual::WouldCreateLoop);
  REQUIRE_THROWS_AS(dgdual::reduce_step(mat({"1"}), "q1"), dgdual::NotContractible);
}

TEST_CASE("reduce_step with loops enabled collapses a 2-contour") {
  auto [out, rec] = dgdual::reduce_step(mat({"a", "b"}, {"01", "10"}), "b", true);
  REQUIRE(out == mat({"a"}, {"1"}));
  REQUIRE(dgdual::cyclomatic_number(out) == 1);
  (void)rec;
}

TEST_CASE("is_forming anchors") {
  REQUIRE(dgdual::is_forming(mat({"01", "00"})));
  REQUIRE_FALSE(dgdual::is_forming(mat(kABC, {"010", "001", "000"})));
  REQUIRE(dgdual::is_forming(mat({"01", "10"})));
  REQUIRE_FALSE(dgdual::is_forming(mat({"01", "10"}), /*allow_loops=*/true));
}

TEST_CASE("reduce_to_forming anchors") {
  auto path = dgdual::reduce_to_forming(mat(kABC, {"010", "001", "000"}));
  REQUIRE(path.matrix == mat({"a", "c"}, {"01", "00"}));
  REQUIRE(path.removed.size() == 1);
  REQUIRE(path.removed[0].alpha == "b");
  REQUIRE(path.removed[0].x == "a");
  REQUIRE(path.removed[0].y == "c");
  REQUIRE(path.fully_forming);

  auto tri = dgdual::reduce_to_forming(mat(kABC, {"010", "001", "100"}));
  REQUIRE(tri.matrix.order() == 2);
  REQUIRE_FALSE(tri.fully_forming);

  auto chain = dgdual::reduce_to_forming(mat({"01", "00"}));
  REQUIRE(chain.matrix == mat({"01", "00"}));
  REQUIRE(chain.removed.empty());
  REQUIRE(chain.fully_forming);
}

TEST_CASE("reduction preserves the cyclomatic number") {
  std::mt19937 rng(41);
  for (int it = 0; it < 150; ++it) {
    std::size_t n = 1 + rng() % 10;
    auto m = testutil::random_matrix(rng, n, 0.3);
    auto result = dgdual::reduce_to_forming(m);
    REQUIRE(dgdual::cyclomatic_number(result.matrix) == dgdual::cyclomatic_number(m));
    REQUIRE(dgdual::is_forming(result.matrix));
    REQUIRE(result.matrix.order() + result.removed.size() == n);
  }
}

TEST_CASE("forming relation equals path connectivity through removed vertices") {
  std::mt19937 rng(42);
  for (int it = 0; it < 80; ++it) {
    std::size_t n = 2 + rng() % 7;
    auto m = testutil::random_matrix(rng, n, 0.3);
    auto result = dgdual::reduce_to_forming(m);
    std::set<std::string> removed;
    for (const auto& r : result.removed) removed.insert(r.alpha);
    for (const auto& x : result.matrix.labels())
      for (const auto& y : result.matrix.labels()) {
        bool edge = result.matrix.at(result.matrix.row_index(x), result.matrix.col_index(y)) == 1;
        REQUIRE(edge == path_through_removed(m, x, y, removed));
      }
  }
}

TEST_CASE("reduce_step inverts delta_n") {
  std::mt19937 rng(43);
  int applied = 0;
  while (applied < 60) {
    std::size_t n = 2 + rng() % 6;
    auto m = testutil::random_matrix(rng, n, 0.4, /*allow_loops=*/false);
    std::vector<std::pair<std::size_t, std::size_t>> ones;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m.at(i, j) && i != j) ones.emplace_back(i, j);
    if (ones.empty()) continue;
    auto [i, j] = ones[rng() % ones.size()];
    auto [sub, step] = dgdual::delta_n(m, m.labels()[i], m.labels()[j]);
    auto [restored, rec] = dgdual::reduce_step(sub, step.label);
    REQUIRE(restored == m);
    (void)rec;
    ++applied;
  }
}

TEST_CASE("reduce_to_forming records replayable contract steps") {
  std::mt19937 rng(44);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 1 + rng() % 8;
    auto m = testutil::random_matrix(rng, n, 0.3);
    auto result = dgdual::reduce_to_forming(m);
    REQUIRE(dgdual::replay_trace(m, result.trace) == result.matrix);
  }
}
