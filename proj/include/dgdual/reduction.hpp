#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dgdual/errors.hpp"
#include "dgdual/matrix.hpp"
#include "dgdual/trace.hpp"

namespace dgdual {

/// sigma_i = rowsum_i * colsum_i; sigma = 1 marks an elementary vertex.
inline std::vector<int> sigma_diagonal(const BinaryMatrix& m) {
  auto [rows, cols] = row_col_sums(m);
  std::vector<int> sigma(m.order());
  for (std::size_t i = 0; i < m.order(); ++i) sigma[i] = rows[i] * cols[i];
  return sigma;
}

struct RemovedRecord {
  std::string alpha;
  std::string x;
  std::string y;
};

namespace detail {

struct ContractionPlan {
  std::size_t alpha, x, y;
};

// Locates the unique predecessor/successor of alpha and validates the
// (-delta n) preconditions. Throws on failure.
inline ContractionPlan plan_contraction(const BinaryMatrix& m, std::size_t alpha,
                                        bool allow_loops) {
  const auto n = m.order();
  auto [rows, cols] = row_col_sums(m);
  if (rows[alpha] != 1 || cols[alpha] != 1)
    throw NotContractible("sigma != 1 for " + m.labels()[alpha]);
  std::size_t x = kNoIndex, y = kNoIndex;
  for (std::size_t i = 0; i < n; ++i)
    if (m.at(i, alpha)) x = i;
  for (std::size_t j = 0; j < n; ++j)
    if (m.at(alpha, j)) y = j;
  if (x == alpha || y == alpha)
    throw NotContractible("loop at " + m.labels()[alpha] + " cannot be contracted");
  if (x == y && !allow_loops)
    throw WouldCreateLoop("contracting " + m.labels()[alpha] + " would create a loop");
  if (m.at(x, y))
    throw WouldMergeParallel("relation " + m.labels()[x] + " < " + m.labels()[y] +
                             " already present");
  return {alpha, x, y};
}

}  // namespace detail

/// (-delta n)-transformation: removes the elementary vertex alpha, replacing
/// x < alpha < y by x < y. Preserves the cyclomatic number.
inline std::pair<BinaryMatrix, RemovedRecord> reduce_step(const BinaryMatrix& m,
                                                          const std::string& alpha,
                                                          bool allow_loops = false) {
  const auto n = m.order();
  auto plan = detail::plan_contraction(m, m.row_index(alpha), allow_loops);
  RemovedRecord rec{alpha, m.labels()[plan.x], m.labels()[plan.y]};
  std::vector<std::string> labels;
  std::vector<std::uint8_t> cells;
  for (std::size_t a = 0; a < n; ++a)
    if (a != plan.alpha) labels.push_back(m.labels()[a]);
  for (std::size_t a = 0; a < n; ++a) {
    if (a == plan.alpha) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (b == plan.alpha) continue;
      cells.push_back((a == plan.x && b == plan.y) ? 1 : m.at(a, b));
    }
  }
  return {BinaryMatrix(std::move(labels), std::move(cells)), rec};
}

/// True iff no label satisfies the reduce_step precondition.
inline bool is_forming(const BinaryMatrix& m, bool allow_loops = false) {
  for (std::size_t i = 0; i < m.order(); ++i) {
    try {
      detail::plan_contraction(m, i, allow_loops);
      return false;
    } catch (const Error&) {
      // not contractible here, keep looking
    }
  }
  return true;
}

struct FormingResult {
  BinaryMatrix matrix;
  std::vector<RemovedRecord> removed;
  bool fully_forming = false;
  TransformTrace trace;
};

/// Iterates reduce_step on the smallest-indexed legal vertex until none
/// remains. fully_forming reports the absence of elementary (in = out = 1)
/// vertices in the result, whether or not their contraction would be legal.
inline FormingResult reduce_to_forming(const BinaryMatrix& m, bool allow_loops = false) {
  FormingResult result{m, {}, false, {}};
  result.trace.original_labels = m.labels();
  for (;;) {
    bool contracted = false;
    for (std::size_t i = 0; i < result.matrix.order() && !contracted; ++i) {
      try {
        auto [next, rec] = reduce_step(result.matrix, result.matrix.labels()[i], allow_loops);
        result.trace.steps.push_back(
            {TransformTrace::Step::Kind::Contract, rec.x, rec.y, rec.alpha});
        result.removed.push_back(rec);
        result.matrix = std::move(next);
        contracted = true;
      } catch (const Error&) {
        // illegal here, try the next row
      }
    }
    if (!contracted) break;
  }
  auto [rows, cols] = row_col_sums(result.matrix);
  result.fully_forming = true;
  for (std::size_t i = 0; i < result.matrix.order(); ++i)
    if (rows[i] == 1 && cols[i] == 1) result.fully_forming = false;
  return result;
}

}  // namespace dgdual
