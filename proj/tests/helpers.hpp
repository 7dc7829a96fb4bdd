#pragma once

#include <random>
#include <string>
#include <vector>

#include "dgdual/matrix.hpp"

namespace testutil {

// Builds a matrix from rows of '0'/'1' characters with labels q1..qn.
inline dgdual::BinaryMatrix mat(const std::vector<std::string>& rows) {
  std::vector<std::uint8_t> cells;
  for (const auto& r : rows)
    for (char ch : r) cells.push_back(ch == '1' ? 1 : 0);
  return dgdual::BinaryMatrix(dgdual::BinaryMatrix::default_labels(rows.size()), std::move(cells));
}

inline dgdual::BinaryMatrix mat(const std::vector<std::string>& labels,
                                const std::vector<std::string>& rows) {
  std::vector<std::uint8_t> cells;
  for (const auto& r : rows)
    for (char ch : r) cells.push_back(ch == '1' ? 1 : 0);
  return dgdual::BinaryMatrix(labels, std::move(cells));
}

inline dgdual::BinaryMatrix random_matrix(std::mt19937& rng, std::size_t n, double density,
                                          bool allow_loops = true) {
  std::bernoulli_distribution bit(density);
  std::vector<std::uint8_t> cells(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((allow_loops || i != j) && bit(rng)) cells[i * n + j] = 1;
  return dgdual::BinaryMatrix(dgdual::BinaryMatrix::default_labels(n), std::move(cells));
}

// All order-n 0/1 matrices, optionally loop-free, encoded by bit index.
inline dgdual::BinaryMatrix nth_matrix(std::size_t n, unsigned long long bits,
                                       bool loop_free = false) {
  std::vector<std::uint8_t> cells(n * n, 0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (loop_free && i == j) continue;
      if (bits >> k & 1ULL) cells[i * n + j] = 1;
      ++k;
    }
  return dgdual::BinaryMatrix(dgdual::BinaryMatrix::default_labels(n), std::move(cells));
}

}  // namespace testutil
