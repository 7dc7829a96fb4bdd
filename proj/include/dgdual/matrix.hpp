#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dgdual/errors.hpp"

namespace dgdual {

constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

/// Square 0/1 matrix with row and column labels. Rows and columns carry the
/// same labels except for minors, where one row and one column have been
/// deleted and the two label axes diverge.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;

  BinaryMatrix(std::vector<std::string> labels, std::vector<std::uint8_t> cells)
      : BinaryMatrix(labels, labels, std::move(cells)) {}

  BinaryMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
               std::vector<std::uint8_t> cells)
      : n_(row_labels.size()),
        row_labels_(std::move(row_labels)),
        col_labels_(std::move(col_labels)),
        cells_(std::move(cells)) {
    if (n_ == 0) throw MalformedInput("matrix order must be positive");
    if (col_labels_.size() != n_) throw MalformedInput("matrix must be square");
    if (cells_.size() != n_ * n_) throw MalformedInput("cell count does not match order");
    for (auto v : cells_)
      if (v != 0 && v != 1) throw MalformedInput("cell value must be 0 or 1");
    check_labels(row_labels_);
    check_labels(col_labels_);
  }

  static BinaryMatrix zeros(std::size_t n) {
    return BinaryMatrix(default_labels(n), std::vector<std::uint8_t>(n * n, 0));
  }

  static std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "q" + std::to_string(i + 1);
    return labels;
  }

  std::size_t order() const { return n_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  /// Shared label axis; only meaningful when rows and columns coincide.
  const std::vector<std::string>& labels() const { return row_labels_; }
  bool symmetric_labels() const { return row_labels_ == col_labels_; }

  std::uint8_t at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint8_t v) { cells_[i * n_ + j] = v; }

  std::size_t row_index(const std::string& label) const { return find(row_labels_, label); }
  std::size_t col_index(const std::string& label) const { return find(col_labels_, label); }

  std::size_t ones() const { return std::accumulate(cells_.begin(), cells_.end(), std::size_t{0}); }

  bool operator==(const BinaryMatrix& other) const {
    return row_labels_ == other.row_labels_ && col_labels_ == other.col_labels_ &&
           cells_ == other.cells_;
  }

 private:
  static void check_labels(const std::vector<std::string>& labels) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty()) throw MalformedInput("empty label");
      if (!seen.insert(l).second) throw MalformedInput("duplicate label: " + l);
    }
  }

  static std::size_t find(const std::vector<std::string>& labels, const std::string& label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw IndexOutOfRange("unknown label: " + label);
    return static_cast<std::size_t>(it - labels.begin());
  }

  std::size_t n_ = 0;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<std::uint8_t> cells_;
};

/// Parses the matrix file format: optional '#' comment lines, a line
/// "n <int>", an optional "labels a,b,c" line, then n rows of n 0/1 tokens.
inline BinaryMatrix parse_matrix(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else if (ch != '\r') {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }
  std::vector<std::string> significant;
  for (auto& l : lines) {
    if (l.empty() || l[0] == '#') continue;
    significant.push_back(l);
  }
  if (significant.empty()) throw MalformedInput("empty matrix file");

  auto tokens = [](const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
  };

  std::size_t pos = 0;
  auto header = tokens(significant[pos++]);
  if (header.size() != 2 || header[0] != "n")
    throw MalformedInput("expected header line 'n <int>'");
  long n_signed = 0;
  try {
    n_signed = std::stol(header[1]);
  } catch (const std::exception&) {
    throw MalformedInput("bad order: " + header[1]);
  }
  if (n_signed <= 0) throw MalformedInput("order must be positive");
  const auto n = static_cast<std::size_t>(n_signed);

  std::vector<std::string> labels;
  if (pos < significant.size() && significant[pos].rfind("labels ", 0) == 0) {
    std::string rest = significant[pos].substr(7);
    std::string cur;
    for (char ch : rest) {
      if (ch == ',') {
        labels.push_back(cur);
        cur.clear();
      } else if (ch != ' ') {
        cur.push_back(ch);
      }
    }
    labels.push_back(cur);
    if (labels.size() != n) throw MalformedInput("label count does not match order");
    ++pos;
  } else {
    labels = BinaryMatrix::default_labels(n);
  }

  if (significant.size() - pos != n) throw MalformedInput("row count does not match order");
  std::vector<std::uint8_t> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = tokens(significant[pos + i]);
    if (row.size() != n) throw MalformedInput("row length does not match order");
    for (const auto& tok : row) {
      if (tok == "0")
        cells.push_back(0);
      else if (tok == "1")
        cells.push_back(1);
      else
        throw MalformedInput("cell value must be 0 or 1, got: " + tok);
    }
  }
  return BinaryMatrix(std::move(labels), std::move(cells));
}

inline std::string serialize_matrix(const BinaryMatrix& m) {
  std::ostringstream out;
  out << "n " << m.order() << "\nlabels ";
  for (std::size_t i = 0; i < m.order(); ++i) {
    if (i) out << ',';
    out << m.labels()[i];
  }
  for (std::size_t i = 0; i < m.order(); ++i) {
    out << '\n';
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j) out << ' ';
      out << int(m.at(i, j));
    }
  }
  return out.str();
}

inline std::pair<std::vector<int>, std::vector<int>> row_col_sums(const BinaryMatrix& m) {
  const auto n = m.order();
  std::vector<int> rows(n, 0), cols(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.at(i, j)) {
        ++rows[i];
        ++cols[j];
      }
  return {rows, cols};
}

/// Deletes row i and column j (0-based indices).
inline BinaryMatrix minor(const BinaryMatrix& m, std::size_t i, std::size_t j) {
  const auto n = m.order();
  if (n < 2) throw OrderTooSmall("minor undefined for order-1 matrix");
  if (i >= n || j >= n) throw IndexOutOfRange("minor index out of range");
  std::vector<std::string> rows, cols;
  std::vector<std::uint8_t> cells;
  cells.reserve((n - 1) * (n - 1));
  for (std::size_t a = 0; a < n; ++a)
    if (a != i) rows.push_back(m.row_labels()[a]);
  for (std::size_t b = 0; b < n; ++b)
    if (b != j) cols.push_back(m.col_labels()[b]);
  for (std::size_t a = 0; a < n; ++a) {
    if (a == i) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (b == j) continue;
      cells.push_back(m.at(a, b));
    }
  }
  return BinaryMatrix(std::move(rows), std::move(cols), std::move(cells));
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t components() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (find(i) == i) ++c;
    return c;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Number of weakly connected components; isolated vertices count.
inline std::size_t weak_components(const BinaryMatrix& m) {
  const auto n = m.order();
  detail::UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.at(i, j)) uf.unite(i, j);
  return uf.components();
}

/// nu = sum(l_ij) - n + p with p the number of weak components.
inline long cyclomatic_number(const BinaryMatrix& m) {
  return static_cast<long>(m.ones()) - static_cast<long>(m.order()) +
         static_cast<long>(weak_components(m));
}

}  // namespace dgdual
