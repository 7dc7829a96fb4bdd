#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dgdual/errors.hpp"
#include "dgdual/matrix.hpp"
#include "dgdual/trace.hpp"

namespace dgdual {

namespace detail {

/// c values of m with an optional row/column excluded (pass kNoIndex to keep
/// all). Entries in the excluded row/column come back as 0.
inline std::vector<int> c_values(const BinaryMatrix& m, std::size_t skip_row,
                                 std::size_t skip_col) {
  const auto n = m.order();
  std::vector<int> rowsum(n, 0), colsum(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == skip_col) continue;
      if (m.at(i, j)) {
        ++rowsum[i];
        ++colsum[j];
      }
    }
  }
  const int kInf = std::numeric_limits<int>::max();
  std::vector<int> rowmin(n, kInf), colmin(n, kInf);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == skip_col || !m.at(i, j)) continue;
      const int s = rowsum[i] + colsum[j];
      rowmin[i] = std::min(rowmin[i], s);
      colmin[j] = std::min(colmin[j], s);
    }
  }
  std::vector<int> c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == skip_col || !m.at(i, j)) continue;
      const int s = rowsum[i] + colsum[j];
      c[i * n + j] = (s - rowmin[i]) + (s - colmin[j]);
    }
  }
  return c;
}

}  // namespace detail

/// s_ij = l_ij * (rowsum_i + colsum_j).
inline std::vector<std::vector<int>> s_matrix(const BinaryMatrix& m) {
  const auto n = m.order();
  auto [rows, cols] = row_col_sums(m);
  std::vector<std::vector<int>> s(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.at(i, j)) s[i][j] = rows[i] + cols[j];
  return s;
}

/// c_ij = row excess + column excess of s_ij over the nonzero minima.
inline std::vector<std::vector<int>> c_matrix(const BinaryMatrix& m) {
  const auto n = m.order();
  auto flat = detail::c_values(m, kNoIndex, kNoIndex);
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = flat[i * n + j];
  return c;
}

struct CheckReport {
  enum class Mode { Quasicanonical, Canonical };
  struct Witness {
    enum class Kind { FullMatrixC, MinorC, ComplicatedBlock };
    Kind kind = Kind::FullMatrixC;
    std::string row;
    std::string col;
    int value = 0;
    std::optional<std::pair<std::string, std::string>> minor_of;
  };

  bool passed = false;
  Mode mode = Mode::Quasicanonical;
  std::vector<Witness> violations;
};

inline const char* to_string(CheckReport::Witness::Kind k) {
  switch (k) {
    case CheckReport::Witness::Kind::FullMatrixC: return "full-matrix-c";
    case CheckReport::Witness::Kind::MinorC: return "minor-c";
    case CheckReport::Witness::Kind::ComplicatedBlock: return "complicated-block";
  }
  return "?";
}

inline const char* to_string(CheckReport::Mode m) {
  return m == CheckReport::Mode::Quasicanonical ? "quasicanonical" : "canonical";
}

/// Realizability test: all c = 0 on the full matrix and on the minor of every
/// l_ij = 1 cell. A 1x1 matrix passes iff its single cell is 0.
inline CheckReport quasicanonical_check(const BinaryMatrix& m) {
  using W = CheckReport::Witness;
  CheckReport report;
  report.mode = CheckReport::Mode::Quasicanonical;
  const auto n = m.order();

  auto full = detail::c_values(m, kNoIndex, kNoIndex);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (full[i * n + j] != 0)
        report.violations.push_back({W::Kind::FullMatrixC, m.row_labels()[i], m.col_labels()[j],
                                     full[i * n + j], std::nullopt});

  if (n == 1) {
    // Minor undefined; a 1x1 matrix with a loop cannot be an edge graph.
    if (m.at(0, 0))
      report.violations.push_back({W::Kind::MinorC, m.labels()[0], m.labels()[0], 0,
                                   std::make_pair(m.labels()[0], m.labels()[0])});
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!m.at(i, j)) continue;
        auto mc = detail::c_values(m, i, j);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (mc[a * n + b] != 0)
              report.violations.push_back(
                  {W::Kind::MinorC, m.row_labels()[a], m.col_labels()[b], mc[a * n + b],
                   std::make_pair(m.row_labels()[i], m.col_labels()[j])});
      }
    }
  }
  report.passed = report.violations.empty();
  return report;
}

/// Canonical test: quasicanonical and no cell lies in a complicated block,
/// i.e. min(rowsum, colsum) = 1 for every l_ij = 1.
inline CheckReport canonical_check(const BinaryMatrix& m) {
  using W = CheckReport::Witness;
  CheckReport report = quasicanonical_check(m);
  report.mode = CheckReport::Mode::Canonical;
  const auto n = m.order();
  auto [rows, cols] = row_col_sums(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.at(i, j) && std::min(rows[i], cols[j]) >= 2)
        report.violations.push_back({W::Kind::ComplicatedBlock, m.row_labels()[i],
                                     m.col_labels()[j], std::min(rows[i], cols[j]), std::nullopt});
  report.passed = report.violations.empty();
  return report;
}

namespace detail {

class FreshLabels {
 public:
  explicit FreshLabels(const std::vector<std::string>& taken)
      : used_(taken.begin(), taken.end()) {}
  std::string make() {
    for (;;) {
      auto candidate = "t" + std::to_string(next_++);
      if (used_.insert(candidate).second) return candidate;
    }
  }

 private:
  std::unordered_set<std::string> used_;
  std::size_t next_ = 1;
};

inline BinaryMatrix delta_n_with_label(const BinaryMatrix& m, const std::string& x,
                                       const std::string& y, const std::string& fresh) {
  const auto n = m.order();
  const auto i = m.row_index(x);
  const auto j = m.col_index(y);
  if (!m.at(i, j)) throw NotARelation("no relation " + x + " < " + y);
  for (const auto& l : m.labels())
    if (l == fresh) throw TraceMismatch("label already present: " + fresh);
  auto labels = m.labels();
  labels.push_back(fresh);
  std::vector<std::uint8_t> cells((n + 1) * (n + 1), 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) cells[a * (n + 1) + b] = m.at(a, b);
  cells[i * (n + 1) + j] = 0;
  cells[i * (n + 1) + n] = 1;  // x < t
  cells[n * (n + 1) + j] = 1;  // t < y
  return BinaryMatrix(std::move(labels), std::move(cells));
}

}  // namespace detail

/// Subdivides the relation x < y into x < t < y with a fresh label t.
inline std::pair<BinaryMatrix, TransformTrace::Step> delta_n(const BinaryMatrix& m,
                                                             const std::string& x,
                                                             const std::string& y) {
  detail::FreshLabels gen(m.labels());
  auto t = gen.make();
  auto out = detail::delta_n_with_label(m, x, y, t);
  return {std::move(out), {TransformTrace::Step::Kind::Subdivide, x, y, t}};
}

struct NormalizeResult {
  BinaryMatrix matrix;
  TransformTrace trace;
};

namespace detail {

inline NormalizeResult normalize_impl(const BinaryMatrix& m, bool canonical,
                                      bool column_major = false) {
  const auto n = m.order();
  // Subdivision budget; the order-1 loop needs exactly one subdivision, and the
  // canonical pass can split every original cell once.
  const std::size_t bound = canonical ? std::max<std::size_t>(n * n, 1)
                                      : (n == 1 ? 1 : n * n - 1);
  BinaryMatrix cur = m;
  TransformTrace trace;
  trace.original_labels = m.labels();
  std::unordered_set<std::string> original(m.labels().begin(), m.labels().end());
  FreshLabels gen(m.labels());
  std::size_t steps = 0;

  for (;;) {
    CheckReport report = canonical ? canonical_check(cur) : quasicanonical_check(cur);
    if (report.passed) break;

    // Cells to subdivide this pass: the violating cell itself for full-matrix
    // and complicated-block witnesses, the parent cell for minor witnesses.
    const auto cn = cur.order();
    std::vector<std::uint8_t> flagged(cn * cn, 0);
    for (const auto& w : report.violations) {
      std::size_t i, j;
      if (w.kind == CheckReport::Witness::Kind::MinorC) {
        i = cur.row_index(w.minor_of->first);
        j = cur.col_index(w.minor_of->second);
      } else {
        i = cur.row_index(w.row);
        j = cur.col_index(w.col);
      }
      flagged[i * cn + j] = 1;
    }
    // Only cells between pre-existing labels are subdivided: each consumes
    // one original 1-cell forever, so the step count stays within the bound.
    std::vector<std::pair<std::size_t, std::size_t>> targets;
    auto collect = [&](auto pred) {
      for (std::size_t a = 0; a < cn; ++a)
        for (std::size_t b = 0; b < cn; ++b) {
          const auto i = column_major ? b : a;
          const auto j = column_major ? a : b;
          if (pred(i, j) && original.count(cur.labels()[i]) && original.count(cur.labels()[j]))
            targets.emplace_back(i, j);
        }
    };
    collect([&](std::size_t i, std::size_t j) { return flagged[i * cn + j] != 0; });
    if (targets.empty()) {
      // Violations touch inserted labels only. Subdividing every remaining
      // original 1-cell yields the complete subdivision, which is canonical.
      collect([&](std::size_t i, std::size_t j) { return cur.at(i, j) != 0; });
      if (targets.empty())
        throw BoundExceeded("normalization stalled on a complete subdivision");
    }

    for (const auto& [i, j] : targets) {
      if (steps >= bound)
        throw BoundExceeded("subdivision bound exceeded (implementation bug)");
      const auto x = cur.labels()[i];
      const auto y = cur.labels()[j];
      auto t = gen.make();
      cur = delta_n_with_label(cur, x, y, t);
      trace.steps.push_back({TransformTrace::Step::Kind::Subdivide, x, y, t});
      ++steps;
    }
  }
  return {std::move(cur), std::move(trace)};
}

}  // namespace detail

/// Repeated delta-n until the quasicanonical check passes.
inline NormalizeResult quasinormalize(const BinaryMatrix& m, bool column_major_scan = false) {
  return detail::normalize_impl(m, false, column_major_scan);
}

/// Repeated delta-n until the canonical check passes.
inline NormalizeResult canonicalize(const BinaryMatrix& m, bool column_major_scan = false) {
  return detail::normalize_impl(m, true, column_major_scan);
}

/// Replays a trace forward from m; the result must equal the transform output.
inline BinaryMatrix replay_trace(const BinaryMatrix& m, const TransformTrace& trace) {
  BinaryMatrix cur = m;
  for (const auto& s : trace.steps) {
    if (s.kind == TransformTrace::Step::Kind::Subdivide) {
      try {
        cur = detail::delta_n_with_label(cur, s.x, s.y, s.label);
      } catch (const NotARelation&) {
        throw TraceMismatch("subdivide step does not match matrix state");
      } catch (const IndexOutOfRange&) {
        throw TraceMismatch("subdivide step names unknown label");
      }
    } else {
      const auto n = cur.order();
      std::size_t alpha, x, y;
      try {
        alpha = cur.row_index(s.label);
        x = cur.row_index(s.x);
        y = cur.col_index(s.y);
      } catch (const IndexOutOfRange&) {
        throw TraceMismatch("contract step names unknown label");
      }
      if (!cur.at(x, alpha) || !cur.at(alpha, y))
        throw TraceMismatch("contract step does not match matrix state");
      std::vector<std::string> labels;
      std::vector<std::uint8_t> cells;
      for (std::size_t a = 0; a < n; ++a)
        if (a != alpha) labels.push_back(cur.labels()[a]);
      for (std::size_t a = 0; a < n; ++a) {
        if (a == alpha) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (b == alpha) continue;
          cells.push_back((a == x && b == y) ? 1 : cur.at(a, b));
        }
      }
      cur = BinaryMatrix(std::move(labels), std::move(cells));
    }
  }
  return cur;
}

}  // namespace dgdual
