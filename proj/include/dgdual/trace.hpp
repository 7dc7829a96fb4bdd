#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "dgdual/errors.hpp"

namespace dgdual {

/// Ordered log of subdivision / contraction steps applied to a matrix.
struct TransformTrace {
  struct Step {
    enum class Kind { Subdivide, Contract };
    Kind kind = Kind::Subdivide;
    std::string x;  // tail label of the rewritten relation
    std::string y;  // head label of the rewritten relation
    std::string label;  // inserted label for subdivide, removed label for contract
  };

  std::vector<Step> steps;
  std::vector<std::string> original_labels;

  std::size_t subdivide_count() const {
    std::size_t c = 0;
    for (const auto& s : steps)
      if (s.kind == Step::Kind::Subdivide) ++c;
    return c;
  }
};

inline std::string serialize_trace(const TransformTrace& trace) {
  std::ostringstream out;
  out << "trace v1";
  for (const auto& s : trace.steps)
    out << '\n' << (s.kind == TransformTrace::Step::Kind::Subdivide ? 'S' : 'C') << ' ' << s.x
        << ' ' << s.y << ' ' << s.label;
  return out.str();
}

inline TransformTrace parse_trace(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  TransformTrace trace;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "trace v1") throw MalformedInput("expected trace header 'trace v1'");
      header_seen = true;
      continue;
    }
    std::istringstream iss(line);
    std::string kind, x, y, label, extra;
    if (!(iss >> kind >> x >> y >> label) || (iss >> extra) || (kind != "S" && kind != "C"))
      throw MalformedInput("bad trace step: " + line);
    trace.steps.push_back({kind == "S" ? TransformTrace::Step::Kind::Subdivide
                                       : TransformTrace::Step::Kind::Contract,
                           x, y, label});
  }
  if (!header_seen) throw MalformedInput("missing trace header");
  return trace;
}

}  // namespace dgdual
