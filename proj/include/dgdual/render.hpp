#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "dgdual/hamilton.hpp"
#include "dgdual/normal_form.hpp"
#include "dgdual/reduction.hpp"

namespace dgdual {

inline std::string render_report(const CheckReport& report) {
  std::ostringstream out;
  out << (report.passed ? "PASS " : "FAIL ") << to_string(report.mode)
      << " violations=" << report.violations.size();
  for (const auto& w : report.violations) {
    out << '\n' << to_string(w.kind) << " cell=(" << w.row << ',' << w.col << ") value=" << w.value;
    if (w.minor_of) out << " minor_of=(" << w.minor_of->first << ',' << w.minor_of->second << ')';
  }
  return out.str();
}

inline std::string render_report_json(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["passed"] = report.passed;
  j["mode"] = to_string(report.mode);
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& w : report.violations) {
    nlohmann::ordered_json wj;
    wj["kind"] = to_string(w.kind);
    wj["cell"] = {w.row, w.col};
    wj["value"] = w.value;
    if (w.minor_of)
      wj["minor_of"] = {w.minor_of->first, w.minor_of->second};
    else
      wj["minor_of"] = nullptr;
    j["violations"].push_back(std::move(wj));
  }
  return j.dump(2);
}

inline std::string render_report(const FormingResult& result) {
  std::ostringstream out;
  out << "excluded | pair | element";
  for (const auto& r : result.removed)
    out << '\n' << r.alpha << " | (" << r.x << ',' << r.alpha << "),(" << r.alpha << ',' << r.y
        << ") | (" << r.x << ',' << r.y << ')';
  return out.str();
}

inline std::string render_report(const CycleSet& cycles) {
  std::ostringstream out;
  out << cycles.count << (cycles.count == 1 ? " cycle" : " cycles");
  for (const auto& c : cycles.cycles) {
    out << '\n';
    for (const auto& v : c) out << v << "->";
    out << c.front();
  }
  return out.str();
}

}  // namespace dgdual
