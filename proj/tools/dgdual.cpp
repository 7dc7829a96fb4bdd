// dgdual: duality checks, normalization, edge-graph construction, reduction
// and Hamilton cycle search over binary relation matrices.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dgdual/digraph.hpp"
#include "dgdual/edge_graph.hpp"
#include "dgdual/hamilton.hpp"
#include "dgdual/matrix.hpp"
#include "dgdual/normal_form.hpp"
#include "dgdual/reduction.hpp"
#include "dgdual/render.hpp"
#include "dgdual/trace.hpp"

namespace {

// Exit codes: 0 success, 1 check failure, 2 input error, 3 bound violation.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;
constexpr int kBoundViolation = 3;

dgdual::BinaryMatrix read_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dgdual::MalformedInput("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return dgdual::parse_matrix(buf.str());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dgdual::MalformedInput("cannot write file: " + path);
  out << content << '\n';
}

long nu_of_digraph(const dgdual::Digraph& g) {
  return static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()) +
         static_cast<long>(g.weak_component_count());
}

struct Options {
  std::string file;
  std::string mode = "quasi";
  bool json = false;
  std::string out;
  std::string trace;
  std::string dot;
  std::string fmatrix;
  bool split_terminals = false;
  bool allow_loops = false;
  bool oracle = false;
  bool canonical = false;
  std::optional<std::size_t> limit;
  std::size_t threads = 1;
};

int run_check(const Options& opt) {
  auto m = read_matrix(opt.file);
  auto report =
      opt.mode == "canonical" ? dgdual::canonical_check(m) : dgdual::quasicanonical_check(m);
  std::cout << (opt.json ? dgdual::render_report_json(report) : dgdual::render_report(report))
            << '\n';
  return report.passed ? kOk : kCheckFailed;
}

int run_normalize(const Options& opt) {
  auto m = read_matrix(opt.file);
  auto result = opt.mode == "canonical" ? dgdual::canonicalize(m) : dgdual::quasinormalize(m);
  auto text = dgdual::serialize_matrix(result.matrix);
  if (opt.out.empty())
    std::cout << text << '\n';
  else
    write_file(opt.out, text);
  if (!opt.trace.empty()) write_file(opt.trace, dgdual::serialize_trace(result.trace));
  return kOk;
}

int run_edge_graph(const Options& opt) {
  auto m = read_matrix(opt.file);
  dgdual::EdgeGraphModel model;
  try {
    model = dgdual::build_edge_graph(m, nullptr, opt.split_terminals);
  } catch (const dgdual::NotQuasicanonical& e) {
    std::cout << "FAIL not quasicanonical: " << e.what() << '\n';
    return kCheckFailed;
  }
  std::cout << "vertices=" << model.h.vertex_count() << " edges=" << model.h.edge_count()
            << " blocks=" << model.decomposition.blocks.size()
            << " nu_g=" << dgdual::cyclomatic_number(m) << " nu_h=" << nu_of_digraph(model.h)
            << " duality=" << (dgdual::validate_duality(m, model) ? "ok" : "broken") << '\n';
  if (!opt.dot.empty()) write_file(opt.dot, dgdual::render_dot(model.h));
  if (!opt.fmatrix.empty()) write_file(opt.fmatrix, dgdual::serialize_matrix(model.f));
  return kOk;
}

int run_reduce(const Options& opt) {
  auto m = read_matrix(opt.file);
  auto result = dgdual::reduce_to_forming(m, opt.allow_loops);
  std::cout << dgdual::render_report(result) << '\n'
            << "fully_forming=" << (result.fully_forming ? "true" : "false") << '\n';
  if (!opt.out.empty()) write_file(opt.out, dgdual::serialize_matrix(result.matrix));
  return kOk;
}

int run_hamilton(const Options& opt) {
  auto m = read_matrix(opt.file);
  // The canonical pipeline is always used: quasicanonical edge graphs can
  // carry complicated vertices whose Hamilton cycles have no degree-2 Euler
  // partial, so enumerating over them would undercount.
  (void)opt.canonical;
  auto cycles = dgdual::hamilton_cycles(m, opt.limit, /*use_canonical=*/true);
  std::cout << dgdual::render_report(cycles) << '\n';
  if (opt.oracle) {
    auto expected = dgdual::brute_force_hamilton(m);
    if (expected.count != cycles.count) {
      std::cout << "ORACLE MISMATCH expected=" << expected.count << " got=" << cycles.count
                << '\n';
      return kCheckFailed;
    }
    std::cout << "oracle=ok count=" << expected.count << '\n';
  }
  return kOk;
}

int run_invariants(const Options& opt) {
  auto m = read_matrix(opt.file);
  std::cout << "nu=" << dgdual::cyclomatic_number(m) << " components=" << dgdual::weak_components(m)
            << " ones=" << m.ones() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertex/edge graph duality toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "test a matrix for (quasi)canonical form");
  check->add_option("FILE", opt.file)->required();
  check->add_option("--mode", opt.mode)->check(CLI::IsMember({"quasi", "canonical"}));
  check->add_flag("--json", opt.json);

  auto* normalize = app.add_subcommand("normalize", "bring a matrix to (quasi)canonical form");
  normalize->add_option("FILE", opt.file)->required();
  normalize->add_option("--mode", opt.mode)
      ->required()
      ->check(CLI::IsMember({"quasi", "canonical"}));
  normalize->add_option("-o", opt.out);
  normalize->add_option("--trace", opt.trace);

  auto* edge_graph = app.add_subcommand("edge-graph", "build the dual edge graph H");
  edge_graph->add_option("FILE", opt.file)->required();
  edge_graph->add_option("--dot", opt.dot);
  edge_graph->add_option("--fmatrix", opt.fmatrix);
  edge_graph->add_flag("--split-terminals", opt.split_terminals);

  auto* reduce = app.add_subcommand("reduce", "reduce a matrix to forming form");
  reduce->add_option("FILE", opt.file)->required();
  reduce->add_option("-o", opt.out);
  reduce->add_flag("--allow-loops", opt.allow_loops);

  auto* hamilton = app.add_subcommand("hamilton", "enumerate Hamilton cycles via Euler partials");
  hamilton->add_option("FILE", opt.file)->required();
  std::size_t limit_value = 0;
  auto* limit_opt = hamilton->add_option("--limit", limit_value);
  hamilton->add_flag("--oracle", opt.oracle);
  hamilton->add_flag("--canonical", opt.canonical);
  hamilton->add_option("--threads", opt.threads)->check(CLI::PositiveNumber);

  auto* invariants = app.add_subcommand("invariants", "print nu, components and edge count");
  invariants->add_option("FILE", opt.file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }
  if (limit_opt->count()) opt.limit = limit_value;

  try {
    if (check->parsed()) return run_check(opt);
    if (normalize->parsed()) return run_normalize(opt);
    if (edge_graph->parsed()) return run_edge_graph(opt);
    if (reduce->parsed()) return run_reduce(opt);
    if (hamilton->parsed()) return run_hamilton(opt);
    if (invariants->parsed()) return run_invariants(opt);
  } catch (const dgdual::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBoundViolation;
  } catch (const dgdual::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
