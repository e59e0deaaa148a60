#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hyperent/entropy.hpp"
#include "hyperent/families.hpp"
#include "hyperent/io.hpp"
#include "hyperent/search.hpp"
#include "hyperent/serialize.hpp"
#include "hyperent/transform.hpp"

namespace {

using namespace hyperent;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::SyntaxError, "cannot open output file: " + path);
  out << text;
}

std::vector<std::pair<int, int>> parse_tree_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = line.substr(0, line.find('#'));
    std::istringstream ls(stripped);
    long u = 0, v = 0;
    if (!(ls >> u)) continue;  // blank or comment line
    std::string extra;
    if (!(ls >> v) || (ls >> extra))
      fail(Errc::SyntaxError, "line " + std::to_string(lineno) +
                                  ": expected two vertex ids");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return edges;
}

struct Options {
  std::string input = "-";
  std::string output;
  std::string format;
  std::string family;
  std::string graph_class;
  std::string theorem;
  std::string convention = "both";
  std::string tree_path;
  std::string moves;
  int k = 0;
  int m = 0;
  std::optional<int> cyclo;
  std::optional<int> max_degree;
  std::size_t limit = 1000000;
  bool strict = false;
};

int usage_error(const std::string& message) {
  std::cerr << "usage error: " << message << "\n";
  return 2;
}

int run_info(const Options& opt) {
  Hypergraph h = load_hypergraph(opt.input);
  EntropyReport r = full_report(h);
  std::string fmt = opt.format.empty() ? "json" : opt.format;
  if (fmt == "json")
    write_output(opt.output, entropy_report_json(r));
  else if (fmt == "csv")
    write_output(opt.output, entropy_report_csv(r));
  else
    return usage_error("info supports --format json or csv");
  return 0;
}

int run_gen(const Options& opt) {
  FamilyDescriptor desc;
  desc.family = family_from_string(opt.family);
  desc.k = opt.k;
  desc.m = opt.m;
  if (desc.family == FamilyId::TreePower) {
    if (opt.tree_path.empty())
      return usage_error("TREE_POWER needs --tree FILE");
    desc.tree_edges = parse_tree_file(opt.tree_path);
  } else if (opt.m <= 0) {
    return usage_error("gen needs --m");
  }
  Hypergraph h = generate(desc);
  std::string fmt = opt.format.empty() ? "hgr" : opt.format;
  if (fmt == "hgr")
    write_output(opt.output, serialize_hgr(h));
  else if (fmt == "json")
    write_output(opt.output, serialize_hypergraph_json(h) + "\n");
  else
    return usage_error("gen supports --format hgr or json");
  return 0;
}

int run_bounds(const Options& opt) {
  BoundsResult b = bounds(class_from_string(opt.graph_class), opt.k, opt.m);
  std::string fmt = opt.format.empty() ? "json" : opt.format;
  if (fmt == "json")
    write_output(opt.output, bounds_json(b));
  else if (fmt == "csv")
    write_output(opt.output, bounds_csv(b));
  else
    return usage_error("bounds supports --format json or csv");
  return 0;
}

int run_enum(const Options& opt) {
  EnumerationTask task;
  task.k = opt.k;
  task.m = opt.m;
  task.cyclomatic_class = opt.cyclo;
  task.max_degree = opt.max_degree;
  EnumerationLimits limits;
  limits.max_edges = std::max(task.m, limits.max_edges);
  limits.max_classes = opt.limit;
  EnumerationOutput out{task, enumerate_classes(task, limits)};

  ConventionFilter conv = convention_filter_from_string(opt.convention);
  if (opt.format.empty()) {
    // blocks plus table
    std::string text = enumeration_hgr(out);
    if (!out.classes.empty()) text += "\n";
    text += enumeration_csv(out, conv);
    write_output(opt.output, text);
    return 0;
  }
  if (opt.format == "hgr")
    write_output(opt.output, enumeration_hgr(out));
  else if (opt.format == "csv")
    write_output(opt.output, enumeration_csv(out, conv));
  else if (opt.format == "json")
    write_output(opt.output, enumeration_json(out, conv));
  else
    return usage_error("enum supports --format hgr, csv or json");
  return 0;
}

int run_verify(const Options& opt) {
  if (!opt.format.empty() && opt.format != "json")
    return usage_error("verify supports --format json only");
  EnumerationLimits limits;
  limits.max_edges = std::max(opt.m, limits.max_edges);
  limits.max_classes = opt.limit;
  VerificationReport rep =
      verify(theorem_from_string(opt.theorem), opt.k, opt.m, limits);
  write_output(opt.output, verification_json(rep));
  if (opt.strict)
    for (const BoundCheck& c : rep.checks)
      if (c.status == BoundStatus::Violated) return 3;
  return 0;
}

int run_move(const Options& opt) {
  Hypergraph h = load_hypergraph(opt.input);
  std::string moves_text;
  size_t at = opt.moves.find_first_not_of(" \t\r\n");
  if (at != std::string::npos && opt.moves[at] == '{')
    moves_text = opt.moves;  // inline JSON
  else
    moves_text = read_file(opt.moves);
  MoveResult r = apply_move(h, parse_edge_move_json(moves_text));
  std::string fmt = opt.format.empty() ? "hgr" : opt.format;
  if (fmt == "hgr") {
    std::ostringstream os;
    os << "# isolated_created: " << (r.isolated_created ? "true" : "false")
       << "\n"
       << serialize_hgr(r.graph);
    write_output(opt.output, os.str());
  } else if (fmt == "json") {
    write_output(opt.output, move_result_json(r));
  } else {
    return usage_error("move supports --format hgr or json");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian-degree entropy toolkit for k-uniform hypergraphs"};
  app.require_subcommand(1);

  Options opt;
  int cyclo_flag = -1;
  int maxdeg_flag = -1;

  CLI::App* info = app.add_subcommand("info", "entropy report for a hypergraph");
  info->add_option("input", opt.input, "HGR/JSON file, - for stdin");
  info->add_option("--format", opt.format, "json|csv");
  info->add_option("--output", opt.output, "output file");

  CLI::App* gen = app.add_subcommand("gen", "generate a named family");
  gen->add_option("--family", opt.family, "family id")->required();
  gen->add_option("--k", opt.k, "edge size")->required();
  gen->add_option("--m", opt.m, "edge count");
  gen->add_option("--tree", opt.tree_path, "tree edge list (TREE_POWER)");
  gen->add_option("--format", opt.format, "hgr|json");
  gen->add_option("--output", opt.output, "output file");

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "published bound values");
  bounds_cmd->add_option("--class", opt.graph_class, "graph class")->required();
  bounds_cmd->add_option("--k", opt.k, "edge size")->required();
  bounds_cmd->add_option("--m", opt.m, "edge count")->required();
  bounds_cmd->add_option("--format", opt.format, "json|csv");
  bounds_cmd->add_option("--output", opt.output, "output file");

  CLI::App* enum_cmd =
      app.add_subcommand("enum", "enumerate isomorphism classes");
  enum_cmd->add_option("--k", opt.k, "edge size")->required();
  enum_cmd->add_option("--m", opt.m, "edge count")->required();
  enum_cmd->add_option("--class", cyclo_flag, "cyclomatic class filter");
  enum_cmd->add_option("--max-degree", maxdeg_flag, "ordinary degree cap");
  enum_cmd->add_option("--limit", opt.limit, "class-count cap");
  enum_cmd->add_option("--convention", opt.convention,
                       "multiplicity|binary|both (table columns)");
  enum_cmd->add_option("--format", opt.format, "hgr|csv|json");
  enum_cmd->add_option("--output", opt.output, "output file");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "grade a theorem against enumeration");
  verify_cmd->add_option("--theorem", opt.theorem, "T3.1|T3.2|T3.4|T3.6")
      ->required();
  verify_cmd->add_option("--k", opt.k, "edge size")->required();
  verify_cmd->add_option("--m", opt.m, "edge count")->required();
  verify_cmd->add_option("--limit", opt.limit, "class-count cap");
  verify_cmd->add_flag("--strict", opt.strict, "exit 3 on any VIOLATED");
  verify_cmd->add_option("--format", opt.format, "json");
  verify_cmd->add_option("--output", opt.output, "output file");

  CLI::App* move_cmd = app.add_subcommand("move", "apply an edge move");
  move_cmd->add_option("input", opt.input, "HGR/JSON file, - for stdin");
  move_cmd->add_option("--moves", opt.moves, "EdgeMove JSON file or inline")
      ->required();
  move_cmd->add_option("--format", opt.format, "hgr|json");
  move_cmd->add_option("--output", opt.output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (enum_cmd->parsed()) {
    if (enum_cmd->count("--class")) opt.cyclo = cyclo_flag;
    if (enum_cmd->count("--max-degree")) opt.max_degree = maxdeg_flag;
  }

  try {
    if (info->parsed()) return run_info(opt);
    if (gen->parsed()) return run_gen(opt);
    if (bounds_cmd->parsed()) return run_bounds(opt);
    if (enum_cmd->parsed()) return run_enum(opt);
    if (verify_cmd->parsed()) return run_verify(opt);
    if (move_cmd->parsed()) return run_move(opt);
  } catch (const hyperent::Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return usage_error("no subcommand given");
}
