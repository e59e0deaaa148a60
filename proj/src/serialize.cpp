#include "hyperent/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "hyperent/io.hpp"

namespace hyperent {

using ordered_json = nlohmann::ordered_json;

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

double round9(double v) { return std::strtod(format_real(v).c_str(), nullptr); }

namespace {

std::string join_ints(const std::vector<int>& xs, char sep) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

std::string edges_compact(const EdgeList& edges) {
  std::ostringstream os;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) os << ';';
    for (size_t j = 0; j < edges[i].size(); ++j) {
      if (j) os << ' ';
      os << edges[i][j];
    }
  }
  return os.str();
}

ordered_json hypergraph_json_obj(const Hypergraph& h) {
  ordered_json j;
  j["k"] = h.k();
  j["n"] = h.n();
  j["m"] = h.m();
  j["edges"] = h.edges();
  return j;
}

}  // namespace

std::string entropy_report_json(const EntropyReport& r) {
  ordered_json j;
  j["k"] = r.k;
  j["m"] = r.m;
  j["n"] = r.n;
  j["sum_delta_mult"] = r.sum_delta_multiplicity;
  j["sum_delta_bin"] = r.sum_delta_binary;
  j["h_mult"] = round9(r.h_multiplicity);
  j["h_bin"] = round9(r.h_binary);
  j["I_delta_mult"] = round9(r.i_delta_multiplicity);
  j["I_delta_bin"] = round9(r.i_delta_binary);
  j["I_degree"] = round9(r.i_degree);
  return j.dump() + "\n";
}

std::string entropy_report_csv(const EntropyReport& r) {
  std::ostringstream os;
  os << "k,m,n,sum_delta_mult,sum_delta_bin,h_mult,h_bin,I_delta_mult,"
        "I_delta_bin,I_degree\n";
  os << r.k << ',' << r.m << ',' << r.n << ',' << r.sum_delta_multiplicity
     << ',' << r.sum_delta_binary << ',' << format_real(r.h_multiplicity)
     << ',' << format_real(r.h_binary) << ','
     << format_real(r.i_delta_multiplicity) << ','
     << format_real(r.i_delta_binary) << ',' << format_real(r.i_degree)
     << '\n';
  return os.str();
}

std::string bounds_json(const BoundsResult& b) {
  ordered_json j;
  j["class"] = class_name(b.graph_class);
  j["k"] = b.k;
  j["m"] = b.m;
  j["n"] = b.n;
  j["i_lower"] = round9(b.i_lower);
  j["i_upper"] = round9(b.i_upper);
  j["lower_witness_sequence"] = b.lower_witness_sequence.values;
  j["upper_witness_sequence"] = b.upper_witness_sequence.values;
  j["i_lower_printed"] =
      b.i_lower_printed ? ordered_json(round9(*b.i_lower_printed))
                        : ordered_json(nullptr);
  j["i_lower_definitional"] =
      b.i_lower_definitional ? ordered_json(round9(*b.i_lower_definitional))
                             : ordered_json(nullptr);
  if (b.chem_counts) {
    ordered_json c;
    c["a"] = b.chem_counts->a;
    c["b"] = b.chem_counts->b;
    c["c"] = b.chem_counts->c;
    c["d"] = b.chem_counts->d;
    c["i"] = b.chem_counts->i;
    j["chem_counts"] = c;
  } else {
    j["chem_counts"] = nullptr;
  }
  return j.dump() + "\n";
}

std::string bounds_csv(const BoundsResult& b) {
  std::ostringstream os;
  os << "class,k,m,n,i_lower,i_upper,i_lower_printed,i_lower_definitional,"
        "chem_a,chem_b,chem_c,chem_d,chem_i,lower_witness,upper_witness\n";
  os << class_name(b.graph_class) << ',' << b.k << ',' << b.m << ',' << b.n
     << ',' << format_real(b.i_lower) << ',' << format_real(b.i_upper) << ',';
  if (b.i_lower_printed) os << format_real(*b.i_lower_printed);
  os << ',';
  if (b.i_lower_definitional) os << format_real(*b.i_lower_definitional);
  os << ',';
  if (b.chem_counts)
    os << b.chem_counts->a << ',' << b.chem_counts->b << ','
       << b.chem_counts->c << ',' << b.chem_counts->d << ','
       << b.chem_counts->i;
  else
    os << ",,,,";
  os << ',' << join_ints(b.lower_witness_sequence.values, ' ') << ','
     << join_ints(b.upper_witness_sequence.values, ' ') << '\n';
  return os.str();
}

namespace {

struct ClassFacts {
  int cyclomatic = 0;
  LaplacianDegrees mult;
  LaplacianDegrees bin;
  double h_mult = 0, h_bin = 0, i_mult = 0, i_bin = 0;
};

ClassFacts facts_of(const Hypergraph& g) {
  ClassFacts f;
  f.cyclomatic = cyclomatic_number(g);
  f.mult = laplacian_degrees(g, AdjacencyConvention::Multiplicity);
  f.bin = laplacian_degrees(g, AdjacencyConvention::Binary);
  f.h_mult = h_of_values(f.mult.sequence.values);
  f.h_bin = h_of_values(f.bin.sequence.values);
  f.i_mult = shannon_entropy(std::span<const int>(f.mult.sequence.values));
  f.i_bin = shannon_entropy(std::span<const int>(f.bin.sequence.values));
  return f;
}

}  // namespace

ConventionFilter convention_filter_from_string(const std::string& s) {
  if (s == "multiplicity") return ConventionFilter::Multiplicity;
  if (s == "binary") return ConventionFilter::Binary;
  if (s == "both") return ConventionFilter::Both;
  fail(Errc::BadParameters, "unknown convention: " + s);
}

std::string enumeration_json(const EnumerationOutput& e, ConventionFilter f) {
  bool with_mult = f != ConventionFilter::Binary;
  bool with_bin = f != ConventionFilter::Multiplicity;
  ordered_json j;
  j["k"] = e.task.k;
  j["m"] = e.task.m;
  j["cyclomatic_class"] = e.task.cyclomatic_class
                              ? ordered_json(*e.task.cyclomatic_class)
                              : ordered_json(nullptr);
  j["max_degree"] = e.task.max_degree ? ordered_json(*e.task.max_degree)
                                      : ordered_json(nullptr);
  j["count"] = e.classes.size();
  ordered_json rows = ordered_json::array();
  for (size_t i = 0; i < e.classes.size(); ++i) {
    const Hypergraph& g = e.classes[i];
    ClassFacts cf = facts_of(g);
    ordered_json row;
    row["index"] = i;
    row["n"] = g.n();
    row["cyclomatic"] = cf.cyclomatic;
    row["edges"] = g.edges();
    if (with_mult) {
      row["sequence_mult"] = cf.mult.sequence.values;
      row["h_mult"] = round9(cf.h_mult);
      row["i_delta_mult"] = round9(cf.i_mult);
    }
    if (with_bin) {
      row["sequence_bin"] = cf.bin.sequence.values;
      row["h_bin"] = round9(cf.h_bin);
      row["i_delta_bin"] = round9(cf.i_bin);
    }
    rows.push_back(std::move(row));
  }
  j["classes"] = std::move(rows);
  return j.dump() + "\n";
}

std::string enumeration_csv(const EnumerationOutput& e, ConventionFilter f) {
  bool with_mult = f != ConventionFilter::Binary;
  bool with_bin = f != ConventionFilter::Multiplicity;
  std::ostringstream os;
  os << "index,k,n,m,cyclomatic,edges";
  if (with_mult) os << ",sequence_mult,h_mult,i_delta_mult";
  if (with_bin) os << ",sequence_bin,h_bin,i_delta_bin";
  os << '\n';
  for (size_t i = 0; i < e.classes.size(); ++i) {
    const Hypergraph& g = e.classes[i];
    ClassFacts cf = facts_of(g);
    os << i << ',' << g.k() << ',' << g.n() << ',' << g.m() << ','
       << cf.cyclomatic << ',' << edges_compact(g.edges());
    if (with_mult)
      os << ',' << join_ints(cf.mult.sequence.values, ' ') << ','
         << format_real(cf.h_mult) << ',' << format_real(cf.i_mult);
    if (with_bin)
      os << ',' << join_ints(cf.bin.sequence.values, ' ') << ','
         << format_real(cf.h_bin) << ',' << format_real(cf.i_bin);
    os << '\n';
  }
  return os.str();
}

std::string enumeration_hgr(const EnumerationOutput& e) {
  std::ostringstream os;
  for (size_t i = 0; i < e.classes.size(); ++i) {
    if (i) os << '\n';
    os << "# class " << i << '\n' << serialize_hgr(e.classes[i]);
  }
  return os.str();
}

namespace {

ordered_json scan_json(const ScanResult& s) {
  ordered_json j;
  j["convention"] = convention_name(s.convention);
  j["min_i"] = round9(s.min_i);
  j["max_i"] = round9(s.max_i);
  j["min_indices"] = s.min_indices;
  j["max_indices"] = s.max_indices;
  ordered_json rows = ordered_json::array();
  for (const ScanRow& r : s.rows) {
    ordered_json row;
    row["index"] = r.index;
    row["hgr"] = r.hgr;
    row["sequence"] = r.sequence.values;
    row["h"] = round9(r.h);
    row["i_delta"] = round9(r.i_delta);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

ordered_json check_json(const BoundCheck& c) {
  ordered_json j;
  j["bound"] = c.bound;
  j["reading"] = c.reading;
  j["convention"] = convention_name(c.convention);
  j["bound_value"] = round9(c.bound_value);
  j["empirical"] = round9(c.empirical);
  j["status"] = bound_status_name(c.status);
  j["witness_index"] = c.witness_index;
  j["witness_hgr"] = c.witness_hgr;
  j["witness_sequence"] = c.witness_sequence.values;
  j["template_sequence"] = c.template_sequence.values;
  j["sequence_matches"] = c.sequence_matches;
  return j;
}

}  // namespace

std::string verification_json(const VerificationReport& r) {
  ordered_json j;
  j["theorem"] = theorem_name(r.theorem);
  j["k"] = r.k;
  j["m"] = r.m;
  j["class"] = class_name(r.graph_class);
  j["cyclomatic_class"] = r.cyclomatic_class;
  j["max_degree"] =
      r.max_degree ? ordered_json(*r.max_degree) : ordered_json(nullptr);
  j["class_count"] = r.class_count;
  j["bounds"] = ordered_json::parse(bounds_json(r.bound_values));
  ordered_json scans = ordered_json::array();
  for (const ScanResult& s : r.scans) scans.push_back(scan_json(s));
  j["scans"] = std::move(scans);
  ordered_json checks = ordered_json::array();
  for (const BoundCheck& c : r.checks) checks.push_back(check_json(c));
  j["checks"] = std::move(checks);
  j["notes"] = r.notes;
  return j.dump() + "\n";
}

EdgeMove parse_edge_move_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::SyntaxError, e.what());
  }
  if (!j.is_object() || !j.contains("moves") || !j["moves"].is_array())
    fail(Errc::SyntaxError, "expected object with a \"moves\" array");
  EdgeMove mv;
  for (const auto& jm : j["moves"]) {
    if (!jm.is_object() || !jm.contains("edge") || !jm.contains("from") ||
        !jm.contains("to"))
      fail(Errc::SyntaxError, "each move needs \"edge\", \"from\", \"to\"");
    Move one;
    one.edge = jm["edge"].get<int>();
    one.from = jm["from"].get<int>();
    one.to = jm["to"].get<int>();
    mv.moves.push_back(one);
  }
  return mv;
}

std::string edge_move_json(const EdgeMove& mv) {
  ordered_json j;
  ordered_json moves = ordered_json::array();
  for (const Move& one : mv.moves) {
    ordered_json m;
    m["edge"] = one.edge;
    m["from"] = one.from;
    m["to"] = one.to;
    moves.push_back(std::move(m));
  }
  j["moves"] = std::move(moves);
  return j.dump() + "\n";
}

std::string move_result_json(const MoveResult& r) {
  ordered_json j;
  j["isolated_created"] = r.isolated_created;
  j["hypergraph"] = hypergraph_json_obj(r.graph);
  return j.dump() + "\n";
}

}  // namespace hyperent
