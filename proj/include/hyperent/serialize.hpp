#pragma once

#include <string>

#include "hyperent/entropy.hpp"
#include "hyperent/families.hpp"
#include "hyperent/search.hpp"
#include "hyperent/transform.hpp"

namespace hyperent {

// fixed 9-decimal rendering used by every CSV cell and, after re-parsing,
// by every JSON number (keeps outputs byte-identical across runs)
std::string format_real(double v);
double round9(double v);

std::string entropy_report_json(const EntropyReport& r);
std::string entropy_report_csv(const EntropyReport& r);  // header + row

std::string bounds_json(const BoundsResult& b);
std::string bounds_csv(const BoundsResult& b);  // header + row

struct EnumerationOutput {
  EnumerationTask task;
  std::vector<Hypergraph> classes;
};

// which convention's columns/fields the enumeration table carries
enum class ConventionFilter { Multiplicity, Binary, Both };
ConventionFilter convention_filter_from_string(const std::string& s);

std::string enumeration_json(const EnumerationOutput& e,
                             ConventionFilter f = ConventionFilter::Both);
std::string enumeration_csv(const EnumerationOutput& e,
                            ConventionFilter f = ConventionFilter::Both);
std::string enumeration_hgr(const EnumerationOutput& e);  // blocks only

std::string verification_json(const VerificationReport& r);

EdgeMove parse_edge_move_json(const std::string& text);
std::string edge_move_json(const EdgeMove& mv);
std::string move_result_json(const MoveResult& r);

}  // namespace hyperent
