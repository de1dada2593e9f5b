#ifndef MATSLOCC_JSON_IO_HPP
#define MATSLOCC_JSON_IO_HPP

#include <json.hpp>

#include "matslocc/compression.hpp"
#include "matslocc/slocc.hpp"

namespace matslocc {

// Key order is preserved so identical inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

/// Doubles rendered at 12 significant digits, as JSON numbers.
Json json_double(double x);

Json matrix_space_to_json(const MatrixSpace& s);
MatrixSpace matrix_space_from_json(const Json& j);

Json state_to_json(const TripartiteState& st);
TripartiteState state_from_json(const Json& j);

Json report_to_json(const MaxRankReport& r);
Json witness_to_json(const ShrunkWitness& w);
Json decision_to_json(const ShrunkDecision& d);
Json verdict_to_json(const ConvertibilityVerdict& v);
Json rate_to_json(const RateBounds& r);
Json profile_to_json(const AsymptoticProfile& p);

MatrixSpace load_matrix_space(const std::string& path);
TripartiteState load_state(const std::string& path);

} // namespace matslocc

#endif
