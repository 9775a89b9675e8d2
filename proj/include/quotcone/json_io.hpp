#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "quotcone/class_solver.hpp"
#include "quotcone/families.hpp"
#include "quotcone/harness.hpp"
#include "quotcone/picard.hpp"
#include "quotcone/poly_matrix.hpp"
#include "quotcone/splitting.hpp"

namespace quotcone {

/// Insertion-ordered, so output is byte-stable across runs.
using Json = nlohmann::ordered_json;

/// All readers throw ParseError on malformed input.
Json field_to_json(const Field& field);
Field field_from_json(const Json& j);

/// Scalars travel as decimal strings ("3", "-1/2"); readers also accept integers.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Field& field, const Json& j);

Json polymatrix_to_json(const PolyMatrix& m);
PolyMatrix polymatrix_from_json(const Json& j);

Json subspace_to_json(const LinearSubspace& s);
LinearSubspace subspace_from_json(const Json& j);

Json class_to_json(const DivisorClass& c);
Json slope_to_json(const Slope& s);

Json cones_to_json(const QuotParams& p, const EffectiveCone& eff);
Json trial_to_json(const TrialReport& t);
Json theorem1_to_json(const Theorem1Report& rep);
Json split_to_json(const SplitAnalysis& a);
Json suite_to_json(const SuiteResult& s);

/// Parses a whole document; ParseError on syntax errors.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

} // namespace quotcone
