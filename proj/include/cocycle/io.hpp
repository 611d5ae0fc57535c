#pragma once

#include <string>

#include <json.hpp>

#include "cocycle/equations.hpp"
#include "cocycle/fourier.hpp"
#include "cocycle/group.hpp"
#include "cocycle/lemma.hpp"
#include "cocycle/repr.hpp"
#include "cocycle/solver.hpp"

// JSON file formats. Complex numbers are [re, im] pairs; element order is
// the group's index order.
namespace cocycle::io {

using Json = nlohmann::ordered_json;

/// {"names": [...], "table": [[...], ...]}
Json group_to_json(const Group& g);
GroupPtr group_from_json(const Json& j);

/// {"values": [[re, im], ...]}. On input, plain real numbers and a bare
/// top-level array are accepted too.
Json function_to_json(const GroupFunction& f);
GroupFunction function_from_json(const Json& j, const GroupPtr& g);

Json complex_to_json(Complex z);
Json values_to_json(const std::vector<Complex>& v);
/// Row-major list of [re, im].
Json matrix_to_json(const CMatrix& m);

/// [{"dim": d, "matrices": [[[re, im], ...row-major d×d...], ... per element]}]
Json irreps_to_json(const IrrepBasis& basis);
IrrepBasis irreps_from_json(const Json& j, const GroupPtr& g);

Json residual_to_json(const ResidualReport& r);
Json lemma_to_json(const LemmaReport& r);

/// Reads and parses a JSON file. Throws FileNotFound / BadFormat.
Json read_json_file(const std::string& path);

/// "builtin:q8" or a path to a Cayley-table JSON file.
GroupPtr load_group(const std::string& source);

}  // namespace cocycle::io
