#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "glhopf/invfun.hpp"
#include "glhopf/linalg.hpp"
#include "glhopf/orbits.hpp"

namespace glhopf {

class Algebra;
using Json = nlohmann::ordered_json;

Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

/// {n, q, orbits: [{label, representative, size}]}
Json to_json(const OrbitTable& t);
OrbitTable orbit_table_from_json(std::shared_ptr<const FqContext> f, const Json& j,
                                 std::uint64_t budget = kDefaultBudget);

/// {n, q, values: {label: cyclotomic}}
Json to_json(const InvariantFunction& f);
InvariantFunction invariant_function_from_json(Algebra& alg, const Json& j);
/// {degrees, q, values: [{labels, value}]}
Json to_json(const TensorFunction& t);
TensorFunction tensor_function_from_json(Algebra& alg, const Json& j);
/// {q, components: [invariant function, ...]}
Json to_json(const GradedElement& x, const FqContext& f);
GradedElement graded_element_from_json(Algebra& alg, const Json& j);

/// Throws ParseError with the path on malformed input.
Json read_json_file(const std::filesystem::path& path);
/// Writes atomically (temp file then rename).
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace glhopf
