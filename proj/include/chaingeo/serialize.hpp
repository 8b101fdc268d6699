#pragma once

#include <json.hpp>

#include "chaingeo/beta.hpp"
#include "chaingeo/chains.hpp"

namespace chaingeo {

using Json = nlohmann::json;

// Every reader throws GeometryError(Schema) on malformed input.

Json to_json(const GaussianRational& z);
Json to_json(const Matrix& a);
Json to_json(const Subspace& s);
Json to_json(const ShilovPoint& x);
Json to_json(const MChain& t);
Json to_json(const HeisPoint& p);
Json to_json(const WPoint& w);
Json to_json(const USubspace& u);
Json to_json(const Circle& c);

GaussianRational scalar_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
Subspace subspace_from_json(const Json& j);
ShilovPoint point_from_json(const Json& j);
MChain chain_from_json(const Json& j);
HeisPoint heis_from_json(const Json& j);
WPoint wpoint_from_json(const Json& j);
Circle circle_from_json(const Json& j);

}  // namespace chaingeo
