#pragma once

#include <nlohmann/json.hpp>

#include "numsg/semigroup.hpp"

namespace numsg {

using Json = nlohmann::ordered_json;

// {"conductor","gaps","min_generators","frobenius","genus","multiplicity",
//  "left","embedding_dimension","special_gaps"} in that order.
Json to_json(NumericalSemigroup const& s);

// Same keys as above followed by "sub_frobenius" (null when S is ordinary).
Json to_json(InvariantReport const& r);

// Accepts either schema above; the semigroup is rebuilt from "gaps" and the
// remaining fields are checked against it. Throws ParseError on mismatch.
NumericalSemigroup semigroup_from_json(Json const& j);

}  // namespace numsg
