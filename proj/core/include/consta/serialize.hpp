#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "consta/cdft.hpp"
#include "consta/codes.hpp"
#include "consta/field.hpp"
#include "consta/poly.hpp"
#include "consta/zn.hpp"

// JSON forms of the library objects.
//
// A field element is written level by level: a prime-field element is an
// integer, an element of a degree-d level is an array of its d coefficients
// over the level below (constant first), and a degree-1 level adds no nesting.
// So F_9 = F_3[y]/(y^2+1) writes 2y+1 as [1,2], and an F_3 element as 2.
// On input an integer is accepted at any level and means a prime-field element.

namespace consta::io {

using nlohmann::json;

json to_json(const FieldCtx& f);
FieldCtx field_from_json(const json& j);

json to_json(const FieldElem& x);
FieldElem elem_from_json(const FieldCtx& f, const json& j);

json to_json(const Poly& a);
Poly poly_from_json(const FieldCtx& f, const json& j);

json to_json(const Vec& v);
Vec vec_from_json(const FieldCtx& f, const json& j);

json to_json(const ZnSet& s);
ZnSet znset_from_json(const json& j);

json to_json(const PatternPoly& p);

/// {q, n, lambda, generator, G, dim, pattern, degenerate, field}
json to_json(const ConstaCode& c);
/// Rebuilds from field, n, lambda and generator; G and dim, when present, must match.
ConstaCode code_from_json(const json& j);

/// {delta, xi, beta, t, m1, m2, orbits, splitting_degree, splitting_field}
json to_json(const RootBasis& b);

/// {method, generator, G, dim, lambda, agrees_with_oracle?}
json product_report(const std::string& method, const ConstaCode& c, std::optional<bool> agrees = std::nullopt);

json to_json(const BoundsReport& r);

/// Deterministic text form: sorted keys (std::map), two-space indent.
std::string dump(const json& j);

}  // namespace consta::io
