#pragma once

#include <json.hpp>

#include "weylref/bijmap.hpp"
#include "weylref/identities.hpp"
#include "weylref/refsub.hpp"

namespace weylref {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// Roots are written as integer coordinate arrays in the simple-root basis;
// rationals as "p/q" strings.
Json root_to_json(const RootSystem& rs, int root);
int root_from_json(const RootSystem& rs, const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const RootSystem& rs, const Json& j);
Json to_json(const RootSystem& rs, const AffRoot& x);
Json to_json(const RootSystem& rs, const ExtAffElement& g);
Json to_json(const RootSystem& rs, const Inequality& w);

// {"gamma": [{"root": [...], "f": n}, ...]}
Json to_json(const RootSystem& rs, const GFDatum& d);
GFDatum gf_from_json(const RootSystem& rs, const Json& j);

// {"psi": [roots], "a": [rationals], "lattice": [{"kind": "P", "m": 2}, ...]}
// with one lattice block per component, in the order listed under "components".
Json to_json(const RootSystem& rs, const PsiXPair& p);
PsiXPair psix_from_json(const RootSystem& rs, const Json& j);

Json to_json(const DescentProfile& prof, const IdentityReport& rep);
Json to_json(const CyclicReport& rep);

// Throws ValidationError for a schema field other than kSchemaVersion.
void check_schema(const Json& j);

}  // namespace weylref
