#pragma once
// JSON forms of the core values. Scalars are strings "p" or "p/q" in lowest
// terms so that round trips are exact.

#include <string>

#include <json.hpp>

#include "rbdq/classify.hpp"
#include "rbdq/dual_quaternion.hpp"
#include "rbdq/groebner.hpp"
#include "rbdq/polysystem.hpp"
#include "rbdq/rb_operator.hpp"

namespace rbdq {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
/// Accepts a string "p/q" or an integer; throws ParseError otherwise.
Scalar scalar_from_json(const Json& j);

Json to_json(const DualQuaternion& x);  // {"coords": [...]}
DualQuaternion dual_quaternion_from_json(const Json& j);

/// {"products": [[[4 scalars] x4] x4]}, products[p][q] = coordinates of e_p e_q.
Json to_json(const StructureTable& table);
StructureTable structure_table_from_json(const Json& j);

Json to_json(const OperatorMatrix& r);  // {"entries": [[...] x4]}, row-major a11..a44
OperatorMatrix operator_matrix_from_json(const Json& j);

/// {"coeff": "p/q", "exps": {"a11": 2, "l": 1}} per term
Json to_json(const Polynomial& p, const VariableRing& ring = VariableRing::rota_baxter());
Polynomial polynomial_from_json(const Json& j, const VariableRing& ring = VariableRing::rota_baxter());

/// {"weight_mode": "...", "polys": [{"label", "terms", ("source")}]}
Json to_json(const PolySystem& system, const VariableRing& ring = VariableRing::rota_baxter());
PolySystem system_from_json(const Json& j, const VariableRing& ring = VariableRing::rota_baxter());

Json to_json(const BuchbergerStats& stats);
/// {"order": "...", "generators": [{"text", "terms"}], "stats": {...}}
Json to_json(const GroebnerBasis& basis, const VariableRing& ring);

Json to_json(const FamilyDescriptor& family);
Json to_json(const ClassificationResult& result, const Scalar& lambda);
Json to_json(const AuditReport& report);
Json to_json(const ComparisonReport& report, const VariableRing& ring = VariableRing::rota_baxter());
Json to_json(const std::vector<MembershipVerdict>& verdicts);

/// Parses JSON text, rethrowing syntax errors as ParseError with position.
Json parse_json_text(const std::string& text);

}  // namespace rbdq
