#pragma once

#include <json.hpp>

#include "staudt/projective.hpp"
#include "staudt/rnc.hpp"
#include "staudt/symbolic.hpp"
#include "staudt/vonstaudt.hpp"
#include "staudt/wdn.hpp"

namespace staudt::json_io {

using json = nlohmann::ordered_json;

// Scalars are written as decimal strings ("3", "-1/2").  Readers also take
// JSON integers.  Every reader throws ParseError on malformed input.

json to_json(const FieldSpec& field);
FieldSpec field_from_json(const json& j);

json to_json(const Scalar& value);
Scalar scalar_from_json(const json& j, const FieldSpec& field);

json to_json(const ParamPoint& q);
ParamPoint param_from_json(const json& j, const FieldSpec& field);

/// {"field": ..., "dim": d, "points": [["1","0",...], ...]}
json to_json(const Configuration& config);
Configuration configuration_from_json(const json& j);

/// {"dim": d, "frame_map": [[...]], "alphas": [...]}
json to_json(const RNCModel& model);
RNCModel model_from_json(const json& j, const FieldSpec& field);

/// {"J": [...], "I": [...], "m1": "...", "m2": "...", "value": "..."}
json to_json(const PsiReport& report);

/// {"kind": "factorization", "d": d, "K": [...], "ok": bool}
json factorization_record(int d, const SubsetSplit& split, bool ok);
/// {"kind": "psi", "J": [...], "I": [...], "ok": bool, ...}
json psi_identity_record(const PsiIndex& idx, const PsiIdentityResult& result);

json to_json(const VonStaudtInstance& inst);
/// Rebuilds the instance from "d", "field" and "Q".  Stored "P" and
/// "planes" must match the rebuilt ones; a stored "R" replaces the rebuilt
/// configuration, so tampered points get verified as given.
VonStaudtInstance instance_from_json(const json& j);

json to_json(const Certificate& cert);

} // namespace staudt::json_io
