#pragma once

#include <variant>

#include <json.hpp>

#include "kmu/complex.hpp"
#include "kmu/unproject.hpp"

namespace kmu::io {

using nlohmann::json;

struct InputError : Error {
    using Error::Error;
};

/// {"vars": ["x", "y", ...], "order": "grevlex"|"lex" (optional)}
ContextPtr context_from_json(const json& j);

Polynomial poly_from_json(const ContextPtr& ctx, const json& j);

/// {"rows": r, "cols": c, "entries": [[expr, ...], ...]}
PolyMatrix matrix_from_json(const ContextPtr& ctx, const json& j);

/// A matrix object as above (validated skew), or
/// {"size": k, "upper": [expr, ...]} giving the strict upper triangle.
SkewMatrix skew_from_json(const ContextPtr& ctx, const json& j);

/// {"vars": [...], "order"?: ..., "gens": [expr, ...]}
Ideal ideal_from_json(const json& j);

/// {"kind": "ci"|"tom"|"jerry", "vars": [...], ...} per-kind payload:
///   ci:    "v": [r], "w": [r+1], "Q": matrix object
///   tom:   "x": [4], "z": [4], "coeffs": {"a23": [4], ..., "a45": [4]}
///          (absent coefficient rows default to zero)
///   jerry: "x": [3], "z": [4], "coeffs": {"a1".."a3", "b1".."b3", "c": [4]}
using UnprojectionInput = std::variant<CiData, TomData, JerryData>;
UnprojectionInput unprojection_input_from_json(const json& j);

json matrix_to_json(const PolyMatrix& m);
json ideal_to_json(const Ideal& ideal);
json result_to_json(const UnprojectionResult& r, bool show_work);

json load_json_file(const std::string& path);

}  // namespace kmu::io
