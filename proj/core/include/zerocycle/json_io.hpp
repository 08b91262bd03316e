// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <json.hpp>

#include "zerocycle/curves.hpp"
#include "zerocycle/numberfield.hpp"
#include "zerocycle/search.hpp"
#include "zerocycle/surface.hpp"

namespace zc {

using Json = nlohmann::json;

// Wrappers that turn nlohmann/file failures into ParseError.
Json parse_json(const std::string& text);
Json load_json_file(const std::string& path);

// Coefficient vectors serialize as arrays of exact strings, constant term
// first, each "num" or "num/den" in lowest terms.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json poly_to_json(const UniPoly& f);
UniPoly poly_from_json(const Json& j);

Json element_to_json(const FieldElement& a);
FieldElement element_from_json(const FieldPtr& field, const Json& j);

// {"poly": ["1","1","0","1"]}
Json field_to_json(const NumberField& f);
FieldPtr field_from_json(const Json& j, bool assert_irreducible = false);

// {"inf": true} or {"x": [...], "y": [...]}
Json ec_point_to_json(const ECPoint& P);
ECPoint ec_point_from_json(const FieldPtr& field, const Json& j);

// {"a2": [...], "a4": [...], "a6": [...]}
Json curve_to_json(const WeierstrassCurve& E);
WeierstrassCurve curve_from_json(const FieldPtr& field, const Json& j);

// {"a": [...], "g": [...]} and {"a": [...], "p": [...], "q": [...]}
Json quartic_twist_to_json(const QuarticTwistCurve& C);
QuarticTwistCurve quartic_twist_from_json(const FieldPtr& field, const Json& j);
Json biquadric_twist_to_json(const BiquadricTwistCurve& D);
BiquadricTwistCurve biquadric_twist_from_json(const FieldPtr& field, const Json& j);

// {"T": [...], "U": [...]} and {"X": [...], "Y": [...], "Z": [...]}
Json quartic_point_to_json(const QuarticPoint& P);
QuarticPoint quartic_point_from_json(const FieldPtr& field, const Json& j);
Json biquadric_point_to_json(const BiquadricPoint& P);
BiquadricPoint biquadric_point_from_json(const FieldPtr& field, const Json& j);

// {"g": [...], "p": [...], "q": [...]}; the field is supplied by the caller.
Json surface_to_json(const BiellipticSurface& S);
BiellipticSurface surface_from_json(const FieldPtr& field, const Json& j);

// {"model": "A", "x": [...], "y": [...], "z": [...], "t": [...],
//  "field": {...}} — the field rides along so point files are self-contained.
Json surface_point_to_json(const SurfacePoint& P);
SurfacePoint surface_point_from_json(const Json& j);
SurfacePoint surface_point_from_json(const FieldPtr& field, const Json& j);

// Search report; elapsed is opt-in so reports stay byte-identical across
// worker counts and machines.
Json search_report_to_json(const SearchReport& r, bool include_elapsed = false);

}  // namespace zc
