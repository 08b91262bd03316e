// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#include "zerocycle/json_io.hpp"

#include <fstream>
#include <sstream>

#include "zerocycle/errors.hpp"

namespace zc {
namespace {

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::vector<Rat> rat_vector(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of coefficient strings");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rat_from_json(e));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Json rat_to_json(const Rat& r) { return format_rat(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw ParseError("expected a rational as a string");
  return parse_rat(j.get<std::string>());
}

Json poly_to_json(const UniPoly& f) {
  Json a = Json::array();
  for (int i = 0; i <= f.degree(); ++i) a.push_back(rat_to_json(f.coeff(i)));
  if (f.is_zero()) a.push_back("0");
  return a;
}

UniPoly poly_from_json(const Json& j) { return UniPoly(rat_vector(j)); }

Json element_to_json(const FieldElement& a) {
  Json out = Json::array();
  for (const Rat& c : a.coeffs()) out.push_back(rat_to_json(c));
  return out;
}

FieldElement element_from_json(const FieldPtr& field, const Json& j) {
  std::vector<Rat> co = rat_vector(j);
  if (static_cast<int>(co.size()) != field->degree())
    throw ParseError("element has " + std::to_string(co.size()) +
                     " coefficients for a degree-" + std::to_string(field->degree()) +
                     " field");
  return field->element(std::move(co));
}

Json field_to_json(const NumberField& f) {
  return Json{{"poly", poly_to_json(f.defining_poly())}};
}

FieldPtr field_from_json(const Json& j, bool assert_irreducible) {
  return NumberField::create(poly_from_json(require_key(j, "poly")), assert_irreducible);
}

Json ec_point_to_json(const ECPoint& P) {
  if (P.inf) return Json{{"inf", true}};
  return Json{{"x", element_to_json(P.x)}, {"y", element_to_json(P.y)}};
}

ECPoint ec_point_from_json(const FieldPtr& field, const Json& j) {
  if (j.is_object() && j.contains("inf")) {
    if (j.at("inf").get<bool>()) return ECPoint::infinity();
    throw ParseError("\"inf\" must be true when present");
  }
  return ECPoint::affine(element_from_json(field, require_key(j, "x")),
                         element_from_json(field, require_key(j, "y")));
}

Json curve_to_json(const WeierstrassCurve& E) {
  return Json{{"a2", element_to_json(E.a2())},
              {"a4", element_to_json(E.a4())},
              {"a6", element_to_json(E.a6())}};
}

WeierstrassCurve curve_from_json(const FieldPtr& field, const Json& j) {
  return WeierstrassCurve::create(field,
                                  element_from_json(field, require_key(j, "a2")),
                                  element_from_json(field, require_key(j, "a4")),
                                  element_from_json(field, require_key(j, "a6")));
}

Json quartic_twist_to_json(const QuarticTwistCurve& C) {
  return Json{{"a", element_to_json(C.a)}, {"g", poly_to_json(C.g)}};
}

QuarticTwistCurve quartic_twist_from_json(const FieldPtr& field, const Json& j) {
  return make_quartic_twist(field, element_from_json(field, require_key(j, "a")),
                            poly_from_json(require_key(j, "g")));
}

Json biquadric_twist_to_json(const BiquadricTwistCurve& D) {
  return Json{{"a", element_to_json(D.a)},
              {"p", poly_to_json(D.p)},
              {"q", poly_to_json(D.q)}};
}

BiquadricTwistCurve biquadric_twist_from_json(const FieldPtr& field, const Json& j) {
  return make_biquadric_twist(field, element_from_json(field, require_key(j, "a")),
                              poly_from_json(require_key(j, "p")),
                              poly_from_json(require_key(j, "q")));
}

Json quartic_point_to_json(const QuarticPoint& P) {
  return Json{{"T", element_to_json(P.T)}, {"U", element_to_json(P.U)}};
}

QuarticPoint quartic_point_from_json(const FieldPtr& field, const Json& j) {
  return QuarticPoint{element_from_json(field, require_key(j, "T")),
                      element_from_json(field, require_key(j, "U"))};
}

Json biquadric_point_to_json(const BiquadricPoint& P) {
  return Json{{"X", element_to_json(P.X)},
              {"Y", element_to_json(P.Y)},
              {"Z", element_to_json(P.Z)}};
}

BiquadricPoint biquadric_point_from_json(const FieldPtr& field, const Json& j) {
  return BiquadricPoint{element_from_json(field, require_key(j, "X")),
                        element_from_json(field, require_key(j, "Y")),
                        element_from_json(field, require_key(j, "Z"))};
}

Json surface_to_json(const BiellipticSurface& S) {
  return Json{{"g", poly_to_json(S.g)}, {"p", poly_to_json(S.p)}, {"q", poly_to_json(S.q)}};
}

BiellipticSurface surface_from_json(const FieldPtr& field, const Json& j) {
  return BiellipticSurface::create(field, poly_from_json(require_key(j, "g")),
                                   poly_from_json(require_key(j, "p")),
                                   poly_from_json(require_key(j, "q")));
}

Json surface_point_to_json(const SurfacePoint& P) {
  return Json{{"model", P.model == SurfaceModel::A ? "A" : "B"},
              {"x", element_to_json(P.x)},
              {"y", element_to_json(P.y)},
              {"z", element_to_json(P.z)},
              {"t", element_to_json(P.t)},
              {"field", field_to_json(*P.x.field())}};
}

SurfacePoint surface_point_from_json(const Json& j) {
  return surface_point_from_json(field_from_json(require_key(j, "field")), j);
}

SurfacePoint surface_point_from_json(const FieldPtr& field, const Json& j) {
  const std::string model = require_key(j, "model").get<std::string>();
  if (model != "A" && model != "B") throw ParseError("model must be \"A\" or \"B\"");
  return SurfacePoint{model == "A" ? SurfaceModel::A : SurfaceModel::B,
                      element_from_json(field, require_key(j, "x")),
                      element_from_json(field, require_key(j, "y")),
                      element_from_json(field, require_key(j, "z")),
                      element_from_json(field, require_key(j, "t"))};
}

Json search_report_to_json(const SearchReport& r, bool include_elapsed) {
  Json points = Json::array();
  for (const auto& P : r.quartic_points) points.push_back(quartic_point_to_json(P));
  for (const auto& P : r.biquadric_points) points.push_back(biquadric_point_to_json(P));
  for (const auto& P : r.surface_points) points.push_back(surface_point_to_json(P));
  Json out{{"target", r.target},
           {"bounds", Json{{"coeff_bound", r.bounds.coeff_bound},
                           {"denom_bound", r.bounds.denom_bound}}},
           {"candidates_tested", r.candidates_tested},
           {"points_found", points},
           {"unknowns", r.unknowns},
           {"exhaustive", r.exhaustive}};
  if (include_elapsed) out["elapsed_seconds"] = r.elapsed_seconds;
  return out;
}

}  // namespace zc
