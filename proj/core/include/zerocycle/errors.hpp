// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace zc {

// Root of the library exception hierarchy.  Everything we throw on purpose
// derives from this, so callers can catch zc::Error at the CLI boundary and
// map it to an exit code.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad literals, bad JSON shapes, bad CLI values.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// A mathematical precondition failed (the input is well-formed but the
// requested operation does not apply to it).
struct MathError : Error {
  explicit MathError(const std::string& what) : Error(what) {}
};

struct NotMonic : MathError {
  explicit NotMonic(const std::string& what = "defining polynomial must be monic")
      : MathError(what) {}
};

struct ReducibleDetected : MathError {
  explicit ReducibleDetected(const std::string& what) : MathError(what) {}
};

struct FieldMismatch : MathError {
  explicit FieldMismatch(const std::string& what = "elements belong to different fields")
      : MathError(what) {}
};

struct DivisionByZero : MathError {
  explicit DivisionByZero(const std::string& what = "division by zero")
      : MathError(what) {}
};

// Reduction at a prime site is undefined (prime divides a denominator, or the
// site does not match the field).
struct BadReduction : MathError {
  explicit BadReduction(const std::string& what) : MathError(what) {}
};

struct BadSite : MathError {
  explicit BadSite(const std::string& what) : MathError(what) {}
};

struct SingularQuartic : MathError {
  explicit SingularQuartic(const std::string& what = "quartic has a repeated root")
      : MathError(what) {}
};

struct SingularCurve : MathError {
  explicit SingularCurve(const std::string& what = "curve is singular")
      : MathError(what) {}
};

struct PointNotOnCurve : MathError {
  explicit PointNotOnCurve(const std::string& what = "point does not satisfy the curve equation")
      : MathError(what) {}
};

// Raised when an operation that requires an infinite-order point meets a
// torsion point; carries the detected order.
struct TorsionDetected : MathError {
  int order;
  explicit TorsionDetected(int n)
      : MathError("point has finite order " + std::to_string(n)), order(n) {}
};

struct DegreeMismatch : MathError {
  explicit DegreeMismatch(const std::string& what) : MathError(what) {}
};

// The requested surface point lies on the branch locus, where the double
// covers degenerate and the fibration maps are undefined.
struct BranchLocus : MathError {
  explicit BranchLocus(const std::string& what = "point lies on the branch locus")
      : MathError(what) {}
};

struct ZeroTwist : MathError {
  explicit ZeroTwist(const std::string& what = "twist parameter must be nonzero")
      : MathError(what) {}
};

// An exact square root was requested of a certified non-square.
struct NotASquare : MathError {
  explicit NotASquare(const std::string& what = "element is not a square")
      : MathError(what) {}
};

// The layered square decision procedure ran out of budget without reaching a
// certificate either way.  Retry with a larger --precision-budget.
struct SqrtBudgetExceeded : MathError {
  explicit SqrtBudgetExceeded(const std::string& what =
                                  "square root search exhausted its precision budget")
      : MathError(what) {}
};

}  // namespace zc
