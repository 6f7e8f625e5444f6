#pragma once

#include <optional>

#include "dap/geometry.hpp"
#include "dap/trace.hpp"

namespace dap {

/// A line with marked zero O and unit I (O != I). Carries the skew-field
/// structure the ruler constructions induce on the line's points.
struct Chart {
  Line line;
  Point origin;  // O
  Point unit;    // I

  static Chart make(const Point& o, const Point& i);

  /// Chart direction vector I - O.
  Point u() const { return unit - origin; }
  ModelConfig model() const { return origin.model(); }

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.line == b.line && a.origin == b.origin && a.unit == b.unit;
  }
};

/// The unique x with X = O + x·(I-O). Rejects points off the chart line.
Scalar chart_coordinate(const Chart& ch, const Point& x);
Point chart_point(const Chart& ch, const Scalar& x);

/// Deterministic admissible auxiliary point: first point off the chart line
/// in a seeded enumeration, so traces are reproducible.
Point default_aux(const Chart& ch, std::uint64_t seed = 0);

// Ruler-only constructions on a charted line. Inputs must lie on the chart
// line and the auxiliary point off it. Degenerate inputs (A = O, B = O, ...)
// flow through the same construction without special-casing. Pass a Trace to
// record every auxiliary point and line created.

/// C with coord(C) = coord(A) + coord(B).
Point geo_add(const Chart& ch, const Point& a, const Point& b, const Point& aux,
              Trace* tr = nullptr);
/// C with coord(C) = coord(A)·coord(B); A is the left factor.
Point geo_mul(const Chart& ch, const Point& a, const Point& b, const Point& aux,
              Trace* tr = nullptr);
/// N with geo_add(A, N) = O, by reversing the addition construction.
Point geo_neg(const Chart& ch, const Point& a, const Point& aux, Trace* tr = nullptr);
/// V with geo_mul(A, V) = I = geo_mul(V, A); A != O. Reverses multiplication.
Point geo_inv(const Chart& ch, const Point& a, const Point& aux, Trace* tr = nullptr);

struct Constructed {
  Point point;
  Trace trace;
};

// Spec-shaped wrappers: trace always recorded, aux defaults to default_aux.
Constructed geo_add_traced(const Chart& ch, const Point& a, const Point& b,
                           std::optional<Point> aux = std::nullopt);
Constructed geo_mul_traced(const Chart& ch, const Point& a, const Point& b,
                           std::optional<Point> aux = std::nullopt);
Constructed geo_neg_traced(const Chart& ch, const Point& a,
                           std::optional<Point> aux = std::nullopt);
Constructed geo_inv_traced(const Chart& ch, const Point& a,
                           std::optional<Point> aux = std::nullopt);

}  // namespace dap
