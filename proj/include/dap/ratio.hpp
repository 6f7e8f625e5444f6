#pragma once

#include "dap/construct.hpp"

namespace dap {

// Ratio points of collinear points, realized by ruler-construction chains
// (inverse, product, sum of points on the charted line). The scalar algebra
// is used only as a test oracle, never on this code path.

/// r(A:B) = B^{-1}·A as a point of the chart line. Requires B != O;
/// A = O (result O) and A = B (result I) are admissible.
Point ratio2(const Chart& ch, const Point& a, const Point& b, Trace* tr = nullptr);

/// r(A,B;C) = (B-C)^{-1}·(A-C). Requires B != C; A = C (result O) and
/// A = B (result I) are admissible.
Point ratio3(const Chart& ch, const Point& a, const Point& b, const Point& c,
             Trace* tr = nullptr);

/// The unique A with ratio2(A, B) = R, i.e. the point of B·R.
Point ratio2_solve(const Chart& ch, const Point& r, const Point& b, Trace* tr = nullptr);

/// X -> r(X:B) over the chart line; a bijection, inverted by solve().
class RatioMap2 {
 public:
  RatioMap2(Chart ch, Point b);
  Point operator()(const Point& x) const { return ratio2(ch_, x, b_); }
  Point solve(const Point& r) const { return ratio2_solve(ch_, r, b_); }
  const Chart& chart() const { return ch_; }
  const Point& b() const { return b_; }

 private:
  Chart ch_;
  Point b_;
};

/// X -> r(X,B;C) over the chart line; a bijection.
class RatioMap3 {
 public:
  RatioMap3(Chart ch, Point b, Point c);
  Point operator()(const Point& x) const { return ratio3(ch_, x, b_, c_); }
  /// Inverse: X = (B-C)·R + C.
  Point solve(const Point& r) const;
  const Chart& chart() const { return ch_; }

 private:
  Chart ch_;
  Point b_, c_;
};

inline RatioMap2 ratio_map2(const Chart& ch, const Point& b) { return {ch, b}; }
inline RatioMap3 ratio_map3(const Chart& ch, const Point& b, const Point& c) {
  return {ch, b, c};
}

}  // namespace dap
