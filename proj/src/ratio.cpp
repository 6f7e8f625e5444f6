#include "dap/ratio.hpp"

namespace dap {
namespace {

void require_on_line(const Chart& ch, const Point& p) {
  if (!ch.line.contains(p)) {
    fail(Errc::OffLine, "ratio operand " + p.str() + " is not on the chart line");
  }
}

}  // namespace

Point ratio2(const Chart& ch, const Point& a, const Point& b, Trace* tr) {
  require_on_line(ch, a);
  require_on_line(ch, b);
  if (b == ch.origin) fail(Errc::ZeroDenominator, "ratio2 requires B != O");
  const Point aux = default_aux(ch);
  const Point b_inv = geo_inv(ch, b, aux, tr);
  return geo_mul(ch, b_inv, a, aux, tr);  // B^{-1} is the left factor
}

Point ratio3(const Chart& ch, const Point& a, const Point& b, const Point& c, Trace* tr) {
  require_on_line(ch, a);
  require_on_line(ch, b);
  require_on_line(ch, c);
  if (b == c) fail(Errc::CoincidentBC, "ratio3 requires B != C");
  const Point aux = default_aux(ch);
  const Point neg_c = geo_neg(ch, c, aux, tr);
  const Point a_minus_c = geo_add(ch, a, neg_c, aux, tr);
  const Point b_minus_c = geo_add(ch, b, neg_c, aux, tr);
  const Point denom_inv = geo_inv(ch, b_minus_c, aux, tr);
  return geo_mul(ch, denom_inv, a_minus_c, aux, tr);
}

Point ratio2_solve(const Chart& ch, const Point& r, const Point& b, Trace* tr) {
  require_on_line(ch, r);
  require_on_line(ch, b);
  if (b == ch.origin) fail(Errc::ZeroDenominator, "ratio2_solve requires B != O");
  const Point aux = default_aux(ch);
  return geo_mul(ch, b, r, aux, tr);  // A = B·R
}

RatioMap2::RatioMap2(Chart ch, Point b) : ch_(std::move(ch)), b_(std::move(b)) {
  require_on_line(ch_, b_);
  if (b_ == ch_.origin) fail(Errc::ZeroDenominator, "ratio map requires B != O");
}

RatioMap3::RatioMap3(Chart ch, Point b, Point c)
    : ch_(std::move(ch)), b_(std::move(b)), c_(std::move(c)) {
  require_on_line(ch_, b_);
  require_on_line(ch_, c_);
  if (b_ == c_) fail(Errc::CoincidentBC, "ratio map requires B != C");
}

Point RatioMap3::solve(const Point& r) const {
  require_on_line(ch_, r);
  const Point aux = default_aux(ch_);
  const Point neg_c = geo_neg(ch_, c_, aux);
  const Point b_minus_c = geo_add(ch_, b_, neg_c, aux);
  const Point prod = geo_mul(ch_, b_minus_c, r, aux);
  return geo_add(ch_, prod, c_, aux);
}

}  // namespace dap
