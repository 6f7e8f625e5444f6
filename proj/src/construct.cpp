#include "dap/construct.hpp"

#include "dap/sampling.hpp"

namespace dap {
namespace {

void require_on(const Chart& ch, const Point& p, const char* who) {
  if (!ch.line.contains(p)) {
    fail(Errc::OffLine, std::string(who) + " " + p.str() + " is not on the chart line");
  }
}

void require_aux(const Chart& ch, const Point& aux) {
  if (ch.line.contains(aux)) {
    fail(Errc::AuxOnLine, "auxiliary point " + aux.str() + " lies on the chart line");
  }
}

// Trace helpers; every recorded step carries the relations it asserts.
std::string put_point(Trace* tr, const std::string& hint, const Point& p, std::string op,
                      std::vector<std::string> inputs = {}, std::vector<TraceCheck> checks = {},
                      std::vector<std::string> args = {}) {
  if (!tr) return hint;
  return tr->add(hint, p, std::move(op), std::move(inputs), std::move(checks), std::move(args));
}

struct Ctx {
  const Chart& ch;
  Trace* tr;
  std::string lbl_o, lbl_i, lbl_line;

  explicit Ctx(const Chart& ch_, Trace* tr_) : ch(ch_), tr(tr_) {
    if (!tr) return;
    lbl_o = tr->add("O", ch.origin, "given");
    lbl_i = tr->add("I", ch.unit, "given");
    lbl_line = tr->add("ell", ch.line, "join", {lbl_o, lbl_i},
                       {{TraceCheck::Kind::On, lbl_o, "ell"}, {TraceCheck::Kind::On, lbl_i, "ell"}});
  }

  std::string line_join(const std::string& hint, const std::string& la, const Point& a,
                        const std::string& lb, const Point& b, Line& out) {
    out = join(a, b);
    if (!tr) return hint;
    return tr->add(hint, out, "join", {la, lb},
                   {{TraceCheck::Kind::On, la, hint}, {TraceCheck::Kind::On, lb, hint}});
  }

  std::string line_parallel(const std::string& hint, const std::string& lline, const Line& l,
                            const std::string& lpt, const Point& p, Line& out) {
    out = parallel_through(l, p);
    if (!tr) return hint;
    return tr->add(hint, out, "parallel", {lline, lpt},
                   {{TraceCheck::Kind::Parallel, hint, lline}, {TraceCheck::Kind::On, lpt, hint}});
  }

  std::string point_meet(const std::string& hint, const std::string& la, const Line& a,
                         const std::string& lb, const Line& b, Point& out) {
    MeetResult r = meet(a, b);
    if (!r.is_point()) fail(Errc::PreconditionViolated, "construction lines unexpectedly parallel");
    out = *r.point;
    if (!tr) return hint;
    return tr->add(hint, out, "meet", {la, lb},
                   {{TraceCheck::Kind::On, hint, la}, {TraceCheck::Kind::On, hint, lb}});
  }
};

// Fixes trace label names for the labeled working points when tracing; the
// names follow the construction figures (B1 auxiliary, P1 intersection).
}  // namespace

Chart Chart::make(const Point& o, const Point& i) {
  return Chart{join(o, i), o, i};  // join rejects o == i
}

Scalar chart_coordinate(const Chart& ch, const Point& x) {
  const Point u = ch.u();
  const Point delta = x - ch.origin;
  // delta = t·u; pivot on the first nonzero coordinate of u.
  Scalar t = Scalar::zero(ch.model());
  if (!u.x.is_zero()) {
    t = delta.x * u.x.inverse();
  } else {
    t = delta.y * u.y.inverse();
  }
  if (!(scale(t, u) == delta)) {
    fail(Errc::OffLine, "point " + x.str() + " is not on the chart line");
  }
  return t;
}

Point chart_point(const Chart& ch, const Scalar& x) { return ch.origin + scale(x, ch.u()); }

Point default_aux(const Chart& ch, std::uint64_t seed) {
  Rng rng(seed ^ 0x5eedULL);
  return sample_point_off(ch.line, rng);
}

Point geo_add(const Chart& ch, const Point& a, const Point& b, const Point& aux, Trace* tr) {
  require_on(ch, a, "summand");
  require_on(ch, b, "summand");
  require_aux(ch, aux);
  Ctx cx(ch, tr);
  const std::string la = put_point(tr, "A", a, "given");
  const std::string lb = put_point(tr, "B", b, "given");
  const std::string lb1 = put_point(tr, "B1", aux, "aux");
  if (tr) tr->mark_auxiliary(lb1);

  Line l_ob1, l1, l2, l_bb1, l3;
  Point p1, c;
  const std::string n_ob1 = cx.line_join("lOB1", cx.lbl_o, ch.origin, lb1, aux, l_ob1);
  const std::string n1 = cx.line_parallel("l1", cx.lbl_line, ch.line, lb1, aux, l1);
  const std::string n2 = cx.line_parallel("l2", n_ob1, l_ob1, la, a, l2);
  const std::string np1 = cx.point_meet("P1", n1, l1, n2, l2, p1);
  if (tr) tr->mark_auxiliary(np1);
  const std::string n_bb1 = cx.line_join("lBB1", lb, b, lb1, aux, l_bb1);
  const std::string n3 = cx.line_parallel("l3", n_bb1, l_bb1, np1, p1, l3);
  const std::string nc = cx.point_meet("C", n3, l3, cx.lbl_line, ch.line, c);
  if (tr) tr->set_result(nc);
  return c;
}

Point geo_mul(const Chart& ch, const Point& a, const Point& b, const Point& aux, Trace* tr) {
  require_on(ch, a, "factor");
  require_on(ch, b, "factor");
  require_aux(ch, aux);
  Ctx cx(ch, tr);
  const std::string la = put_point(tr, "A", a, "given");
  const std::string lb = put_point(tr, "B", b, "given");
  const std::string lb1 = put_point(tr, "B1", aux, "aux");
  if (tr) tr->mark_auxiliary(lb1);

  Line l_ib1, l_ob1, l4, l_bb1, l5;
  Point p1, c;
  const std::string n_ib1 = cx.line_join("lIB1", cx.lbl_i, ch.unit, lb1, aux, l_ib1);
  const std::string n_ob1 = cx.line_join("lOB1", cx.lbl_o, ch.origin, lb1, aux, l_ob1);
  const std::string n4 = cx.line_parallel("l4", n_ib1, l_ib1, la, a, l4);
  const std::string np1 = cx.point_meet("P1", n4, l4, n_ob1, l_ob1, p1);
  if (tr) tr->mark_auxiliary(np1);
  const std::string n_bb1 = cx.line_join("lBB1", lb, b, lb1, aux, l_bb1);
  const std::string n5 = cx.line_parallel("l5", n_bb1, l_bb1, np1, p1, l5);
  const std::string nc = cx.point_meet("C", n5, l5, cx.lbl_line, ch.line, c);
  if (tr) tr->set_result(nc);
  return c;
}

Point geo_neg(const Chart& ch, const Point& a, const Point& aux, Trace* tr) {
  require_on(ch, a, "point");
  require_aux(ch, aux);
  Ctx cx(ch, tr);
  const std::string la = put_point(tr, "A", a, "given");
  const std::string lb1 = put_point(tr, "B1", aux, "aux");
  if (tr) tr->mark_auxiliary(lb1);

  // P1 as in the addition construction, then transport line O-P1 back to B1.
  Line l_ob1, l1, l2, l_op1, l6;
  Point p1, n;
  const std::string n_ob1 = cx.line_join("lOB1", cx.lbl_o, ch.origin, lb1, aux, l_ob1);
  const std::string n1 = cx.line_parallel("l1", cx.lbl_line, ch.line, lb1, aux, l1);
  const std::string n2 = cx.line_parallel("l2", n_ob1, l_ob1, la, a, l2);
  const std::string np1 = cx.point_meet("P1", n1, l1, n2, l2, p1);
  if (tr) tr->mark_auxiliary(np1);
  const std::string n_op1 = cx.line_join("lOP1", cx.lbl_o, ch.origin, np1, p1, l_op1);
  const std::string n6 = cx.line_parallel("l6", n_op1, l_op1, lb1, aux, l6);
  const std::string nn = cx.point_meet("N", n6, l6, cx.lbl_line, ch.line, n);
  if (tr) tr->set_result(nn);
  return n;
}

Point geo_inv(const Chart& ch, const Point& a, const Point& aux, Trace* tr) {
  require_on(ch, a, "point");
  if (a == ch.origin) fail(Errc::ZeroPoint, "the zero point has no inverse");
  require_aux(ch, aux);
  Ctx cx(ch, tr);
  const std::string la = put_point(tr, "A", a, "given");
  const std::string lb1 = put_point(tr, "B1", aux, "aux");
  if (tr) tr->mark_auxiliary(lb1);

  // P1 as in the multiplication construction, then transport line I-P1 to B1.
  Line l_ib1, l_ob1, l4, l_ip1, l7;
  Point p1, v;
  const std::string n_ib1 = cx.line_join("lIB1", cx.lbl_i, ch.unit, lb1, aux, l_ib1);
  const std::string n_ob1 = cx.line_join("lOB1", cx.lbl_o, ch.origin, lb1, aux, l_ob1);
  const std::string n4 = cx.line_parallel("l4", n_ib1, l_ib1, la, a, l4);
  const std::string np1 = cx.point_meet("P1", n4, l4, n_ob1, l_ob1, p1);
  if (tr) tr->mark_auxiliary(np1);
  const std::string n_ip1 = cx.line_join("lIP1", cx.lbl_i, ch.unit, np1, p1, l_ip1);
  const std::string n7 = cx.line_parallel("l7", n_ip1, l_ip1, lb1, aux, l7);
  const std::string nv = cx.point_meet("V", n7, l7, cx.lbl_line, ch.line, v);
  if (tr) tr->set_result(nv);
  return v;
}

namespace {
Point aux_or_default(const Chart& ch, const std::optional<Point>& aux) {
  return aux ? *aux : default_aux(ch);
}
}  // namespace

Constructed geo_add_traced(const Chart& ch, const Point& a, const Point& b,
                           std::optional<Point> aux) {
  Trace tr(ch.model());
  Point c = geo_add(ch, a, b, aux_or_default(ch, aux), &tr);
  return {c, std::move(tr)};
}

Constructed geo_mul_traced(const Chart& ch, const Point& a, const Point& b,
                           std::optional<Point> aux) {
  Trace tr(ch.model());
  Point c = geo_mul(ch, a, b, aux_or_default(ch, aux), &tr);
  return {c, std::move(tr)};
}

Constructed geo_neg_traced(const Chart& ch, const Point& a, std::optional<Point> aux) {
  Trace tr(ch.model());
  Point c = geo_neg(ch, a, aux_or_default(ch, aux), &tr);
  return {c, std::move(tr)};
}

Constructed geo_inv_traced(const Chart& ch, const Point& a, std::optional<Point> aux) {
  Trace tr(ch.model());
  Point c = geo_inv(ch, a, aux_or_default(ch, aux), &tr);
  return {c, std::move(tr)};
}

}  // namespace dap
