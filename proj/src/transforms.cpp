#include "dap/transforms.hpp"

#include <sstream>

namespace dap {
namespace {

void require_on_chart(const Chart& ch, const Point& p, const char* who) {
  if (!ch.line.contains(p)) {
    fail(Errc::PreconditionViolated,
         std::string(who) + " " + p.str() + " is not on the chart line");
  }
}

}  // namespace

LineTransform LineTransform::inversion(Chart ch, Point p) {
  require_on_chart(ch, p, "inversion point");
  if (p == ch.origin) fail(Errc::PreconditionViolated, "inversion requires P != O");
  LineTransform t(Kind::Inversion, std::move(ch));
  t.params_.push_back(std::move(p));
  return t;
}

LineTransform LineTransform::natural_translation(Chart ch, Point p) {
  require_on_chart(ch, p, "translation point");
  LineTransform t(Kind::NaturalTranslation, std::move(ch));
  t.params_.push_back(std::move(p));
  return t;
}

LineTransform LineTransform::natural_dilatation(Chart ch, unsigned n) {
  if (n < 1) fail(Errc::BadNatural, "natural dilatation requires n >= 1");
  if (nat_multiple(n, Scalar::one(ch.model())).is_zero()) {
    fail(Errc::PreconditionViolated,
         "natural dilatation with n = " + std::to_string(n) + " collapses: n·I = O");
  }
  LineTransform t(Kind::NaturalDilatation, std::move(ch));
  t.n_ = n;
  return t;
}

LineTransform LineTransform::mobius2(Chart ch, Point b) {
  require_on_chart(ch, b, "mobius parameter");
  if (b == ch.origin) fail(Errc::PreconditionViolated, "mobius2 requires B != O");
  LineTransform t(Kind::Mobius2, std::move(ch));
  t.params_.push_back(std::move(b));
  return t;
}

LineTransform LineTransform::mobius3(Chart ch, Point b, Point c) {
  require_on_chart(ch, b, "mobius parameter");
  require_on_chart(ch, c, "mobius parameter");
  if (b == c) fail(Errc::PreconditionViolated, "mobius3 requires B != C");
  LineTransform t(Kind::Mobius3, std::move(ch));
  t.params_.push_back(std::move(b));
  t.params_.push_back(std::move(c));
  return t;
}

Point LineTransform::apply(const Point& x) const {
  require_on_chart(ch_, x, "transform argument");
  const Point aux = default_aux(ch_);
  switch (kind_) {
    case Kind::Inversion:
      return geo_mul(ch_, params_[0], x, aux);  // P·X
    case Kind::NaturalTranslation:
      return geo_add(ch_, params_[0], x, aux);
    case Kind::NaturalDilatation: {
      Point acc = x;
      for (unsigned i = 1; i < n_; ++i) acc = geo_add(ch_, acc, x, aux);
      return acc;
    }
    case Kind::Mobius2:
      return ratio2(ch_, x, params_[0]);
    case Kind::Mobius3:
      return ratio3(ch_, x, params_[0], params_[1]);
  }
  fail(Errc::PreconditionViolated, "bad transform kind");
}

PlaneMap PlaneMap::translation(Point v) { return PlaneMap(Kinds(Translation{std::move(v)})); }

PlaneMap PlaneMap::dilatation(Point center, Scalar factor) {
  if (factor.is_zero()) fail(Errc::PreconditionViolated, "dilatation factor must be nonzero");
  return PlaneMap(Kinds(Dilatation{std::move(center), std::move(factor)}));
}

PlaneMap PlaneMap::parallel_projection(Line source, Line target, Line direction) {
  if (is_parallel(direction, source) || is_parallel(direction, target)) {
    fail(Errc::PreconditionViolated,
         "projection direction must not be parallel to source or target");
  }
  return PlaneMap(Kinds(Projection{std::move(source), std::move(target), std::move(direction)}));
}

Point PlaneMap::apply(const Point& x) const {
  if (const auto* t = std::get_if<Translation>(&kind_)) return x + t->v;
  if (const auto* d = std::get_if<Dilatation>(&kind_)) {
    return d->center + scale(d->factor, x - d->center);
  }
  if (const auto* p = std::get_if<Projection>(&kind_)) {
    if (!p->source.contains(x)) {
      fail(Errc::PreconditionViolated, "projection argument " + x.str() + " is off the source line");
    }
    MeetResult r = meet(parallel_through(p->direction, x), p->target);
    if (!r.is_point()) fail(Errc::DegenerateImage, "projection connector misses the target");
    return *r.point;
  }
  const auto& chain = std::get<Composed>(kind_).maps;
  Point acc = x;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) acc = it->apply(acc);
  return acc;
}

Line PlaneMap::apply_line(const Line& l) const {
  if (const auto* p = std::get_if<Projection>(&kind_)) {
    if (l != p->source) {
      fail(Errc::DegenerateImage, "projection maps only its source line to a line");
    }
    return p->target;
  }
  // Translations/dilatations (and their compositions) send l to the line
  // through the images of two of its points.
  const Point a = l.base();
  const Point b = l.at(Scalar::one(l.model()));
  return join(apply(a), apply(b));
}

std::string PlaneMap::str() const {
  std::ostringstream os;
  if (const auto* t = std::get_if<Translation>(&kind_)) {
    os << "translation" << t->v.str();
  } else if (const auto* d = std::get_if<Dilatation>(&kind_)) {
    os << "dilatation(center " << d->center.str() << ", factor " << d->factor.str() << ")";
  } else if (std::holds_alternative<Projection>(kind_)) {
    os << "parallel-projection";
  } else {
    os << "composed[";
    const auto& chain = std::get<Composed>(kind_).maps;
    for (std::size_t i = 0; i < chain.size(); ++i) os << (i ? " . " : "") << chain[i].str();
    os << "]";
  }
  return os.str();
}

PlaneMap compose_plane_maps(const PlaneMap& outer, const PlaneMap& inner) {
  // Affine pairs simplify: both kinds have the form X -> f·X + t.
  const bool affine = (outer.is_translation() || outer.is_dilatation()) &&
                      (inner.is_translation() || inner.is_dilatation());
  if (!affine) {
    return PlaneMap(PlaneMap::Kinds(PlaneMap::Composed{{outer, inner}}));
  }
  const ModelConfig m = outer.is_translation() ? outer.translation_data().v.model()
                                               : outer.dilatation_data().center.model();
  const Scalar one = Scalar::one(m);
  const Scalar f_outer = outer.is_dilatation() ? outer.dilatation_data().factor : one;
  const Scalar f_inner = inner.is_dilatation() ? inner.dilatation_data().factor : one;
  const Scalar f = f_outer * f_inner;
  const Point origin{Scalar::zero(m), Scalar::zero(m)};
  const Point t = outer.apply(inner.apply(origin));
  if (f == one) return PlaneMap::translation(t);
  // Fixed point: F = (1 - f)^{-1}·t.
  const Point center = scale((one - f).inverse(), t);
  return PlaneMap::dilatation(center, f);
}

Chart image_chart(const PlaneMap& m, const Chart& ch) {
  const Point o2 = m.apply(ch.origin);
  const Point i2 = m.apply(ch.unit);
  if (o2 == i2) fail(Errc::DegenerateImage, "image chart collapses: m(O) = m(I)");
  return Chart::make(o2, i2);
}

bool check_invariance_2(const LineTransform& t, const Point& a, const Point& b) {
  const Chart& ch = t.chart();
  if (b == ch.origin) fail(Errc::PreconditionViolated, "ratio2 requires B != O");
  const Point ta = t.apply(a);
  const Point tb = t.apply(b);
  if (tb == ch.origin) {
    fail(Errc::PreconditionViolated, "transformed pair leaves ratio2 undefined: t(B) = O");
  }
  return ratio2(ch, ta, tb) == ratio2(ch, a, b);
}

bool check_invariance_3(const LineTransform& t, const Point& a, const Point& b, const Point& c) {
  const Chart& ch = t.chart();
  if (b == c) fail(Errc::PreconditionViolated, "ratio3 requires B != C");
  const Point ta = t.apply(a);
  const Point tb = t.apply(b);
  const Point tc = t.apply(c);
  if (tb == tc) {
    fail(Errc::PreconditionViolated, "transformed triple leaves ratio3 undefined: t(B) = t(C)");
  }
  return ratio3(ch, ta, tb, tc) == ratio3(ch, a, b, c);
}

bool check_relation_2to3(const Chart& ch, const Point& p, const Point& a, const Point& b) {
  if (b == ch.origin) fail(Errc::PreconditionViolated, "ratio2 requires B != O");
  const LineTransform shift = LineTransform::natural_translation(ch, p);
  return ratio2(ch, a, b) == ratio3(ch, shift.apply(a), shift.apply(b), p);
}

bool check_preservation2(const PlaneMap& m, const Chart& ch, const Point& a, const Point& b) {
  const Point r = ratio2(ch, a, b);
  const Chart ch2 = image_chart(m, ch);
  return m.apply(r) == ratio2(ch2, m.apply(a), m.apply(b));
}

bool check_preservation3(const PlaneMap& m, const Chart& ch, const Point& a, const Point& b,
                         const Point& c) {
  const Point r = ratio3(ch, a, b, c);
  const Chart ch2 = image_chart(m, ch);
  return m.apply(r) == ratio3(ch2, m.apply(a), m.apply(b), m.apply(c));
}

}  // namespace dap
