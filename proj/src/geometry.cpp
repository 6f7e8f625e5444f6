#include "dap/geometry.hpp"

#include <cassert>
#include <sstream>

#include "dap/sampling.hpp"

namespace dap {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point scale(const Scalar& t, const Point& v) { return {t * v.x, t * v.y}; }

Line Line::through(const Point& base, const Point& dir) {
  const ModelConfig m = base.model();
  if (dir.x.is_zero() && dir.y.is_zero()) fail(Errc::ZeroDirection, "line direction is zero");
  Point d = dir, b = base;
  if (!dir.x.is_zero()) {
    // dir -> (1, x^{-1}·y), then slide base to x = 0.
    d = {Scalar::one(m), dir.x.inverse() * dir.y};
    b = base + scale(-base.x, d);
  } else {
    d = {Scalar::zero(m), Scalar::one(m)};
    b = {base.x, Scalar::zero(m)};
  }
  return Line(std::move(b), std::move(d));
}

std::optional<Scalar> Line::param_of(const Point& p) const {
  // Solve p = base + t·dir, pivoting on the first nonzero dir coordinate.
  const Point delta = p - base_;
  if (!dir_.x.is_zero()) {
    Scalar t = delta.x * dir_.x.inverse();
    if (t * dir_.y == delta.y) return t;
    return std::nullopt;
  }
  if (!delta.x.is_zero()) return std::nullopt;
  return delta.y * dir_.y.inverse();
}

Line join(const Point& p, const Point& q) {
  if (p == q) fail(Errc::CoincidentPoints, "join requires two distinct points, got " + p.str());
  return Line::through(p, q - p);
}

Line parallel_through(const Line& l, const Point& p) { return Line::through(p, l.dir()); }

bool is_parallel(const Line& a, const Line& b) {
  // Canonical directions make left-proportionality structural equality.
  return a.dir() == b.dir();
}

bool collinear(const Point& a, const Point& b, const Point& c) {
  if (a == b || b == c || a == c) return true;
  return join(a, b).contains(c);
}

MeetResult meet(const Line& a, const Line& b) {
  if (is_parallel(a, b)) {
    return {a == b ? MeetResult::Kind::Identical : MeetResult::Kind::Parallel, std::nullopt};
  }
  // a.base + s·a.dir = b.base + t·b.dir. With unknowns multiplying from the
  // left, eliminate s via the first invertible coordinate of a.dir:
  //   s·ad_i - t·bd_i = r_i  =>  s = (r_i + t·bd_i)·ad_i^{-1}
  //   t·(bd_i·k·ad_j - bd_j) = r_j - r_i·k·ad_j,   k = ad_i^{-1}
  const Point r = b.base() - a.base();
  const bool pivot_x = !a.dir().x.is_zero();
  const Scalar ad_i = pivot_x ? a.dir().x : a.dir().y;
  const Scalar ad_j = pivot_x ? a.dir().y : a.dir().x;
  const Scalar bd_i = pivot_x ? b.dir().x : b.dir().y;
  const Scalar bd_j = pivot_x ? b.dir().y : b.dir().x;
  const Scalar r_i = pivot_x ? r.x : r.y;
  const Scalar r_j = pivot_x ? r.y : r.x;

  const Scalar k = ad_i.inverse();
  const Scalar m = bd_i * k * ad_j - bd_j;  // nonzero: lines are not parallel
  const Scalar t = (r_j - r_i * k * ad_j) * m.inverse();
  const Point x = b.at(t);
  assert(a.contains(x) && b.contains(x));
  return {MeetResult::Kind::Point, x};
}

// -- axiom checking ------------------------------------------------------

std::string AxiomReport::str() const {
  std::ostringstream os;
  os << "model " << model.name() << "  scope " << scope;
  if (points_counted) os << "  points " << points_counted;
  if (lines_counted) os << "  lines " << lines_counted;
  os << "  violations " << violations.size();
  for (const auto& v : violations) os << "\n  " << v;
  return os.str();
}

std::vector<Line> all_lines(const ModelConfig& m) {
  std::vector<Line> lines;
  const Point origin{Scalar::zero(m), Scalar::zero(m)};
  for (std::uint32_t slope = 0; slope < m.p; ++slope) {
    for (std::uint32_t b = 0; b < m.p; ++b) {
      lines.push_back(Line::through({Scalar::zero(m), Scalar::gf(m.p, b)},
                                    {Scalar::one(m), Scalar::gf(m.p, slope)}));
    }
  }
  for (std::uint32_t c = 0; c < m.p; ++c) {
    lines.push_back(Line::through({Scalar::gf(m.p, c), Scalar::zero(m)},
                                  {Scalar::zero(m), Scalar::one(m)}));
  }
  (void)origin;
  return lines;
}

namespace {

std::vector<Point> all_points(const ModelConfig& m) {
  std::vector<Point> pts;
  for (std::uint32_t x = 0; x < m.p; ++x) {
    for (std::uint32_t y = 0; y < m.p; ++y) {
      pts.push_back({Scalar::gf(m.p, x), Scalar::gf(m.p, y)});
    }
  }
  return pts;
}

std::string certificate(const ModelConfig& m, const std::string& clause,
                        std::initializer_list<std::string> objs) {
  std::string out = "model " + m.name() + " violates " + clause + ":";
  for (const auto& o : objs) out += " " + o;
  return out;
}

}  // namespace

AxiomReport check_axioms_exhaustive(const ModelConfig& m) {
  if (m.kind != ModelKind::Gf) {
    fail(Errc::ScopeTooLarge, "exhaustive axiom check requires a finite model");
  }
  if (m.p > 13) fail(Errc::ScopeTooLarge, "exhaustive axiom check supports p <= 13");

  AxiomReport rep{m, "exhaustive"};
  const auto pts = all_points(m);
  const auto lines = all_lines(m);
  rep.points_counted = pts.size();
  rep.lines_counted = lines.size();

  // 1: each distinct pair lies on exactly one line.
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      int count = 0;
      for (const Line& l : lines) {
        if (l.contains(pts[i]) && l.contains(pts[j])) ++count;
      }
      if (count != 1) {
        rep.violations.push_back(certificate(
            m, "unique-join (found " + std::to_string(count) + " lines)",
            {pts[i].str(), pts[j].str()}));
      }
    }
  }
  // 2: Playfair — for p not on l, exactly one line through p missing l.
  for (const Line& l : lines) {
    for (const Point& p : pts) {
      if (l.contains(p)) continue;
      int count = 0;
      for (const Line& l2 : lines) {
        if (l2.contains(p) && !meet(l, l2).is_point() && l2 != l) ++count;
      }
      if (count != 1) {
        rep.violations.push_back(certificate(
            m, "playfair (found " + std::to_string(count) + " parallels)", {p.str(), l.str()}));
      }
    }
  }
  // 3: a non-collinear triple exists.
  const Point o{Scalar::zero(m), Scalar::zero(m)};
  const Point e1{Scalar::one(m), Scalar::zero(m)};
  const Point e2{Scalar::zero(m), Scalar::one(m)};
  if (collinear(o, e1, e2)) {
    rep.violations.push_back(certificate(m, "non-collinear-triple", {o.str(), e1.str(), e2.str()}));
  }
  return rep;
}

AxiomReport check_axioms_sampled(const ModelConfig& m, unsigned trials, std::uint64_t seed) {
  AxiomReport rep{m, "sampled(n=" + std::to_string(trials) + ",seed=" + std::to_string(seed) + ")"};
  Rng rng(seed);
  for (unsigned i = 0; i < trials; ++i) {
    switch (i % 3) {
      case 0: {  // unique join: l contains both; any sampled line through both equals l
        Point p = sample_point(m, rng);
        Point q = sample_point_ne(m, rng, p);
        Line l = join(p, q);
        if (!l.contains(p) || !l.contains(q)) {
          rep.violations.push_back(certificate(m, "join-incidence", {p.str(), q.str()}));
        }
        if (Line::through(q, p - q) != l) {
          rep.violations.push_back(certificate(m, "unique-join", {p.str(), q.str()}));
        }
        break;
      }
      case 1: {  // Playfair: parallel through p exists, is parallel, and is unique
        Line l = sample_line(m, rng);
        Point p = sample_point(m, rng);
        Line par = parallel_through(l, p);
        bool same = l.contains(p);
        if (!par.contains(p) || !is_parallel(par, l) || (same != (par == l)) ||
            (!same && meet(par, l).is_point())) {
          rep.violations.push_back(certificate(m, "playfair-existence", {p.str(), l.str()}));
        }
        Line par2 = Line::through(p, scale(sample_nonzero(m, rng), l.dir()));
        if (par2 != par) {
          rep.violations.push_back(certificate(m, "playfair-uniqueness", {p.str(), l.str()}));
        }
        break;
      }
      default: {  // a non-collinear triple exists
        const Point o{Scalar::zero(m), Scalar::zero(m)};
        const Point e1{Scalar::one(m), Scalar::zero(m)};
        const Point e2{Scalar::zero(m), Scalar::one(m)};
        if (collinear(o, e1, e2)) {
          rep.violations.push_back(certificate(m, "non-collinear-triple", {}));
        }
        break;
      }
    }
  }
  return rep;
}

// -- Desargues configurations ---------------------------------------------

void validate_desargues(const DesarguesConfig& cfg) {
  const auto bad = [](const std::string& why) {
    fail(Errc::MalformedConfig, "Desargues configuration: " + why);
  };
  if (cfg.a == cfg.b || cfg.b == cfg.c || cfg.a == cfg.c) bad("vertices A,B,C not distinct");
  if (cfg.a2 == cfg.b2 || cfg.b2 == cfg.c2 || cfg.a2 == cfg.c2) {
    bad("vertices A',B',C' not distinct");
  }
  if (cfg.a == cfg.a2 || cfg.b == cfg.b2 || cfg.c == cfg.c2) bad("a connector degenerates");

  const Line ca = join(cfg.a, cfg.a2);
  const Line cb = join(cfg.b, cfg.b2);
  const Line cc = join(cfg.c, cfg.c2);
  if (ca == cb || cb == cc || ca == cc) bad("connectors not pairwise distinct");
  if (cfg.axis == DesarguesAxis::Parallel) {
    if (!is_parallel(ca, cb) || !is_parallel(cb, cc)) bad("connectors not parallel");
  } else {
    if (!cfg.center) bad("concurrent axis requires a center");
    if (!ca.contains(*cfg.center) || !cb.contains(*cfg.center) || !cc.contains(*cfg.center)) {
      bad("connectors do not pass through the center");
    }
  }

  const Line ab = join(cfg.a, cfg.b), ab2 = join(cfg.a2, cfg.b2);
  const Line bc = join(cfg.b, cfg.c), bc2 = join(cfg.b2, cfg.c2);
  if (!is_parallel(ab, ab2) || ab == ab2) bad("AB side pair not distinct parallels");
  if (!is_parallel(bc, bc2) || bc == bc2) bad("BC side pair not distinct parallels");
}

bool check_desargues(const DesarguesConfig& cfg) {
  validate_desargues(cfg);
  return is_parallel(join(cfg.a, cfg.c), join(cfg.a2, cfg.c2));
}

DesarguesConfig sample_desargues_config(const ModelConfig& m, DesarguesAxis axis,
                                        std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    try {
      Point a = sample_point(m, rng);
      Point b = sample_point_ne(m, rng, a);
      Point c = sample_point(m, rng);
      if (collinear(a, b, c)) continue;

      DesarguesConfig cfg;
      cfg.a = a;
      cfg.b = b;
      cfg.c = c;
      cfg.axis = axis;
      if (axis == DesarguesAxis::Parallel) {
        // Shared connector direction forces B' = B + v, C' = C + v.
        Point v = sample_point(m, rng);
        if (v.x.is_zero() && v.y.is_zero()) continue;
        cfg.a2 = a + v;
        cfg.b2 = b + v;
        cfg.c2 = c + v;
      } else {
        Point center = sample_point(m, rng);
        if (collinear(center, a, b) || collinear(center, b, c) || collinear(center, a, c)) {
          continue;
        }
        Scalar f = sample_nonzero(m, rng);
        if (f.is_one()) continue;
        cfg.center = center;
        cfg.a2 = center + scale(f, a - center);
        cfg.b2 = center + scale(f, b - center);
        cfg.c2 = center + scale(f, c - center);
      }
      validate_desargues(cfg);
      return cfg;
    } catch (const Error&) {
      continue;  // degenerate draw, retry
    }
  }
  fail(Errc::GeneratorExhausted, "no admissible Desargues configuration after 64 attempts");
}

}  // namespace dap
