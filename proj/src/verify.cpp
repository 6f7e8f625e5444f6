#include "dap/verify.hpp"

#include <functional>
#include <sstream>

#include "dap/sampling.hpp"

namespace dap {
namespace {

const std::vector<std::string> kIds = {
    "inv2.natdil", "inv2.inversion", "inv2.mobius",  "inv3.nattrans", "inv3.natdil",
    "inv3.inversion", "inv3.mobius", "rel.2to3",     "pres2.pproj",   "pres2.trans",
    "pres2.dil",   "pres3.trans",   "pres3.pproj",   "pres3.dil",
};

const std::vector<std::string> kDilCases = {"center=O", "center-on-line", "center-off-line"};
const std::vector<std::string> kProjCases = {"intersecting", "parallel"};

struct Counter {
  TheoremRun* run;

  void check(bool ok, const std::function<std::string()>& detail) {
    ++run->checks;
    if (!ok) {
      ++run->failures;
      if (run->first_counterexample.empty()) run->first_counterexample = detail();
    }
  }
};

std::string chart_str(const Chart& ch) {
  return "chart O=" + ch.origin.str() + " I=" + ch.unit.str();
}

// -- sampled admissible ingredients ---------------------------------------

Point nonzero_point(const Chart& ch, Rng& rng) {
  return chart_point(ch, sample_nonzero(ch.model(), rng));
}

unsigned sample_nat(const ModelConfig& m, Rng& rng) {
  for (;;) {
    auto n = static_cast<unsigned>(rng.uniform(1, 20));
    if (!nat_multiple(n, Scalar::one(m)).is_zero()) return n;
  }
}

std::pair<Point, Point> distinct_pair(const Chart& ch, Rng& rng) {
  Point b = sample_chart_point(ch, rng);
  for (;;) {
    Point c = sample_chart_point(ch, rng);
    if (c != b) return {b, c};
  }
}

Line sample_not_parallel(const Line& to, Rng& rng) {
  for (int i = 0; i < 64; ++i) {
    Line l = sample_line(to.model(), rng);
    if (!is_parallel(l, to)) return l;
  }
  fail(Errc::GeneratorExhausted, "could not sample a non-parallel line");
}

Line sample_direction(const Line& avoid1, const Line& avoid2, Rng& rng) {
  for (int i = 0; i < 64; ++i) {
    Line l = sample_line(avoid1.model(), rng);
    if (!is_parallel(l, avoid1) && !is_parallel(l, avoid2)) return l;
  }
  fail(Errc::GeneratorExhausted, "could not sample a projection direction");
}

PlaneMap sample_dilatation(const Chart& ch, const std::string& case_tag, Rng& rng) {
  Point center = ch.origin;
  if (case_tag == "center-on-line") {
    center = nonzero_point(ch, rng);
  } else if (case_tag == "center-off-line") {
    center = sample_point_off(ch.line, rng);
  }
  return PlaneMap::dilatation(center, sample_nonzero(ch.model(), rng));
}

PlaneMap sample_projection(const Chart& ch, const std::string& case_tag, Rng& rng) {
  Line target = case_tag == "parallel"
                    ? parallel_through(ch.line, sample_point_off(ch.line, rng))
                    : sample_not_parallel(ch.line, rng);
  return PlaneMap::parallel_projection(ch.line, target, sample_direction(ch.line, target, rng));
}

using TrialFn = std::function<void(const ModelConfig&, const std::string&, Rng&, Counter&)>;

void trial_invariance2(LineTransform::Kind kind, const ModelConfig& m, Rng& rng, Counter& ctr) {
  Chart ch = sample_chart(m, rng);
  Point a = sample_chart_point(ch, rng);
  Point b = nonzero_point(ch, rng);
  LineTransform t = [&] {
    switch (kind) {
      case LineTransform::Kind::Inversion:
        return LineTransform::inversion(ch, nonzero_point(ch, rng));
      case LineTransform::Kind::NaturalDilatation:
        return LineTransform::natural_dilatation(ch, sample_nat(m, rng));
      default:
        return LineTransform::mobius2(ch, nonzero_point(ch, rng));
    }
  }();
  ctr.check(check_invariance_2(t, a, b),
            [&] { return chart_str(ch) + " a=" + a.str() + " b=" + b.str(); });
}

void trial_invariance3(LineTransform::Kind kind, const ModelConfig& m, Rng& rng, Counter& ctr) {
  Chart ch = sample_chart(m, rng);
  Point a = sample_chart_point(ch, rng);
  auto [b, c] = distinct_pair(ch, rng);
  LineTransform t = [&]() -> LineTransform {
    switch (kind) {
      case LineTransform::Kind::Inversion:
        return LineTransform::inversion(ch, nonzero_point(ch, rng));
      case LineTransform::Kind::NaturalTranslation:
        return LineTransform::natural_translation(ch, sample_chart_point(ch, rng));
      case LineTransform::Kind::NaturalDilatation:
        return LineTransform::natural_dilatation(ch, sample_nat(m, rng));
      default: {
        auto [b0, c0] = distinct_pair(ch, rng);
        return LineTransform::mobius3(ch, b0, c0);
      }
    }
  }();
  ctr.check(check_invariance_3(t, a, b, c), [&] {
    return chart_str(ch) + " a=" + a.str() + " b=" + b.str() + " c=" + c.str();
  });
}

void trial_preservation2(const std::string& id, const ModelConfig& m, const std::string& case_tag,
                         Rng& rng, Counter& ctr) {
  Chart ch = sample_chart(m, rng);
  Point a = sample_chart_point(ch, rng);
  Point b = nonzero_point(ch, rng);
  PlaneMap map = id == "pres2.trans" ? PlaneMap::translation(sample_point(m, rng))
                 : id == "pres2.dil" ? sample_dilatation(ch, case_tag, rng)
                                     : sample_projection(ch, case_tag, rng);
  ctr.check(check_preservation2(map, ch, a, b), [&] {
    return chart_str(ch) + " map=" + map.str() + " a=" + a.str() + " b=" + b.str();
  });
}

void trial_preservation3(const std::string& id, const ModelConfig& m, const std::string& case_tag,
                         Rng& rng, Counter& ctr) {
  Chart ch = sample_chart(m, rng);
  Point a = sample_chart_point(ch, rng);
  auto [b, c] = distinct_pair(ch, rng);
  PlaneMap map = id == "pres3.trans" ? PlaneMap::translation(sample_point(m, rng))
                 : id == "pres3.dil" ? sample_dilatation(ch, case_tag, rng)
                                     : sample_projection(ch, case_tag, rng);
  ctr.check(check_preservation3(map, ch, a, b, c), [&] {
    return chart_str(ch) + " map=" + map.str() + " a=" + a.str() + " b=" + b.str() +
           " c=" + c.str();
  });
}

void run_one_trial(const std::string& id, const ModelConfig& m, const std::string& case_tag,
                   Rng& rng, Counter& ctr) {
  using K = LineTransform::Kind;
  if (id == "inv2.natdil") return trial_invariance2(K::NaturalDilatation, m, rng, ctr);
  if (id == "inv2.inversion") return trial_invariance2(K::Inversion, m, rng, ctr);
  if (id == "inv2.mobius") return trial_invariance2(K::Mobius2, m, rng, ctr);
  if (id == "inv3.nattrans") return trial_invariance3(K::NaturalTranslation, m, rng, ctr);
  if (id == "inv3.natdil") return trial_invariance3(K::NaturalDilatation, m, rng, ctr);
  if (id == "inv3.inversion") return trial_invariance3(K::Inversion, m, rng, ctr);
  if (id == "inv3.mobius") return trial_invariance3(K::Mobius3, m, rng, ctr);
  if (id == "rel.2to3") {
    Chart ch = sample_chart(m, rng);
    Point p = sample_chart_point(ch, rng);
    Point a = sample_chart_point(ch, rng);
    Point b = nonzero_point(ch, rng);
    ctr.check(check_relation_2to3(ch, p, a, b), [&] {
      return chart_str(ch) + " p=" + p.str() + " a=" + a.str() + " b=" + b.str();
    });
    return;
  }
  if (id.rfind("pres2.", 0) == 0) return trial_preservation2(id, m, case_tag, rng, ctr);
  if (id.rfind("pres3.", 0) == 0) return trial_preservation3(id, m, case_tag, rng, ctr);
  fail(Errc::PreconditionViolated, "unknown theorem id '" + id + "'");
}

// -- exhaustive enumeration (gf, standard chart) ---------------------------

std::vector<Point> chart_pts(const Chart& ch, bool nonzero_only = false) {
  const ModelConfig m = ch.model();
  std::vector<Point> out;
  for (std::uint32_t v = nonzero_only ? 1 : 0; v < m.p; ++v) {
    out.push_back(chart_point(ch, Scalar::gf(m.p, v)));
  }
  return out;
}

std::vector<Scalar> nonzero_scalars(const ModelConfig& m) {
  std::vector<Scalar> out;
  for (std::uint32_t v = 1; v < m.p; ++v) out.push_back(Scalar::gf(m.p, v));
  return out;
}

std::vector<Line> direction_classes(const ModelConfig& m) {
  std::vector<Line> dirs;
  const Point o{Scalar::zero(m), Scalar::zero(m)};
  for (std::uint32_t d = 0; d < m.p; ++d) {
    dirs.push_back(Line::through(o, {Scalar::one(m), Scalar::gf(m.p, d)}));
  }
  dirs.push_back(Line::through(o, {Scalar::zero(m), Scalar::one(m)}));
  return dirs;
}

void exhaustive_line_transform(const std::string& id, const Chart& ch, Counter& ctr) {
  const ModelConfig m = ch.model();
  const auto all = chart_pts(ch);
  const auto nonzero = chart_pts(ch, true);

  std::vector<LineTransform> transforms;
  if (id == "inv2.natdil" || id == "inv3.natdil") {
    for (std::uint32_t n = 1; n < m.p; ++n) {
      transforms.push_back(LineTransform::natural_dilatation(ch, n));
    }
  } else if (id == "inv2.inversion" || id == "inv3.inversion") {
    for (const Point& p : nonzero) transforms.push_back(LineTransform::inversion(ch, p));
  } else if (id == "inv2.mobius") {
    for (const Point& p : nonzero) transforms.push_back(LineTransform::mobius2(ch, p));
  } else if (id == "inv3.nattrans") {
    for (const Point& p : all) transforms.push_back(LineTransform::natural_translation(ch, p));
  } else {  // inv3.mobius
    for (const Point& b0 : all) {
      for (const Point& c0 : all) {
        if (b0 != c0) transforms.push_back(LineTransform::mobius3(ch, b0, c0));
      }
    }
  }

  const bool two_point = id.rfind("inv2.", 0) == 0;
  for (const LineTransform& t : transforms) {
    for (const Point& a : all) {
      if (two_point) {
        for (const Point& b : nonzero) {
          ctr.check(check_invariance_2(t, a, b),
                    [&] { return "a=" + a.str() + " b=" + b.str(); });
        }
      } else {
        for (const Point& b : all) {
          for (const Point& c : all) {
            if (b == c) continue;
            ctr.check(check_invariance_3(t, a, b, c), [&] {
              return "a=" + a.str() + " b=" + b.str() + " c=" + c.str();
            });
          }
        }
      }
    }
  }
}

void exhaustive_plane_map(const std::string& id, const std::string& case_tag, const Chart& ch,
                          Counter& ctr) {
  const ModelConfig m = ch.model();
  const auto all = chart_pts(ch);
  const auto nonzero = chart_pts(ch, true);
  const auto factors = nonzero_scalars(m);

  std::vector<PlaneMap> maps;
  if (id == "pres2.trans" || id == "pres3.trans") {
    for (std::uint32_t vx = 0; vx < m.p; ++vx) {
      for (std::uint32_t vy = 0; vy < m.p; ++vy) {
        maps.push_back(PlaneMap::translation({Scalar::gf(m.p, vx), Scalar::gf(m.p, vy)}));
      }
    }
  } else if (id == "pres2.dil" || id == "pres3.dil") {
    std::vector<Point> centers;
    if (case_tag == "center=O") {
      centers.push_back(ch.origin);
    } else if (case_tag == "center-on-line") {
      centers = nonzero;
    } else {
      for (std::uint32_t x = 0; x < m.p; ++x) {
        for (std::uint32_t y = 0; y < m.p; ++y) {
          Point p{Scalar::gf(m.p, x), Scalar::gf(m.p, y)};
          if (!ch.line.contains(p)) centers.push_back(p);
        }
      }
    }
    for (const Point& v : centers) {
      for (const Scalar& f : factors) maps.push_back(PlaneMap::dilatation(v, f));
    }
  } else {  // pres*.pproj
    for (const Line& target : all_lines(m)) {
      const bool par = is_parallel(target, ch.line);
      if (case_tag == "parallel" ? (!par || target == ch.line) : par) continue;
      for (const Line& dir : direction_classes(m)) {
        if (is_parallel(dir, ch.line) || is_parallel(dir, target)) continue;
        maps.push_back(PlaneMap::parallel_projection(ch.line, target, dir));
      }
    }
  }

  const bool two_point = id.rfind("pres2.", 0) == 0;
  for (const PlaneMap& map : maps) {
    for (const Point& a : all) {
      if (two_point) {
        for (const Point& b : nonzero) {
          ctr.check(check_preservation2(map, ch, a, b), [&] {
            return "map=" + map.str() + " a=" + a.str() + " b=" + b.str();
          });
        }
      } else {
        for (const Point& b : all) {
          for (const Point& c : all) {
            if (b == c) continue;
            ctr.check(check_preservation3(map, ch, a, b, c), [&] {
              return "map=" + map.str() + " a=" + a.str() + " b=" + b.str() + " c=" + c.str();
            });
          }
        }
      }
    }
  }
}

}  // namespace

std::string TheoremRun::str() const {
  std::ostringstream os;
  os << id;
  if (!case_tag.empty()) os << "[" << case_tag << "]";
  os << "  model " << model << "  " << mode << "  checks " << checks << "  failures " << failures;
  if (!first_counterexample.empty()) os << "\n  counterexample: " << first_counterexample;
  return os.str();
}

const std::vector<std::string>& theorem_ids() { return kIds; }

bool is_theorem_id(const std::string& id) {
  for (const auto& k : kIds) {
    if (k == id) return true;
  }
  return false;
}

std::vector<std::string> theorem_cases(const std::string& id) {
  if (id == "pres2.dil" || id == "pres3.dil") return kDilCases;
  if (id == "pres2.pproj" || id == "pres3.pproj") return kProjCases;
  return {};
}

Chart standard_chart(const ModelConfig& m) {
  const Point o{Scalar::zero(m), Scalar::zero(m)};
  const Point i{Scalar::one(m), Scalar::zero(m)};
  return Chart::make(o, i);
}

TheoremRun run_theorem_sampled(const std::string& id, const ModelConfig& model,
                               std::uint64_t trials, std::uint64_t seed,
                               const std::string& case_tag) {
  if (!is_theorem_id(id)) fail(Errc::PreconditionViolated, "unknown theorem id '" + id + "'");
  TheoremRun run{id, case_tag, model.name(),
                 "sampled(trials=" + std::to_string(trials) + ",seed=" + std::to_string(seed) + ")"};
  Counter ctr{&run};
  Rng rng(seed ^ hash_str(id + "/" + model.name() + "/" + case_tag));
  const auto cases = theorem_cases(id);
  for (std::uint64_t i = 0; i < trials; ++i) {
    std::string tag = case_tag;
    if (tag.empty() && !cases.empty()) tag = cases[i % cases.size()];
    run_one_trial(id, model, tag, rng, ctr);
  }
  return run;
}

TheoremRun run_theorem_exhaustive(const std::string& id, const ModelConfig& model,
                                  const std::string& case_tag) {
  if (!is_theorem_id(id)) fail(Errc::PreconditionViolated, "unknown theorem id '" + id + "'");
  if (model.kind != ModelKind::Gf || model.p > 7) {
    fail(Errc::ScopeTooLarge, "exhaustive verification requires gf with p <= 7");
  }
  TheoremRun run{id, case_tag, model.name(), "exhaustive"};
  Counter ctr{&run};
  const Chart ch = standard_chart(model);
  if (id == "rel.2to3") {
    const auto all = chart_pts(ch);
    const auto nonzero = chart_pts(ch, true);
    for (const Point& p : all) {
      for (const Point& a : all) {
        for (const Point& b : nonzero) {
          ctr.check(check_relation_2to3(ch, p, a, b),
                    [&] { return "p=" + p.str() + " a=" + a.str() + " b=" + b.str(); });
        }
      }
    }
  } else if (id.rfind("inv", 0) == 0) {
    exhaustive_line_transform(id, ch, ctr);
  } else {
    exhaustive_plane_map(id, case_tag, ch, ctr);
  }
  return run;
}

NegativeControl negative_control_nattrans_ratio2() {
  // gf(7), a = 1, b = 2, shift p = 1: the ratio point moves from 4 to 3.
  const ModelConfig m = ModelConfig::gf(7);
  const Chart ch = standard_chart(m);
  const Point a = chart_point(ch, Scalar::gf(7, 1));
  const Point b = chart_point(ch, Scalar::gf(7, 2));
  const LineTransform shift = LineTransform::natural_translation(ch, chart_point(ch, Scalar::gf(7, 1)));
  const Point before = ratio2(ch, a, b);
  const Point after = ratio2(ch, shift.apply(a), shift.apply(b));
  NegativeControl out;
  out.ok = before != after && chart_coordinate(ch, before) == Scalar::gf(7, 4) &&
           chart_coordinate(ch, after) == Scalar::gf(7, 3);
  out.detail = "gf(7) a=1 b=2 shift=1: ratio2 " + chart_coordinate(ch, before).str() +
               " -> " + chart_coordinate(ch, after).str() + " under natural translation";
  return out;
}

}  // namespace dap
