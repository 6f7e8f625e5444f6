#include "dap/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dap/construct.hpp"
#include "dap/verify.hpp"

namespace dap {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0);  // normalize -0
  return buf;
}

std::string xml_escape(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  for (char c : in) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string xml_unescape(std::string_view in) {
  std::string out;
  for (std::size_t i = 0; i < in.size();) {
    if (in.compare(i, 5, "&amp;") == 0) {
      out += '&';
      i += 5;
    } else if (in.compare(i, 4, "&lt;") == 0) {
      out += '<';
      i += 4;
    } else if (in.compare(i, 4, "&gt;") == 0) {
      out += '>';
      i += 4;
    } else {
      out += in[i++];
    }
  }
  return out;
}

struct View {
  double min_x, min_y, span;
  int canvas;
  double margin;

  double px(double x) const { return margin + (x - min_x) / span * (canvas - 2 * margin); }
  double py(double y) const { return canvas - margin - (y - min_y) / span * (canvas - 2 * margin); }
};

View fit_view(const Trace& trace, int canvas) {
  double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
  if (trace.model().kind == ModelKind::Gf) {
    lo_x = lo_y = 0;
    hi_x = hi_y = std::max(1.0, static_cast<double>(trace.model().p - 1));
  } else {
    bool first = true;
    for (const TraceStep& s : trace.steps()) {
      if (!s.is_point()) continue;
      const double x = s.point().x.approx();
      const double y = s.point().y.approx();
      if (first) {
        lo_x = hi_x = x;
        lo_y = hi_y = y;
        first = false;
      } else {
        lo_x = std::min(lo_x, x);
        hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y);
        hi_y = std::max(hi_y, y);
      }
    }
  }
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  return View{lo_x, lo_y, span, canvas, 36.0};
}

// Clips the infinite line to the canvas rectangle; nullopt when outside.
struct Seg {
  double x1, y1, x2, y2;
};

std::optional<Seg> clip_line(const View& v, const Line& line) {
  const double bx = line.base().x.approx();
  const double by = line.base().y.approx();
  const double dx = line.dir().x.approx();
  const double dy = line.dir().y.approx();
  // Canvas-space param range via Liang-Barsky against [0, canvas]^2.
  const double px = v.px(bx), py = v.py(by);
  const double sx = dx / v.span * (v.canvas - 2 * v.margin);
  const double sy = -dy / v.span * (v.canvas - 2 * v.margin);
  if (sx == 0 && sy == 0) return std::nullopt;
  double t0 = -1e9, t1 = 1e9;
  const auto clip1 = [&](double p, double q) {
    if (p == 0) return q >= 0;
    double r = q / p;
    if (p < 0) {
      if (r > t1) return false;
      t0 = std::max(t0, r);
    } else {
      if (r < t0) return false;
      t1 = std::min(t1, r);
    }
    return true;
  };
  const double lo = 4.0, hi = v.canvas - 4.0;
  if (!clip1(-sx, px - lo) || !clip1(sx, hi - px) || !clip1(-sy, py - lo) || !clip1(sy, hi - py)) {
    return std::nullopt;
  }
  if (t0 > t1) return std::nullopt;
  return Seg{px + t0 * sx, py + t0 * sy, px + t1 * sx, py + t1 * sy};
}

}  // namespace

std::string render_figure(const Trace& trace, const FigureOptions& opts) {
  const View view = fit_view(trace, opts.canvas);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.canvas << "\" height=\""
     << opts.canvas << "\" viewBox=\"0 0 " << opts.canvas << " " << opts.canvas << "\">\n";
  os << "<metadata id=\"trace\">" << xml_escape(trace.to_json()) << "</metadata>\n";
  os << "<rect width=\"" << opts.canvas << "\" height=\"" << opts.canvas
     << "\" fill=\"white\"/>\n";

  for (const TraceStep& s : trace.steps()) {
    if (s.is_point()) continue;
    auto seg = clip_line(view, s.line());
    if (!seg) continue;
    const bool dashed = s.op == "parallel";
    os << "<line x1=\"" << fmt(seg->x1) << "\" y1=\"" << fmt(seg->y1) << "\" x2=\""
       << fmt(seg->x2) << "\" y2=\"" << fmt(seg->y2) << "\" stroke=\""
       << (dashed ? "#777777" : "#222222") << "\" stroke-width=\"1\""
       << (dashed ? " stroke-dasharray=\"5 3\"" : "") << " data-label=\"" << xml_escape(s.label)
       << "\"/>\n";
  }
  for (const TraceStep& s : trace.steps()) {
    if (!s.is_point()) continue;
    const double x = view.px(s.point().x.approx());
    const double y = view.py(s.point().y.approx());
    const bool is_result = s.label == trace.result();
    os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3.5\" fill=\""
       << (is_result ? "#c0392b" : s.op == "aux" ? "#2980b9" : "#111111") << "\" data-label=\""
       << xml_escape(s.label) << "\"/>\n";
    os << "<text x=\"" << fmt(x + 6) << "\" y=\"" << fmt(y - 6)
       << "\" font-family=\"monospace\" font-size=\"12\">" << xml_escape(s.label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string extract_trace_json(std::string_view svg) {
  const std::string open = "<metadata id=\"trace\">";
  const std::string close = "</metadata>";
  const auto begin = svg.find(open);
  if (begin == std::string_view::npos) fail(Errc::BadTrace, "figure has no embedded trace");
  const auto end = svg.find(close, begin);
  if (end == std::string_view::npos) fail(Errc::BadTrace, "figure trace metadata is unterminated");
  return xml_unescape(svg.substr(begin + open.size(), end - begin - open.size()));
}

namespace {

struct Scene {
  Chart chart;
  Trace trace;
};

Scene scene_for(const ModelConfig& m) {
  Chart ch = standard_chart(m);
  return {ch, Trace(m)};
}

}  // namespace

Trace figure_add(const ModelConfig& m, const Scalar& a, const Scalar& b, std::uint64_t aux_seed) {
  Scene s = scene_for(m);
  geo_add(s.chart, chart_point(s.chart, a), chart_point(s.chart, b),
          default_aux(s.chart, aux_seed), &s.trace);
  return std::move(s.trace);
}

Trace figure_mul(const ModelConfig& m, const Scalar& a, const Scalar& b, std::uint64_t aux_seed) {
  Scene s = scene_for(m);
  geo_mul(s.chart, chart_point(s.chart, a), chart_point(s.chart, b),
          default_aux(s.chart, aux_seed), &s.trace);
  return std::move(s.trace);
}

Trace figure_ratio2(const ModelConfig& m, const Scalar& a, const Scalar& b,
                    std::uint64_t aux_seed) {
  Scene s = scene_for(m);
  (void)aux_seed;
  ratio2(s.chart, chart_point(s.chart, a), chart_point(s.chart, b), &s.trace);
  return std::move(s.trace);
}

Trace figure_ratio3(const ModelConfig& m, const Scalar& a, const Scalar& b, const Scalar& c,
                    std::uint64_t aux_seed) {
  Scene s = scene_for(m);
  (void)aux_seed;
  ratio3(s.chart, chart_point(s.chart, a), chart_point(s.chart, b), chart_point(s.chart, c),
         &s.trace);
  return std::move(s.trace);
}

Trace figure_pproj(const ModelConfig& m, const Scalar& a, const Scalar& b,
                   const ProjectionScene& scene) {
  Scene s = scene_for(m);
  Trace& tr = s.trace;
  const auto parse_pt = [&](const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) fail(Errc::BadLiteral, "expected 'x,y' in '" + text + "'");
    return Point{Scalar::parse(m, text.substr(0, comma)), Scalar::parse(m, text.substr(comma + 1))};
  };
  const Line target = Line::through(parse_pt(scene.target_base), parse_pt(scene.target_dir));
  const Line direction =
      Line::through(Point{Scalar::zero(m), Scalar::zero(m)}, parse_pt(scene.direction));
  const PlaneMap proj = PlaneMap::parallel_projection(s.chart.line, target, direction);

  const std::string l_o = tr.add("O", s.chart.origin, "given");
  const std::string l_i = tr.add("I", s.chart.unit, "given");
  const std::string l_line = tr.add("ell", s.chart.line, "join", {l_o, l_i},
                                    {{TraceCheck::Kind::On, l_o, "ell"},
                                     {TraceCheck::Kind::On, l_i, "ell"}});
  const std::string l_target = tr.add("target", target, "given");
  const std::string l_dir = tr.add("dirline", direction, "given");

  const Point pa = chart_point(s.chart, a);
  const Point pb = chart_point(s.chart, b);
  const std::string la = tr.add("A", pa, "given", {}, {{TraceCheck::Kind::On, "A", l_line}});
  const std::string lb = tr.add("B", pb, "given", {}, {{TraceCheck::Kind::On, "B", l_line}});

  std::string last;
  const auto project = [&](const std::string& src_label, const Point& p) {
    Line connector = parallel_through(direction, p);
    const std::string lc =
        tr.add("c" + src_label, connector, "parallel", {l_dir, src_label},
               {{TraceCheck::Kind::Parallel, "c" + src_label, l_dir},
                {TraceCheck::Kind::On, src_label, "c" + src_label}});
    MeetResult r = meet(connector, target);
    last = tr.add(src_label + "'", *r.point, "meet", {lc, l_target},
                  {{TraceCheck::Kind::On, src_label + "'", lc},
                   {TraceCheck::Kind::On, src_label + "'", l_target}});
  };
  project(l_o, s.chart.origin);
  project(l_i, s.chart.unit);
  project(la, pa);
  project(lb, pb);
  tr.set_result(last);
  (void)proj;
  return std::move(tr);
}

Trace figure_translation(const ModelConfig& m, const Scalar& a, const Scalar& b, const Point& v) {
  Scene s = scene_for(m);
  Trace& tr = s.trace;
  const std::string l_o = tr.add("O", s.chart.origin, "given");
  const std::string l_i = tr.add("I", s.chart.unit, "given");
  const std::string l_line = tr.add("ell", s.chart.line, "join", {l_o, l_i},
                                    {{TraceCheck::Kind::On, l_o, "ell"},
                                     {TraceCheck::Kind::On, l_i, "ell"}});
  const Point pa = chart_point(s.chart, a);
  const Point pb = chart_point(s.chart, b);
  const std::string la = tr.add("A", pa, "given", {}, {{TraceCheck::Kind::On, "A", l_line}});
  const std::string lb = tr.add("B", pb, "given", {}, {{TraceCheck::Kind::On, "B", l_line}});

  const std::vector<std::string> args = {v.x.str(), v.y.str()};
  std::string last;
  std::string img_a, img_b;
  for (const auto& [label, p] : std::vector<std::pair<std::string, Point>>{
           {l_o, s.chart.origin}, {l_i, s.chart.unit}, {la, pa}, {lb, pb}}) {
    last = tr.add(label + "'", p + v, "translate", {label}, {}, args);
    if (label == la) img_a = last;
    if (label == lb) img_b = last;
  }
  // image segment stays parallel to the original
  if (pa != pb && pa + v != pb + v) {
    const std::string ls = tr.add("AB", join(pa, pb), "join", {la, lb}, {});
    tr.add("A'B'", join(pa + v, pb + v), "join", {img_a, img_b},
           {{TraceCheck::Kind::Parallel, "A'B'", ls}});
  }
  tr.set_result(last);
  return std::move(tr);
}

Trace figure_dilatation(const ModelConfig& m, const Scalar& a, const Scalar& b,
                        const Point& center, const Scalar& factor) {
  if (factor.is_zero()) fail(Errc::PreconditionViolated, "dilatation factor must be nonzero");
  Scene s = scene_for(m);
  Trace& tr = s.trace;
  const std::string l_o = tr.add("O", s.chart.origin, "given");
  const std::string l_i = tr.add("I", s.chart.unit, "given");
  const std::string l_line = tr.add("ell", s.chart.line, "join", {l_o, l_i},
                                    {{TraceCheck::Kind::On, l_o, "ell"},
                                     {TraceCheck::Kind::On, l_i, "ell"}});
  const Point pa = chart_point(s.chart, a);
  const Point pb = chart_point(s.chart, b);
  const std::string la = tr.add("A", pa, "given", {}, {{TraceCheck::Kind::On, "A", l_line}});
  const std::string lb = tr.add("B", pb, "given", {}, {{TraceCheck::Kind::On, "B", l_line}});
  const std::string lv = tr.add("V", center, "given");

  const std::vector<std::string> args = {factor.str()};
  std::string last;
  std::string img_a, img_b;
  for (const auto& [label, p] : std::vector<std::pair<std::string, Point>>{
           {la, pa}, {lb, pb}}) {
    const Point image = center + scale(factor, p - center);
    std::vector<TraceCheck> checks;
    if (p != center) {
      // center, original and image are collinear
      Line ray = join(center, p);
      const std::string lr = tr.add("ray" + label, ray, "join", {lv, label}, {});
      checks.push_back({TraceCheck::Kind::On, label + "'", lr});
    }
    last = tr.add(label + "'", image, "dilate", {label, lv}, checks, args);
    if (label == la) img_a = last;
    if (label == lb) img_b = last;
  }
  const Point ia = center + scale(factor, pa - center);
  const Point ib = center + scale(factor, pb - center);
  if (pa != pb && ia != ib) {
    const std::string ls = tr.add("AB", join(pa, pb), "join", {la, lb}, {});
    tr.add("A'B'", join(ia, ib), "join", {img_a, img_b},
           {{TraceCheck::Kind::Parallel, "A'B'", ls}});
  }
  tr.set_result(last);
  return std::move(tr);
}

}  // namespace dap
