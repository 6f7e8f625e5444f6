#include "dap/trace.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace dap {

using nlohmann::json;

bool Trace::has(const std::string& label) const {
  return std::any_of(steps_.begin(), steps_.end(),
                     [&](const TraceStep& s) { return s.label == label; });
}

const TraceStep& Trace::step(const std::string& label) const {
  for (const TraceStep& s : steps_) {
    if (s.label == label) return s;
  }
  fail(Errc::BadTrace, "no step labeled '" + label + "'");
}

std::string Trace::add(const std::string& label_hint, std::variant<Point, Line> object,
                       std::string op, std::vector<std::string> inputs,
                       std::vector<TraceCheck> checks, std::vector<std::string> args) {
  for (const TraceStep& s : steps_) {
    if (s.object == object) return s.label;
  }
  std::string label = label_hint;
  for (int n = 2; has(label); ++n) label = label_hint + "_" + std::to_string(n);
  for (TraceCheck& c : checks) {
    // self-references in checks are written with the hint
    if (c.a == label_hint) c.a = label;
    if (c.b == label_hint) c.b = label;
  }
  steps_.push_back({label, std::move(object), std::move(op), std::move(inputs), std::move(args),
                    std::move(checks)});
  return label;
}

bool Trace::relabel(const std::string& from, const std::string& to) {
  if (from == to) return true;
  if (!has(from) || has(to)) return false;
  const auto fix = [&](std::string& s) {
    if (s == from) s = to;
  };
  for (TraceStep& s : steps_) {
    fix(s.label);
    for (std::string& in : s.inputs) fix(in);
    for (TraceCheck& c : s.checks) {
      fix(c.a);
      fix(c.b);
    }
  }
  for (std::string& a : aux_) fix(a);
  fix(result_);
  return true;
}

namespace {

json scalar_list(std::initializer_list<const Scalar*> xs) {
  json arr = json::array();
  for (const Scalar* s : xs) arr.push_back(s->str());
  return arr;
}

Point point_from(const ModelConfig& m, const json& arr) {
  if (!arr.is_array() || arr.size() != 2) fail(Errc::BadTrace, "bad point payload");
  return {Scalar::parse(m, arr[0].get<std::string>()), Scalar::parse(m, arr[1].get<std::string>())};
}

const char* check_kind_name(TraceCheck::Kind k) {
  return k == TraceCheck::Kind::On ? "on" : "parallel";
}

}  // namespace

std::string Trace::to_json() const {
  json doc;
  doc["model"] = model_.flag();
  doc["result"] = result_;
  doc["aux"] = aux_;
  json steps = json::array();
  for (const TraceStep& s : steps_) {
    json js;
    js["label"] = s.label;
    js["op"] = s.op;
    js["inputs"] = s.inputs;
    if (!s.args.empty()) js["args"] = s.args;
    if (s.is_point()) {
      js["kind"] = "point";
      js["point"] = scalar_list({&s.point().x, &s.point().y});
    } else {
      js["kind"] = "line";
      js["base"] = scalar_list({&s.line().base().x, &s.line().base().y});
      js["dir"] = scalar_list({&s.line().dir().x, &s.line().dir().y});
    }
    json checks = json::array();
    for (const TraceCheck& c : s.checks) {
      checks.push_back({{"kind", check_kind_name(c.kind)}, {"a", c.a}, {"b", c.b}});
    }
    js["checks"] = std::move(checks);
    steps.push_back(std::move(js));
  }
  doc["steps"] = std::move(steps);
  return doc.dump();
}

Trace Trace::from_json(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(Errc::BadTrace, "trace payload is not valid JSON");
  Trace tr(ModelConfig::parse_flag(doc.at("model").get<std::string>()));
  tr.result_ = doc.value("result", "");
  for (const auto& a : doc.value("aux", json::array())) tr.aux_.push_back(a.get<std::string>());
  for (const auto& js : doc.at("steps")) {
    TraceStep s;
    s.label = js.at("label").get<std::string>();
    s.op = js.at("op").get<std::string>();
    for (const auto& in : js.value("inputs", json::array())) s.inputs.push_back(in.get<std::string>());
    for (const auto& in : js.value("args", json::array())) s.args.push_back(in.get<std::string>());
    if (js.at("kind") == "point") {
      s.object = point_from(tr.model_, js.at("point"));
    } else {
      Point base = point_from(tr.model_, js.at("base"));
      Point dir = point_from(tr.model_, js.at("dir"));
      s.object = Line::through(base, dir);
    }
    for (const auto& jc : js.value("checks", json::array())) {
      TraceCheck c;
      c.kind = jc.at("kind") == "on" ? TraceCheck::Kind::On : TraceCheck::Kind::Parallel;
      c.a = jc.at("a").get<std::string>();
      c.b = jc.at("b").get<std::string>();
      s.checks.push_back(std::move(c));
    }
    tr.steps_.push_back(std::move(s));
  }
  return tr;
}

TraceVerification verify_trace(const Trace& trace) {
  TraceVerification out;
  std::map<std::string, const TraceStep*> seen;
  for (const TraceStep& s : trace.steps()) {
    for (const std::string& in : s.inputs) {
      if (!seen.count(in)) {
        out.failures.push_back("step " + s.label + " references '" + in + "' before definition");
      }
    }
    for (const TraceCheck& c : s.checks) {
      auto ia = seen.find(c.a);
      auto ib = seen.find(c.b);
      if (c.a == s.label) ia = seen.insert({s.label, &s}).first;
      if (c.b == s.label) ib = seen.insert({s.label, &s}).first;
      if (ia == seen.end() || ib == seen.end()) {
        out.failures.push_back("check on step " + s.label + " references unknown labels");
        continue;
      }
      bool good = false;
      if (c.kind == TraceCheck::Kind::On) {
        good = ia->second->is_point() && !ib->second->is_point() &&
               ib->second->line().contains(ia->second->point());
      } else {
        good = !ia->second->is_point() && !ib->second->is_point() &&
               is_parallel(ia->second->line(), ib->second->line());
      }
      if (!good) {
        out.failures.push_back("step " + s.label + ": " + check_kind_name(c.kind) + "(" + c.a +
                               ", " + c.b + ") does not hold");
      }
    }
    seen[s.label] = &s;
  }
  out.ok = out.failures.empty();
  return out;
}

Point replay_trace(const Trace& trace) {
  std::map<std::string, const TraceStep*> env;
  auto point_in = [&](const TraceStep& s, std::size_t i) -> const Point& {
    const TraceStep* in = env.at(s.inputs.at(i));
    if (!in->is_point()) fail(Errc::BadTrace, "step " + s.label + " expects a point input");
    return in->point();
  };
  auto line_in = [&](const TraceStep& s, std::size_t i) -> const Line& {
    const TraceStep* in = env.at(s.inputs.at(i));
    if (in->is_point()) fail(Errc::BadTrace, "step " + s.label + " expects a line input");
    return in->line();
  };

  for (const TraceStep& s : trace.steps()) {
    for (const std::string& in : s.inputs) {
      if (!env.count(in)) fail(Errc::BadTrace, "step " + s.label + " uses undefined '" + in + "'");
    }
    std::variant<Point, Line> recomputed = s.object;
    if (s.op == "join") {
      recomputed = join(point_in(s, 0), point_in(s, 1));
    } else if (s.op == "parallel") {
      recomputed = parallel_through(line_in(s, 0), point_in(s, 1));
    } else if (s.op == "meet") {
      MeetResult r = meet(line_in(s, 0), line_in(s, 1));
      if (!r.is_point()) fail(Errc::BadTrace, "step " + s.label + ": lines do not meet");
      recomputed = *r.point;
    } else if (s.op == "translate") {
      if (s.args.size() != 2) fail(Errc::BadTrace, "translate step needs two scalar args");
      Point v{Scalar::parse(trace.model(), s.args[0]), Scalar::parse(trace.model(), s.args[1])};
      recomputed = point_in(s, 0) + v;
    } else if (s.op == "dilate") {
      if (s.args.size() != 1) fail(Errc::BadTrace, "dilate step needs one scalar arg");
      Scalar f = Scalar::parse(trace.model(), s.args[0]);
      const Point& x = point_in(s, 0);
      const Point& center = point_in(s, 1);
      recomputed = center + scale(f, x - center);
    } else if (s.op != "given" && s.op != "aux") {
      fail(Errc::BadTrace, "unknown trace op '" + s.op + "'");
    }
    if (!(recomputed == s.object)) {
      fail(Errc::BadTrace, "replay of step " + s.label + " diverges from the recorded object");
    }
    env[s.label] = &s;
  }
  const TraceStep& res = trace.step(trace.result());
  if (!res.is_point()) fail(Errc::BadTrace, "trace result is not a point");
  return res.point();
}

}  // namespace dap
