#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dap/geometry.hpp"

namespace dap {

/// A relation a step claims about earlier objects; re-checkable by the engine.
struct TraceCheck {
  enum class Kind { On, Parallel };
  Kind kind;
  std::string a, b;  // labels: On(point, line), Parallel(line, line)
};

struct TraceStep {
  std::string label;
  std::variant<Point, Line> object;
  /// "given" | "aux" | "join" | "parallel" | "meet" | "translate" | "dilate"
  std::string op;
  std::vector<std::string> inputs;  // labels of earlier steps
  std::vector<std::string> args;    // scalar literals for translate/dilate
  std::vector<TraceCheck> checks;

  bool is_point() const { return std::holds_alternative<Point>(object); }
  const Point& point() const { return std::get<Point>(object); }
  const Line& line() const { return std::get<Line>(object); }
};

/// Ordered record of every object a construction creates. Every referenced
/// object appears earlier in the record; each derived step carries the
/// incidence/parallelism facts its operation asserts.
class Trace {
 public:
  explicit Trace(ModelConfig model) : model_(model) {}

  const ModelConfig& model() const { return model_; }
  const std::vector<TraceStep>& steps() const { return steps_; }
  const std::string& result() const { return result_; }
  void set_result(std::string label) { result_ = std::move(label); }
  const std::vector<std::string>& auxiliary() const { return aux_; }
  void mark_auxiliary(const std::string& label) {
    for (const auto& a : aux_) {
      if (a == label) return;
    }
    aux_.push_back(label);
  }

  bool has(const std::string& label) const;
  const TraceStep& step(const std::string& label) const;

  /// Adds a step, uniquifying the label if taken. If an equal object is
  /// already recorded, returns its label instead of duplicating the step.
  std::string add(const std::string& label_hint, std::variant<Point, Line> object,
                  std::string op, std::vector<std::string> inputs = {},
                  std::vector<TraceCheck> checks = {}, std::vector<std::string> args = {});

  /// Renames a step and updates every reference to it. No-op (returns false)
  /// when `from` is missing or `to` is already taken.
  bool relabel(const std::string& from, const std::string& to);

  std::string to_json() const;
  static Trace from_json(std::string_view text);

 private:
  ModelConfig model_;
  std::vector<TraceStep> steps_;
  std::vector<std::string> aux_;
  std::string result_;
};

struct TraceVerification {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Re-checks every recorded incidence/parallelism claim with the engine.
TraceVerification verify_trace(const Trace& trace);

/// Recomputes every derived step from its inputs and compares with the
/// recorded object; returns the result point. Throws BadTrace on mismatch.
Point replay_trace(const Trace& trace);

}  // namespace dap
