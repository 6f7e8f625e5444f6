#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dap/rng.hpp"
#include "dap/scalar.hpp"

namespace dap {

struct Point {
  Scalar x, y;

  ModelConfig model() const { return x.model(); }
  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
/// Left scalar action t·v = (t·v.x, t·v.y). One fixed side convention keeps
/// parallelism and intersection well-defined over a non-commutative field.
Point scale(const Scalar& t, const Point& v);

/// A line {base + t·dir}, t ranging over the skew field acting on the left.
/// Stored canonically: dir's first invertible coordinate is scaled to 1 and
/// base is reduced along dir, so equal lines are structurally equal.
class Line {
 public:
  static Line through(const Point& base, const Point& dir);

  const Point& base() const { return base_; }
  const Point& dir() const { return dir_; }
  ModelConfig model() const { return base_.model(); }

  Point at(const Scalar& t) const { return base_ + scale(t, dir_); }
  bool contains(const Point& p) const { return param_of(p).has_value(); }
  /// The t with at(t) == p, if p is incident.
  std::optional<Scalar> param_of(const Point& p) const;

  std::string str() const { return "{" + base_.str() + " + t*" + dir_.str() + "}"; }

  friend bool operator==(const Line& a, const Line& b) {
    return a.base_ == b.base_ && a.dir_ == b.dir_;
  }
  friend bool operator!=(const Line& a, const Line& b) { return !(a == b); }

 private:
  Line(Point base, Point dir) : base_(std::move(base)), dir_(std::move(dir)) {}
  Point base_, dir_;
};

/// The unique line through two distinct points.
Line join(const Point& p, const Point& q);

/// The unique line through p parallel to l; returns l itself when p is on l.
Line parallel_through(const Line& l, const Point& p);

/// dir(b) is a nonzero left multiple of dir(a).
bool is_parallel(const Line& a, const Line& b);

bool collinear(const Point& a, const Point& b, const Point& c);

struct MeetResult {
  enum class Kind { Point, Parallel, Identical };
  Kind kind;
  std::optional<dap::Point> point;  // set iff kind == Point

  bool is_point() const { return kind == Kind::Point; }
  bool is_parallel() const { return kind == Kind::Parallel; }
  bool is_identical() const { return kind == Kind::Identical; }
};

/// Intersects two lines by explicit elimination over the skew field
/// (pivot on the first invertible direction coordinate, unknowns kept on the
/// left of known coefficients), then verifies the solution by substitution.
MeetResult meet(const Line& a, const Line& b);

// -- plane-level checks -------------------------------------------------

struct AxiomReport {
  ModelConfig model;
  std::string scope;
  std::uint64_t points_counted = 0;
  std::uint64_t lines_counted = 0;
  std::vector<std::string> violations;  // certificates: model, points, violated clause

  bool ok() const { return violations.empty(); }
  std::string str() const;
};

/// Checks incidence axioms over the whole finite plane; gf only, p <= 13.
AxiomReport check_axioms_exhaustive(const ModelConfig& model);

/// Randomized axiom checking for the infinite models.
AxiomReport check_axioms_sampled(const ModelConfig& model, unsigned trials, std::uint64_t seed);

/// All p^2 + p lines of the finite plane, canonical form.
std::vector<Line> all_lines(const ModelConfig& gf_model);

enum class DesarguesAxis { Parallel, Concurrent };

/// Two perspective triangles: connectors A-A', B-B', C-C' pairwise distinct
/// and either all parallel or concurrent in `center`; the AB and BC side
/// pairs parallel.
struct DesarguesConfig {
  Point a, b, c;
  Point a2, b2, c2;
  DesarguesAxis axis = DesarguesAxis::Parallel;
  std::optional<Point> center;
};

/// Throws MalformedConfig when the hypothesis bundle does not hold.
void validate_desargues(const DesarguesConfig& cfg);

/// Validates, then tests the conclusion: join(a,c) parallel to join(a2,c2).
/// Always true in a coordinate plane over a skew field.
bool check_desargues(const DesarguesConfig& cfg);

/// Randomly generates a configuration satisfying the hypothesis bundle.
/// Bounded retries; throws GeneratorExhausted if degeneracies persist.
DesarguesConfig sample_desargues_config(const ModelConfig& model, DesarguesAxis axis,
                                        std::uint64_t seed);

}  // namespace dap
