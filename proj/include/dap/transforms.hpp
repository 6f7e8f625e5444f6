#pragma once

#include <variant>
#include <vector>

#include "dap/ratio.hpp"

namespace dap {

/// A map of the charted line into itself, applied through ruler-construction
/// chains: left multiplication by P, shift by P, the n-fold sum, or one of
/// the two ratio maps.
class LineTransform {
 public:
  enum class Kind { Inversion, NaturalTranslation, NaturalDilatation, Mobius2, Mobius3 };

  /// X -> P·X, P != O.
  static LineTransform inversion(Chart ch, Point p);
  /// X -> P + X.
  static LineTransform natural_translation(Chart ch, Point p);
  /// X -> nX = X + ... + X; rejects n with n·I = O (characteristic p).
  static LineTransform natural_dilatation(Chart ch, unsigned n);
  /// X -> r(X:B), B != O.
  static LineTransform mobius2(Chart ch, Point b);
  /// X -> r(X,B;C), B != C.
  static LineTransform mobius3(Chart ch, Point b, Point c);

  Point apply(const Point& x) const;
  Kind kind() const { return kind_; }
  const Chart& chart() const { return ch_; }

 private:
  LineTransform(Kind k, Chart ch) : kind_(k), ch_(std::move(ch)) {}
  Kind kind_;
  Chart ch_;
  std::vector<Point> params_;
  unsigned n_ = 0;
};

/// A point map of the whole plane: translation, dilatation, or parallel
/// projection between two lines along a fixed direction. Compositions that
/// do not simplify are carried as a chain.
class PlaneMap {
 public:
  struct Translation {
    Point v;
  };
  struct Dilatation {
    Point center;
    Scalar factor;  // nonzero
  };
  struct Projection {
    Line source, target;
    Line direction;  // not parallel to source or target
  };
  struct Composed {
    std::vector<PlaneMap> maps;  // applied last-to-first
  };

  static PlaneMap translation(Point v);
  static PlaneMap dilatation(Point center, Scalar factor);
  static PlaneMap parallel_projection(Line source, Line target, Line direction);

  Point apply(const Point& x) const;
  /// Image of a whole line (translations/dilatations: any line; projections:
  /// only the source line).
  Line apply_line(const Line& l) const;

  bool is_translation() const { return std::holds_alternative<Translation>(kind_); }
  bool is_dilatation() const { return std::holds_alternative<Dilatation>(kind_); }
  bool is_projection() const { return std::holds_alternative<Projection>(kind_); }
  bool is_composed() const { return std::holds_alternative<Composed>(kind_); }
  const Translation& translation_data() const { return std::get<Translation>(kind_); }
  const Dilatation& dilatation_data() const { return std::get<Dilatation>(kind_); }
  const Projection& projection_data() const { return std::get<Projection>(kind_); }

  std::string str() const;

 private:
  using Kinds = std::variant<Translation, Dilatation, Projection, Composed>;
  explicit PlaneMap(Kinds k) : kind_(std::move(k)) {}
  Kinds kind_;
  friend PlaneMap compose_plane_maps(const PlaneMap&, const PlaneMap&);
};

/// outer ∘ inner (inner applied first). Translation/dilatation pairs simplify
/// to a translation or a dilatation; chains involving projections are
/// returned as generic composed maps.
PlaneMap compose_plane_maps(const PlaneMap& outer, const PlaneMap& inner);

/// Chart on the image line with O' = m(O), I' = m(I).
Chart image_chart(const PlaneMap& m, const Chart& ch);

// -- executable theorem bodies -------------------------------------------

/// ratio2(t(A), t(B)) == ratio2(A, B); holds for inversion, natural
/// dilatation and mobius2 (not, in general, for natural translation).
bool check_invariance_2(const LineTransform& t, const Point& a, const Point& b);

/// ratio3(t(A), t(B); t(C)) == ratio3(A, B; C); holds for natural
/// translation, natural dilatation, inversion and mobius3.
bool check_invariance_3(const LineTransform& t, const Point& a, const Point& b, const Point& c);

/// ratio2(A, B) == ratio3(P+A, P+B; P) on the chart line.
bool check_relation_2to3(const Chart& ch, const Point& p, const Point& a, const Point& b);

/// m(ratio point in ch) == ratio point of the images in image_chart(m, ch).
bool check_preservation2(const PlaneMap& m, const Chart& ch, const Point& a, const Point& b);
bool check_preservation3(const PlaneMap& m, const Chart& ch, const Point& a, const Point& b,
                         const Point& c);

}  // namespace dap
