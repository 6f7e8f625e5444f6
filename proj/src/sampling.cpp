#include "dap/sampling.hpp"

namespace dap {
namespace {

mpq_class small_fraction(Rng& rng, long num_range, long den_range) {
  mpq_class q(rng.uniform(-num_range, num_range), rng.uniform(1, den_range));
  q.canonicalize();
  return q;
}

constexpr int kRetries = 64;

}  // namespace

Scalar sample_scalar(const ModelConfig& m, Rng& rng) {
  switch (m.kind) {
    case ModelKind::Gf:
      return Scalar::gf(m.p, rng.uniform(0, static_cast<std::int64_t>(m.p) - 1));
    case ModelKind::Rational:
      return Scalar::rational(small_fraction(rng, 12, 12));
    case ModelKind::Quaternion:
      return Scalar::quaternion(small_fraction(rng, 4, 3), small_fraction(rng, 4, 3),
                                small_fraction(rng, 4, 3), small_fraction(rng, 4, 3));
  }
  fail(Errc::PreconditionViolated, "bad model");
}

Scalar sample_nonzero(const ModelConfig& m, Rng& rng) {
  for (int i = 0; i < kRetries; ++i) {
    Scalar s = sample_scalar(m, rng);
    if (!s.is_zero()) return s;
  }
  fail(Errc::GeneratorExhausted, "could not sample a nonzero scalar");
}

Point sample_point(const ModelConfig& m, Rng& rng) {
  return {sample_scalar(m, rng), sample_scalar(m, rng)};
}

Point sample_point_ne(const ModelConfig& m, Rng& rng, const Point& not_this) {
  for (int i = 0; i < kRetries; ++i) {
    Point p = sample_point(m, rng);
    if (p != not_this) return p;
  }
  fail(Errc::GeneratorExhausted, "could not sample a distinct point");
}

Line sample_line(const ModelConfig& m, Rng& rng) {
  Point p = sample_point(m, rng);
  return join(p, sample_point_ne(m, rng, p));
}

Point sample_point_off(const Line& l, Rng& rng) {
  for (int i = 0; i < kRetries; ++i) {
    Point p = sample_point(l.model(), rng);
    if (!l.contains(p)) return p;
  }
  fail(Errc::GeneratorExhausted, "could not sample a point off the line");
}

Chart sample_chart(const ModelConfig& m, Rng& rng) {
  Line l = sample_line(m, rng);
  Scalar t0 = sample_scalar(m, rng);
  for (int i = 0; i < kRetries; ++i) {
    Scalar t1 = sample_scalar(m, rng);
    if (t1 != t0) return Chart::make(l.at(t0), l.at(t1));
  }
  fail(Errc::GeneratorExhausted, "could not sample a chart");
}

Point sample_chart_point(const Chart& ch, Rng& rng) {
  return chart_point(ch, sample_scalar(ch.model(), rng));
}

}  // namespace dap
