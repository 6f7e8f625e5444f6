#pragma once

#include "dap/construct.hpp"
#include "dap/geometry.hpp"
#include "dap/rng.hpp"
#include "dap/scalar.hpp"

namespace dap {

// Random elements for property trials. Rational and quaternion components are
// kept small so exact arithmetic stays word-sized through a construction chain.

Scalar sample_scalar(const ModelConfig& m, Rng& rng);
Scalar sample_nonzero(const ModelConfig& m, Rng& rng);
Point sample_point(const ModelConfig& m, Rng& rng);
/// A point distinct from `not_this`.
Point sample_point_ne(const ModelConfig& m, Rng& rng, const Point& not_this);
Line sample_line(const ModelConfig& m, Rng& rng);
/// Point not incident to l; bounded retries.
Point sample_point_off(const Line& l, Rng& rng);

/// Random line with random marked O != I on it.
Chart sample_chart(const ModelConfig& m, Rng& rng);
/// Random point of the chart line (uniform coordinate in gf).
Point sample_chart_point(const Chart& ch, Rng& rng);

}  // namespace dap
