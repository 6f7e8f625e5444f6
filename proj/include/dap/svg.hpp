#pragma once

#include <string>

#include "dap/trace.hpp"

namespace dap {

struct FigureOptions {
  int canvas = 480;  // square canvas, pixels
};

/// Renders a construction record as a self-contained SVG document: one
/// element per step (labeled circles for points, segments for lines, dashed
/// for parallel-transported lines) plus the full record embedded as JSON
/// metadata. Byte-identical output for identical inputs. Exact coordinates
/// are projected to the canvas at render time only; gf points are drawn on
/// the p x p lattice, rational and quaternion coordinates by their real part.
std::string render_figure(const Trace& trace, const FigureOptions& opts = {});

/// Recovers the embedded construction record from a rendered figure.
std::string extract_trace_json(std::string_view svg);

// Figure scenes on the standard chart O=(0,0), I=(1,0). Scalars are chart
// coordinates of the inputs; preconditions are those of the construction.
Trace figure_add(const ModelConfig& m, const Scalar& a, const Scalar& b,
                 std::uint64_t aux_seed = 0);
Trace figure_mul(const ModelConfig& m, const Scalar& a, const Scalar& b,
                 std::uint64_t aux_seed = 0);
Trace figure_ratio2(const ModelConfig& m, const Scalar& a, const Scalar& b,
                    std::uint64_t aux_seed = 0);
Trace figure_ratio3(const ModelConfig& m, const Scalar& a, const Scalar& b, const Scalar& c,
                    std::uint64_t aux_seed = 0);

struct ProjectionScene {
  // Defaults: project onto the diagonal through the origin, vertically.
  std::string target_base = "0,0";
  std::string target_dir = "1,1";
  std::string direction = "0,1";
};
/// Projects O, I and the points at coordinates a, b from the standard chart
/// onto the target line; connectors carry parallelism checks.
Trace figure_pproj(const ModelConfig& m, const Scalar& a, const Scalar& b,
                   const ProjectionScene& scene = {});

/// Standard chart plus images of O, I, A, B under the translation by v.
Trace figure_translation(const ModelConfig& m, const Scalar& a, const Scalar& b, const Point& v);
/// Standard chart plus images under the dilatation (center, factor).
Trace figure_dilatation(const ModelConfig& m, const Scalar& a, const Scalar& b,
                        const Point& center, const Scalar& factor);

}  // namespace dap
