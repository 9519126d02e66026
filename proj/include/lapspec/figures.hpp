#pragma once

#include <cstdint>
#include <string>

namespace lapspec {

/// Figure kinds:
///   Region  -- the one-disk-plus-sector inclusion region.
///   Polygon -- region R hatched with polygon S drawn on top.
///   Overlay -- Polygon plus eigenvalues of `samples` sampled matrices.
///   Cycloid -- polygon S against the limiting cycloid envelope.
enum class FigureKind { Region, Polygon, Overlay, Cycloid };

/// Render the figure as a standalone 800x500 SVG string. Output bytes are a
/// pure function of the arguments.
std::string render_figure(FigureKind kind, int n, int samples = 0, std::uint64_t seed = 42);

/// render_figure + write to `path`.
void emit_figure(FigureKind kind, int n, const std::string& path, int samples = 0,
                 std::uint64_t seed = 42);

} // namespace lapspec
