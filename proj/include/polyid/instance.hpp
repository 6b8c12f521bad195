#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "polyid/grid.hpp"
#include "polyid/intervals.hpp"

namespace polyid {

/// A polyomino plus, when the file declared a hole section, the ambient
/// rectangle and removed shape it was cut from.
struct Instance {
    Polyomino p;
    std::optional<NonsimpleContext> ctx;
};

/// ASCII grid, '#' cell present, '.' absent, first line = top row; optional
/// `Q: x,y` lines list the removed cells. With a Q section the grid rectangle
/// is the ambient rect and P must equal rect minus Q exactly. Context-free
/// polyominoes come back normalized.
Instance parse_instance(const std::string& text);

/// Canonical text: bounding grid rows top to bottom, then sorted `Q: x,y`
/// lines. emit(parse(t)) is a fixed point for every parseable t.
std::string emit_instance(const Instance& inst);

/// Convex polyomino inside [1,width] x [1,height] from seeded valley/hill
/// row-run profiles; same seed, same shape.
Polyomino random_convex_polyomino(coord_t width, coord_t height, std::uint64_t seed);

/// Simple polyomino inside the box, grown one frontier cell at a time and
/// redrawn until the complement is connected.
Polyomino random_simple_polyomino(coord_t width, coord_t height, std::uint64_t seed);

/// width x height rect minus a random convex Q placed strictly inside, so the
/// result always admits the special interval. Dims below 3x3 leave no
/// interior (InfeasibleDims).
Instance random_instance(coord_t width, coord_t height, std::uint64_t seed);

}  // namespace polyid
