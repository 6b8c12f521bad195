#ifndef POLYID_GRID_HPP
#define POLYID_GRID_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "polyid/errors.hpp"

namespace polyid {

using coord_t = std::int64_t;

/// Lattice point (x = column, y = row). Polyomino data keeps both coordinates >= 1.
struct Point {
    coord_t x = 0;
    coord_t y = 0;

    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

constexpr bool componentwise_le(Point a, Point b) { return a.x <= b.x && a.y <= b.y; }
constexpr bool componentwise_lt(Point a, Point b) { return a.x < b.x && a.y < b.y; }

/// a and b are in horizontal (resp. vertical) position when they share y (resp. x).
constexpr bool horizontal_position(Point a, Point b) { return a.y == b.y; }
constexpr bool vertical_position(Point a, Point b) { return a.x == b.x; }

/// Axis-aligned lattice box [lo, hi]. Degenerate boxes (lo.x == hi.x or lo.y == hi.y)
/// represent edge intervals.
struct Interval {
    Point lo;
    Point hi;

    friend constexpr auto operator<=>(const Interval&, const Interval&) = default;

    bool contains(Point p) const { return componentwise_le(lo, p) && componentwise_le(p, hi); }
    bool horizontal() const { return lo.y == hi.y; }
    bool vertical() const { return lo.x == hi.x; }
    bool degenerate() const { return horizontal() || vertical(); }

    Point upper_left() const { return {lo.x, hi.y}; }
    Point lower_right() const { return {hi.x, lo.y}; }
};

Interval make_interval(Point lo, Point hi);  // validates lo <= hi

/// Unit lattice edge, endpoints normalized so a < b.
struct Edge {
    Point a;
    Point b;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(Point p, Point q);

/// Unit cell [anchor, anchor+(1,1)], identified by its lower-left corner.
struct Cell {
    Point anchor;

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;

    std::array<Point, 4> vertex_array() const {
        return {Point{anchor.x, anchor.y}, Point{anchor.x + 1, anchor.y},
                Point{anchor.x, anchor.y + 1}, Point{anchor.x + 1, anchor.y + 1}};
    }
    std::array<Edge, 4> edge_array() const;
};

inline Cell cell(coord_t x, coord_t y) { return Cell{Point{x, y}}; }

/// Finite edge-connected set of cells together with its derived vertex and edge sets.
/// Immutable after construction; all member vectors are sorted and duplicate-free.
class Polyomino {
public:
    /// Validates non-emptiness, anchors >= (1,1) and edge-connectivity.
    static Polyomino from_cells(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_cell(Point anchor) const;
    bool has_vertex(Point v) const;
    bool has_edge(const Edge& e) const;

    /// Minimal interval containing the polyomino, in vertex coordinates.
    Interval bounding_box() const { return box_; }

    /// Number of cells of this polyomino the vertex belongs to (0..4).
    int cell_membership(Point v) const;

    friend bool operator==(const Polyomino& a, const Polyomino& b) { return a.cells_ == b.cells_; }

private:
    Polyomino() = default;

    std::vector<Cell> cells_;
    std::vector<Point> vertices_;
    std::vector<Edge> edges_;
    Interval box_{};
};

/// Translates so the minimal anchor becomes (1,1). Classifications are shift-invariant.
Polyomino normalize(const Polyomino& p);

/// Translate by (dx,dy); target anchors must stay >= (1,1).
Polyomino translate(const Polyomino& p, coord_t dx, coord_t dy);

/// Reflect across vertical/horizontal axes of the bounding box and renormalize.
Polyomino reflect(const Polyomino& p, bool flip_x, bool flip_y);

struct ClassifyFlags {
    bool row_convex = false;
    bool column_convex = false;
    bool convex = false;
    bool simple = false;
    bool rectangle = false;
    bool one_sided_ladder = false;
};

ClassifyFlags classify(const Polyomino& p);

/// Number of edge-connected components of the complement cells inside the bounding
/// box grown by one cell on each side. 1 means simple.
int complement_component_count(const Polyomino& p);

/// Vertex taxonomy by cell-membership count: outside = 1, inside = 3, interior = 4.
/// Vertices in exactly two cells are plain boundary and appear in none of the three
/// corner sets. boundary = V(P) minus interior.
struct CornerReport {
    std::vector<Point> outside;
    std::vector<Point> inside;
    std::vector<Point> interior;
    std::vector<Point> boundary;
    std::vector<Cell> boundary_cells;
};

CornerReport corner_report(const Polyomino& p);

/// Boundary corner vertices of a staircase-shaped polyomino, listed along the
/// boundary with the base corner removed; consecutive entries alternate between
/// horizontal and vertical position.
struct LadderCertificate {
    std::vector<Point> defining_sequence;
};

std::optional<LadderCertificate> ladder_certificate(const Polyomino& p);

/// Cells of the region bounded by the defining sequence plus its implied base corner.
std::vector<Cell> ladder_cells(const LadderCertificate& cert);

}  // namespace polyid

#endif
