#include "polyid/grid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace polyid {

namespace {

std::string point_str(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Interval make_interval(Point lo, Point hi) {
    if (!componentwise_le(lo, hi))
        fail(Errc::BadArgument, "interval corners not ordered: " + point_str(lo) + " !<= " + point_str(hi));
    return Interval{lo, hi};
}

Edge make_edge(Point p, Point q) {
    coord_t dx = q.x - p.x, dy = q.y - p.y;
    if (!((dx == 0 && (dy == 1 || dy == -1)) || (dy == 0 && (dx == 1 || dx == -1))))
        fail(Errc::BadArgument, "not a unit edge: " + point_str(p) + "-" + point_str(q));
    return p < q ? Edge{p, q} : Edge{q, p};
}

std::array<Edge, 4> Cell::edge_array() const {
    Point a = anchor;
    return {make_edge(a, {a.x + 1, a.y}), make_edge(a, {a.x, a.y + 1}),
            make_edge({a.x + 1, a.y}, {a.x + 1, a.y + 1}),
            make_edge({a.x, a.y + 1}, {a.x + 1, a.y + 1})};
}

Polyomino Polyomino::from_cells(std::vector<Cell> cells) {
    if (cells.empty()) fail(Errc::EmptyInput, "a polyomino needs at least one cell");
    sort_unique(cells);
    for (const Cell& c : cells)
        if (c.anchor.x < 1 || c.anchor.y < 1)
            fail(Errc::BadArgument, "cell anchor below (1,1): " + point_str(c.anchor));

    // Edge-connectivity over the four orthogonal neighbours.
    std::set<Point> todo;
    for (const Cell& c : cells) todo.insert(c.anchor);
    std::vector<Point> stack{cells.front().anchor};
    todo.erase(cells.front().anchor);
    while (!stack.empty()) {
        Point a = stack.back();
        stack.pop_back();
        for (Point n : {Point{a.x + 1, a.y}, Point{a.x - 1, a.y}, Point{a.x, a.y + 1}, Point{a.x, a.y - 1}}) {
            auto it = todo.find(n);
            if (it != todo.end()) {
                todo.erase(it);
                stack.push_back(n);
            }
        }
    }
    if (!todo.empty())
        fail(Errc::Disconnected, "cell " + point_str(*todo.begin()) + " not reachable from cell " +
                                     point_str(cells.front().anchor));

    Polyomino p;
    p.cells_ = std::move(cells);
    for (const Cell& c : p.cells_) {
        for (Point v : c.vertex_array()) p.vertices_.push_back(v);
        for (const Edge& e : c.edge_array()) p.edges_.push_back(e);
    }
    sort_unique(p.vertices_);
    sort_unique(p.edges_);
    p.box_ = Interval{p.vertices_.front(), p.vertices_.front()};
    for (Point v : p.vertices_) {
        p.box_.lo.x = std::min(p.box_.lo.x, v.x);
        p.box_.lo.y = std::min(p.box_.lo.y, v.y);
        p.box_.hi.x = std::max(p.box_.hi.x, v.x);
        p.box_.hi.y = std::max(p.box_.hi.y, v.y);
    }
    return p;
}

bool Polyomino::has_cell(Point anchor) const {
    return std::binary_search(cells_.begin(), cells_.end(), Cell{anchor});
}

bool Polyomino::has_vertex(Point v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Polyomino::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Polyomino::cell_membership(Point v) const {
    int n = 0;
    for (Point a : {Point{v.x - 1, v.y - 1}, Point{v.x, v.y - 1}, Point{v.x - 1, v.y}, Point{v.x, v.y}})
        if (has_cell(a)) ++n;
    return n;
}

Polyomino translate(const Polyomino& p, coord_t dx, coord_t dy) {
    std::vector<Cell> cells;
    cells.reserve(p.cells().size());
    for (const Cell& c : p.cells())
        cells.push_back(Cell{{checked_add(c.anchor.x, dx), checked_add(c.anchor.y, dy)}});
    return Polyomino::from_cells(std::move(cells));
}

Polyomino normalize(const Polyomino& p) {
    Point lo = p.bounding_box().lo;
    return translate(p, 1 - lo.x, 1 - lo.y);
}

Polyomino reflect(const Polyomino& p, bool flip_x, bool flip_y) {
    Interval box = p.bounding_box();
    coord_t xsum = box.lo.x + box.hi.x - 1;  // anchor mirror: column lo <-> column hi-1
    coord_t ysum = box.lo.y + box.hi.y - 1;
    std::vector<Cell> cells;
    cells.reserve(p.cells().size());
    for (const Cell& c : p.cells())
        cells.push_back(Cell{{flip_x ? xsum - c.anchor.x : c.anchor.x,
                              flip_y ? ysum - c.anchor.y : c.anchor.y}});
    return Polyomino::from_cells(std::move(cells));
}

namespace {

bool runs_contiguous(const Polyomino& p, bool per_row) {
    std::map<coord_t, std::pair<coord_t, coord_t>> extent;  // line -> (min, max)
    std::map<coord_t, coord_t> count;
    for (const Cell& c : p.cells()) {
        coord_t line = per_row ? c.anchor.y : c.anchor.x;
        coord_t pos = per_row ? c.anchor.x : c.anchor.y;
        auto [it, fresh] = extent.emplace(line, std::make_pair(pos, pos));
        if (!fresh) {
            it->second.first = std::min(it->second.first, pos);
            it->second.second = std::max(it->second.second, pos);
        }
        ++count[line];
    }
    for (const auto& [line, ext] : extent)
        if (ext.second - ext.first + 1 != count[line]) return false;
    return true;
}

// Lower-set test: every cell dominated by a present cell is present. Equivalent to
// being a bottom-left-justified staircase with non-increasing column heights.
bool is_young_diagram(const Polyomino& p) {
    for (const Cell& c : p.cells())
        for (coord_t x = 1; x <= c.anchor.x; ++x)
            for (coord_t y = 1; y <= c.anchor.y; ++y)
                if (!p.has_cell({x, y})) return false;
    return true;
}

bool is_ladder_shape(const Polyomino& p) {
    Polyomino n = normalize(p);
    for (bool fx : {false, true})
        for (bool fy : {false, true})
            if (is_young_diagram(reflect(n, fx, fy))) return true;
    return false;
}

}  // namespace

int complement_component_count(const Polyomino& p) {
    Interval box = p.bounding_box();
    coord_t x0 = box.lo.x - 1, x1 = box.hi.x;  // cell anchors of the grown box
    coord_t y0 = box.lo.y - 1, y1 = box.hi.y;
    std::set<Point> rest;
    for (coord_t x = x0; x <= x1; ++x)
        for (coord_t y = y0; y <= y1; ++y)
            if (!p.has_cell({x, y})) rest.insert({x, y});
    int components = 0;
    while (!rest.empty()) {
        ++components;
        std::vector<Point> stack{*rest.begin()};
        rest.erase(rest.begin());
        while (!stack.empty()) {
            Point a = stack.back();
            stack.pop_back();
            for (Point n : {Point{a.x + 1, a.y}, Point{a.x - 1, a.y}, Point{a.x, a.y + 1}, Point{a.x, a.y - 1}}) {
                auto it = rest.find(n);
                if (it != rest.end()) {
                    rest.erase(it);
                    stack.push_back(n);
                }
            }
        }
    }
    return components;
}

ClassifyFlags classify(const Polyomino& p) {
    ClassifyFlags f;
    f.row_convex = runs_contiguous(p, /*per_row=*/true);
    f.column_convex = runs_contiguous(p, /*per_row=*/false);
    f.convex = f.row_convex && f.column_convex;
    f.simple = complement_component_count(p) == 1;
    Interval box = p.bounding_box();
    f.rectangle = static_cast<coord_t>(p.cells().size()) ==
                  checked_mul(box.hi.x - box.lo.x, box.hi.y - box.lo.y);
    f.one_sided_ladder = f.simple && is_ladder_shape(p);
    return f;
}

CornerReport corner_report(const Polyomino& p) {
    CornerReport r;
    for (Point v : p.vertices()) {
        switch (p.cell_membership(v)) {
            case 1: r.outside.push_back(v); break;
            case 3: r.inside.push_back(v); break;
            case 4: r.interior.push_back(v); break;
            default: break;  // membership 2: plain boundary
        }
        if (p.cell_membership(v) != 4) r.boundary.push_back(v);
    }
    for (const Cell& c : p.cells()) {
        bool interior_cell = true;
        for (Point v : c.vertex_array())
            if (p.cell_membership(v) != 4) interior_cell = false;
        if (!interior_cell) r.boundary_cells.push_back(c);
    }
    return r;
}

namespace {

// Boundary edges are the unit edges adjacent to exactly one cell of P.
bool is_boundary_edge(const Polyomino& p, const Edge& e) {
    int adj = 0;
    if (e.a.y == e.b.y) {  // horizontal: cells below and above
        adj = p.has_cell({e.a.x, e.a.y - 1}) + p.has_cell({e.a.x, e.a.y});
    } else {  // vertical: cells left and right
        adj = p.has_cell({e.a.x - 1, e.a.y}) + p.has_cell({e.a.x, e.a.y});
    }
    return adj == 1;
}

// Cyclic list of boundary-polygon corner vertices, starting at the smallest boundary
// vertex and walking along the bottom edge first. Valid for simply connected shapes
// without pinch vertices, which covers every staircase region.
std::vector<Point> boundary_corners(const Polyomino& p) {
    std::set<Edge> boundary;
    for (const Edge& e : p.edges())
        if (is_boundary_edge(p, e)) boundary.insert(e);

    auto neighbors = [&](Point v) {
        std::vector<Point> out;
        for (Point n : {Point{v.x + 1, v.y}, Point{v.x - 1, v.y}, Point{v.x, v.y + 1}, Point{v.x, v.y - 1}})
            if (boundary.count(Edge{std::min(v, n), std::max(v, n)})) out.push_back(n);
        return out;
    };

    Point start = boundary.begin()->a;  // smallest endpoint of the smallest edge
    std::vector<Point> poly{start};
    Point prev = start;
    Point cur{start.x + 1, start.y};  // start corner: walk right along the bottom
    while (cur != start) {
        poly.push_back(cur);
        std::vector<Point> nb = neighbors(cur);
        Point next = nb.front() == prev ? nb.back() : nb.front();
        prev = cur;
        cur = next;
    }

    std::vector<Point> corners;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        Point before = poly[(i + n - 1) % n], at = poly[i], after = poly[(i + 1) % n];
        bool in_h = before.y == at.y, out_h = at.y == after.y;
        if (in_h != out_h) corners.push_back(at);
    }
    return corners;
}

}  // namespace

std::optional<LadderCertificate> ladder_certificate(const Polyomino& p) {
    if (complement_component_count(p) != 1 || !is_ladder_shape(p)) return std::nullopt;

    std::vector<Point> corners = boundary_corners(p);
    Interval box = p.bounding_box();
    std::array<Point, 4> box_corners{box.lo, box.lower_right(), box.upper_left(), box.hi};
    std::vector<Point> present;
    for (Point bc : box_corners)
        if (std::find(corners.begin(), corners.end(), bc) != corners.end()) present.push_back(bc);

    // The steps cut off exactly one box corner; the base sits diagonally opposite it.
    // A rectangle keeps all four, where the choice is immaterial: use the lower left.
    Point base = box.lo;
    if (present.size() == 3) {
        for (Point bc : box_corners)
            if (std::find(present.begin(), present.end(), bc) == present.end())
                base = Point{box.lo.x + box.hi.x - bc.x, box.lo.y + box.hi.y - bc.y};
    }

    auto it = std::find(corners.begin(), corners.end(), base);
    std::rotate(corners.begin(), it, corners.end());
    return LadderCertificate{std::vector<Point>(corners.begin() + 1, corners.end())};
}

std::vector<Cell> ladder_cells(const LadderCertificate& cert) {
    const std::vector<Point>& seq = cert.defining_sequence;
    if (seq.size() < 3) fail(Errc::BadArgument, "defining sequence too short");
    Point base = vertical_position(seq[0], seq[1]) ? Point{seq.back().x, seq.front().y}
                                                   : Point{seq.front().x, seq.back().y};
    std::vector<Point> poly{base};
    poly.insert(poly.end(), seq.begin(), seq.end());

    Interval box{poly.front(), poly.front()};
    for (Point v : poly) {
        box.lo.x = std::min(box.lo.x, v.x);
        box.lo.y = std::min(box.lo.y, v.y);
        box.hi.x = std::max(box.hi.x, v.x);
        box.hi.y = std::max(box.hi.y, v.y);
    }

    // Parity fill: a cell is inside when a ray from its centre to the right crosses
    // an odd number of vertical polygon edges.
    std::vector<Cell> cells;
    size_t n = poly.size();
    for (coord_t x = box.lo.x; x < box.hi.x; ++x) {
        for (coord_t y = box.lo.y; y < box.hi.y; ++y) {
            int crossings = 0;
            for (size_t i = 0; i < n; ++i) {
                Point a = poly[i], b = poly[(i + 1) % n];
                if (a.x != b.x) continue;
                if (a.x < x + 1) continue;
                coord_t ylo = std::min(a.y, b.y), yhi = std::max(a.y, b.y);
                if (ylo <= y && y < yhi) ++crossings;
            }
            if (crossings % 2 == 1) cells.push_back(Cell{{x, y}});
        }
    }
    return cells;
}

}  // namespace polyid
