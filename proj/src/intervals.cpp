#include "polyid/intervals.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace polyid {

namespace {

std::string point_str(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

bool is_inner_interval(const Polyomino& p, const Interval& box) {
    if (!componentwise_lt(box.lo, box.hi)) return false;
    for (coord_t x = box.lo.x; x < box.hi.x; ++x)
        for (coord_t y = box.lo.y; y < box.hi.y; ++y)
            if (!p.has_cell({x, y})) return false;
    return true;
}

std::vector<InnerInterval> inner_intervals(const Polyomino& p) {
    Interval bb = p.bounding_box();
    coord_t w = bb.hi.x - bb.lo.x, h = bb.hi.y - bb.lo.y;

    // cum[i][j] = number of cells of P in the box [bb.lo, bb.lo + (i,j)].
    std::vector<std::vector<int>> cum(w + 1, std::vector<int>(h + 1, 0));
    for (coord_t i = 1; i <= w; ++i)
        for (coord_t j = 1; j <= h; ++j)
            cum[i][j] = cum[i - 1][j] + cum[i][j - 1] - cum[i - 1][j - 1] +
                        (p.has_cell({bb.lo.x + i - 1, bb.lo.y + j - 1}) ? 1 : 0);

    std::vector<InnerInterval> out;
    for (coord_t x0 = 0; x0 < w; ++x0)
        for (coord_t y0 = 0; y0 < h; ++y0)
            for (coord_t x1 = x0 + 1; x1 <= w; ++x1)
                for (coord_t y1 = y0 + 1; y1 <= h; ++y1) {
                    int inside = cum[x1][y1] - cum[x0][y1] - cum[x1][y0] + cum[x0][y0];
                    if (inside == (x1 - x0) * (y1 - y0))
                        out.push_back(InnerInterval{Interval{{bb.lo.x + x0, bb.lo.y + y0},
                                                             {bb.lo.x + x1, bb.lo.y + y1}}});
                }
    std::sort(out.begin(), out.end());
    return out;
}

EdgeIntervals maximal_edge_intervals(const Polyomino& p) {
    Interval bb = p.bounding_box();
    EdgeIntervals out;
    for (coord_t y = bb.lo.y; y <= bb.hi.y; ++y) {
        coord_t x = bb.lo.x;
        while (x < bb.hi.x) {
            if (!p.has_edge(Edge{{x, y}, {x + 1, y}})) {
                ++x;
                continue;
            }
            coord_t start = x;
            while (x < bb.hi.x && p.has_edge(Edge{{x, y}, {x + 1, y}})) ++x;
            out.horizontal.push_back({Interval{{start, y}, {x, y}}, Orientation::horizontal});
        }
    }
    for (coord_t x = bb.lo.x; x <= bb.hi.x; ++x) {
        coord_t y = bb.lo.y;
        while (y < bb.hi.y) {
            if (!p.has_edge(Edge{{x, y}, {x, y + 1}})) {
                ++y;
                continue;
            }
            coord_t start = y;
            while (y < bb.hi.y && p.has_edge(Edge{{x, y}, {x, y + 1}})) ++y;
            out.vertical.push_back({Interval{{x, start}, {x, y}}, Orientation::vertical});
        }
    }
    // Horizontal runs come out line-major in y; vertical runs line-major in x.
    return out;
}

SpecialInterval special_interval(const Interval& rect, const Polyomino& q) {
    if (!componentwise_lt(rect.lo, rect.hi))
        fail(Errc::BadArgument, "ambient rectangle is degenerate");
    for (Point v : q.vertices()) {
        if (!rect.contains(v))
            fail(Errc::BadArgument, "hole vertex " + point_str(v) + " outside the rectangle");
        if (v.x == rect.lo.x || v.x == rect.hi.x || v.y == rect.lo.y || v.y == rect.hi.y)
            fail(Errc::BoundaryTouch,
                 "hole touches the rectangle boundary at " + point_str(v));
    }
    if (!classify(q).convex) fail(Errc::NotConvex, "hole is not convex");

    std::vector<Point> outside = corner_report(q).outside;
    Point e = *std::min_element(outside.begin(), outside.end());
    return SpecialInterval{make_interval(rect.lo, e), e};
}

LambdaFamily::LambdaFamily(std::optional<SpecialInterval> special, EdgeIntervals edges)
    : special_(std::move(special)), edges_(std::move(edges)) {
    if (special_) flat_.push_back(special_->box);
    for (const EdgeIntervalMax& m : edges_.horizontal) flat_.push_back(m.span);
    for (const EdgeIntervalMax& m : edges_.vertical) flat_.push_back(m.span);
}

LambdaFamily lambda_family(const Polyomino& p, const std::optional<NonsimpleContext>& ctx) {
    std::optional<SpecialInterval> special;
    if (ctx) {
        for (coord_t x = ctx->rect.lo.x; x < ctx->rect.hi.x; ++x)
            for (coord_t y = ctx->rect.lo.y; y < ctx->rect.hi.y; ++y)
                if (p.has_cell({x, y}) == ctx->q.has_cell({x, y}))
                    fail(Errc::InconsistentQ,
                         "cell (" + std::to_string(x) + "," + std::to_string(y) +
                             ") is not in exactly one of the shape and the hole");
        if (p.cells().size() + ctx->q.cells().size() !=
            static_cast<size_t>((ctx->rect.hi.x - ctx->rect.lo.x) *
                                (ctx->rect.hi.y - ctx->rect.lo.y)))
            fail(Errc::InconsistentQ, "shape and hole do not tile the rectangle");
        special = special_interval(ctx->rect, ctx->q);
    }
    return LambdaFamily(std::move(special), maximal_edge_intervals(p));
}

std::vector<ComplementComponent> complement_decomposition(const Polyomino& q) {
    if (!classify(q).convex) fail(Errc::NotConvex, "complement decomposition needs a convex shape");

    Interval box = q.bounding_box();
    std::set<Point> rest;
    for (coord_t x = box.lo.x; x < box.hi.x; ++x)
        for (coord_t y = box.lo.y; y < box.hi.y; ++y)
            if (!q.has_cell({x, y})) rest.insert({x, y});

    std::vector<ComplementComponent> out;
    while (!rest.empty()) {
        std::vector<Cell> cells;
        std::vector<Point> stack{*rest.begin()};
        rest.erase(rest.begin());
        while (!stack.empty()) {
            Point a = stack.back();
            stack.pop_back();
            cells.push_back(Cell{a});
            for (Point n : {Point{a.x + 1, a.y}, Point{a.x - 1, a.y}, Point{a.x, a.y + 1},
                            Point{a.x, a.y - 1}}) {
                auto it = rest.find(n);
                if (it != rest.end()) {
                    rest.erase(it);
                    stack.push_back(n);
                }
            }
        }
        Polyomino part = Polyomino::from_cells(std::move(cells));

        std::vector<Point> corners;
        if (part.has_cell(box.lo)) corners.push_back(box.lo);
        if (part.has_cell({box.hi.x - 1, box.lo.y})) corners.push_back(box.lower_right());
        if (part.has_cell({box.lo.x, box.hi.y - 1})) corners.push_back(box.upper_left());
        if (part.has_cell({box.hi.x - 1, box.hi.y - 1})) corners.push_back(box.hi);
        if (corners.size() != 1)
            fail(Errc::BadArgument, "complement component holds " +
                                        std::to_string(corners.size()) + " box corners");

        std::optional<LadderCertificate> cert = ladder_certificate(part);
        if (!cert) fail(Errc::BadArgument, "complement component is not a staircase");
        out.push_back(ComplementComponent{std::move(part), corners.front(), std::move(*cert)});
    }
    std::sort(out.begin(), out.end(),
              [](const ComplementComponent& a, const ComplementComponent& b) {
                  return a.ambient_corner < b.ambient_corner;
              });
    return out;
}

}  // namespace polyid
