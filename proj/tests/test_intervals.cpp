#include <doctest.h>

#include <algorithm>
#include <set>

#include "polyid/intervals.hpp"
#include "support/oracles.hpp"

using namespace polyid;

namespace {

Polyomino make(std::initializer_list<Point> anchors) {
    std::vector<Cell> cells;
    for (Point a : anchors) cells.push_back(Cell{a});
    return Polyomino::from_cells(std::move(cells));
}

Polyomino box_minus(coord_t w, coord_t h, std::initializer_list<Point> holes) {
    std::vector<Cell> cells;
    for (coord_t x = 1; x <= w; ++x)
        for (coord_t y = 1; y <= h; ++y)
            if (std::find(holes.begin(), holes.end(), Point{x, y}) == holes.end())
                cells.push_back(cell(x, y));
    return Polyomino::from_cells(std::move(cells));
}

// 3x3 box with the centre cell removed; ambient rectangle and hole alongside.
const Interval kRect1 = Interval{{1, 1}, {4, 4}};
Polyomino ring() { return box_minus(3, 3, {{2, 2}}); }
Polyomino hole1() { return make({{2, 2}}); }

// 5x5 box minus a plus pentomino centred on (3,3).
const Interval kRect2 = Interval{{1, 1}, {6, 6}};
Polyomino shape2() { return box_minus(5, 5, {{3, 2}, {2, 3}, {3, 3}, {4, 3}, {3, 4}}); }
Polyomino hole2() { return make({{3, 2}, {2, 3}, {3, 3}, {4, 3}, {3, 4}}); }

}  // namespace

TEST_CASE("inner interval membership") {
    Polyomino r = ring();
    CHECK(is_inner_interval(r, Interval{{1, 1}, {2, 2}}));
    CHECK(is_inner_interval(r, Interval{{1, 1}, {4, 2}}));
    CHECK_FALSE(is_inner_interval(r, Interval{{1, 1}, {4, 4}}));  // would cover the hole
    CHECK_FALSE(is_inner_interval(r, Interval{{2, 2}, {3, 3}}));  // the hole itself
    CHECK_FALSE(is_inner_interval(r, Interval{{1, 1}, {4, 1}}));  // degenerate
    CHECK_FALSE(is_inner_interval(r, Interval{{1, 1}, {1, 1}}));
}

TEST_CASE("inner interval counts") {
    CHECK(inner_intervals(make({{1, 1}})).size() == 1);
    CHECK(inner_intervals(make({{1, 1}, {2, 1}})).size() == 3);
    CHECK(inner_intervals(make({{1, 1}, {1, 2}})).size() == 3);
    CHECK(inner_intervals(ring()).size() == 20);
    CHECK(inner_intervals(box_minus(3, 3, {})).size() == 36);

    auto all = inner_intervals(ring());
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(all.front().box == Interval{{1, 1}, {2, 2}});
    InnerInterval first = all.front();
    CHECK(first.lower_left() == Point{1, 1});
    CHECK(first.upper_right() == Point{2, 2});
    CHECK(first.upper_left() == Point{1, 2});
    CHECK(first.lower_right() == Point{2, 1});
}

TEST_CASE("maximal edge runs of the ring") {
    EdgeIntervals e = maximal_edge_intervals(ring());
    REQUIRE(e.horizontal.size() == 4);
    REQUIRE(e.vertical.size() == 4);
    for (coord_t y = 1; y <= 4; ++y) {
        CHECK(e.horizontal[y - 1].span == Interval{{1, y}, {4, y}});
        CHECK(e.horizontal[y - 1].orientation == Orientation::horizontal);
    }
    for (coord_t x = 1; x <= 4; ++x)
        CHECK(e.vertical[x - 1].span == Interval{{x, 1}, {x, 4}});
}

TEST_CASE("maximal edge runs split where both neighbouring cells are missing") {
    EdgeIntervals e = maximal_edge_intervals(shape2());
    REQUIRE(e.horizontal.size() == 8);
    REQUIRE(e.vertical.size() == 8);
    CHECK(e.horizontal[0].span == Interval{{1, 1}, {6, 1}});
    CHECK(e.horizontal[1].span == Interval{{1, 2}, {6, 2}});
    CHECK(e.horizontal[2].span == Interval{{1, 3}, {3, 3}});
    CHECK(e.horizontal[3].span == Interval{{4, 3}, {6, 3}});
    CHECK(e.horizontal[4].span == Interval{{1, 4}, {3, 4}});
    CHECK(e.horizontal[5].span == Interval{{4, 4}, {6, 4}});
    CHECK(e.horizontal[6].span == Interval{{1, 5}, {6, 5}});
    CHECK(e.horizontal[7].span == Interval{{1, 6}, {6, 6}});
    CHECK(e.vertical[1].span == Interval{{2, 1}, {2, 6}});
    CHECK(e.vertical[2].span == Interval{{3, 1}, {3, 3}});
    CHECK(e.vertical[3].span == Interval{{3, 4}, {3, 6}});
}

TEST_CASE("special interval and its corner") {
    SpecialInterval s1 = special_interval(kRect1, hole1());
    CHECK(s1.e == Point{2, 2});
    CHECK(s1.box == Interval{{1, 1}, {2, 2}});

    SpecialInterval s2 = special_interval(kRect2, hole2());
    CHECK(s2.e == Point{2, 3});
    CHECK(s2.box == Interval{{1, 1}, {2, 3}});

    auto code_of = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::BadArgument;
    };
    CHECK(code_of([] { special_interval(Interval{{1, 1}, {4, 4}}, make({{1, 1}})); }) ==
          Errc::BoundaryTouch);
    CHECK(code_of([] { special_interval(Interval{{1, 1}, {4, 4}}, make({{3, 3}})); }) ==
          Errc::BoundaryTouch);
    CHECK(code_of([] { special_interval(Interval{{1, 1}, {6, 6}},
                                        translate(box_minus(3, 3, {{2, 2}}), 1, 1)); }) ==
          Errc::NotConvex);
    CHECK(code_of([] { special_interval(Interval{{1, 1}, {3, 3}}, make({{5, 5}})); }) ==
          Errc::BadArgument);
}

TEST_CASE("interval family indexing") {
    LambdaFamily f = lambda_family(ring(), NonsimpleContext{kRect1, hole1()});
    REQUIRE(f.size() == 9);
    CHECK(f.special().has_value());
    CHECK(f.member(0) == Interval{{1, 1}, {2, 2}});
    CHECK(f.member(1) == Interval{{1, 1}, {4, 1}});
    CHECK(f.member(4) == Interval{{1, 4}, {4, 4}});
    CHECK(f.member(5) == Interval{{1, 1}, {1, 4}});
    CHECK(f.member(8) == Interval{{4, 1}, {4, 4}});
    CHECK(f.member_contains(0, {1, 2}));
    CHECK(f.member_contains(0, {2, 2}));
    CHECK_FALSE(f.member_contains(0, {3, 1}));
    CHECK(f.member_contains(1, {3, 1}));
    CHECK_FALSE(f.member_contains(1, {3, 2}));

    LambdaFamily f2 = lambda_family(shape2(), NonsimpleContext{kRect2, hole2()});
    CHECK(f2.size() == 17);

    LambdaFamily simple = lambda_family(box_minus(2, 2, {}), std::nullopt);
    CHECK(simple.size() == 6);
    CHECK_FALSE(simple.special().has_value());
    CHECK(simple.member(0) == Interval{{1, 1}, {3, 1}});
    CHECK(simple.member(3) == Interval{{1, 1}, {1, 3}});
}

TEST_CASE("family construction rejects a bad hole description") {
    auto code_of = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::BadArgument;
    };
    // Hole overlaps the shape.
    CHECK(code_of([] { lambda_family(box_minus(3, 3, {}), NonsimpleContext{kRect1, hole1()}); }) ==
          Errc::InconsistentQ);
    // Shape is missing a cell nobody claims.
    CHECK(code_of([] {
              lambda_family(box_minus(3, 3, {{2, 2}, {3, 3}}), NonsimpleContext{kRect1, hole1()});
          }) == Errc::InconsistentQ);
}

TEST_CASE("complement of a convex shape in its box") {
    CHECK(complement_decomposition(box_minus(3, 2, {})).empty());
    CHECK(complement_decomposition(make({{1, 1}})).empty());

    auto l = complement_decomposition(make({{1, 1}, {2, 1}, {1, 2}}));
    REQUIRE(l.size() == 1);
    CHECK(l[0].cells == make({{2, 2}}));
    CHECK(l[0].ambient_corner == Point{3, 3});

    auto plus = complement_decomposition(hole2());
    REQUIRE(plus.size() == 4);
    CHECK(plus[0].ambient_corner == Point{2, 2});
    CHECK(plus[1].ambient_corner == Point{2, 5});
    CHECK(plus[2].ambient_corner == Point{5, 2});
    CHECK(plus[3].ambient_corner == Point{5, 5});
    for (const auto& comp : plus) CHECK(comp.cells.cells().size() == 1);

    auto stairs = complement_decomposition(
        make({{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {1, 3}}));
    REQUIRE(stairs.size() == 1);
    CHECK(stairs[0].cells == make({{2, 3}, {3, 2}, {3, 3}}));
    CHECK(stairs[0].ambient_corner == Point{4, 4});
    CHECK(ladder_cells(stairs[0].ladder).size() == 3);

    auto s = complement_decomposition(make({{1, 1}, {2, 1}, {2, 2}, {3, 2}}));
    REQUIRE(s.size() == 2);
    CHECK(s[0].ambient_corner == Point{1, 3});
    CHECK(s[1].ambient_corner == Point{4, 1});

    CHECK_THROWS_AS(complement_decomposition(ring()), Error);
}

TEST_CASE("interval sweep over the 3x3 box") {
    for (const auto& cells : polyid::testing::connected_subsets(3, 3)) {
        Polyomino p = Polyomino::from_cells(cells);
        Interval bb = p.bounding_box();

        // Inner interval listing against the direct walk.
        auto listed = inner_intervals(p);
        std::set<Interval> seen;
        for (const InnerInterval& i : listed) seen.insert(i.box);
        CHECK(seen.size() == listed.size());
        size_t expected = 0;
        for (coord_t x0 = bb.lo.x; x0 <= bb.hi.x; ++x0)
            for (coord_t y0 = bb.lo.y; y0 <= bb.hi.y; ++y0)
                for (coord_t x1 = x0; x1 <= bb.hi.x; ++x1)
                    for (coord_t y1 = y0; y1 <= bb.hi.y; ++y1) {
                        bool inner = polyid::testing::inner_interval_oracle(p, {x0, y0}, {x1, y1});
                        CHECK(inner == is_inner_interval(p, Interval{{x0, y0}, {x1, y1}}));
                        if (inner) {
                            ++expected;
                            CHECK(seen.count(Interval{{x0, y0}, {x1, y1}}) == 1);
                        }
                    }
        CHECK(expected == listed.size());

        // Edge runs: contained in the edge set, maximal, pairwise disjoint, and
        // jointly covering; every vertex lies on exactly one run per direction.
        EdgeIntervals runs = maximal_edge_intervals(p);
        size_t covered = 0;
        for (const EdgeIntervalMax& m : runs.horizontal) {
            CHECK(m.span.horizontal());
            CHECK(m.span.lo.x < m.span.hi.x);
            for (coord_t x = m.span.lo.x; x < m.span.hi.x; ++x) {
                CHECK(p.has_edge(Edge{{x, m.span.lo.y}, {x + 1, m.span.lo.y}}));
                ++covered;
            }
            CHECK_FALSE(p.has_edge(Edge{{m.span.lo.x - 1, m.span.lo.y}, m.span.lo}));
            CHECK_FALSE(p.has_edge(Edge{m.span.hi, {m.span.hi.x + 1, m.span.hi.y}}));
        }
        for (const EdgeIntervalMax& m : runs.vertical) {
            CHECK(m.span.vertical());
            for (coord_t y = m.span.lo.y; y < m.span.hi.y; ++y) {
                CHECK(p.has_edge(Edge{{m.span.lo.x, y}, {m.span.lo.x, y + 1}}));
                ++covered;
            }
            CHECK_FALSE(p.has_edge(Edge{{m.span.lo.x, m.span.lo.y - 1}, m.span.lo}));
            CHECK_FALSE(p.has_edge(Edge{m.span.hi, {m.span.hi.x, m.span.hi.y + 1}}));
        }
        CHECK(covered == p.edges().size());
        for (Point v : p.vertices()) {
            int on_h = 0, on_v = 0;
            for (const EdgeIntervalMax& m : runs.horizontal) on_h += m.span.contains(v);
            for (const EdgeIntervalMax& m : runs.vertical) on_v += m.span.contains(v);
            CHECK(on_h == 1);
            CHECK(on_v == 1);
        }

        // Convex shapes decompose into at most four staircase components that
        // partition the box complement.
        if (classify(p).convex) {
            auto comps = complement_decomposition(p);
            CHECK(comps.size() <= 4);
            size_t total = 0;
            std::set<Point> corners;
            for (const auto& comp : comps) {
                total += comp.cells.cells().size();
                corners.insert(comp.ambient_corner);
                for (const Cell& c : comp.cells.cells()) {
                    CHECK_FALSE(p.has_cell(c.anchor));
                    CHECK(bb.contains(c.anchor));
                }
            }
            CHECK(corners.size() == comps.size());
            CHECK(total + p.cells().size() ==
                  static_cast<size_t>((bb.hi.x - bb.lo.x) * (bb.hi.y - bb.lo.y)));
        }
    }
}
