#include "polyid/instance.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "polyid/errors.hpp"

namespace polyid {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

bool parse_anchor(const std::string& payload, Point& out) {
    size_t i = 0;
    auto number = [&](coord_t& v) {
        while (i < payload.size() && payload[i] == ' ') ++i;
        size_t start = i;
        while (i < payload.size() && payload[i] >= '0' && payload[i] <= '9') ++i;
        if (i == start || i - start > 9) return false;
        v = 0;
        for (size_t k = start; k < i; ++k) v = v * 10 + (payload[k] - '0');
        return true;
    };
    if (!number(out.x)) return false;
    if (i >= payload.size() || payload[i] != ',') return false;
    ++i;
    if (!number(out.y)) return false;
    while (i < payload.size() && payload[i] == ' ') ++i;
    return i == payload.size();
}

}  // namespace

Instance parse_instance(const std::string& text) {
    std::vector<std::string> rows;
    std::vector<Point> q_anchors;
    for (const std::string& line : split_lines(text)) {
        if (line.empty()) continue;
        if (line.rfind("Q:", 0) == 0) {
            Point a;
            if (!parse_anchor(line.substr(2), a))
                fail(Errc::InconsistentQ, "unreadable hole line '" + line + "'");
            q_anchors.push_back(a);
            continue;
        }
        rows.push_back(line);
    }
    if (rows.empty()) fail(Errc::EmptyInput, "no grid rows");

    size_t width = rows.front().size();
    for (const std::string& row : rows) {
        if (row.size() != width)
            fail(Errc::RaggedGrid, "row lengths " + std::to_string(width) + " and " +
                                       std::to_string(row.size()));
        for (char c : row)
            if (c != '#' && c != '.')
                fail(Errc::RaggedGrid, std::string("grid character '") + c + "'");
    }

    coord_t w = static_cast<coord_t>(width);
    coord_t h = static_cast<coord_t>(rows.size());
    std::vector<Cell> cells;
    for (coord_t y = 1; y <= h; ++y)
        for (coord_t x = 1; x <= w; ++x)
            if (rows[h - y][x - 1] == '#') cells.push_back(cell(x, y));
    if (cells.empty()) fail(Errc::EmptyInput, "no cells present");

    if (q_anchors.empty()) return Instance{normalize(Polyomino::from_cells(cells)), std::nullopt};

    std::set<Point> q_set;
    for (Point a : q_anchors) {
        if (a.x < 1 || a.x > w || a.y < 1 || a.y > h)
            fail(Errc::InconsistentQ, "hole cell " + std::to_string(a.x) + "," +
                                          std::to_string(a.y) + " outside the rect");
        if (rows[h - a.y][a.x - 1] == '#')
            fail(Errc::InconsistentQ, "hole cell " + std::to_string(a.x) + "," +
                                          std::to_string(a.y) + " is present in the grid");
        if (!q_set.insert(a).second)
            fail(Errc::InconsistentQ, "duplicate hole cell " + std::to_string(a.x) + "," +
                                          std::to_string(a.y));
    }
    if (cells.size() + q_set.size() != static_cast<size_t>(w) * static_cast<size_t>(h))
        fail(Errc::InconsistentQ, "grid is not rect minus the listed holes");

    std::vector<Cell> q_cells;
    for (Point a : q_set) q_cells.push_back(Cell{a});
    NonsimpleContext ctx{Interval{Point{1, 1}, Point{w + 1, h + 1}},
                         Polyomino::from_cells(q_cells)};
    return Instance{Polyomino::from_cells(cells), ctx};
}

std::string emit_instance(const Instance& inst) {
    Polyomino p = inst.ctx ? inst.p : normalize(inst.p);
    coord_t w, h;
    if (inst.ctx) {
        if (inst.ctx->rect.lo != Point{1, 1})
            fail(Errc::BadArgument, "context rect must be anchored at (1,1)");
        w = inst.ctx->rect.hi.x - 1;
        h = inst.ctx->rect.hi.y - 1;
    } else {
        Interval box = p.bounding_box();
        w = box.hi.x - 1;
        h = box.hi.y - 1;
    }
    std::string out;
    for (coord_t y = h; y >= 1; --y) {
        for (coord_t x = 1; x <= w; ++x) out.push_back(p.has_cell(Point{x, y}) ? '#' : '.');
        out.push_back('\n');
    }
    if (inst.ctx)
        for (const Cell& c : inst.ctx->q.cells())
            out += "Q: " + std::to_string(c.anchor.x) + "," + std::to_string(c.anchor.y) + "\n";
    return out;
}

namespace {

struct Draws {
    std::mt19937_64 gen;

    explicit Draws(std::uint64_t seed) : gen(seed) {}

    // mt19937_64 is fully specified, so modulo keeps output byte-stable across
    // standard libraries where uniform_int_distribution would not.
    coord_t below(coord_t n) { return static_cast<coord_t>(gen() % static_cast<std::uint64_t>(n)); }
    coord_t in(coord_t lo, coord_t hi) { return lo + below(hi - lo + 1); }
};

}  // namespace

Polyomino random_convex_polyomino(coord_t width, coord_t height, std::uint64_t seed) {
    if (width < 1 || height < 1) fail(Errc::InfeasibleDims, "empty box");
    Draws draws(seed);
    coord_t h = draws.in(1, height);
    coord_t y0 = draws.in(1, height - h + 1);
    coord_t kl = draws.below(h);
    coord_t kr = draws.below(h);

    std::vector<coord_t> l(h);
    l[kl] = draws.in(1, width);
    for (coord_t i = kl + 1; i < h; ++i) l[i] = draws.in(l[i - 1], width);
    for (coord_t i = kl - 1; i >= 0; --i) l[i] = draws.in(l[i + 1], width);

    // r must dominate l on each row and both neighbors to keep rows
    // overlapping; running maxima keep each hill draw range nonempty.
    std::vector<coord_t> need(h);
    for (coord_t i = 0; i < h; ++i) {
        need[i] = l[i];
        if (i > 0) need[i] = std::max(need[i], l[i - 1]);
        if (i + 1 < h) need[i] = std::max(need[i], l[i + 1]);
    }
    std::vector<coord_t> up(need), down(need);
    for (coord_t i = h - 2; i >= 0; --i) up[i] = std::max(up[i], up[i + 1]);
    for (coord_t i = 1; i < h; ++i) down[i] = std::max(down[i], down[i - 1]);

    std::vector<coord_t> r(h);
    r[kr] = draws.in(std::max(up[0], down[h - 1]), width);
    for (coord_t i = kr + 1; i < h; ++i) r[i] = draws.in(up[i], r[i - 1]);
    for (coord_t i = kr - 1; i >= 0; --i) r[i] = draws.in(down[i], r[i + 1]);

    std::vector<Cell> cells;
    for (coord_t i = 0; i < h; ++i)
        for (coord_t x = l[i]; x <= r[i]; ++x) cells.push_back(cell(x, y0 + i));
    return Polyomino::from_cells(std::move(cells));
}

Polyomino random_simple_polyomino(coord_t width, coord_t height, std::uint64_t seed) {
    if (width < 1 || height < 1) fail(Errc::InfeasibleDims, "empty box");
    Draws draws(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        coord_t target = draws.in(1, width * height);
        std::set<Point> grown;
        std::set<Point> frontier{Point{draws.in(1, width), draws.in(1, height)}};
        while (static_cast<coord_t>(grown.size()) < target && !frontier.empty()) {
            auto it = frontier.begin();
            std::advance(it, draws.below(static_cast<coord_t>(frontier.size())));
            Point a = *it;
            frontier.erase(it);
            grown.insert(a);
            for (Point n : {Point{a.x - 1, a.y}, Point{a.x + 1, a.y}, Point{a.x, a.y - 1},
                            Point{a.x, a.y + 1}})
                if (n.x >= 1 && n.x <= width && n.y >= 1 && n.y <= height && !grown.count(n))
                    frontier.insert(n);
        }
        std::vector<Cell> cells;
        for (Point a : grown) cells.push_back(Cell{a});
        Polyomino p = normalize(Polyomino::from_cells(std::move(cells)));
        if (classify(p).simple) return p;
    }
    fail(Errc::BadArgument, "no simple polyomino after bounded attempts");
}

Instance random_instance(coord_t width, coord_t height, std::uint64_t seed) {
    if (width < 3 || height < 3)
        fail(Errc::InfeasibleDims, "rect below 3x3 leaves no interior for Q");
    Polyomino q = translate(random_convex_polyomino(width - 2, height - 2, seed), 1, 1);
    std::vector<Cell> cells;
    for (coord_t y = 1; y <= height; ++y)
        for (coord_t x = 1; x <= width; ++x)
            if (!q.has_cell(Point{x, y})) cells.push_back(cell(x, y));
    NonsimpleContext ctx{Interval{Point{1, 1}, Point{width + 1, height + 1}}, std::move(q)};
    return Instance{Polyomino::from_cells(std::move(cells)), std::move(ctx)};
}

}  // namespace polyid
