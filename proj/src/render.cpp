#include "polyid/render.hpp"

#include <optional>

#include "polyid/errors.hpp"

namespace polyid {

namespace {

constexpr coord_t kCell = 40;
constexpr coord_t kMargin = 10;

}  // namespace

std::string render_svg(const Instance& inst) {
    Interval frame = inst.ctx ? inst.ctx->rect : inst.p.bounding_box();
    coord_t w = frame.hi.x - frame.lo.x;
    coord_t h = frame.hi.y - frame.lo.y;
    coord_t pix_w = w * kCell + 2 * kMargin;
    coord_t pix_h = h * kCell + 2 * kMargin;
    auto sx = [&](coord_t x) { return kMargin + (x - frame.lo.x) * kCell; };
    auto sy = [&](coord_t y) { return kMargin + (frame.hi.y - y) * kCell; };
    auto num = [](coord_t v) { return std::to_string(v); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(pix_w) + "\" height=\"" +
           num(pix_h) + "\" viewBox=\"0 0 " + num(pix_w) + " " + num(pix_h) + "\">\n";
    for (const Cell& c : inst.p.cells())
        out += "  <rect class=\"cell\" x=\"" + num(sx(c.anchor.x)) + "\" y=\"" +
               num(sy(c.anchor.y + 1)) + "\" width=\"" + num(kCell) + "\" height=\"" +
               num(kCell) + "\" fill=\"#e0e0e0\" stroke=\"#444444\"/>\n";

    std::optional<LambdaFamily> family;
    try {
        family.emplace(lambda_family(inst.p, inst.ctx));
    } catch (const Error&) {
    }
    if (family) {
        if (family->special()) {
            const Interval& box = family->special()->box;
            out += "  <rect class=\"special\" x=\"" + num(sx(box.lo.x)) + "\" y=\"" +
                   num(sy(box.hi.y)) + "\" width=\"" + num((box.hi.x - box.lo.x) * kCell) +
                   "\" height=\"" + num((box.hi.y - box.lo.y) * kCell) +
                   "\" fill=\"#2ca02c\" fill-opacity=\"0.25\" stroke=\"#2ca02c\" "
                   "stroke-width=\"2\"/>\n";
        }
        for (const EdgeIntervalMax& m : family->edges().horizontal)
            out += "  <line class=\"lam\" x1=\"" + num(sx(m.span.lo.x)) + "\" y1=\"" +
                   num(sy(m.span.lo.y)) + "\" x2=\"" + num(sx(m.span.hi.x)) + "\" y2=\"" +
                   num(sy(m.span.hi.y)) +
                   "\" stroke=\"#d62728\" stroke-width=\"4\" stroke-linecap=\"round\"/>\n";
        for (const EdgeIntervalMax& m : family->edges().vertical)
            out += "  <line class=\"lam\" x1=\"" + num(sx(m.span.lo.x)) + "\" y1=\"" +
                   num(sy(m.span.lo.y)) + "\" x2=\"" + num(sx(m.span.hi.x)) + "\" y2=\"" +
                   num(sy(m.span.hi.y)) +
                   "\" stroke=\"#1f77b4\" stroke-width=\"4\" stroke-linecap=\"round\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace polyid
