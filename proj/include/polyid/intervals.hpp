#ifndef POLYID_INTERVALS_HPP
#define POLYID_INTERVALS_HPP

#include <optional>
#include <vector>

#include "polyid/grid.hpp"

namespace polyid {

/// Proper box [lo, hi] (lo < hi componentwise) all of whose cells belong to P.
/// Its four corner vertices index an inner 2-minor.
struct InnerInterval {
    Interval box;

    friend auto operator<=>(const InnerInterval&, const InnerInterval&) = default;

    Point lower_left() const { return box.lo; }
    Point upper_right() const { return box.hi; }
    Point upper_left() const { return box.upper_left(); }
    Point lower_right() const { return box.lower_right(); }
};

bool is_inner_interval(const Polyomino& p, const Interval& box);

/// All inner intervals, sorted by (lo, hi).
std::vector<InnerInterval> inner_intervals(const Polyomino& p);

enum class Orientation { horizontal, vertical };

/// Maximal run of consecutive edges of P along one lattice line; degenerate interval
/// spanning at least two vertices.
struct EdgeIntervalMax {
    Interval span;
    Orientation orientation = Orientation::horizontal;

    friend auto operator<=>(const EdgeIntervalMax&, const EdgeIntervalMax&) = default;
};

struct EdgeIntervals {
    std::vector<EdgeIntervalMax> horizontal;  // sorted by (lo.y, lo.x)
    std::vector<EdgeIntervalMax> vertical;    // sorted by (lo.x, lo.y)
};

EdgeIntervals maximal_edge_intervals(const Polyomino& p);

/// Ambient rectangle together with the convex hole Q cut out of it; the polyomino
/// under study is rect minus Q.
struct NonsimpleContext {
    Interval rect;
    Polyomino q;
};

/// The distinguished interval [rect.lo, e], where e is the lower of the leftmost
/// outside corners of Q.
struct SpecialInterval {
    Interval box;
    Point e;
};

/// Requires Q convex (NotConvex) and strictly interior to rect: the boundaries may
/// not share a vertex (BoundaryTouch).
SpecialInterval special_interval(const Interval& rect, const Polyomino& q);

/// Interval family indexing the target ring variables: the special interval (when a
/// hole context is given) followed by the maximal horizontal then vertical edge
/// intervals. Flat index order fixes the variable numbering everywhere downstream.
class LambdaFamily {
public:
    LambdaFamily(std::optional<SpecialInterval> special, EdgeIntervals edges);

    size_t size() const { return flat_.size(); }
    const Interval& member(size_t i) const { return flat_[i]; }
    bool member_contains(size_t i, Point v) const { return flat_[i].contains(v); }

    const std::optional<SpecialInterval>& special() const { return special_; }
    const EdgeIntervals& edges() const { return edges_; }

private:
    std::optional<SpecialInterval> special_;
    EdgeIntervals edges_;
    std::vector<Interval> flat_;
};

LambdaFamily lambda_family(const Polyomino& p, const std::optional<NonsimpleContext>& ctx);

/// One edge-connected component of bounding_box(Q) minus Q.
struct ComplementComponent {
    Polyomino cells;
    Point ambient_corner;       // the unique bounding-box corner vertex it contains
    LadderCertificate ladder;   // every component is a staircase
};

/// Decomposes the complement of a convex polyomino inside its own bounding box.
/// At most four components, one per cut-off box corner; empty for rectangles.
std::vector<ComplementComponent> complement_decomposition(const Polyomino& q);

}  // namespace polyid

#endif
