#include "polyid/toric.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "polyid/errors.hpp"

namespace polyid {

namespace {

std::string point_str(Point v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

uint32_t var_of(const VariableUniverse& u, Point v) {
    auto i = u.index_of(v);
    if (!i) fail(Errc::BadArgument, "no variable for vertex " + point_str(v));
    return *i;
}

struct BinomialLess {
    const MonomialOrder& ord;
    bool operator()(const Binomial& a, const Binomial& b) const {
        int c = ord.compare(a.plus(), b.plus());
        if (c != 0) return c < 0;
        return ord.compare(a.minus(), b.minus()) < 0;
    }
};

std::vector<Binomial> canonical_sorted(std::vector<Binomial> v, const MonomialOrder& ord) {
    for (auto& f : v) f = f.oriented(ord);
    std::sort(v.begin(), v.end(), BinomialLess{ord});
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::optional<Binomial> binomial_of_vector(const std::vector<int64_t>& w,
                                           const MonomialOrder& ord) {
    std::vector<std::pair<uint32_t, uint32_t>> pos, neg;
    for (size_t v = 0; v < w.size(); ++v) {
        if (w[v] > 0) pos.emplace_back(uint32_t(v), uint32_t(w[v]));
        if (w[v] < 0) neg.emplace_back(uint32_t(v), uint32_t(-w[v]));
    }
    return Binomial::normalized(Monomial::of(std::move(pos)), Monomial::of(std::move(neg)), ord);
}

}  // namespace

ToricMap build_toric_map(const Polyomino& p, const LambdaFamily& lambda) {
    VariableUniverse xv = VariableUniverse::vertices(p);
    VariableUniverse uv = VariableUniverse::intervals(lambda.size());
    MonomialOrder canon = MonomialOrder::degrevlex(xv.canonical_ranks());

    const size_t n = xv.size();
    const size_t m = lambda.size();
    const size_t edge_base = lambda.special() ? 1 : 0;

    IntMatrix a(m, n);
    std::vector<Monomial> alpha(n);
    std::vector<int64_t> weights(n, 0);
    for (size_t j = 0; j < n; ++j) {
        Point v = xv.vertex_at(j);
        std::vector<std::pair<uint32_t, uint32_t>> fs;
        size_t edge_hits = 0;
        for (size_t i = 0; i < m; ++i) {
            if (!lambda.member_contains(i, v)) continue;
            a.at(i, j) = 1;
            fs.emplace_back(uint32_t(i), 1);
            if (i >= edge_base) ++edge_hits;
        }
        if (edge_hits != 2)
            fail(Errc::BadArgument, "edge intervals cover vertex " + point_str(v) + " " +
                                        std::to_string(edge_hits) + " times, expected 2");
        alpha[j] = Monomial::of(std::move(fs));
        weights[j] = alpha[j].degree();
    }
    return ToricMap{p,        lambda,       std::move(xv),     std::move(uv),
                    std::move(alpha), std::move(a), std::move(weights), std::move(canon)};
}

Monomial phi_eval(const ToricMap& t, const Monomial& m) {
    std::vector<std::pair<uint32_t, uint32_t>> fs;
    for (auto [var, exp] : m.factors()) {
        if (var >= t.alpha.size())
            fail(Errc::BadArgument, "variable index " + std::to_string(var) +
                                        " outside the vertex universe");
        for (auto [u, e] : t.alpha[var].factors()) {
            uint64_t prod = uint64_t(e) * exp;
            if (prod > std::numeric_limits<uint32_t>::max())
                fail(Errc::Overflow, "image exponent overflow");
            fs.emplace_back(u, uint32_t(prod));
        }
    }
    return Monomial::of(std::move(fs));
}

bool in_kernel(const ToricMap& t, const Binomial& f) {
    return phi_eval(t, f.plus()) == phi_eval(t, f.minus());
}

std::optional<KernelWitness> kernel_witness(const ToricMap& t, const Binomial& f) {
    Monomial ip = phi_eval(t, f.plus());
    Monomial im = phi_eval(t, f.minus());
    const auto& a = ip.factors();
    const auto& b = im.factors();
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            return KernelWitness{a[i].first, int64_t(a[i].second), 0};
        if (i == a.size() || b[j].first < a[i].first)
            return KernelWitness{b[j].first, 0, int64_t(b[j].second)};
        if (a[i].second != b[j].second)
            return KernelWitness{a[i].first, int64_t(a[i].second), int64_t(b[j].second)};
        ++i;
        ++j;
    }
    return std::nullopt;
}

std::vector<Binomial> inner_minor_generators(const Polyomino& p) {
    VariableUniverse xv = VariableUniverse::vertices(p);
    MonomialOrder ord = MonomialOrder::degrevlex(xv.canonical_ranks());
    std::vector<Binomial> out;
    for (const InnerInterval& it : inner_intervals(p)) {
        Monomial diag = Monomial::variable(var_of(xv, it.lower_left()))
                            .times(Monomial::variable(var_of(xv, it.upper_right())));
        Monomial anti = Monomial::variable(var_of(xv, it.upper_left()))
                            .times(Monomial::variable(var_of(xv, it.lower_right())));
        out.push_back(*Binomial::normalized(std::move(diag), std::move(anti), ord));
    }
    return out;
}

namespace {

// dst += c * src, elementwise with overflow checks.
void axpy(std::vector<int64_t>& dst, const std::vector<int64_t>& src, int64_t c) {
    for (size_t i = 0; i < dst.size(); ++i)
        dst[i] = checked_add(dst[i], checked_mul(c, src[i]));
}

}  // namespace

LatticeBasis integer_kernel(const IntMatrix& a) {
    const size_t m = a.rows;
    const size_t n = a.cols;
    // Columns of [A; I]; unimodular column operations preserve the lattice
    // generated by the identity block.
    std::vector<std::vector<int64_t>> col(n, std::vector<int64_t>(m + n, 0));
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < m; ++i) col[j][i] = a.at(i, j);
        col[j][m + j] = 1;
    }

    size_t lead = 0;
    for (size_t r = 0; r < m && lead < n; ++r) {
        size_t piv = lead;
        while (piv < n && col[piv][r] == 0) ++piv;
        if (piv == n) continue;
        std::swap(col[piv], col[lead]);
        for (size_t j = lead + 1; j < n; ++j) {
            while (col[j][r] != 0) {
                int64_t q = col[lead][r] / col[j][r];
                axpy(col[lead], col[j], -q);
                std::swap(col[lead], col[j]);
            }
        }
        if (col[lead][r] < 0)
            for (auto& x : col[lead]) x = -x;
        ++lead;
    }

    LatticeBasis out;
    out.rank = lead;
    for (size_t j = lead; j < n; ++j) {
        std::vector<int64_t> w(col[j].begin() + int64_t(m), col[j].end());
        auto first = std::find_if(w.begin(), w.end(), [](int64_t x) { return x != 0; });
        if (first == w.end()) fail(Errc::BadArgument, "zero column left the kernel block");
        if (*first < 0)
            for (auto& x : w) x = -x;
        for (size_t r = 0; r < m; ++r) {
            int64_t acc = 0;
            for (size_t v = 0; v < n; ++v) acc = checked_add(acc, checked_mul(a.at(r, v), w[v]));
            if (acc != 0) fail(Errc::BadArgument, "kernel candidate fails A*w = 0");
        }
        out.vectors.push_back(std::move(w));
    }
    std::sort(out.vectors.begin(), out.vectors.end());
    return out;
}

MarkovBasis markov_basis(const ToricMap& t, const GroebnerOptions& opts) {
    LatticeBasis kb = integer_kernel(t.matrix);
    std::vector<Binomial> current;
    for (const auto& w : kb.vectors)
        if (auto f = binomial_of_vector(w, t.canonical)) current.push_back(*f);

    MarkovBasis out;
    if (current.empty()) return out;

    GroebnerOptions sat = opts;
    sat.saturating = true;
    const auto& ranks = t.xvars.canonical_ranks();
    const uint32_t n = uint32_t(t.xvars.size());

    // Each pass through variable v computes the saturation by x_v of the ideal
    // generated so far; strips only ever grow the ideal, and it stays inside
    // the kernel, so the per-sweep results ascend.  Two identical consecutive
    // sweep ends (reduced bases under the same order) certify that a whole
    // sweep left the ideal fixed, i.e. it is saturated by every variable.
    std::vector<Binomial> prev;
    for (bool first = true;; first = false) {
        for (uint32_t v = 0; v < n; ++v) {
            MonomialOrder ov =
                MonomialOrder::degrevlex_weighted(ranks, t.weights).with_cheapest(v);
            GroebnerBasis gb = buchberger(current, ov, sat);
            out.steps += gb.steps;
            current.clear();
            for (const Binomial& f : gb.elements) {
                Monomial g = gcd(f.plus(), f.minus());
                if (g.is_one())
                    current.push_back(f);
                else
                    current.emplace_back(*f.plus().divided_by(g), *f.minus().divided_by(g));
            }
        }
        if (!first && current == prev) break;
        prev = current;
    }

    for (const Binomial& f : current)
        if (auto w = kernel_witness(t, f))
            fail(Errc::BadArgument, "saturation left the kernel at u index " +
                                        std::to_string(w->u_var));
    out.binomials = canonical_sorted(std::move(current), t.canonical);
    return out;
}

MarkovBasis markov_basis_via_elimination(const ToricMap& t, const GroebnerOptions& opts) {
    const uint32_t n = uint32_t(t.xvars.size());
    VariableUniverse ext = t.xvars.extended("t");
    MonomialOrder elim =
        MonomialOrder::degrevlex(ext.canonical_ranks()).with_elimination(n);

    std::vector<Binomial> gens;
    for (const auto& w : integer_kernel(t.matrix).vectors)
        if (auto f = binomial_of_vector(w, elim)) gens.push_back(*f);
    std::vector<std::pair<uint32_t, uint32_t>> all{{n, 1}};
    for (uint32_t v = 0; v < n; ++v) all.emplace_back(v, 1);
    gens.push_back(*Binomial::normalized(Monomial::of(std::move(all)), Monomial{}, elim));

    GroebnerBasis gb = buchberger(gens, elim, opts);
    std::vector<Binomial> kept;
    for (const Binomial& f : gb.elements)
        if (f.plus().exponent(n) == 0 && f.minus().exponent(n) == 0) kept.push_back(f);
    return MarkovBasis{canonical_sorted(std::move(kept), t.canonical), gb.steps};
}

Certificate verify_theorem(const Polyomino& p, const LambdaFamily& lambda,
                           const GroebnerOptions& opts) {
    if (!lambda.special() && !classify(p).simple)
        fail(Errc::OutOfScope, "nonsimple polyomino without a hole context");

    ToricMap t = build_toric_map(p, lambda);
    Certificate c;
    c.lambda_size = lambda.size();
    c.rank_a = integer_kernel(t.matrix).rank;
    MarkovBasis mb = markov_basis(t, opts);
    c.gb_i = buchberger(inner_minor_generators(p), t.canonical, opts);
    c.gb_j = buchberger(mb.binomials, t.canonical, opts);
    c.steps = mb.steps + c.gb_i.steps + c.gb_j.steps;
    c.equal = c.gb_i.elements == c.gb_j.elements;
    c.max_degree_j = 0;
    for (const Binomial& f : c.gb_j.elements)
        c.max_degree_j = std::max(c.max_degree_j, f.degree());
    return c;
}

std::string render_certificate(const Certificate& c) {
    std::string verdict = c.equal ? "yes" : "no";
    std::string deg = std::to_string(c.max_degree_j);
    std::string s;
    s += "lambda: " + std::to_string(c.lambda_size) + "\n";
    s += "rank(A): " + std::to_string(c.rank_a) + "\n";
    s += "|GB(I)|: " + std::to_string(c.gb_i.elements.size()) + "\n";
    s += "|GB(J)|: " + std::to_string(c.gb_j.elements.size()) + "\n";
    s += "max_deg(J): " + deg + "\n";
    s += "EQUAL: " + verdict + ", max_deg(J)=" + deg + "\n";
    return s;
}

ReductionStep lemma_reduction_step(const ToricMap& t, const Binomial& f, Point p, Point q,
                                   Point r) {
    if (f.degree() < 3) fail(Errc::DegreeTooLow, "binomial has degree < 3");
    if (p.x == q.x || p.y == q.y)
        fail(Errc::NotAnInnerInterval,
             point_str(p) + " and " + point_str(q) + " do not span a proper box");
    Interval box = make_interval({std::min(p.x, q.x), std::min(p.y, q.y)},
                                 {std::max(p.x, q.x), std::max(p.y, q.y)});
    if (!is_inner_interval(t.p, box))
        fail(Errc::NotAnInnerInterval,
             "[" + point_str(box.lo) + "," + point_str(box.hi) + "] is not an inner interval");

    bool pq_diagonal = (p == box.lo || p == box.hi);
    Point s;
    if (pq_diagonal) {
        if (r == box.upper_left())
            s = box.lower_right();
        else if (r == box.lower_right())
            s = box.upper_left();
        else
            fail(Errc::NotAnInnerInterval, point_str(r) + " is not an opposite corner");
    } else {
        if (r == box.lo)
            s = box.hi;
        else if (r == box.hi)
            s = box.lo;
        else
            fail(Errc::NotAnInnerInterval, point_str(r) + " is not an opposite corner");
    }

    Monomial pq = Monomial::variable(var_of(t.xvars, p))
                      .times(Monomial::variable(var_of(t.xvars, q)));
    Monomial xr = Monomial::variable(var_of(t.xvars, r));
    Monomial xs = Monomial::variable(var_of(t.xvars, s));
    auto cof = f.plus().divided_by(pq);
    if (!cof)
        fail(Errc::VerticesNotInSupport,
             "x" + point_str(p) + " * x" + point_str(q) + " does not divide the plus term");
    auto rest = f.minus().divided_by(xr);
    if (!rest)
        fail(Errc::VerticesNotInSupport, "x" + point_str(r) + " does not divide the minus term");
    if (!in_kernel(t, f)) fail(Errc::NotInKernel, "binomial is not in the kernel");

    Binomial residual{xs.times(*cof), std::move(*rest)};
    if (!in_kernel(t, residual)) fail(Errc::BadArgument, "residual left the kernel");
    return ReductionStep{Binomial{std::move(pq), xr.times(xs)}, std::move(*cof), r,
                         std::move(residual)};
}

namespace {

void monomials_of_degree(uint32_t nvars, uint32_t v, int64_t remaining,
                         std::vector<std::pair<uint32_t, uint32_t>>& acc,
                         std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(Monomial::of(acc));
        return;
    }
    if (v == nvars) return;
    for (int64_t e = remaining; e >= 0; --e) {
        if (e > 0) acc.emplace_back(v, uint32_t(e));
        monomials_of_degree(nvars, v + 1, remaining - e, acc, out);
        if (e > 0) acc.pop_back();
    }
}

}  // namespace

std::vector<Binomial> enumerate_kernel_binomials(const ToricMap& t, int64_t max_deg,
                                                 bool parallel) {
    const uint32_t n = uint32_t(t.xvars.size());
    std::vector<Monomial> pool;
    std::vector<std::pair<uint32_t, uint32_t>> acc;
    for (int64_t d = 1; d <= max_deg; ++d) monomials_of_degree(n, 0, d, acc, pool);

    std::vector<Monomial> images(pool.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (int64_t i = 0; i < int64_t(pool.size()); ++i) images[i] = phi_eval(t, pool[i]);
    (void)parallel;

    std::map<Monomial, std::vector<size_t>> fibers;
    for (size_t i = 0; i < pool.size(); ++i) fibers[images[i]].push_back(i);

    std::vector<Binomial> out;
    for (const auto& [img, idx] : fibers) {
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = a + 1; b < idx.size(); ++b)
                out.push_back(*Binomial::normalized(pool[idx[a]], pool[idx[b]], t.canonical));
    }
    std::sort(out.begin(), out.end(), BinomialLess{t.canonical});
    return out;
}

Polyomino subpolyomino_avoiding(const Polyomino& p, const Interval& box) {
    std::vector<Cell> keep;
    for (const Cell& c : p.cells()) {
        bool touches = false;
        for (Point v : c.vertex_array()) touches = touches || box.contains(v);
        if (!touches) keep.push_back(c);
    }
    return Polyomino::from_cells(keep);
}

}  // namespace polyid
