#ifndef POLYID_TORIC_HPP
#define POLYID_TORIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyid/groebner.hpp"
#include "polyid/intervals.hpp"

namespace polyid {

// Row-major dense integer matrix.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    bool operator==(const IntMatrix&) const = default;
};

// The monomial map x_v -> alpha(v) = prod of the interval variables whose
// member contains v.  Rows of `matrix` follow the family's flat index, columns
// follow the vertex universe; every entry is 0 or 1 and column sums equal the
// alpha degrees stored in `weights`.
struct ToricMap {
    Polyomino p;
    LambdaFamily lambda;
    VariableUniverse xvars;
    VariableUniverse uvars;
    std::vector<Monomial> alpha;
    IntMatrix matrix;
    std::vector<std::int64_t> weights;
    MonomialOrder canonical;
};

ToricMap build_toric_map(const Polyomino& p, const LambdaFamily& lambda);

// Image of a vertex-variable monomial under the map; result lives in the
// interval universe.
Monomial phi_eval(const ToricMap& t, const Monomial& m);

bool in_kernel(const ToricMap& t, const Binomial& f);

// First interval variable whose exponent differs between the two images.
// Empty exactly when f is in the kernel.
struct KernelWitness {
    std::uint32_t u_var = 0;
    std::int64_t plus_exp = 0;
    std::int64_t minus_exp = 0;
};
std::optional<KernelWitness> kernel_witness(const ToricMap& t, const Binomial& f);

// One 2x2 inner minor per inner interval, oriented by the canonical order and
// listed in inner_intervals order.
std::vector<Binomial> inner_minor_generators(const Polyomino& p);

// Basis of { w : A w = 0 } over the integers, via unimodular column reduction
// of [A; I].  Every vector is checked against A before being returned; the
// first nonzero entry of each is positive and vectors are sorted.
struct LatticeBasis {
    std::vector<std::vector<std::int64_t>> vectors;
    std::size_t rank = 0;
};
LatticeBasis integer_kernel(const IntMatrix& a);

struct MarkovBasis {
    std::vector<Binomial> binomials;
    std::int64_t steps = 0;
};

// Generators of ker phi as a binomial ideal: lattice-basis binomials saturated
// by every variable in turn (Groebner basis with the variable cheapest, strip
// the common power, sweep until a full pass strips nothing).
MarkovBasis markov_basis(const ToricMap& t, const GroebnerOptions& opts = {});

// Same ideal through the auxiliary-variable route: adjoin t with
// t * prod(x_v) - 1 and eliminate t.  Only viable at small scale; kept as the
// cross-check for markov_basis.
MarkovBasis markov_basis_via_elimination(const ToricMap& t,
                                         const GroebnerOptions& opts = {});

struct Certificate {
    bool equal = false;
    GroebnerBasis gb_i;
    GroebnerBasis gb_j;
    std::int64_t max_degree_j = 0;
    std::size_t lambda_size = 0;
    std::size_t rank_a = 0;
    std::int64_t steps = 0;  // pairs charged across the Markov run and both bases
};

// Compares the inner-minor ideal with the toric kernel by reduced Groebner
// bases under the canonical order.
Certificate verify_theorem(const Polyomino& p, const LambdaFamily& lambda,
                           const GroebnerOptions& opts = {});

// Plain-text report; field order is fixed so equal certificates render to
// identical bytes.
std::string render_certificate(const Certificate& c);

struct ReductionStep {
    Binomial quadric;
    Monomial cofactor;
    Point multiplier_vertex;
    Binomial residual;
};

// Splits a kernel binomial f with x_p x_q | f+ and x_r | f- across the inner
// minor on {p, q, r, s}: f = quadric * cofactor + x_r * residual, with the
// residual again in the kernel and of degree deg(f) - 1.
ReductionStep lemma_reduction_step(const ToricMap& t, const Binomial& f,
                                   Point p, Point q, Point r);

// Every kernel binomial whose terms have total degree <= max_deg, canonically
// oriented and sorted.  `parallel` only parallelizes the image evaluations;
// the result is identical either way.
std::vector<Binomial> enumerate_kernel_binomials(const ToricMap& t,
                                                 std::int64_t max_deg,
                                                 bool parallel = false);

// Cells of p none of whose four corners lies in box.  The surviving cells must
// still form a polyomino; intended for tests.
Polyomino subpolyomino_avoiding(const Polyomino& p, const Interval& box);

}  // namespace polyid

#endif
