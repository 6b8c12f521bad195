#ifndef POLYID_ALGEBRA_HPP
#define POLYID_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyid/grid.hpp"

namespace polyid {

/// Dense index <-> name table for one polynomial ring. Vertex universes index the
/// vertices of a polyomino in (x, y) order and name them "x[i,j]"; interval
/// universes name Λ positions "u[k]". canonical_ranks gives the priority used by
/// the canonical order: vertex variables rank by ascending (y, x), others by index;
/// rank 0 is the highest-priority variable.
class VariableUniverse {
public:
    static VariableUniverse vertices(const Polyomino& p);
    static VariableUniverse intervals(size_t n);

    /// Same table plus one auxiliary variable appended at index size().
    VariableUniverse extended(const std::string& name) const;

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    const std::vector<uint32_t>& canonical_ranks() const { return ranks_; }

    std::optional<uint32_t> index_of(Point v) const;
    Point vertex_at(size_t i) const { return points_[i]; }
    bool has_points() const { return !points_.empty(); }

    friend bool operator==(const VariableUniverse&, const VariableUniverse&) = default;

private:
    std::vector<std::string> names_;
    std::vector<Point> points_;  // empty unless built from a polyomino
    std::vector<uint32_t> ranks_;
};

/// Exponent vector, stored sparse and sorted by variable index; no zero entries.
class Monomial {
public:
    Monomial() = default;  // the monomial 1

    static Monomial variable(uint32_t var, uint32_t exp = 1);
    static Monomial of(std::vector<std::pair<uint32_t, uint32_t>> factors);

    bool is_one() const { return factors_.empty(); }
    int64_t degree() const;
    int64_t weighted_degree(const std::vector<int64_t>& weights) const;
    uint32_t exponent(uint32_t var) const;
    const std::vector<std::pair<uint32_t, uint32_t>>& factors() const { return factors_; }

    /// Folded support bits (var mod 64); mask(a) ⊆ mask(b) whenever a divides b.
    uint64_t support_mask() const;

    Monomial times(const Monomial& m) const;
    std::optional<Monomial> divided_by(const Monomial& d) const;
    bool divisible_by(const Monomial& d) const;

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b);

    std::string render(const VariableUniverse& u) const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<uint32_t, uint32_t>> factors_;
};

/// Graded reverse lexicographic order, optionally degree-weighted and optionally
/// preceded by the exponent of one elimination variable. Global (1 is smallest)
/// as long as all weights are positive.
class MonomialOrder {
public:
    /// ranks[i] = priority rank of variable i, 0 highest. All weights 1.
    static MonomialOrder degrevlex(const std::vector<uint32_t>& ranks);
    static MonomialOrder degrevlex_weighted(const std::vector<uint32_t>& ranks,
                                            std::vector<int64_t> weights);

    /// Same order except var becomes the overall lowest-priority variable.
    MonomialOrder with_cheapest(uint32_t var) const;

    /// Exponent of var dominates the comparison; used to eliminate var.
    MonomialOrder with_elimination(uint32_t var) const;

    size_t var_count() const { return scan_.size(); }
    const std::vector<int64_t>& weights() const { return weights_; }

    /// +1 when a comes later in the order (a > b), -1 when earlier, 0 when equal.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    std::vector<uint32_t> scan_;  // variable indices, lowest priority first
    std::vector<int64_t> weights_;
    std::optional<uint32_t> elim_;
};

/// Difference of two monomials with coefficients +1 and -1. Oriented values keep
/// plus as the leading term of the active order; plus == minus encodes zero and
/// only appears transiently (factories return nullopt instead).
class Binomial {
public:
    Binomial(Monomial plus, Monomial minus) : plus_(std::move(plus)), minus_(std::move(minus)) {}

    /// Oriented binomial, or nullopt when the terms coincide.
    static std::optional<Binomial> normalized(Monomial a, Monomial b, const MonomialOrder& o);

    const Monomial& plus() const { return plus_; }
    const Monomial& minus() const { return minus_; }
    bool is_zero() const { return plus_ == minus_; }
    int64_t degree() const;

    Binomial oriented(const MonomialOrder& o) const;

    std::vector<uint32_t> support_plus() const;
    std::vector<uint32_t> support_minus() const;

    std::string render(const VariableUniverse& u) const;

    friend auto operator<=>(const Binomial&, const Binomial&) = default;

private:
    Monomial plus_;
    Monomial minus_;
};

}  // namespace polyid

#endif
