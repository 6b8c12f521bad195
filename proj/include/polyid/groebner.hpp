#ifndef POLYID_GROEBNER_HPP
#define POLYID_GROEBNER_HPP

#include <optional>
#include <vector>

#include "polyid/algebra.hpp"

namespace polyid {

/// Gröbner step budget: POLYID_BUDGET from the environment, else one million.
int64_t default_budget();

struct GroebnerOptions {
    int64_t max_steps = default_budget();  // S-pairs considered before ResourceLimit
    bool parallel = false;                 // batch S-pair reduction; same reduced basis
    bool saturating = false;               // keep every element primitive by dividing out
                                           // the monomial gcd of its terms; only sound
                                           // when the target ideal is saturated by all
                                           // variables, as lattice ideals are
};

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Binomial> elements;  // ascending by leading monomial
    bool reduced = true;
    int64_t steps = 0;  // pairs considered
};

/// Full normal form of f against the (oriented) basis; nullopt when f reduces to
/// zero. Exact for ideal membership when basis is a Gröbner basis.
std::optional<Binomial> reduce(const Binomial& f, const std::vector<Binomial>& basis,
                               const MonomialOrder& order);

/// Reduced Gröbner basis by Buchberger's algorithm. Normal selection strategy:
/// smallest (weighted lcm degree, first index, second index). Product-criterion
/// pairs are skipped. Throws ResourceLimit past opts.max_steps.
GroebnerBasis buchberger(const std::vector<Binomial>& gens, const MonomialOrder& order,
                         const GroebnerOptions& opts = {});

/// True iff both generator sets have the identical reduced Gröbner basis.
bool ideal_equal(const std::vector<Binomial>& g1, const std::vector<Binomial>& g2,
                 const MonomialOrder& order, const GroebnerOptions& opts = {});

}  // namespace polyid

#endif
