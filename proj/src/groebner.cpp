#include "polyid/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <set>
#include <string>
#include <tuple>

namespace polyid {

int64_t default_budget() {
    if (const char* env = std::getenv("POLYID_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 1'000'000;
}

namespace {

// Working basis with cached lead-support masks for the divisibility prefilter.
struct Reducer {
    const MonomialOrder& order;
    std::vector<Binomial> basis;
    std::vector<uint64_t> masks;

    explicit Reducer(const MonomialOrder& o) : order(o) {}

    void add(Binomial b) {
        masks.push_back(b.plus().support_mask());
        basis.push_back(std::move(b));
    }

    const Binomial* divisor_of(const Monomial& m, uint64_t mask) const {
        for (size_t i = 0; i < basis.size(); ++i) {
            if (masks[i] & ~mask) continue;
            if (m.divisible_by(basis[i].plus())) return &basis[i];
        }
        return nullptr;
    }

    // Rewrites terms by basis elements until both are irreducible; each rewrite
    // replaces a term with a strictly smaller monomial, so this terminates.
    std::optional<Binomial> normal_form(Monomial a, Monomial b) const {
        while (true) {
            int c = order.compare(a, b);
            if (c == 0) return std::nullopt;
            if (c < 0) std::swap(a, b);
            if (const Binomial* g = divisor_of(a, a.support_mask())) {
                auto quot = a.divided_by(g->plus());
                assert(quot);
                a = quot->times(g->minus());
                continue;
            }
            if (const Binomial* g = divisor_of(b, b.support_mask())) {
                auto quot = b.divided_by(g->plus());
                assert(quot);
                b = quot->times(g->minus());
                continue;
            }
            return Binomial(std::move(a), std::move(b));
        }
    }

    std::optional<Binomial> normal_form(const Binomial& f) const {
        return normal_form(f.plus(), f.minus());
    }
};

// S-binomial of oriented f, g: the lcm of the leads cancels, leaving the cross
// terms (lcm/lead_g)·tail_g − (lcm/lead_f)·tail_f.
std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g,
                                   const MonomialOrder& order) {
    Monomial l = lcm(f.plus(), g.plus());
    Monomial a = l.divided_by(g.plus())->times(g.minus());
    Monomial b = l.divided_by(f.plus())->times(f.minus());
    return Binomial::normalized(std::move(a), std::move(b), order);
}

using PairKey = std::tuple<int64_t, size_t, size_t>;  // (weighted lcm degree, i, j)

PairKey pair_key(const Reducer& r, size_t i, size_t j) {
    return {lcm(r.basis[i].plus(), r.basis[j].plus()).weighted_degree(r.order.weights()), i, j};
}

std::vector<Binomial> interreduce(const Reducer& engine) {
    std::vector<Binomial> minimal;
    std::vector<Binomial> sorted = engine.basis;
    std::sort(sorted.begin(), sorted.end(), [&](const Binomial& x, const Binomial& y) {
        int c = engine.order.compare(x.plus(), y.plus());
        if (c != 0) return c < 0;
        return engine.order.compare(x.minus(), y.minus()) < 0;
    });
    for (const Binomial& g : sorted) {
        bool redundant = false;
        for (const Binomial& kept : minimal)
            if (g.plus().divisible_by(kept.plus())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }

    std::vector<Binomial> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        Reducer others(engine.order);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.add(minimal[j]);
        auto nf = others.normal_form(minimal[i]);
        if (!nf) fail(Errc::BadArgument, "minimal basis element vanished during tail reduction");
        out.push_back(*nf);
    }
    std::sort(out.begin(), out.end(), [&](const Binomial& x, const Binomial& y) {
        return engine.order.compare(x.plus(), y.plus()) < 0;
    });
    return out;
}

}  // namespace

std::optional<Binomial> reduce(const Binomial& f, const std::vector<Binomial>& basis,
                               const MonomialOrder& order) {
    Reducer r(order);
    for (const Binomial& g : basis) {
        Binomial o = g.oriented(order);
        if (!o.is_zero()) r.add(std::move(o));
    }
    return r.normal_form(f.oriented(order));
}

GroebnerBasis buchberger(const std::vector<Binomial>& gens, const MonomialOrder& order,
                         const GroebnerOptions& opts) {
    // Dividing by the terms' gcd keeps orientation (the order is multiplicative)
    // and keeps the lead irreducible: any divisor of an irreducible monomial is
    // itself irreducible.
    auto primitive = [&](Binomial b) {
        if (!opts.saturating) return b;
        Monomial g = gcd(b.plus(), b.minus());
        if (g.is_one()) return b;
        return Binomial{*b.plus().divided_by(g), *b.minus().divided_by(g)};
    };

    Reducer engine(order);
    for (const Binomial& g : gens) {
        Binomial o = g.oriented(order);
        if (!o.is_zero()) engine.add(primitive(std::move(o)));
    }

    std::set<PairKey> queue;
    for (size_t j = 0; j < engine.basis.size(); ++j)
        for (size_t i = 0; i < j; ++i) queue.insert(pair_key(engine, i, j));

    GroebnerBasis result{order, {}, true, 0};
    auto charge = [&](int64_t n) {
        result.steps += n;
        if (result.steps > opts.max_steps)
            fail(Errc::ResourceLimit,
                 "pair budget exceeded: " + std::to_string(result.steps) + " > " +
                     std::to_string(opts.max_steps));
    };
    auto append = [&](Binomial b) {
        engine.add(std::move(b));
        size_t j = engine.basis.size() - 1;
        for (size_t i = 0; i < j; ++i) queue.insert(pair_key(engine, i, j));
    };

    if (!opts.parallel) {
        while (!queue.empty()) {
            auto [deg, i, j] = *queue.begin();
            queue.erase(queue.begin());
            charge(1);
            if (coprime(engine.basis[i].plus(), engine.basis[j].plus())) continue;
            auto s = s_binomial(engine.basis[i], engine.basis[j], order);
            if (!s) continue;
            auto nf = engine.normal_form(*s);
            if (nf) append(primitive(std::move(*nf)));
        }
    } else {
        while (!queue.empty()) {
            int64_t deg = std::get<0>(*queue.begin());
            std::vector<std::pair<size_t, size_t>> batch;
            while (!queue.empty() && std::get<0>(*queue.begin()) == deg) {
                batch.push_back({std::get<1>(*queue.begin()), std::get<2>(*queue.begin())});
                queue.erase(queue.begin());
            }
            charge(static_cast<int64_t>(batch.size()));

            std::vector<std::optional<Binomial>> found(batch.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (size_t k = 0; k < batch.size(); ++k) {
                auto [i, j] = batch[k];
                if (coprime(engine.basis[i].plus(), engine.basis[j].plus())) continue;
                auto s = s_binomial(engine.basis[i], engine.basis[j], order);
                if (s) found[k] = engine.normal_form(*s);
            }
            for (auto& candidate : found) {
                if (!candidate) continue;
                auto nf = engine.normal_form(*candidate);
                if (nf) append(primitive(std::move(*nf)));
            }
        }
    }

    result.elements = interreduce(engine);
    return result;
}

bool ideal_equal(const std::vector<Binomial>& g1, const std::vector<Binomial>& g2,
                 const MonomialOrder& order, const GroebnerOptions& opts) {
    return buchberger(g1, order, opts).elements == buchberger(g2, order, opts).elements;
}

}  // namespace polyid
