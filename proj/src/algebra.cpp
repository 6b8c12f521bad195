#include "polyid/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace polyid {

VariableUniverse VariableUniverse::vertices(const Polyomino& p) {
    VariableUniverse u;
    u.points_ = p.vertices();  // already (x, y)-sorted
    u.names_.reserve(u.points_.size());
    for (Point v : u.points_)
        u.names_.push_back("x[" + std::to_string(v.x) + "," + std::to_string(v.y) + "]");

    std::vector<uint32_t> by_yx(u.points_.size());
    std::iota(by_yx.begin(), by_yx.end(), 0);
    std::sort(by_yx.begin(), by_yx.end(), [&](uint32_t a, uint32_t b) {
        return std::pair(u.points_[a].y, u.points_[a].x) <
               std::pair(u.points_[b].y, u.points_[b].x);
    });
    u.ranks_.resize(u.points_.size());
    for (uint32_t r = 0; r < by_yx.size(); ++r) u.ranks_[by_yx[r]] = r;
    return u;
}

VariableUniverse VariableUniverse::intervals(size_t n) {
    VariableUniverse u;
    u.names_.reserve(n);
    u.ranks_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        u.names_.push_back("u[" + std::to_string(i) + "]");
        u.ranks_[i] = static_cast<uint32_t>(i);
    }
    return u;
}

VariableUniverse VariableUniverse::extended(const std::string& name) const {
    VariableUniverse u = *this;
    u.names_.push_back(name);
    u.ranks_.push_back(static_cast<uint32_t>(u.ranks_.size()));
    if (!u.points_.empty()) u.points_.push_back(Point{0, 0});  // placeholder, not a vertex
    return u;
}

std::optional<uint32_t> VariableUniverse::index_of(Point v) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), v);
    if (it == points_.end() || *it != v) return std::nullopt;
    return static_cast<uint32_t>(it - points_.begin());
}

Monomial Monomial::variable(uint32_t var, uint32_t exp) {
    Monomial m;
    if (exp > 0) m.factors_.push_back({var, exp});
    return m;
}

Monomial Monomial::of(std::vector<std::pair<uint32_t, uint32_t>> factors) {
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (auto [var, exp] : factors) {
        if (exp == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == var) {
            uint64_t sum = static_cast<uint64_t>(m.factors_.back().second) + exp;
            if (sum > UINT32_MAX) fail(Errc::Overflow, "exponent overflow");
            m.factors_.back().second = static_cast<uint32_t>(sum);
        } else {
            m.factors_.push_back({var, exp});
        }
    }
    return m;
}

int64_t Monomial::degree() const {
    int64_t d = 0;
    for (auto [var, exp] : factors_) d = checked_add(d, static_cast<int64_t>(exp));
    return d;
}

int64_t Monomial::weighted_degree(const std::vector<int64_t>& weights) const {
    int64_t d = 0;
    for (auto [var, exp] : factors_)
        d = checked_add(d, checked_mul(weights[var], static_cast<int64_t>(exp)));
    return d;
}

uint32_t Monomial::exponent(uint32_t var) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), std::pair{var, 0u});
    if (it == factors_.end() || it->first != var) return 0;
    return it->second;
}

uint64_t Monomial::support_mask() const {
    uint64_t m = 0;
    for (auto [var, exp] : factors_) m |= uint64_t{1} << (var % 64);
    return m;
}

Monomial Monomial::times(const Monomial& m) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + m.factors_.size());
    auto a = factors_.begin(), b = m.factors_.begin();
    while (a != factors_.end() || b != m.factors_.end()) {
        if (b == m.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            uint64_t sum = static_cast<uint64_t>(a->second) + b->second;
            if (sum > UINT32_MAX) fail(Errc::Overflow, "exponent overflow");
            out.factors_.push_back({a->first, static_cast<uint32_t>(sum)});
            ++a, ++b;
        }
    }
    return out;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& d) const {
    Monomial out;
    auto a = factors_.begin();
    for (auto [var, exp] : d.factors_) {
        while (a != factors_.end() && a->first < var) out.factors_.push_back(*a++);
        if (a == factors_.end() || a->first != var || a->second < exp) return std::nullopt;
        if (a->second > exp) out.factors_.push_back({var, a->second - exp});
        ++a;
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    return out;
}

bool Monomial::divisible_by(const Monomial& d) const {
    auto a = factors_.begin();
    for (auto [var, exp] : d.factors_) {
        while (a != factors_.end() && a->first < var) ++a;
        if (a == factors_.end() || a->first != var || a->second < exp) return false;
    }
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
            out.factors_.push_back(*i++);
        } else if (i == a.factors_.end() || j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.push_back({i->first, std::max(i->second, j->second)});
            ++i, ++j;
        }
    }
    return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            out.factors_.push_back({i->first, std::min(i->second, j->second)});
            ++i, ++j;
        }
    }
    return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first)
            ++i;
        else if (j->first < i->first)
            ++j;
        else
            return false;
    }
    return true;
}

std::string Monomial::render(const VariableUniverse& u) const {
    if (factors_.empty()) return "1";
    std::string out;
    for (auto [var, exp] : factors_) {
        if (!out.empty()) out += "*";
        out += u.name(var);
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
}

MonomialOrder MonomialOrder::degrevlex(const std::vector<uint32_t>& ranks) {
    return degrevlex_weighted(ranks, std::vector<int64_t>(ranks.size(), 1));
}

MonomialOrder MonomialOrder::degrevlex_weighted(const std::vector<uint32_t>& ranks,
                                                std::vector<int64_t> weights) {
    MonomialOrder o;
    o.scan_.resize(ranks.size());
    std::iota(o.scan_.begin(), o.scan_.end(), 0);
    // Lowest priority (highest rank) scanned first.
    std::sort(o.scan_.begin(), o.scan_.end(),
              [&](uint32_t a, uint32_t b) { return ranks[a] > ranks[b]; });
    o.weights_ = std::move(weights);
    return o;
}

MonomialOrder MonomialOrder::with_cheapest(uint32_t var) const {
    MonomialOrder o = *this;
    o.scan_.erase(std::remove(o.scan_.begin(), o.scan_.end(), var), o.scan_.end());
    o.scan_.insert(o.scan_.begin(), var);
    return o;
}

MonomialOrder MonomialOrder::with_elimination(uint32_t var) const {
    MonomialOrder o = *this;
    o.elim_ = var;
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (elim_) {
        uint32_t ea = a.exponent(*elim_), eb = b.exponent(*elim_);
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    int64_t da = a.weighted_degree(weights_), db = b.weighted_degree(weights_);
    if (da != db) return da > db ? 1 : -1;
    for (uint32_t var : scan_) {
        int64_t d = static_cast<int64_t>(a.exponent(var)) - b.exponent(var);
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

std::optional<Binomial> Binomial::normalized(Monomial a, Monomial b, const MonomialOrder& o) {
    int c = o.compare(a, b);
    if (c == 0) return std::nullopt;
    if (c > 0) return Binomial(std::move(a), std::move(b));
    return Binomial(std::move(b), std::move(a));
}

Binomial Binomial::oriented(const MonomialOrder& o) const {
    if (o.compare(plus_, minus_) < 0) return Binomial(minus_, plus_);
    return *this;
}

int64_t Binomial::degree() const { return std::max(plus_.degree(), minus_.degree()); }

std::vector<uint32_t> Binomial::support_plus() const {
    std::vector<uint32_t> out;
    for (auto [var, exp] : plus_.factors()) out.push_back(var);
    return out;
}

std::vector<uint32_t> Binomial::support_minus() const {
    std::vector<uint32_t> out;
    for (auto [var, exp] : minus_.factors()) out.push_back(var);
    return out;
}

std::string Binomial::render(const VariableUniverse& u) const {
    if (is_zero()) return "0";
    return plus_.render(u) + " - " + minus_.render(u);
}

}  // namespace polyid
