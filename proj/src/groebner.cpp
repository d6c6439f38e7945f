#include "rbdq/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "rbdq/errors.hpp"

namespace rbdq {

namespace {

/// Terms sorted by decreasing monomial under one fixed order.
using Ordered = std::vector<Term>;

Ordered to_ordered(const Polynomial& p, const TermOrder& order) {
    Ordered out = p.terms();
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    return out;
}

Polynomial from_ordered(Ordered terms) { return Polynomial::from_terms(std::move(terms)); }

void make_monic(Ordered& p) {
    if (p.empty() || p.front().coeff.is_one()) {
        return;
    }
    const Scalar inv = p.front().coeff.inverse();
    for (auto& t : p) {
        t.coeff *= inv;
    }
}

/// p - c * m * g, all sorted by `order`; m * g stays sorted because orders are multiplicative.
Ordered sub_scaled(const Ordered& p, const Scalar& c, const Monomial& m, const Ordered& g, const TermOrder& order) {
    Ordered out;
    out.reserve(p.size() + g.size());
    auto a = p.begin();
    auto b = g.begin();
    while (a != p.end() || b != g.end()) {
        if (b == g.end()) {
            out.push_back(*a++);
            continue;
        }
        const Monomial mb = m * b->mono;
        if (a == p.end() || order.greater(mb, a->mono)) {
            out.push_back({mb, -(c * b->coeff)});
            ++b;
        } else if (order.greater(a->mono, mb)) {
            out.push_back(*a++);
        } else {
            Scalar coeff = a->coeff - c * b->coeff;
            if (!coeff.is_zero()) {
                out.push_back({a->mono, std::move(coeff)});
            }
            ++a;
            ++b;
        }
    }
    return out;
}

/// Full reduction of p by the divisors in `basis` selected by `active`.
/// When quotients is non-null, quotient terms are recorded per active slot.
Ordered reduce(Ordered p, const std::vector<Ordered>& basis, const std::vector<std::size_t>& active,
               const TermOrder& order, std::vector<std::vector<Term>>* quotients = nullptr) {
    Ordered remainder;
    // Reduced leading terms are removed from the front; keep a cursor instead of erasing.
    while (!p.empty()) {
        const Term& lead = p.front();
        bool reduced = false;
        for (std::size_t slot = 0; slot < active.size(); ++slot) {
            const Ordered& g = basis[active[slot]];
            if (!g.front().mono.divides(lead.mono)) {
                continue;
            }
            const Monomial m = lead.mono.divided_by(g.front().mono);
            const Scalar c = lead.coeff / g.front().coeff;
            if (quotients != nullptr) {
                (*quotients)[slot].push_back({m, c});
            }
            p = sub_scaled(p, c, m, g, order);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(p.front());
            p.erase(p.begin());
        }
    }
    return remainder;
}

Ordered s_polynomial(const Ordered& f, const Ordered& g, const TermOrder& order) {
    const Monomial l = Monomial::lcm(f.front().mono, g.front().mono);
    // (l / lt f) f - (l / lt g) g, with f and g monic
    Ordered lhs;
    lhs.reserve(f.size());
    const Monomial mf = l.divided_by(f.front().mono);
    const Scalar cf = f.front().coeff.inverse();
    for (const auto& t : f) {
        lhs.push_back({mf * t.mono, cf * t.coeff});
    }
    return sub_scaled(lhs, g.front().coeff.inverse(), l.divided_by(g.front().mono), g, order);
}

struct Pair {
    std::size_t first;
    std::size_t second;
    Monomial lcm;
    unsigned degree;
    std::size_t seq;
};

class Engine {
public:
    Engine(const TermOrder& order, const BuchbergerLimits& limits) : order_(order), limits_(limits) {}

    GroebnerBasis run(const std::vector<Polynomial>& input) {
        for (const auto& f : input) {
            Ordered p = to_ordered(f, order_);
            if (p.empty()) {
                continue;
            }
            make_monic(p);
            update(add(std::move(p)));
        }
        if (polys_.empty()) {
            throw std::invalid_argument("buchberger: no nonzero generators");
        }
        while (!pairs_.empty()) {
            const auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
                return a.degree != b.degree ? a.degree < b.degree : a.seq < b.seq;
            });
            const Pair pair = *best;
            pairs_.erase(best);
            stats_.max_pair_degree = std::max(stats_.max_pair_degree, pair.degree);
            if (pair.degree > limits_.max_degree) {
                stats_.basis_size = active_.size();
                throw LimitExceeded("degree cap " + std::to_string(limits_.max_degree) + " exceeded by an S-pair of degree " +
                                        std::to_string(pair.degree),
                                    stats_);
            }
            if (stats_.pairs_reduced >= limits_.max_pairs) {
                stats_.basis_size = active_.size();
                throw LimitExceeded("pair limit " + std::to_string(limits_.max_pairs) + " reached", stats_);
            }
            ++stats_.pairs_reduced;
            Ordered h = reduce(s_polynomial(polys_[pair.first], polys_[pair.second], order_), polys_, active_, order_);
            if (h.empty()) {
                ++stats_.zero_reductions;
                continue;
            }
            make_monic(h);
            update(add(std::move(h)));
        }
        return finish();
    }

private:
    std::size_t add(Ordered p) {
        polys_.push_back(std::move(p));
        return polys_.size() - 1;
    }

    [[nodiscard]] const Monomial& lm(std::size_t i) const { return polys_[i].front().mono; }

    // Gebauer-Moeller update (Becker-Weispfenning, UPDATE).
    void update(std::size_t h) {
        const Monomial& lh = lm(h);
        std::vector<Pair> candidates;
        for (std::size_t g : active_) {
            const Monomial l = Monomial::lcm(lh, lm(g));
            candidates.push_back({g, h, l, l.total_degree(), 0});
        }
        std::vector<Pair> kept;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const Pair& p = candidates[c];
            bool keep = lh.coprime_with(lm(p.first));
            if (!keep) {
                keep = true;
                for (std::size_t o = c + 1; o < candidates.size() && keep; ++o) {
                    keep = !candidates[o].lcm.divides(p.lcm);
                }
                for (std::size_t o = 0; o < kept.size() && keep; ++o) {
                    keep = !kept[o].lcm.divides(p.lcm);
                }
            }
            if (keep) {
                kept.push_back(p);
            } else {
                ++stats_.pairs_discarded;
            }
        }
        std::vector<Pair> next;
        for (const Pair& p : pairs_) {
            const bool drop = lh.divides(p.lcm) && Monomial::lcm(lm(p.first), lh) != p.lcm &&
                              Monomial::lcm(lm(p.second), lh) != p.lcm;
            if (drop) {
                ++stats_.pairs_discarded;
            } else {
                next.push_back(p);
            }
        }
        for (Pair& p : kept) {
            if (lh.coprime_with(lm(p.first))) {
                ++stats_.pairs_discarded;
                continue;
            }
            p.seq = next_seq_++;
            next.push_back(p);
        }
        pairs_ = std::move(next);

        std::vector<std::size_t> still_active;
        for (std::size_t g : active_) {
            if (!lh.divides(lm(g))) {
                still_active.push_back(g);
            }
        }
        still_active.push_back(h);
        active_ = std::move(still_active);
    }

    GroebnerBasis finish() {
        // active_ is already minimal; reduce tails against the others.
        std::vector<Ordered> reduced;
        for (std::size_t idx = 0; idx < active_.size(); ++idx) {
            std::vector<std::size_t> others;
            for (std::size_t o = 0; o < active_.size(); ++o) {
                if (o != idx) {
                    others.push_back(active_[o]);
                }
            }
            const Ordered& g = polys_[active_[idx]];
            Ordered tail(g.begin() + 1, g.end());
            Ordered out{g.front()};
            Ordered rest = reduce(std::move(tail), polys_, others, order_);
            out.insert(out.end(), rest.begin(), rest.end());
            make_monic(out);
            reduced.push_back(std::move(out));
        }
        std::sort(reduced.begin(), reduced.end(),
                  [&](const Ordered& a, const Ordered& b) { return order_.greater(b.front().mono, a.front().mono); });
        GroebnerBasis basis{order_, {}, stats_};
        for (auto& r : reduced) {
            basis.generators.push_back(from_ordered(std::move(r)));
        }
        basis.stats.basis_size = basis.generators.size();
        return basis;
    }

    TermOrder order_;
    BuchbergerLimits limits_;
    std::vector<Ordered> polys_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
    std::size_t next_seq_ = 0;
    BuchbergerStats stats_;
};

std::vector<Ordered> ordered_all(const std::vector<Polynomial>& ps, const TermOrder& order) {
    std::vector<Ordered> out;
    out.reserve(ps.size());
    for (const auto& p : ps) {
        if (p.is_zero()) {
            throw std::invalid_argument("zero divisor");
        }
        out.push_back(to_ordered(p, order));
    }
    return out;
}

}  // namespace

TermOrder::TermOrder(OrderKind kind, std::vector<std::size_t> priority) : kind_(kind), priority_(std::move(priority)) {
    std::vector<bool> seen(kMaxVars, false);
    for (auto v : priority_) {
        if (v >= kMaxVars || seen[v]) {
            throw std::invalid_argument("term order: priority must be a permutation of distinct variable slots");
        }
        seen[v] = true;
    }
}

TermOrder TermOrder::grevlex(std::size_t nvars) {
    std::vector<std::size_t> p(nvars);
    std::iota(p.begin(), p.end(), 0);
    return {OrderKind::Grevlex, std::move(p)};
}

TermOrder TermOrder::lex(std::size_t nvars) {
    std::vector<std::size_t> p(nvars);
    std::iota(p.begin(), p.end(), 0);
    return {OrderKind::Lex, std::move(p)};
}

bool TermOrder::greater(const Monomial& a, const Monomial& b) const {
    if (kind_ == OrderKind::Lex) {
        for (auto v : priority_) {
            if (a.exps[v] != b.exps[v]) {
                return a.exps[v] > b.exps[v];
            }
        }
        return false;
    }
    const unsigned da = a.total_degree();
    const unsigned db = b.total_degree();
    if (da != db) {
        return da > db;
    }
    for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
        if (a.exps[*it] != b.exps[*it]) {
            return a.exps[*it] < b.exps[*it];
        }
    }
    return false;
}

std::string TermOrder::describe(const VariableRing& ring) const {
    std::string out = to_string(kind_) + "(";
    for (std::size_t i = 0; i < priority_.size(); ++i) {
        if (i != 0) {
            out += ">";
        }
        out += priority_[i] < ring.size() ? ring.name(priority_[i]) : "x" + std::to_string(priority_[i]);
    }
    return out + ")";
}

std::string to_string(OrderKind kind) { return kind == OrderKind::Lex ? "lex" : "grevlex"; }

OrderKind parse_order_kind(const std::string& name) {
    if (name == "lex") {
        return OrderKind::Lex;
    }
    if (name == "grevlex") {
        return OrderKind::Grevlex;
    }
    throw ParseError("unknown term order '" + name + "' (expected lex or grevlex)");
}

Monomial leading_monomial(const Polynomial& p, const TermOrder& order) {
    if (p.is_zero()) {
        throw std::invalid_argument("leading monomial of zero");
    }
    const auto& terms = p.terms();
    const auto it = std::max_element(terms.begin(), terms.end(),
                                     [&](const Term& a, const Term& b) { return order.greater(b.mono, a.mono); });
    return it->mono;
}

Scalar leading_coefficient(const Polynomial& p, const TermOrder& order) {
    return p.coefficient(leading_monomial(p, order));
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors, const TermOrder& order) {
    const auto basis = ordered_all(divisors, order);
    std::vector<std::size_t> active(basis.size());
    std::iota(active.begin(), active.end(), 0);
    return from_ordered(reduce(to_ordered(p, order), basis, active, order));
}

DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors, const TermOrder& order) {
    const auto basis = ordered_all(divisors, order);
    std::vector<std::size_t> active(basis.size());
    std::iota(active.begin(), active.end(), 0);
    std::vector<std::vector<Term>> quotient_terms(basis.size());
    Ordered remainder = reduce(to_ordered(p, order), basis, active, order, &quotient_terms);
    DivisionResult result;
    for (auto& q : quotient_terms) {
        result.quotients.push_back(Polynomial::from_terms(std::move(q)));
    }
    result.remainder = from_ordered(std::move(remainder));
    return result;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const TermOrder& order,
                         const BuchbergerLimits& limits) {
    return Engine(order, limits).run(generators);
}

GroebnerBasis buchberger(const PolySystem& system, const TermOrder& order, const BuchbergerLimits& limits) {
    return buchberger(system.polynomials(), order, limits);
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& generators, const TermOrder& order) {
    const auto basis = ordered_all(generators, order);
    std::vector<std::size_t> active(basis.size());
    std::iota(active.begin(), active.end(), 0);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            if (!reduce(s_polynomial(basis[a], basis[b], order), basis, active, order).empty()) {
                return false;
            }
        }
    }
    return true;
}

bool ideal_contains(const GroebnerBasis& basis, const Polynomial& p) {
    return normal_form(p, basis.generators, basis.order).is_zero();
}

std::optional<std::vector<Polynomial>> membership_certificate(const GroebnerBasis& basis, const Polynomial& p) {
    DivisionResult division = divide(p, basis.generators, basis.order);
    if (!division.remainder.is_zero()) {
        return std::nullopt;
    }
    Polynomial recombined;
    for (std::size_t i = 0; i < division.quotients.size(); ++i) {
        recombined += division.quotients[i] * basis.generators[i];
    }
    if (recombined != p) {
        throw std::logic_error("membership certificate failed exact verification");
    }
    return std::move(division.quotients);
}

std::vector<MembershipVerdict> membership_report(const GroebnerBasis& basis, const PolySystem& candidates) {
    std::vector<MembershipVerdict> out;
    for (const auto& c : candidates.polys) {
        MembershipVerdict v{c.label, ideal_contains(basis, c.poly), false, false};
        if (v.member) {
            v.square_member = v.cube_member = true;
        } else {
            const Polynomial sq = c.poly * c.poly;
            v.square_member = ideal_contains(basis, sq);
            v.cube_member = v.square_member || ideal_contains(basis, sq * c.poly);
        }
        out.push_back(std::move(v));
    }
    return out;
}

IdealComparison compare_ideals(const PolySystem& first, const PolySystem& second, const TermOrder& order,
                               const BuchbergerLimits& limits) {
    const auto first_basis = buchberger(first, order, limits);
    const auto second_basis = buchberger(second, order, limits);
    IdealComparison cmp;
    cmp.first_in_second = membership_report(second_basis, first);
    cmp.second_in_first = membership_report(first_basis, second);
    cmp.first_subset_second = std::all_of(cmp.first_in_second.begin(), cmp.first_in_second.end(),
                                          [](const MembershipVerdict& v) { return v.member; });
    cmp.second_subset_first = std::all_of(cmp.second_in_first.begin(), cmp.second_in_first.end(),
                                          [](const MembershipVerdict& v) { return v.member; });
    return cmp;
}

PolySystem with_weight_inverse(const PolySystem& system) {
    PolySystem out = system;
    const Polynomial t = Polynomial::variable(kSaturationVar);
    const Polynomial l = Polynomial::variable(kWeightVar);
    out.polys.push_back({"weight-inverse", t * l - Polynomial(1), std::nullopt});
    return out;
}

}  // namespace rbdq
