#include "jmult/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace jmult {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> lms;
    lms.reserve(elements.size());
    for (const auto& g : elements) lms.push_back(g.leading_monomial());
    return lms;
}

namespace {

Polynomial divide_full(const Polynomial& f, const std::vector<Polynomial>& basis) {
    Polynomial p = f;
    std::vector<Term> remainder;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        bool reduced = false;
        for (const Polynomial& g : basis) {
            if (g.leading_monomial().divides(lt.mono)) {
                // basis elements are monic
                p = p.submul(lt.coeff, lt.mono.divide(g.leading_monomial()), g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(lt);
            std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
            p = Polynomial::from_terms(p.ring(), std::move(rest));
        }
    }
    return Polynomial::from_terms(f.ring(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.times_term(1, l.divide(f.leading_monomial()));
    return a.submul(1, l.divide(g.leading_monomial()), g);
}

struct PairKey {
    std::uint32_t deg;
    int i, j;
    bool operator<(const PairKey& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

} // namespace

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, MonomialOrder order) {
    RingPtr ring;
    for (const auto& g : gens) {
        if (!ring) ring = PolyRing::with_order(g.ring(), order);
        else if (!ring->compatible(*g.ring()))
            throw std::invalid_argument("ring mismatch among generators");
    }
    if (!ring) return GroebnerBasis{nullptr, {}};

    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
        Polynomial h = g.in_ring(ring);
        if (!h.is_zero()) basis.push_back(h.monic());
    }
    if (basis.empty()) return GroebnerBasis{ring, {}};

    std::set<PairKey> pending;
    auto push_pairs = [&](int upto) {
        int n = static_cast<int>(basis.size());
        for (int k = upto; k < n; ++k)
            for (int i = 0; i < k; ++i) {
                Monomial l = Monomial::lcm(basis[static_cast<std::size_t>(i)].leading_monomial(),
                                           basis[static_cast<std::size_t>(k)].leading_monomial());
                pending.insert({l.degree(), i, k});
            }
    };
    push_pairs(1);

    auto in_pending = [&](int a, int b, const Monomial& l) {
        if (a > b) std::swap(a, b);
        Monomial lab = Monomial::lcm(basis[static_cast<std::size_t>(a)].leading_monomial(),
                                     basis[static_cast<std::size_t>(b)].leading_monomial());
        (void)l;
        return pending.count({lab.degree(), a, b}) != 0;
    };

    while (!pending.empty()) {
        PairKey key = *pending.begin();
        pending.erase(pending.begin());
        const Polynomial& fi = basis[static_cast<std::size_t>(key.i)];
        const Polynomial& fj = basis[static_cast<std::size_t>(key.j)];
        if (fi.leading_monomial().coprime(fj.leading_monomial()))
            continue;
        Monomial l = Monomial::lcm(fi.leading_monomial(), fj.leading_monomial());
        bool chained = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
            if (k == key.i || k == key.j) continue;
            if (basis[static_cast<std::size_t>(k)].leading_monomial().divides(l) &&
                !in_pending(key.i, k, l) && !in_pending(key.j, k, l))
                chained = true;
        }
        if (chained) continue;

        Polynomial h = divide_full(s_polynomial(fi, fj), basis);
        if (h.is_zero()) continue;
        int before = static_cast<int>(basis.size());
        basis.push_back(h.monic());
        push_pairs(before);
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& a = basis[j].leading_monomial();
            const Monomial& b = basis[i].leading_monomial();
            if (a.divides(b) && (a != b || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Tail-reduce each element against the others.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(divide_full(minimal[i], others).monic());
    }
    const auto& ord = ring->order();
    std::sort(reduced.begin(), reduced.end(), [&ord](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(), b.leading_monomial());
    });
    return GroebnerBasis{ring, std::move(reduced)};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (!gb.ring) return f;
    if (!f.ring()->compatible(*gb.ring))
        throw std::invalid_argument("ring mismatch");
    if (f.ring()->order() != gb.ring->order())
        throw std::invalid_argument("order mismatch with the basis");
    return divide_full(f, gb.elements);
}

bool ideal_membership(const Polynomial& f, const std::vector<Polynomial>& gens) {
    if (f.is_zero()) return true;
    GroebnerBasis gb = groebner_basis(gens, f.ring()->order());
    if (!gb.ring) return false;
    return normal_form(f.in_ring(gb.ring), gb).is_zero();
}

} // namespace jmult
