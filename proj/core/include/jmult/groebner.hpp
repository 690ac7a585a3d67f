#ifndef JMULT_GROEBNER_HPP
#define JMULT_GROEBNER_HPP

#include <vector>

#include "jmult/polynomial.hpp"

namespace jmult {

/// Reduced Groebner basis: monic, inter-reduced, sorted by ascending
/// leading monomial. Unique for a given ideal and order, so basis equality
/// decides ideal equality.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> elements;

    bool is_unit() const {
        return elements.size() == 1 && elements[0].leading_monomial().is_one();
    }
    bool is_zero() const { return elements.empty(); }
    std::vector<Monomial> leading_monomials() const;
    bool operator==(const GroebnerBasis& o) const { return elements == o.elements; }
};

/// Buchberger with the coprime and chain pair-discard criteria and
/// lowest-lcm-degree pair selection. Generators are mapped into a ring
/// carrying `order`; zero generators are dropped. Deterministic.
GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, MonomialOrder order);

/// Remainder of the division algorithm: no term of the result is divisible
/// by any leading monomial of gb. f - normal_form(f, gb) lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_membership(const Polynomial& f, const std::vector<Polynomial>& gens);

} // namespace jmult

#endif
