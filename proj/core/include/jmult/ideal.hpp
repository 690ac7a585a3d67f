#ifndef JMULT_IDEAL_HPP
#define JMULT_IDEAL_HPP

#include <memory>
#include <utility>
#include <vector>

#include "jmult/groebner.hpp"
#include "jmult/hilbert_series.hpp"
#include "jmult/polynomial.hpp"

namespace jmult {

/// R = ambient/(relations). Dimension, degree and the relations basis are
/// computed once per value and shared; handles are cheap to copy.
class QuotientRing {
public:
    explicit QuotientRing(RingPtr ambient);
    QuotientRing(RingPtr ambient, std::vector<Polynomial> relations);

    const RingPtr& ambient() const;
    const std::vector<Polynomial>& relations() const;
    const GroebnerBasis& relations_basis() const;
    const HilbertData& hilbert() const;

    bool is_zero_ring() const { return hilbert().is_zero_ring; }
    int dimension() const { return hilbert().dimension; }
    long long degree() const { return hilbert().degree; }

    bool same_ring(const QuotientRing& o) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

/// An ideal of a quotient ring by the pullback convention: the handle
/// stores ambient-ring generators and represents (generators) + relations.
/// Groebner bases of the pullback are cached per monomial order
/// (write-once, so handles stay observationally pure).
class IdealHandle {
public:
    IdealHandle(QuotientRing ring, std::vector<Polynomial> generators);

    const QuotientRing& ring() const;
    /// Generators as given, zero polynomials dropped.
    const std::vector<Polynomial>& generators() const;
    std::vector<Polynomial> generators_with_relations() const;

    const GroebnerBasis& basis(MonomialOrder order = MonomialOrder::degrevlex()) const;
    /// Hilbert data of ambient/(generators + relations).
    const HilbertData& hilbert() const;

    bool is_unit() const;
    /// True when every generator already lies in the relations ideal.
    bool is_zero() const;
    bool contains(const Polynomial& f) const;
    bool same_ideal(const IdealHandle& o) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J);

/// I : J = {f | f*J inside I}, computed per generator of J through the
/// auxiliary-variable intersection trick. J must not be the zero ideal.
IdealHandle colon(const IdealHandle& I, const IdealHandle& J);

/// I : <J> together with the first exponent at which the colon chain
/// I : J^e stabilizes. Throws past 64 iterations (stabilization is
/// guaranteed, so that signals a bug).
std::pair<IdealHandle, int> saturate(const IdealHandle& I, const IdealHandle& J);

/// Generators of I ∩ k[kept variables], via a Groebner basis in an
/// elimination-block order. `keep` lists ambient variable indices.
IdealHandle eliminate(const IdealHandle& I, const std::vector<int>& keep);

/// Ideal of all t-by-t minors (Laplace expansion). t = 0 gives the unit
/// ideal.
IdealHandle minors(const std::vector<std::vector<Polynomial>>& matrix, int t,
                   const QuotientRing& ring);

/// Intersection of two ambient-ring ideals given by generator lists.
std::vector<Polynomial> intersect_ambient(const std::vector<Polynomial>& a,
                                          const std::vector<Polynomial>& b);

/// Reduced-basis generators of (gens) ∩ k[variables not in drop], returned
/// in the original ring.
std::vector<Polynomial> eliminate_ambient(const std::vector<Polynomial>& gens,
                                          const std::vector<int>& drop);

/// Exact quotient f / g for f in (g); throws if the division leaves a
/// remainder.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

} // namespace jmult

#endif
