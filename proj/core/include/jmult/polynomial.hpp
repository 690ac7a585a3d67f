#ifndef JMULT_POLYNOMIAL_HPP
#define JMULT_POLYNOMIAL_HPP

#include <memory>
#include <string>
#include <vector>

#include "jmult/monomial.hpp"
#include "jmult/zp.hpp"

namespace jmult {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Standard-graded polynomial ring over a prime field: every variable has
/// degree one. The active monomial order travels with the ring; the same
/// variable set under a different order is a distinct PolyRing value.
class PolyRing {
public:
    PolyRing(PrimeField field, std::vector<std::string> variables,
             MonomialOrder order = MonomialOrder::degrevlex());

    const PrimeField& field() const { return field_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variables() const { return vars_; }
    const MonomialOrder& order() const { return order_; }

    /// Index of a variable name, or -1.
    int var_index(const std::string& name) const;

    /// Same field and variable list; the order may differ.
    bool compatible(const PolyRing& o) const;
    bool operator==(const PolyRing& o) const;

    static RingPtr make(std::uint32_t characteristic, std::vector<std::string> variables,
                        MonomialOrder order = MonomialOrder::degrevlex());
    /// Same variables and field, different order.
    static RingPtr with_order(const RingPtr& ring, MonomialOrder order);

private:
    PrimeField field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

struct Term {
    Monomial mono;
    std::uint32_t coeff;
};

/// Sparse multivariate polynomial; terms are kept strictly decreasing in
/// the ring's monomial order with nonzero coefficients, so the leading
/// term is terms().front().
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, long long value);
    static Polynomial variable(RingPtr ring, int index);
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    std::uint32_t leading_coeff() const { return leading_term().coeff; }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(std::uint32_t c) const;
    Polynomial times_term(std::uint32_t c, const Monomial& m) const;
    Polynomial monic() const;
    Polynomial pow(unsigned e) const;

    /// this - c * m * g, the reduction step of the division algorithm.
    Polynomial submul(std::uint32_t c, const Monomial& m, const Polynomial& g) const;

    /// Same coefficients re-sorted under another ring's order (fields and
    /// variable lists must agree).
    Polynomial in_ring(const RingPtr& other) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void normalize();
};

Polynomial partial_derivative(const Polynomial& f, int var);
Polynomial partial_derivative(const Polynomial& f, const std::string& var);

/// All first partials, in variable order (zeros kept: callers that build
/// Jacobian ideals drop them).
std::vector<Polynomial> gradient(const Polynomial& f);

void require_same_ring(const Polynomial& a, const Polynomial& b);

} // namespace jmult

#endif
