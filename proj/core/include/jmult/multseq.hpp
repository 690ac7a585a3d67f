#ifndef JMULT_MULTSEQ_HPP
#define JMULT_MULTSEQ_HPP

#include <cstdint>
#include <vector>

#include "jmult/hilbert.hpp"
#include "jmult/ideal.hpp"
#include "jmult/rational.hpp"

namespace jmult {

/// Seeded coefficient matrix Lambda over the prime field together with the
/// materialized combinations x_i = sum_j lambda_ij * a_j of the ideal's
/// generators. Regeneration from (seed, ring, generators) is bit-identical.
struct GeneralElementPlan {
    std::uint64_t seed = 0;
    int count = 0;
    int delta = 1; // common generator degree
    std::vector<std::vector<std::uint32_t>> lambda;
    std::vector<Polynomial> elements;
};

/// Requires every generator homogeneous of one common positive degree.
GeneralElementPlan general_elements(const IdealHandle& I, int count, std::uint64_t seed);

struct MultSeqStep {
    int index = 0;          // i
    int dim_before = 0;     // dim of the ring this contribution is measured in
    long long contribution = 0; // deg v_i >= 0
    bool terminal = false;
};

/// Outcome of the hyperplane-section recursion: the ordered cycle
/// contributions deg v_i supported on V(I), one per codimension, with the
/// delta-weighted balance against e(R) and the Veronese-normalized values.
struct MultSeqReport {
    std::uint64_t seed = 0;
    int dim = 0;            // d = dim R
    int height = 0;         // codim of I in R
    int delta = 1;
    long long ring_degree = 0; // e(R)
    std::vector<MultSeqStep> steps;
    int s_observed = 0;
    Rational balance_lhs;   // sum_i v_i * delta^(d-1-i)
    Rational balance_rhs;   // e(R) * delta^(d-1)
    bool balance_pass = false;
    std::vector<Rational> normalized; // c_{d-i} = v_i * delta^(d-i-1)

    std::vector<long long> contributions() const;
};

/// Runs the recursion: T_0 = R; at step i take J = 0 :_{T_i} <I*T_i>; a
/// unit J (I nilpotent) or a dimension drop of T_i/J ends the run with the
/// full e(T_i) as the terminal contribution; otherwise the contribution is
/// e(T_i) - e(T_i/J) and the next ring is (T_i/J) cut by the next general
/// element. Dimension must fall by exactly one per cut and the step count
/// must not pass dim R; violations are VerdictFailures naming the seed.
MultSeqReport multiplicity_sequence(const QuotientRing& R, const IdealHandle& I,
                                    std::uint64_t seed);

struct BalanceVerdict {
    bool pass = false;
    Rational lhs;
    Rational rhs;
};

/// Exact check of sum_i v_i * delta^(d-1-i) = e(R) * delta^(d-1) in
/// rational arithmetic.
BalanceVerdict check_balance(const MultSeqReport& report, const QuotientRing& R);

struct ResidualStep {
    int index = 0;               // i, for H_{i-1} = (x_1..x_{i-1}) : I
    IdealHandle colon_ideal;     // H_{i-1} (plain colon)
    long long degree_with_ideal = 0; // e(R/(H_{i-1} + I)), length in dim 0
    int dim_with_ideal = -1;
    bool matches_saturation = false; // H_{i-1} equals (x_1..x_{i-1}) : <I>
};

/// The plain-colon ladder of residual intersections for the same general
/// elements, with a per-step flag comparing against the saturated colon.
std::vector<ResidualStep> residual_chain(const QuotientRing& R, const IdealHandle& I,
                                         const GeneralElementPlan& plan);

} // namespace jmult

#endif
