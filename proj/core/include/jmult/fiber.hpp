#ifndef JMULT_FIBER_HPP
#define JMULT_FIBER_HPP

#include <optional>

#include "jmult/multseq.hpp"

namespace jmult {

/// The special fiber ring of an equigenerated ideal, presented on fresh
/// variables z_1..z_n: defining ideal (kernel of z_j -> a_j), analytic
/// spread (its dimension) and degree.
struct FiberData {
    IdealHandle defining_ideal; // in the z-ring, relations 0
    int spread = 0;             // l(I)
    long long degree = 0;       // e(k[I_delta])
    int delta = 1;
    int generator_count = 0;
};

/// Kernel of z_j -> a_j, by eliminating the original variables from
/// (z_1 - a_1, ..., z_n - a_n) + relations.
IdealHandle fiber_ideal(const QuotientRing& R, const IdealHandle& I);

FiberData fiber_data(const QuotientRing& R, const IdealHandle& I);

int analytic_spread(const QuotientRing& R, const IdealHandle& I);

struct RankVerdict {
    bool pass = false;
    Rational r_balance;  // (e(R) delta^(d-1) - sum_{i<s} v_i delta^(d-i-1)) / e(fiber)
    Rational r_terminal; // v_s delta^(d-s-1) / e(fiber)
};

/// Two-sided inference of the rank r: from the balance and from the
/// terminal contribution. Passes when both agree and r is a positive
/// integer. Throws VerdictFailure on a zero fiber degree.
RankVerdict check_rank(const MultSeqReport& mult, const FiberData& fiber);

/// Full pipeline: recursion under the cross-seed agreement protocol,
/// fiber elimination, rank inference. Fields of the report that a caller
/// did not ask for (with_fiber = false) are left empty.
struct PipelineReport {
    MultSeqReport mult;
    bool seeds_agreed = false;
    int seeds_checked = 0;
    std::optional<FiberData> fiber;
    std::optional<RankVerdict> rank;
    bool spread_matches = false; // l(I) == observed termination index

    bool dual_mode = false;
    long long dual_degree = 0;   // e(fiber) in dual mode
    int hypersurface_degree = 0; // deg f in dual mode
};

PipelineReport run_pipeline(const QuotientRing& R, const IdealHandle& I, std::uint64_t seed,
                            int agree_seeds, bool with_fiber = true);

/// Degree of the dual variety of the hypersurface f = 0: runs the
/// pipeline on the Jacobian ideal of k[y]/(f) with delta = deg f - 1.
/// Requires deg f >= 2, char not dividing deg f or deg f - 1, and a
/// nonzero gradient; reducedness/irreducibility of f is assumed, not
/// checked.
PipelineReport dual_variety_degree(const Polynomial& f, std::uint64_t seed, int agree_seeds);

/// e(k[I_delta]), an upper bound for the reduction number of I with
/// respect to any reduction (valid over characteristic-zero domains; the
/// prime-field computation stands in for that hypothesis).
long long reduction_number_bound(const FiberData& fiber);

} // namespace jmult

#endif
