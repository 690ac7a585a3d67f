#include "jmult/multseq.hpp"

#include <string>

#include "jmult/errors.hpp"

namespace jmult {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int common_generator_degree(const IdealHandle& I) {
    const auto& gens = I.generators();
    if (gens.empty()) throw InputError("ideal has no generators");
    int delta = -1;
    for (const auto& g : gens) {
        if (!g.is_homogeneous())
            throw InputError("generator is not homogeneous: " + g.str());
        if (delta < 0) delta = g.degree();
        else if (g.degree() != delta)
            throw InputError("mixed generator degrees (equigenerated ideals only)");
    }
    if (delta < 1) throw InputError("generators must have positive degree");
    return delta;
}

} // namespace

GeneralElementPlan general_elements(const IdealHandle& I, int count, std::uint64_t seed) {
    if (count < 1) throw InputError("element count must be positive");
    GeneralElementPlan plan;
    plan.seed = seed;
    plan.count = count;
    plan.delta = common_generator_degree(I);

    const auto& gens = I.generators();
    const auto& ring = I.ring().ambient();
    const std::uint32_t p = ring->field().characteristic();
    std::uint64_t state = seed;
    plan.lambda.resize(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        auto& row = plan.lambda[static_cast<std::size_t>(i)];
        row.resize(gens.size());
        Polynomial x(ring);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            row[j] = static_cast<std::uint32_t>(splitmix64(state) % p);
            x = x + gens[j].scaled(row[j]);
        }
        plan.elements.push_back(std::move(x));
    }
    return plan;
}

std::vector<long long> MultSeqReport::contributions() const {
    std::vector<long long> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(s.contribution);
    return out;
}

MultSeqReport multiplicity_sequence(const QuotientRing& R, const IdealHandle& I,
                                    std::uint64_t seed) {
    if (!I.ring().same_ring(R)) throw InputError("ideal does not live in the given ring");
    if (R.is_zero_ring()) throw InputError("zero ring");
    if (I.is_unit()) throw InputError("ideal must be proper");

    MultSeqReport report;
    report.seed = seed;
    report.dim = R.dimension();
    report.delta = common_generator_degree(I);
    report.ring_degree = R.degree();
    {
        const HilbertData& hd = I.hilbert();
        report.height = hd.is_zero_ring ? report.dim : report.dim - hd.dimension;
    }

    GeneralElementPlan plan =
        general_elements(I, report.dim > 0 ? report.dim : 1, seed);
    const int d = report.dim;

    // current ring T_i, held as its ambient defining ideal
    QuotientRing current = R;
    for (int i = 0;; ++i) {
        if (i > d)
            throw VerdictFailure("step-count overflow at seed " + std::to_string(seed) +
                                 ": elements not generic, resample with a fresh seed");
        MultSeqStep step;
        step.index = i;
        step.dim_before = current.dimension();

        IdealHandle ideal_here(current, I.generators());
        if (ideal_here.is_zero()) {
            // I maps to 0 here; the saturation would be the unit ideal
            step.contribution = current.degree();
            step.terminal = true;
            report.steps.push_back(step);
            break;
        }
        IdealHandle zero(current, {});
        auto [sat, exponent] = saturate(zero, ideal_here);
        (void)exponent;

        if (sat.is_unit()) {
            // I is nilpotent here: the whole ring is supported on V(I)
            step.contribution = current.degree();
            step.terminal = true;
            report.steps.push_back(step);
            break;
        }
        const HilbertData& residual = sat.hilbert();
        if (residual.dimension < current.dimension()) {
            // every top-dimensional component lies in V(I); nothing remains
            step.contribution = current.degree();
            step.terminal = true;
            report.steps.push_back(step);
            break;
        }
        step.contribution = current.degree() - residual.degree;
        if (step.contribution < 0)
            throw VerdictFailure("negative cycle contribution at seed " +
                                 std::to_string(seed));
        report.steps.push_back(step);

        // T_{i+1} = (T_i / J) / (x_{i+1})
        std::vector<Polynomial> next_relations = sat.basis().elements;
        for (auto& g : next_relations) g = g.in_ring(R.ambient());
        next_relations.push_back(plan.elements[static_cast<std::size_t>(i)]);
        QuotientRing next(R.ambient(), std::move(next_relations));
        if (next.dimension() != current.dimension() - 1)
            throw VerdictFailure(
                "dimension did not drop by one after cutting (seed " + std::to_string(seed) +
                ", step " + std::to_string(i) + "): elements not generic, resample");
        current = next;
    }

    report.s_observed = report.steps.back().index;

    Rational lhs(0);
    for (const auto& s : report.steps)
        lhs = lhs + Rational(s.contribution) * Rational::power(report.delta, d - 1 - s.index);
    report.balance_lhs = lhs;
    report.balance_rhs = Rational(report.ring_degree) * Rational::power(report.delta, d - 1);
    report.balance_pass = report.balance_lhs == report.balance_rhs;

    for (const auto& s : report.steps)
        report.normalized.push_back(Rational(s.contribution) *
                                    Rational::power(report.delta, d - s.index - 1));
    return report;
}

BalanceVerdict check_balance(const MultSeqReport& report, const QuotientRing& R) {
    BalanceVerdict v;
    Rational lhs(0);
    for (const auto& s : report.steps)
        lhs = lhs + Rational(s.contribution) *
                        Rational::power(report.delta, report.dim - 1 - s.index);
    v.lhs = lhs;
    v.rhs = Rational(R.degree()) * Rational::power(report.delta, report.dim - 1);
    v.pass = v.lhs == v.rhs;
    return v;
}

std::vector<ResidualStep> residual_chain(const QuotientRing& R, const IdealHandle& I,
                                         const GeneralElementPlan& plan) {
    if (!I.ring().same_ring(R)) throw InputError("ideal does not live in the given ring");
    if (R.is_zero_ring()) throw InputError("zero ring");
    if (I.is_unit()) throw InputError("ideal must be proper");
    if (I.is_zero()) throw InputError("ideal maps to zero in the ring");

    std::vector<ResidualStep> out;
    for (int i = 1; i <= plan.count; ++i) {
        std::vector<Polynomial> cut(plan.elements.begin(),
                                    plan.elements.begin() + (i - 1));
        IdealHandle cut_ideal(R, std::move(cut));
        ResidualStep step{i, colon(cut_ideal, I), 0, -1, false};
        IdealHandle saturated = saturate(cut_ideal, I).first;
        step.matches_saturation = step.colon_ideal.same_ideal(saturated);

        IdealHandle with_ideal = ideal_sum(step.colon_ideal, I);
        const HilbertData& hd = with_ideal.hilbert();
        step.dim_with_ideal = hd.dimension;
        step.degree_with_ideal = hd.is_zero_ring ? 0 : hd.degree;
        bool done = hd.is_zero_ring;
        out.push_back(std::move(step));
        if (done) break;
    }
    return out;
}

} // namespace jmult
