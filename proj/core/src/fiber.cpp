#include "jmult/fiber.hpp"

#include <sstream>

#include "jmult/errors.hpp"

namespace jmult {

namespace {

std::vector<std::string> fresh_fiber_names(const PolyRing& ambient, std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::string name = "z" + std::to_string(j + 1);
        while (ambient.var_index(name) >= 0) name += "_";
        names.push_back(name);
    }
    return names;
}

int require_equigenerated(const IdealHandle& I) {
    const auto& gens = I.generators();
    if (gens.empty()) throw InputError("ideal has no generators");
    int delta = -1;
    for (const auto& g : gens) {
        if (!g.is_homogeneous()) throw InputError("generator is not homogeneous: " + g.str());
        if (delta < 0) delta = g.degree();
        else if (delta != g.degree())
            throw InputError("mixed generator degrees (equigenerated ideals only)");
    }
    return delta;
}

} // namespace

IdealHandle fiber_ideal(const QuotientRing& R, const IdealHandle& I) {
    require_equigenerated(I);
    const RingPtr& amb = R.ambient();
    const auto& gens = I.generators();
    const std::size_t n = gens.size();

    std::vector<std::string> znames = fresh_fiber_names(*amb, n);
    std::vector<std::string> allnames = amb->variables();
    for (const auto& z : znames) allnames.push_back(z);
    RingPtr big = std::make_shared<const PolyRing>(amb->field(), allnames,
                                                   MonomialOrder::degrevlex());

    std::vector<Polynomial> work;
    for (const auto& k : R.relations()) work.push_back(k.in_ring(big));
    for (std::size_t j = 0; j < n; ++j)
        work.push_back(Polynomial::variable(big, amb->nvars() + static_cast<int>(j)) -
                       gens[j].in_ring(big));

    std::vector<int> drop;
    for (int i = 0; i < amb->nvars(); ++i) drop.push_back(i);
    std::vector<Polynomial> kernel = eliminate_ambient(work, drop);

    RingPtr zring = std::make_shared<const PolyRing>(amb->field(), znames,
                                                     MonomialOrder::degrevlex());
    std::vector<Polynomial> out;
    out.reserve(kernel.size());
    for (const auto& g : kernel) {
        std::vector<Term> terms;
        for (const Term& t : g.terms()) {
            Monomial m(zring->nvars());
            for (int i = 0; i < amb->nvars(); ++i)
                if (t.mono[i]) throw std::logic_error("elimination left an original variable");
            for (int j = 0; j < zring->nvars(); ++j)
                m.set_exponent(j, t.mono[amb->nvars() + j]);
            terms.push_back({m, t.coeff});
        }
        out.push_back(Polynomial::from_terms(zring, std::move(terms)));
    }
    return IdealHandle(QuotientRing(zring), std::move(out));
}

FiberData fiber_data(const QuotientRing& R, const IdealHandle& I) {
    FiberData data{fiber_ideal(R, I), 0, 0, require_equigenerated(I),
                   static_cast<int>(I.generators().size())};
    const HilbertData& hd = data.defining_ideal.hilbert();
    if (hd.is_zero_ring)
        throw VerdictFailure("fiber ring collapsed to zero (unit kernel)");
    data.spread = hd.dimension;
    data.degree = hd.degree;
    return data;
}

int analytic_spread(const QuotientRing& R, const IdealHandle& I) {
    return fiber_data(R, I).spread;
}

RankVerdict check_rank(const MultSeqReport& mult, const FiberData& fiber) {
    if (fiber.degree <= 0)
        throw VerdictFailure("fiber degree is 0: upstream failure");
    RankVerdict v;
    const int d = mult.dim;
    const int s = mult.s_observed;
    Rational corrections(0);
    for (const auto& step : mult.steps) {
        if (step.index >= s) break;
        corrections = corrections + Rational(step.contribution) *
                                        Rational::power(mult.delta, d - step.index - 1);
    }
    Rational total = Rational(mult.ring_degree) * Rational::power(mult.delta, d - 1);
    v.r_balance = (total - corrections) / Rational(fiber.degree);
    v.r_terminal = Rational(mult.steps.back().contribution) *
                   Rational::power(mult.delta, d - s - 1) / Rational(fiber.degree);
    v.pass = v.r_balance == v.r_terminal && v.r_balance.is_integer() && v.r_balance.num > 0;
    return v;
}

PipelineReport run_pipeline(const QuotientRing& R, const IdealHandle& I, std::uint64_t seed,
                            int agree_seeds, bool with_fiber) {
    if (agree_seeds < 1) agree_seeds = 1;
    PipelineReport report;
    report.mult = multiplicity_sequence(R, I, seed);
    report.seeds_checked = agree_seeds;
    report.seeds_agreed = true;
    for (int k = 1; k < agree_seeds; ++k) {
        MultSeqReport other = multiplicity_sequence(R, I, seed + static_cast<std::uint64_t>(k));
        if (other.contributions() != report.mult.contributions() ||
            other.s_observed != report.mult.s_observed) {
            std::ostringstream msg;
            msg << "seed disagreement marks the run non-generic: seed " << seed << " gives [";
            for (auto c : report.mult.contributions()) msg << " " << c;
            msg << " ] but seed " << seed + static_cast<std::uint64_t>(k) << " gives [";
            for (auto c : other.contributions()) msg << " " << c;
            msg << " ]; rerun with a fresh --seed";
            throw VerdictFailure(msg.str());
        }
    }

    if (with_fiber) {
        report.fiber = fiber_data(R, I);
        report.rank = check_rank(report.mult, *report.fiber);
        report.spread_matches = report.fiber->spread == report.mult.s_observed;
    }
    return report;
}

PipelineReport dual_variety_degree(const Polynomial& f, std::uint64_t seed, int agree_seeds) {
    if (f.is_zero() || f.degree() < 2)
        throw InputError("hypersurface form must have degree at least 2");
    if (!f.is_homogeneous()) throw InputError("hypersurface form must be homogeneous");
    const std::uint32_t p = f.ring()->field().characteristic();
    const unsigned df = static_cast<unsigned>(f.degree());
    if (df % p == 0 || (df - 1) % p == 0)
        throw InputError("characteristic divides deg f or deg f - 1; derivatives degenerate");

    std::vector<Polynomial> partials;
    for (const auto& g : gradient(f))
        if (!g.is_zero()) partials.push_back(g);
    if (partials.empty()) throw InputError("all partial derivatives vanish");

    QuotientRing R(f.ring(), {f});
    IdealHandle jacobian(R, partials);
    PipelineReport report = run_pipeline(R, jacobian, seed, agree_seeds, true);
    report.dual_mode = true;
    report.hypersurface_degree = static_cast<int>(df);
    report.dual_degree = report.fiber->degree;
    return report;
}

long long reduction_number_bound(const FiberData& fiber) { return fiber.degree; }

} // namespace jmult
