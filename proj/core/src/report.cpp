#include "jmult/report.hpp"

#include <sstream>

#include <json.hpp>

namespace jmult {

namespace {

nlohmann::ordered_json rational_json(const Rational& q) {
    if (q.is_integer()) return q.num;
    return q.str();
}

long long int_power(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

std::string report_json_text(const PipelineReport& report, ReportMode mode) {
    const MultSeqReport& m = report.mult;
    nlohmann::ordered_json j;
    j["e_R"] = m.ring_degree;
    j["dim"] = m.dim;
    j["ht_I"] = m.height;
    j["delta"] = m.delta;
    j["spread"] = report.fiber ? report.fiber->spread : m.s_observed;
    j["contributions"] = nlohmann::ordered_json::array();
    for (const auto& s : m.steps) {
        nlohmann::ordered_json step;
        step["i"] = s.index;
        step["dim_before"] = s.dim_before;
        step["value"] = s.contribution;
        j["contributions"].push_back(std::move(step));
    }
    j["balance"] = {{"lhs", rational_json(m.balance_lhs)},
                    {"rhs", rational_json(m.balance_rhs)},
                    {"pass", m.balance_pass}};
    j["fiber_degree"] = report.fiber ? nlohmann::ordered_json(report.fiber->degree)
                                     : nlohmann::ordered_json(nullptr);
    j["r"] = report.rank ? rational_json(report.rank->r_balance)
                         : nlohmann::ordered_json(nullptr);
    j["dual_degree"] = report.dual_mode ? nlohmann::ordered_json(report.dual_degree)
                                        : nlohmann::ordered_json(nullptr);
    j["reduction_bound"] = report.fiber ? nlohmann::ordered_json(report.fiber->degree)
                                        : nlohmann::ordered_json(nullptr);
    j["seeds_agreed"] = report.seeds_agreed;
    (void)mode;
    return j.dump(2) + "\n";
}

std::string report_plain_text(const PipelineReport& report, ReportMode mode) {
    const MultSeqReport& m = report.mult;
    std::ostringstream os;
    os << "d = " << m.dim << ", ht I = " << m.height << ", delta = " << m.delta
       << ", e(R) = " << m.ring_degree << "\n";
    for (const auto& s : m.steps) {
        os << "υ_" << s.index << " = " << s.contribution;
        if (s.terminal) os << "   (terminal, dim " << s.dim_before << ")";
        os << "\n";
    }
    os << "balance " << m.balance_lhs.str() << " = " << m.balance_rhs.str()
       << (m.balance_pass ? "   [pass]" : "   [FAIL]") << "\n";
    os << "seeds agreed: " << (report.seeds_agreed ? "yes" : "NO") << " (" << report.seeds_checked
       << " seeds)\n";

    if (report.fiber) {
        const FiberData& f = *report.fiber;
        os << "analytic spread = " << f.spread
           << (report.spread_matches ? " (matches termination index)"
                                     : " (MISMATCH with termination index)")
           << "\n";
        os << "fiber degree e(k[I_delta]) = " << f.degree << "\n";
        if (report.rank) {
            os << "r = " << report.rank->r_balance.str() << " (balance), "
               << report.rank->r_terminal.str() << " (terminal)"
               << (report.rank->pass ? "   [pass]" : "   [FAIL]") << "\n";
        }
        os << "reduction number bound: " << f.degree
           << "   (assumes a characteristic-zero domain)\n";
    }

    if (report.dual_mode && report.fiber && report.rank) {
        const int d = m.dim;
        const long long smooth =
            m.ring_degree * int_power(m.delta, d - 1);
        os << "\n";
        os << "dual degree = " << report.dual_degree << ", r = "
           << report.rank->r_balance.str() << "\n";
        os << "smooth term " << m.ring_degree << "*" << m.delta << "^" << (d - 1) << " = "
           << smooth << "\n";
        std::ostringstream arithmetic;
        arithmetic << "(" << smooth;
        for (const auto& s : m.steps) {
            if (s.index >= m.s_observed) break;
            if (s.index < std::max(1, m.height)) continue;
            long long weighted = s.contribution * int_power(m.delta, d - s.index - 1);
            os << "correction codim " << s.index << ": " << s.contribution << " * " << m.delta
               << "^" << (d - s.index - 1) << " = " << weighted << "\n";
            arithmetic << " - " << weighted;
        }
        arithmetic << ")/" << report.rank->r_balance.str() << " = " << report.dual_degree;
        os << arithmetic.str() << "\n";
        os << "assumed: f reduced and irreducible (not checked)\n";
    }
    (void)mode;
    return os.str();
}

bool report_passes(const PipelineReport& report) {
    if (!report.mult.balance_pass) return false;
    if (!report.seeds_agreed) return false;
    if (report.fiber && !report.spread_matches) return false;
    if (report.rank && !report.rank->pass) return false;
    return true;
}

} // namespace jmult
