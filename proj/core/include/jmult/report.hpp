#ifndef JMULT_REPORT_HPP
#define JMULT_REPORT_HPP

#include <string>

#include "jmult/fiber.hpp"

namespace jmult {

enum class ReportMode { multseq, fiber, dual, check };

/// Machine report with the stable key set
///   e_R, dim, ht_I, delta, spread, contributions, balance, fiber_degree,
///   r, dual_degree, reduction_bound, seeds_agreed
/// Keys a command does not compute are null. Output is byte-deterministic
/// for a fixed problem and seed.
std::string report_json_text(const PipelineReport& report, ReportMode mode);

/// Human-readable report; the dual layout mirrors the classical Pluecker
/// arithmetic (smooth term minus per-codimension corrections over r).
std::string report_plain_text(const PipelineReport& report, ReportMode mode);

/// True when every verdict the report carries passed (balance, rank
/// integrality/agreement, spread matching the termination index).
bool report_passes(const PipelineReport& report);

} // namespace jmult

#endif
