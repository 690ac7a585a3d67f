#ifndef JMULT_PROBLEM_HPP
#define JMULT_PROBLEM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jmult/ideal.hpp"

namespace jmult {

/// One problem file: a quotient ring, an ideal (explicit generators or a
/// jacobian_of directive) and the seed protocol parameters.
struct ProblemSpec {
    std::uint32_t characteristic = 32003;
    std::vector<std::string> vars;
    std::vector<std::string> relations;
    std::vector<std::string> ideal_gens;
    std::string jacobian_of; // nonempty means the directive form
    std::uint64_t seed = 0;
    int seeds_for_agreement = 3;
};

ProblemSpec parse_problem_json(const std::string& text);
ProblemSpec load_problem_file(const std::string& path);

struct BuiltProblem {
    QuotientRing ring;
    IdealHandle ideal;
    std::optional<Polynomial> dual_form; // set when jacobian_of was used
};

BuiltProblem build_problem(const ProblemSpec& spec,
                           MonomialOrder order = MonomialOrder::degrevlex());

} // namespace jmult

#endif
