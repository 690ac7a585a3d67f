// Command-line surface: parse a problem file, dispatch one computation,
// print a text or JSON report. Exit codes: 0 success, 1 input error,
// 2 failed mathematical verdict.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jmult/errors.hpp"
#include "jmult/fiber.hpp"
#include "jmult/hilbert.hpp"
#include "jmult/parser.hpp"
#include "jmult/problem.hpp"
#include "jmult/report.hpp"

namespace {

struct Options {
    std::string file;
    std::optional<std::uint64_t> seed;
    std::optional<int> agree;
    std::optional<std::uint32_t> characteristic;
    bool json = false;
    std::string order = "degrevlex";
};

jmult::MonomialOrder parse_order(const std::string& name) {
    if (name == "degrevlex") return jmult::MonomialOrder::degrevlex();
    if (name == "lex") return jmult::MonomialOrder::lex();
    throw jmult::InputError("unknown order: " + name + " (use degrevlex or lex)");
}

jmult::ProblemSpec load_with_overrides(const Options& opt) {
    jmult::ProblemSpec spec = jmult::load_problem_file(opt.file);
    if (opt.seed) spec.seed = *opt.seed;
    if (opt.agree) spec.seeds_for_agreement = *opt.agree;
    if (opt.characteristic) spec.characteristic = *opt.characteristic;
    if (spec.seeds_for_agreement < 1)
        throw jmult::InputError("--agree must be positive");
    return spec;
}

int cmd_gb(const Options& opt) {
    jmult::ProblemSpec spec = load_with_overrides(opt);
    jmult::MonomialOrder order = parse_order(opt.order);
    jmult::BuiltProblem built = jmult::build_problem(spec);
    const jmult::GroebnerBasis& gb = built.ideal.basis(order);
    if (opt.json) {
        nlohmann::ordered_json j;
        j["order"] = opt.order;
        j["basis"] = nlohmann::ordered_json::array();
        for (const auto& g : gb.elements) j["basis"].push_back(g.str());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "reduced Groebner basis (" << opt.order << "), " << gb.elements.size()
                  << " element(s):\n";
        for (const auto& g : gb.elements) std::cout << "  " << g.str() << "\n";
    }
    return 0;
}

int cmd_hilbert(const Options& opt) {
    jmult::ProblemSpec spec = load_with_overrides(opt);
    jmult::BuiltProblem built = jmult::build_problem(spec);
    const jmult::HilbertData& hd = jmult::hilbert_data(built.ideal);
    if (opt.json) {
        nlohmann::ordered_json j;
        j["zero_ring"] = hd.is_zero_ring;
        j["dim"] = hd.is_zero_ring ? nlohmann::ordered_json(nullptr)
                                   : nlohmann::ordered_json(hd.dimension);
        j["degree"] = hd.is_zero_ring ? nlohmann::ordered_json(nullptr)
                                      : nlohmann::ordered_json(hd.degree);
        j["numerator"] = hd.numerator;
        std::cout << j.dump(2) << "\n";
    } else {
        if (hd.is_zero_ring) std::cout << "zero ring\n";
        else std::cout << "dim " << hd.dimension << ", degree " << hd.degree << "\n";
    }
    return 0;
}

int run_pipeline_command(const Options& opt, jmult::ReportMode mode) {
    jmult::ProblemSpec spec = load_with_overrides(opt);
    jmult::BuiltProblem built = jmult::build_problem(spec);
    jmult::PipelineReport report;
    if (mode == jmult::ReportMode::dual) {
        if (!built.dual_form)
            throw jmult::InputError("dual mode needs \"ideal\": {\"jacobian_of\": ...}");
        if (!built.ring.relations().empty()) {
            const auto& rel = built.ring.relations();
            if (rel.size() != 1 || !(rel[0] == *built.dual_form))
                throw jmult::InputError(
                    "dual mode: relations must be empty or exactly the hypersurface form");
        }
        report = jmult::dual_variety_degree(*built.dual_form, spec.seed,
                                            spec.seeds_for_agreement);
    } else {
        bool with_fiber = mode != jmult::ReportMode::multseq;
        report = jmult::run_pipeline(built.ring, built.ideal, spec.seed,
                                     spec.seeds_for_agreement, with_fiber);
    }
    std::cout << (opt.json ? jmult::report_json_text(report, mode)
                           : jmult::report_plain_text(report, mode));
    return jmult::report_passes(report) ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplicity sequences, fiber-ring degrees and dual degrees "
                 "of equigenerated ideals"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_option("file", opt.file, "problem file (JSON)")->required();
        cmd->add_option("--seed", opt.seed, "seed for the general-element matrix");
        cmd->add_option("--agree", opt.agree, "number of seeds for the agreement protocol");
        cmd->add_option("--char", opt.characteristic, "field characteristic (prime)");
        cmd->add_flag("--json", opt.json, "machine-readable report");
        cmd->add_option("--order", opt.order, "monomial order: degrevlex or lex");
    };

    CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis of the ideal");
    CLI::App* hilbert = app.add_subcommand("hilbert", "dimension and degree of R/I");
    CLI::App* multseq =
        app.add_subcommand("multseq", "cycle contributions and balance identity");
    CLI::App* fiber = app.add_subcommand("fiber", "special fiber ring degree and spread");
    CLI::App* dual = app.add_subcommand("dual", "degree of the dual variety of a hypersurface");
    CLI::App* check = app.add_subcommand("check", "full pipeline with every verdict");
    for (CLI::App* cmd : {gb, hilbert, multseq, fiber, dual, check}) add_common(cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gb->parsed()) return cmd_gb(opt);
        if (hilbert->parsed()) return cmd_hilbert(opt);
        if (multseq->parsed()) return run_pipeline_command(opt, jmult::ReportMode::multseq);
        if (fiber->parsed()) return run_pipeline_command(opt, jmult::ReportMode::fiber);
        if (dual->parsed()) return run_pipeline_command(opt, jmult::ReportMode::dual);
        if (check->parsed()) return run_pipeline_command(opt, jmult::ReportMode::check);
    } catch (const jmult::VerdictFailure& e) {
        std::cerr << "verdict failure: " << e.what() << "\n";
        return 2;
    } catch (const jmult::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const jmult::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
