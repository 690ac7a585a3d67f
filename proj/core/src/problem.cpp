#include "jmult/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jmult/errors.hpp"
#include "jmult/parser.hpp"

namespace jmult {

ProblemSpec parse_problem_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("problem file: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("problem file: top level must be an object");

    ProblemSpec spec;
    try {
        if (doc.contains("char")) spec.characteristic = doc.at("char").get<std::uint32_t>();
        spec.vars = doc.at("vars").get<std::vector<std::string>>();
        if (doc.contains("relations"))
            spec.relations = doc.at("relations").get<std::vector<std::string>>();
        const auto& ideal = doc.at("ideal");
        if (ideal.is_array()) {
            spec.ideal_gens = ideal.get<std::vector<std::string>>();
        } else if (ideal.is_object() && ideal.contains("jacobian_of")) {
            spec.jacobian_of = ideal.at("jacobian_of").get<std::string>();
        } else {
            throw InputError(
                "problem file: \"ideal\" must be a string list or {\"jacobian_of\": ...}");
        }
        if (doc.contains("seed")) spec.seed = doc.at("seed").get<std::uint64_t>();
        if (doc.contains("seeds_for_agreement"))
            spec.seeds_for_agreement = doc.at("seeds_for_agreement").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("problem file: ") + e.what());
    }
    if (spec.vars.empty()) throw InputError("problem file: \"vars\" must be nonempty");
    if (spec.seeds_for_agreement < 1)
        throw InputError("problem file: seeds_for_agreement must be positive");
    return spec;
}

ProblemSpec load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_json(buf.str());
}

BuiltProblem build_problem(const ProblemSpec& spec, MonomialOrder order) {
    RingPtr ring;
    try {
        ring = PolyRing::make(spec.characteristic, spec.vars, order);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }

    auto parse_at = [&](const std::string& text, const char* what) {
        try {
            return parse_polynomial(text, ring);
        } catch (const ParseError& e) {
            throw InputError(std::string(what) + " \"" + text + "\": " + e.what());
        }
    };

    std::vector<Polynomial> relations;
    for (const auto& s : spec.relations) relations.push_back(parse_at(s, "relation"));
    QuotientRing R(ring, std::move(relations));

    std::optional<Polynomial> dual_form;
    std::vector<Polynomial> gens;
    if (!spec.jacobian_of.empty()) {
        dual_form = parse_at(spec.jacobian_of, "jacobian_of");
        for (const auto& g : gradient(*dual_form))
            if (!g.is_zero()) gens.push_back(g);
        if (gens.empty()) throw InputError("jacobian_of: all partial derivatives vanish");
    } else {
        for (const auto& s : spec.ideal_gens) gens.push_back(parse_at(s, "ideal generator"));
    }
    IdealHandle ideal(R, std::move(gens));
    return BuiltProblem{std::move(R), std::move(ideal), std::move(dual_form)};
}

} // namespace jmult
