#include "efl/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "efl/acceptance.hpp"
#include "efl/characters.hpp"
#include "efl/explicit_formula.hpp"
#include "efl/lefschetz.hpp"
#include "efl/lseries.hpp"
#include "efl/moments.hpp"
#include "efl/numberfield.hpp"
#include "efl/zeros.hpp"

namespace efl {

namespace {

using json = nlohmann::json;

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

TestFunction parse_bump(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw ContractError("usage", "--bump expects C,W");
    try {
        return TestFunction(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
    } catch (const std::invalid_argument&) {
        throw ContractError("usage", "--bump expects two numbers C,W");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, sep);) parts.push_back(p);
    return parts;
}

CompletedLFunction parse_source(const std::string& s) {
    const auto parts = split(s, ':');
    if (parts.size() == 1 && parts[0] == "zeta") return CompletedLFunction::riemann();
    if (parts.size() == 3 && parts[0] == "dirichlet") {
        const auto chi = character(std::stoll(parts[1]), std::stoll(parts[2]));
        if (!chi.is_primitive()) throw ContractError("primitivity", "source character is not primitive");
        return CompletedLFunction::dirichlet(chi);
    }
    if (parts.size() == 2 && parts[0] == "dedekind") return CompletedLFunction::dedekind_cyclotomic(std::stoll(parts[1]));
    throw ContractError("usage", "unknown source '" + s + "' (zeta | dirichlet:M:IDX | dedekind:M)");
}

FiniteRep parse_rep(const std::string& spec, const OrbitModel& model) {
    if (spec == "trivial") return FiniteRep::trivial(model.group);
    if (spec.rfind("char:", 0) == 0) return FiniteRep::cyclic_character(model.group, std::stoll(spec.substr(5)));
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream in(spec.substr(5));
        if (!in) throw ContractError("io", "cannot open representation file " + spec.substr(5));
        return FiniteRep::from_json(model.group, json::parse(in));
    }
    throw ContractError("usage", "unknown representation '" + spec + "' (trivial | char:K | file:PATH)");
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Explicit formulas and ramified Lefschetz trace formula verification"};
    app.require_subcommand(1);

    std::int64_t modulus = 0, char_index = 0;
    auto* characters_cmd = app.add_subcommand("characters", "character table mod M");
    characters_cmd->add_option("--modulus", modulus, "modulus M")->required()->check(CLI::Range(1, 100000));

    std::string source, out_path;
    double height = 0;
    auto* zeros_cmd = app.add_subcommand("zeros", "certified zero list");
    zeros_cmd->add_option("--source", source, "zeta | dirichlet:M:IDX | dedekind:M")->required();
    zeros_cmd->add_option("--height", height, "height T")->required()->check(CLI::Range(0.0, 400.0));
    zeros_cmd->add_option("--out", out_path, "CSV output file (default: stdout)");

    std::string formula, bump = "1.0,0.6";
    std::int64_t prime_bound = 0;
    auto* verify_cmd = app.add_subcommand("verify", "both sides of an explicit formula");
    verify_cmd->add_option("--formula", formula, "ef | efchi | efk | artin")
        ->required()
        ->check(CLI::IsMember({"ef", "efchi", "efk", "artin"}));
    verify_cmd->add_option("--modulus", modulus, "modulus M");
    verify_cmd->add_option("--char-index", char_index, "character index");
    verify_cmd->add_option("--bump", bump, "bump C,W");
    verify_cmd->add_option("--height", height, "zero height T")->required()->check(CLI::Range(0.0, 400.0));
    verify_cmd->add_option("--prime-bound", prime_bound, "prime cut-off (default: support bound)");

    std::string model_path, rep = "trivial";
    auto* lefschetz_cmd = app.add_subcommand("lefschetz", "orbit model trace formula");
    lefschetz_cmd->add_option("--model", model_path, "model JSON")->required();
    lefschetz_cmd->add_option("--rep", rep, "trivial | char:K | file:PATH");
    lefschetz_cmd->add_option("--bump", bump, "bump C,W");

    std::string a_path, b_path;
    int order = -1;
    double tol = 1e-8;
    auto* moments_cmd = app.add_subcommand("moments", "compare two strip multisets by moments");
    moments_cmd->add_option("--a", a_path, "first multiset (JSON or zero CSV)")->required();
    moments_cmd->add_option("--b", b_path, "second multiset")->required();
    moments_cmd->add_option("--order", order, "moment order R (default 2 max card)");
    moments_cmd->add_option("--tol", tol, "tolerance");

    std::uint64_t seed = 20240611;
    std::vector<std::string> only;
    auto* selftest_cmd = app.add_subcommand("selftest", "acceptance suite");
    selftest_cmd->add_option("--seed", seed, "seed for randomized criteria");
    selftest_cmd->add_option("--only", only, "run only these criteria (e.g. AC6 AC7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return 2;
    }

    json config = {{"command", app.get_subcommands().front()->get_name()}};
    try {
        if (characters_cmd->parsed()) {
            config["modulus"] = modulus;
            json table = json::array();
            for (const auto& chi : enumerate_characters(modulus)) {
                json row = to_json(chi);
                if (chi.is_primitive()) {
                    const GaussSum g = gauss_sum(chi);
                    row["gauss_sum"] = cjson(g.value);
                    row["root_number"] = cjson(root_number(chi));
                }
                table.push_back(row);
            }
            emit(out, {{"config", config}, {"characters", table}});
            return 0;
        }
        if (zeros_cmd->parsed()) {
            config.update({{"source", source}, {"height", height}, {"out", out_path}});
            const ZeroList z = find_zeros(parse_source(source), height);
            if (out_path.empty()) {
                out << zeros_csv(z);
            } else {
                std::ofstream f(out_path);
                if (!f) throw ContractError("io", "cannot write " + out_path);
                f << zeros_csv(z);
            }
            emit(out_path.empty() ? err : out, {{"config", config}, {"certification", certification_summary(z)}});
            return z.located_count == z.verified_count ? 0 : 1;
        }
        if (verify_cmd->parsed()) {
            const TestFunction a = parse_bump(bump);
            config.update({{"formula", formula}, {"bump", a.to_json()}, {"height", height}, {"prime_bound", prime_bound}});
            FormulaReport r;
            if (formula == "ef") {
                r = both_sides_ef(find_zeros(CompletedLFunction::riemann(), height), a, prime_bound);
            } else if (formula == "efk") {
                if (modulus < 1) throw ContractError("usage", "efk needs --modulus");
                config["modulus"] = modulus;
                r = both_sides_efk(modulus, find_zeros(CompletedLFunction::dedekind_cyclotomic(modulus), height), a,
                                   prime_bound);
            } else {
                if (modulus < 1) throw ContractError("usage", formula + " needs --modulus and --char-index");
                config.update({{"modulus", modulus}, {"char_index", char_index}});
                const auto chi = character(modulus, char_index);
                if (formula == "efchi") {
                    if (!chi.is_primitive()) throw ContractError("primitivity", "efchi needs a primitive character");
                    r = both_sides_efchi(chi, find_zeros(CompletedLFunction::dirichlet(chi), height), a, prime_bound);
                } else {
                    const ZeroList factor = find_zeros(CompletedLFunction::dirichlet(chi.primitive_inducer()), height);
                    const ZeroList uni = find_zeros(CompletedLFunction::dedekind_cyclotomic(modulus), height);
                    r = both_sides_artin(chi, factor, a, &uni, prime_bound);
                }
            }
            emit(out, {{"config", config}, {"report", r.to_json()}});
            return 0;
        }
        if (lefschetz_cmd->parsed()) {
            const TestFunction a = parse_bump(bump);
            config.update({{"model", model_path}, {"rep", rep}, {"bump", a.to_json()}});
            const OrbitModel model = OrbitModel::load(model_path);
            const FiniteRep rho = parse_rep(rep, model);
            const OrbitSide st = statement_side(model, rho, a);
            const OrbitSide pf = proof_side(model, rho, a);
            json per = json::array();
            for (std::size_t i = 0; i < model.orbits.size(); ++i)
                per.push_back({{"length", model.orbits[i].length},
                               {"ramified", model.orbits[i].ramified()},
                               {"statement", cjson(st.per_orbit[i])},
                               {"proof", cjson(pf.per_orbit[i])}});
            const double residual = std::abs(st.total - pf.total);
            json report = {{"label", model.label},
                           {"statement_side", cjson(st.total)},
                           {"proof_side", cjson(pf.total)},
                           {"residual", residual},
                           {"orbits", per},
                           {"flags", st.flags}};
            if (!model.fixed_points.empty()) report["fixed_point_side"] = cjson(fixed_point_side(model, rho, a));
            emit(out, {{"config", config}, {"report", report}});
            return residual <= 1e-12 ? 0 : 1;
        }
        if (moments_cmd->parsed()) {
            config.update({{"a", a_path}, {"b", b_path}, {"order", order}, {"tol", tol}});
            const MomentComparison c = compare(StripMultiset::load(a_path), StripMultiset::load(b_path), order, tol);
            emit(out, {{"config", config}, {"report", c.to_json()}});
            return c.inconsistent ? 1 : 0;
        }
        // selftest
        config["seed"] = seed;
        json results = json::array();
        bool all = true;
        for (const auto& crit : acceptance_suite()) {
            if (!only.empty() && std::find(only.begin(), only.end(), crit.id) == only.end()) continue;
            const CriterionResult r = crit.run(seed);
            err << r.line() << '\n';
            results.push_back(r.to_json());
            all = all && r.passed;
        }
        emit(out, {{"config", config}, {"criteria", results}, {"all_passed", all}});
        return all ? 0 : 1;
    } catch (const ContractError& e) {
        emit(out, {{"config", config}, {"error", {{"kind", e.kind()}, {"message", e.what()}}}});
        return e.kind() == "usage" ? 2 : 1;
    } catch (const std::exception& e) {
        emit(out, {{"config", config}, {"error", {{"kind", "internal"}, {"message", e.what()}}}});
        return 1;
    }
}

}  // namespace efl
