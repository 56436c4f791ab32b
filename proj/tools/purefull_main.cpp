#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "purefull/errors.hpp"
#include "purefull/report.hpp"

namespace {

using purefull::AnalysisConfig;
using purefull::Json;
using purefull::RunReport;

int emit(const RunReport& report, bool json) {
    std::string payload = json ? report.json.dump(2) + "\n" : purefull::render_text(report.json);
    std::cout << payload;
    if (const char* path = std::getenv("PUREFULL_OUTPUT")) {
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write PUREFULL_OUTPUT=" << path << "\n";
            return 2;
        }
        out << payload;
    }
    return report.exit_code;
}

std::vector<purefull::GaussianRational> parse_samples(const std::string& csv) {
    std::vector<purefull::GaussianRational> out;
    std::string token;
    std::stringstream ss(csv);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        out.push_back(purefull::parse_gaussian_literal(token));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"purefull: exact invariant cohomology of almost-complex nil/solvmanifolds"};
    app.require_subcommand(1);

    bool json = false;
    unsigned seed = 0;
    app.add_flag("--json", json, "emit the JSON report");
    app.add_option("--seed", seed, "PRNG seed for sampling verdicts");

    // zoo ---------------------------------------------------------------
    auto* zoo = app.add_subcommand("zoo", "browse and check the built-in catalog");
    zoo->require_subcommand(1);
    auto* zoo_list = zoo->add_subcommand("list", "list catalog entries");
    std::string show_name;
    auto* zoo_show = zoo->add_subcommand("show", "dump one entry (manifold JSON schema)");
    zoo_show->add_option("name", show_name, "entry name")->required();
    auto* zoo_verify = zoo->add_subcommand("verify", "run every expectation record");

    // shared target options ----------------------------------------------
    AnalysisConfig cfg;
    bool complex_mode = false;
    std::string samples_csv;
    std::string mode_name = "projected";

    auto add_target = [&](CLI::App* cmd) {
        cmd->add_option("target", cfg.target, "zoo entry, presentation file, or manifold JSON")
            ->required();
        cmd->add_flag("--complex", complex_mode, "parse a presentation file in complex mode");
        cmd->add_option("--coframe", cfg.inline_coframe,
                        "inline (1,0)-coframe entries for file targets");
        cmd->add_option("--structure", cfg.structures, "structure selector (repeatable)");
    };

    // analyze -------------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "betti numbers and pure/full classification");
    add_target(analyze);
    analyze->add_option("--stage", cfg.stages, "pure/full stages to analyze (repeatable)");
    analyze->add_option("--degrees", cfg.betti_degrees, "restrict betti degrees");

    // predicates ------------------------------------------------------------
    auto* predicates = app.add_subcommand("predicates", "taming/compatible/semi-Kahler battery");
    add_target(predicates);
    predicates->add_option("--form", cfg.predicate_forms, "named form or expression (repeatable)");
    std::string positivity_form, positivity_root;
    int trials = 32;
    predicates->add_option("--positivity", positivity_form,
                           "check positivity of a (2n-2)-form on complex (n-1)-subspaces");
    predicates->add_option("--power-root", positivity_root,
                           "2-form whose (n-1)-st power is the positivity input (exact path)");
    predicates->add_option("--trials", trials, "sampling trials for the positivity refuter");

    // cup -------------------------------------------------------------------
    auto* cup = app.add_subcommand("cup", "cup maps and the Hard Lefschetz check");
    add_target(cup);
    purefull::CupRequest cup_req;
    cup->add_option("--form", cup_req.form, "2-form (named or expression)")->required();
    cup->add_option("--power", cup_req.power, "wedge power of the form");
    cup->add_option("--src-degree", cup_req.src_degree, "source cohomology degree");
    cup->add_flag("--hlc", cup_req.hlc, "run the full Hard Lefschetz battery");

    // scan --------------------------------------------------------------------
    auto* scan = app.add_subcommand("scan", "h+/h- along a deformation curve");
    add_target(scan);
    std::string curve_name;
    scan->add_option("--curve", curve_name, "curve name")->required();
    scan->add_option("--samples", samples_csv, "comma-separated parameter values, e.g. 0,1/2,i/4")
        ->required();

    // obstruction ---------------------------------------------------------------
    auto* obstruction = app.add_subcommand("obstruction", "order-by-order closedness conditions");
    add_target(obstruction);
    purefull::ObstructionRequest ob_req;
    obstruction->add_option("--alpha", ob_req.alpha, "closed real (1,1)-form")->required();
    obstruction->add_option("--direction", ob_req.direction, "named direction L")->required();
    obstruction->add_option("--order", ob_req.order, "highest order to solve");
    obstruction->add_option("--mode", mode_name, "paper-literal | projected")
        ->check(CLI::IsMember({"paper-literal", "projected"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*zoo_list) return emit({purefull::zoo_list_json(), 0}, json);
        if (*zoo_show) {
            Json j;
            try {
                j = purefull::zoo_show_json(show_name);
            } catch (const purefull::ConfigError& e) {
                Json err{{"errors", Json::array({Json{{"kind", "config"}, {"message", e.what()}}})}};
                return emit({err, 2}, json || true);
            }
            return emit({j, 0}, true);
        }
        if (*zoo_verify) return emit(purefull::zoo_verify_report(), json);

        cfg.seed = seed;
        cfg.file_mode =
            complex_mode ? purefull::PresentationMode::Complex : purefull::PresentationMode::Real;
        if (*analyze) {
            if (cfg.stages.empty()) cfg.stages = {2};
        } else {
            cfg.stages.clear();
            cfg.want_betti = false;
        }
        if (*predicates) {
            if (!positivity_form.empty()) {
                purefull::PositivityRequest req;
                req.form = positivity_form;
                if (!positivity_root.empty()) req.power_root = positivity_root;
                req.trials = trials;
                cfg.positivity = req;
            }
        }
        if (*cup) cfg.cups.push_back(cup_req);
        if (*scan) {
            cfg.curve = curve_name;
            cfg.samples = parse_samples(samples_csv);
        }
        if (*obstruction) {
            ob_req.mode = mode_name == "paper-literal" ? purefull::ObstructionMode::PaperLiteral
                                                       : purefull::ObstructionMode::Projected;
            cfg.obstruction_request = ob_req;
        }
        return emit(purefull::run_analysis(cfg), json);
    } catch (const purefull::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const purefull::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const purefull::MathError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return 1;
    }
}
