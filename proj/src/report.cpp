#include "purefull/report.hpp"

#include <fstream>
#include <sstream>

#include "purefull/errors.hpp"
#include "purefull/formexpr.hpp"
#include "purefull/linalg.hpp"

namespace purefull {

Json json_scalar(const GaussianRational& z) {
    if (z.is_real() && is_integer(z.re) && z.re.get_num().fits_slong_p())
        return Json(z.re.get_num().get_si());
    return Json(to_string(z));
}

namespace {

Json json_form(const Form& f) { return Json(to_string(f)); }

Json json_gvec(const GVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(json_scalar(x));
    return a;
}

Json json_matrix(const Matrix<GaussianRational>& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(json_scalar(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

GaussianRational scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return GaussianRational(Rational(j.get<long>()));
    if (j.is_string()) return gaussian_from_string(j.get<std::string>());
    throw ConfigError("expected an exact scalar (integer or \"p/q\" string)");
}

// ---------------------------------------------------------------------------
// Target resolution

struct ResolvedTarget {
    ZooEntry entry;
    bool from_catalog = false;
    std::string validity_label; // includes heuristic qualifiers for ad-hoc input
};

std::string heuristic_validity(const LieAlgebraPresentation& p) {
    auto rep = check_presentation(p);
    if (rep.nilpotent) return "nilpotent";
    if (rep.completely_solvable_heuristic) return "completely_solvable(heuristic)";
    return "unknown(invariant-level only)";
}

ZooEntry entry_from_presentation(const std::string& name, LieAlgebraPresentation p,
                                 const std::vector<std::string>& inline_coframe) {
    ZooEntry z;
    z.name = name;
    z.pres = std::move(p);
    if (!inline_coframe.empty()) {
        FormExprContext ctx{z.pres.dim, {}, 2};
        std::vector<Form> spec;
        for (const auto& e : inline_coframe) spec.push_back(parse_form_expr(e, ctx));
        z.structures["J"] = acs_from_coframe(z.pres.dim, spec);
        z.default_structure = "J";
    } else if (z.pres.complex_mode) {
        z.structures["J"] = standard_acs(z.pres.dim);
        z.default_structure = "J";
    }
    return z;
}

ResolvedTarget resolve_target(const AnalysisConfig& config) {
    ResolvedTarget t;
    for (const auto& z : zoo_catalog()) {
        if (z.name == config.target) {
            t.entry = z;
            t.from_catalog = true;
            t.validity_label = to_string(z.validity);
            return t;
        }
    }
    std::ifstream in(config.target);
    if (!in) throw ConfigError("target '" + config.target + "' is neither a zoo entry nor a file");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (config.target.size() > 5 && config.target.substr(config.target.size() - 5) == ".json") {
        Json j = Json::parse(text, nullptr, true, true);
        t.entry = manifold_from_json(j);
        t.validity_label = j.contains("validity") ? j["validity"].get<std::string>()
                                                  : heuristic_validity(t.entry.pres) + "(declared: none)";
        return t;
    }
    auto pres = parse_presentation(text, config.file_mode);
    t.entry = entry_from_presentation(config.target, std::move(pres), config.inline_coframe);
    t.validity_label = heuristic_validity(t.entry.pres);
    return t;
}

// ---------------------------------------------------------------------------
// Section builders

Json betti_section(const ZooEntry& z, const AnalysisConfig& config) {
    Json out = Json::object();
    std::vector<int> degrees = config.betti_degrees;
    if (degrees.empty())
        for (int k = 0; k <= z.pres.dim; ++k) degrees.push_back(k);
    for (int k : degrees)
        out["b" + std::to_string(k)] = cohomology_space(z.pres, k).betti();
    return out;
}

Json stage_json(const StageReport& st) {
    Json s = Json::object();
    s["stage"] = st.stage;
    s["betti"] = st.betti;
    s["pure"] = st.forms.pure;
    s["full"] = st.forms.full;
    s["complex_pure"] = st.forms.complex_pure;
    s["complex_full"] = st.forms.complex_full;
    s["h_plus"] = st.stage == 2 ? Json(st.h_plus) : Json(nullptr);
    s["h_minus"] = st.stage == 2 ? Json(st.h_minus) : Json(nullptr);
    s["h_intersection"] = st.stage == 2 ? Json(st.h_intersection) : Json(nullptr);
    s["pair_dims"] = st.forms.pair_dims;
    s["complex_dims"] = st.forms.complex_dims;
    Json c = Json::object();
    c["pure"] = st.currents.pure;
    c["full"] = st.currents.full;
    c["complex_pure"] = st.currents.complex_pure;
    c["complex_full"] = st.currents.complex_full;
    c["pair_dims"] = st.currents.pair_dims;
    s["currents"] = std::move(c);
    return s;
}

Json structures_section(const ZooEntry& z, const AnalysisConfig& config) {
    Json arr = Json::array();
    std::vector<std::string> names = config.structures;
    if (names.empty())
        for (const auto& [name, _] : z.structures) names.push_back(name);
    for (const auto& name : names) {
        const auto& j = z.structure(name);
        Json s = Json::object();
        s["name"] = name;
        s["integrable"] = is_integrable(z.pres, j);
        Json stages = Json::array();
        for (int k : config.stages) stages.push_back(stage_json(purefull_stage(z.pres, j, k)));
        s["stages"] = std::move(stages);
        arr.push_back(std::move(s));
    }
    return arr;
}

Form resolve_form(const ZooEntry& z, const std::string& key) {
    auto it = z.forms.find(key);
    if (it != z.forms.end()) return it->second;
    FormExprContext ctx{z.pres.dim, {}, 2};
    if (!z.default_structure.empty()) ctx.coframe10 = z.structure().coframe10;
    return parse_form_expr(key, ctx);
}

Json predicates_section(const ZooEntry& z, const AnalysisConfig& config) {
    Json arr = Json::array();
    for (const auto& key : config.predicate_forms) {
        for (const auto& name :
             config.structures.empty() ? std::vector<std::string>{z.default_structure}
                                       : config.structures) {
            auto rep = form_predicates(z.pres, z.structure(name), resolve_form(z, key));
            Json p = Json::object();
            p["form"] = key;
            p["structure"] = name;
            p["nondegenerate"] = rep.nondegenerate;
            p["taming"] = rep.taming;
            p["compatible"] = rep.compatible;
            p["closed"] = rep.closed;
            p["almost_kahler"] = rep.almost_kahler;
            p["semi_kahler"] = rep.semi_kahler;
            p["integrable"] = rep.integrable;
            p["balanced"] = rep.balanced;
            p["hlc"] = rep.hlc ? Json(*rep.hlc) : Json(nullptr);
            p["d_omega"] = json_form(rep.d_omega);
            p["d_omega_power"] = json_form(rep.d_omega_power);
            arr.push_back(std::move(p));
        }
    }
    if (config.positivity) {
        const auto& req = *config.positivity;
        std::optional<Form> root;
        if (req.power_root) root = resolve_form(z, *req.power_root);
        auto verdict = positivity_on_complex_hyperplanes(z.pres, z.structure(), resolve_form(z, req.form),
                                                         root, req.trials, config.seed);
        Json p = Json::object();
        p["form"] = req.form;
        p["positivity"] =
            verdict.status == PositivityVerdict::Status::ExactPositive      ? "exact_positive"
            : verdict.status == PositivityVerdict::Status::Counterexample   ? "counterexample"
                                                                             : "no_counterexample_found";
        p["trials_run"] = verdict.trials_run;
        p["note"] = verdict.note;
        if (verdict.status == PositivityVerdict::Status::Counterexample) {
            Json vecs = Json::array();
            for (const auto& x : verdict.counterexample) {
                Json v = Json::array();
                for (const auto& q : x) v.push_back(json_scalar(GaussianRational(q)));
                vecs.push_back(std::move(v));
            }
            p["counterexample"] = std::move(vecs);
            p["value"] = json_scalar(GaussianRational(verdict.value));
        }
        arr.push_back(std::move(p));
    }
    return arr;
}

Json cups_section(const ZooEntry& z, const AnalysisConfig& config) {
    Json arr = Json::array();
    for (const auto& req : config.cups) {
        Form gamma = wedge_power(resolve_form(z, req.form), req.power);
        if (req.hlc) {
            auto rep = hlc_check(z.pres, resolve_form(z, req.form));
            Json c = Json::object();
            c["form"] = req.form;
            c["mode"] = "hlc";
            c["iso_per_power"] = rep.iso_per_power;
            c["hlc"] = rep.hlc;
            arr.push_back(std::move(c));
            continue;
        }
        auto src = cohomology_space(z.pres, req.src_degree);
        auto dst = cohomology_space(z.pres, req.src_degree + gamma.degree());
        auto cup = cup_map(src, dst, z.pres, gamma);
        Json c = Json::object();
        c["form"] = req.form;
        c["power"] = req.power;
        c["src_degree"] = req.src_degree;
        c["dst_degree"] = req.src_degree + gamma.degree();
        c["injective"] = cup.injective;
        c["surjective"] = cup.surjective;
        c["iso"] = cup.iso;
        c["matrix"] = json_matrix(cup.matrix);
        arr.push_back(std::move(c));
    }
    return arr;
}

Json scan_section(const ZooEntry& z, const AnalysisConfig& config) {
    Json arr = Json::array();
    if (!config.curve) return arr;
    auto rows = semicontinuity_scan(z.pres, z.curve(*config.curve), config.samples);
    for (const auto& r : rows) {
        Json row = Json::object();
        row["t"] = to_string(r.t);
        row["ok"] = r.ok;
        if (r.ok) {
            row["h_plus"] = r.h_plus;
            row["h_minus"] = r.h_minus;
            row["h_intersection"] = r.h_intersection;
            row["pure"] = r.pure;
            row["full"] = r.full;
        } else {
            row["error"] = r.error;
        }
        arr.push_back(std::move(row));
    }
    return arr;
}

Json obstruction_section(const ZooEntry& z, const AnalysisConfig& config) {
    Json arr = Json::array();
    if (!config.obstruction_request) return arr;
    const auto& req = *config.obstruction_request;
    auto rep = obstruction(z.pres, z.structure(), resolve_form(z, req.alpha),
                           z.direction(req.direction), req.order, req.mode);
    Json o = Json::object();
    o["alpha"] = req.alpha;
    o["direction"] = req.direction;
    o["mode"] = req.mode == ObstructionMode::Projected ? "projected" : "paper-literal";
    o["order"] = req.order;
    Json orders = Json::array();
    for (const auto& r : rep.orders) {
        Json item = Json::object();
        item["order"] = r.order;
        item["solvable"] = r.solvable;
        if (r.witness) item["witness"] = json_form(*r.witness);
        if (r.certificate) item["certificate"] = json_gvec(*r.certificate);
        orders.push_back(std::move(item));
    }
    o["orders"] = std::move(orders);
    o["all_solvable"] = rep.all_solvable;
    o["eta_closed_verified_order"] =
        rep.eta_closed_verified_order ? Json(*rep.eta_closed_verified_order) : Json(nullptr);
    arr.push_back(std::move(o));
    return arr;
}

} // namespace

RunReport run_analysis(const AnalysisConfig& config) {
    RunReport out;
    Json& j = out.json;
    j["manifold"] = config.target;
    j["validity"] = nullptr;
    j["betti"] = Json::object();
    j["structures"] = Json::array();
    j["predicates"] = Json::array();
    j["cup_maps"] = Json::array();
    j["scan"] = Json::array();
    j["obstruction"] = Json::array();
    j["errors"] = Json::array();
    try {
        auto target = resolve_target(config);
        j["manifold"] = target.entry.name;
        j["validity"] = target.validity_label;
        if (config.want_betti) j["betti"] = betti_section(target.entry, config);
        if (!config.stages.empty() && !target.entry.structures.empty())
            j["structures"] = structures_section(target.entry, config);
        j["predicates"] = predicates_section(target.entry, config);
        j["cup_maps"] = cups_section(target.entry, config);
        j["scan"] = scan_section(target.entry, config);
        j["obstruction"] = obstruction_section(target.entry, config);
    } catch (const ParseError& e) {
        j["errors"].push_back(Json{{"kind", "parse"}, {"message", e.what()}});
        out.exit_code = 2;
    } catch (const ConfigError& e) {
        j["errors"].push_back(Json{{"kind", "config"}, {"message", e.what()}});
        out.exit_code = 2;
    } catch (const MathError& e) {
        j["errors"].push_back(Json{{"kind", "math"}, {"message", e.what()}});
        out.exit_code = 1;
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string render_text(const Json& report) {
    std::ostringstream os;
    if (report.contains("manifold")) {
        os << "manifold: " << report["manifold"].get<std::string>() << "\n";
        if (report.contains("validity") && !report["validity"].is_null())
            os << "validity: " << report["validity"].get<std::string>() << "\n";
    }
    if (report.contains("betti") && !report["betti"].empty()) {
        os << "betti:";
        for (auto& [key, val] : report["betti"].items()) os << " " << key << "=" << val.dump();
        os << "\n";
    }
    if (report.contains("structures"))
        for (const auto& s : report["structures"]) {
            os << "structure " << s["name"].get<std::string>()
               << ": integrable=" << (s["integrable"].get<bool>() ? "yes" : "no") << "\n";
            for (const auto& st : s["stages"]) {
                os << "  stage " << st["stage"] << ": pure=" << st["pure"].dump()
                   << " full=" << st["full"].dump() << " complex_pure=" << st["complex_pure"].dump()
                   << " complex_full=" << st["complex_full"].dump();
                if (!st["h_plus"].is_null())
                    os << " h+=" << st["h_plus"].dump() << " h-=" << st["h_minus"].dump();
                os << "\n";
            }
        }
    if (report.contains("predicates"))
        for (const auto& p : report["predicates"]) {
            if (p.contains("positivity")) {
                os << "positivity " << p["form"].get<std::string>() << ": "
                   << p["positivity"].get<std::string>() << " (" << p["note"].get<std::string>()
                   << ")\n";
                continue;
            }
            os << "predicates " << p["form"].get<std::string>() << " (J=" << p["structure"].get<std::string>()
               << "): nondegenerate=" << p["nondegenerate"].dump() << " taming=" << p["taming"].dump()
               << " compatible=" << p["compatible"].dump() << " closed=" << p["closed"].dump()
               << " almost_kahler=" << p["almost_kahler"].dump()
               << " semi_kahler=" << p["semi_kahler"].dump() << " balanced=" << p["balanced"].dump()
               << " hlc=" << p["hlc"].dump() << "\n"
               << "  d omega = " << p["d_omega"].get<std::string>()
               << " ; d omega^{n-1} = " << p["d_omega_power"].get<std::string>() << "\n";
        }
    if (report.contains("cup_maps"))
        for (const auto& c : report["cup_maps"]) {
            if (c.contains("mode") && c["mode"] == "hlc") {
                os << "hlc " << c["form"].get<std::string>() << ": " << (c["hlc"].get<bool>() ? "holds" : "fails")
                   << "\n";
                continue;
            }
            os << "cup " << c["form"].get<std::string>() << "^" << c["power"] << ": H^"
               << c["src_degree"] << " -> H^" << c["dst_degree"]
               << " injective=" << c["injective"].dump() << " surjective=" << c["surjective"].dump()
               << " iso=" << c["iso"].dump() << "\n";
        }
    if (report.contains("scan"))
        for (const auto& r : report["scan"]) {
            os << "scan t=" << r["t"].get<std::string>();
            if (r["ok"].get<bool>())
                os << ": h+=" << r["h_plus"].dump() << " h-=" << r["h_minus"].dump()
                   << " pure=" << r["pure"].dump() << " full=" << r["full"].dump() << "\n";
            else
                os << ": error " << r["error"].get<std::string>() << "\n";
        }
    if (report.contains("obstruction"))
        for (const auto& o : report["obstruction"]) {
            os << "obstruction alpha=" << o["alpha"].get<std::string>()
               << " direction=" << o["direction"].get<std::string>() << " mode="
               << o["mode"].get<std::string>() << ":\n";
            for (const auto& r : o["orders"]) {
                os << "  order " << r["order"] << ": "
                   << (r["solvable"].get<bool>() ? "solvable" : "unsolvable");
                if (r.contains("witness")) os << ", witness " << r["witness"].get<std::string>();
                if (r.contains("certificate")) os << ", certificate recorded";
                os << "\n";
            }
            if (!o["eta_closed_verified_order"].is_null())
                os << "  d eta_t = 0 verified through order " << o["eta_closed_verified_order"]
                   << "\n";
        }
    if (report.contains("errors"))
        for (const auto& e : report["errors"])
            os << "error [" << e["kind"].get<std::string>() << "]: " << e["message"].get<std::string>()
               << "\n";
    if (report.contains("expectations")) {
        for (const auto& entry : report["expectations"]) {
            for (const auto& r : entry["results"]) {
                os << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << entry["name"].get<std::string>()
                   << " " << r["operation"].get<std::string>() << " [" << r["args"].get<std::string>()
                   << "]";
                if (!r["pass"].get<bool>())
                    os << " expected '" << r["expected"].get<std::string>() << "' got '"
                       << r["actual"].get<std::string>() << "' -- contradicts: "
                       << r["anchor"].get<std::string>();
                os << "\n";
            }
        }
        os << (report["all_pass"].get<bool>() ? "zoo verify: all expectations pass\n"
                                              : "zoo verify: FAILURES above\n");
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Json zoo_list_json() {
    Json arr = Json::array();
    for (const auto& z : zoo_catalog()) {
        Json item = Json::object();
        item["name"] = z.name;
        item["description"] = z.description;
        item["dim"] = z.pres.dim;
        item["validity"] = to_string(z.validity);
        arr.push_back(std::move(item));
    }
    return Json{{"zoo", arr}};
}

Json zoo_show_json(const std::string& name) { return zoo_entry_to_json(zoo_lookup(name), true); }

RunReport zoo_verify_report() {
    RunReport out;
    Json entries = Json::array();
    bool all_pass = true;
    for (const auto& z : zoo_catalog()) {
        Json results = Json::array();
        for (const auto& r : run_expectations(z)) {
            Json item = Json::object();
            item["operation"] = r.record->operation;
            item["args"] = r.record->args;
            item["expected"] = r.record->expected;
            item["actual"] = r.actual;
            item["pass"] = r.pass;
            item["anchor"] = r.record->anchor;
            if (!r.pass) all_pass = false;
            results.push_back(std::move(item));
        }
        entries.push_back(Json{{"name", z.name}, {"results", results}});
    }
    out.json = Json{{"expectations", entries}, {"all_pass", all_pass}};
    out.exit_code = all_pass ? 0 : 1;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

Json matrix_to_json(const Matrix<Rational>& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(json_scalar(GaussianRational(m(r, c))));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json gmatrix_to_json(const Matrix<GaussianRational>& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(json_scalar(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string curve_entry_expr(const Form& f, int order) {
    (void)order;
    // Serialized as a plain form expression over e with t/tbar coefficients.
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : f.terms()) {
        std::string idx;
        for (int i : indices_from_mask(m)) {
            if (!idx.empty()) idx += ",";
            idx += std::to_string(i);
        }
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(v) << ")*e{" << idx << "}";
    }
    return first ? "0" : os.str();
}

} // namespace

Json zoo_entry_to_json(const ZooEntry& entry, bool with_expectations) {
    Json j = Json::object();
    j["name"] = entry.name;
    j["description"] = entry.description;
    j["validity"] = to_string(entry.validity);
    j["presentation"] = Json{{"mode", entry.pres.complex_mode ? "complex" : "real"},
                             {"text", entry.pres.text},
                             {"dim", entry.pres.dim}};
    Json structures = Json::object();
    for (const auto& [name, s] : entry.structures) {
        Json sj = Json::object();
        sj["matrix"] = gmatrix_to_json(s.frame);
        Json coframe = Json::array();
        for (const auto& phi : s.coframe10) coframe.push_back(to_string(phi));
        sj["coframe"] = std::move(coframe);
        structures[name] = std::move(sj);
    }
    j["structures"] = std::move(structures);
    Json forms = Json::object();
    for (const auto& [name, f] : entry.forms) forms[name] = to_string(f);
    j["forms"] = std::move(forms);
    Json directions = Json::object();
    for (const auto& [name, m] : entry.directions) directions[name] = matrix_to_json(m);
    j["directions"] = std::move(directions);
    Json curves = Json::object();
    for (const auto& [name, c] : entry.curves) {
        if (const auto* cc = std::get_if<CoframeCurve>(&c)) {
            Json entries = Json::array();
            for (const auto& e : cc->entries) entries.push_back(curve_entry_expr(e, 2));
            curves[name] = Json{{"type", "coframe"}, {"entries", entries}};
        } else {
            const auto& ec = std::get<EndomorphismCurve>(c);
            curves[name] = Json{{"type", "endomorphism"}, {"direction", matrix_to_json(ec.direction)}};
        }
    }
    j["curves"] = std::move(curves);
    if (with_expectations) {
        Json exps = Json::array();
        for (const auto& e : entry.expectations)
            exps.push_back(Json{{"operation", e.operation},
                                {"args", e.args},
                                {"expected", e.expected},
                                {"anchor", e.anchor}});
        j["expectations"] = std::move(exps);
    }
    return j;
}

ZooEntry manifold_from_json(const Json& j) {
    ZooEntry z;
    if (!j.contains("presentation")) throw ConfigError("manifold JSON needs a presentation");
    z.name = j.contains("name") ? j["name"].get<std::string>() : "manifold";
    const auto& pj = j["presentation"];
    PresentationMode mode = pj.contains("mode") && pj["mode"] == "complex"
                                ? PresentationMode::Complex
                                : PresentationMode::Real;
    z.pres = parse_presentation(pj["text"].get<std::string>(), mode);
    if (j.contains("validity")) {
        std::string v = j["validity"].get<std::string>();
        if (v == "nilpotent")
            z.validity = Validity::Nilpotent;
        else if (v == "completely_solvable")
            z.validity = Validity::CompletelySolvable;
        else if (v == "compact_factor")
            z.validity = Validity::CompactFactor;
        else
            throw ConfigError("unknown validity flag '" + v + "'");
    }
    if (j.contains("structures"))
        for (auto& [name, sj] : j["structures"].items()) {
            if (sj.contains("coframe")) {
                FormExprContext ctx{z.pres.dim, {}, 2};
                std::vector<Form> spec;
                for (const auto& e : sj["coframe"]) spec.push_back(parse_form_expr(e.get<std::string>(), ctx));
                z.structures[name] = acs_from_coframe(z.pres.dim, spec);
            } else if (sj.contains("matrix")) {
                const auto& rows = sj["matrix"];
                Matrix<GaussianRational> m(rows.size(), rows.size());
                for (std::size_t r = 0; r < rows.size(); ++r) {
                    if (rows[r].size() != rows.size()) throw ConfigError("structure matrix not square");
                    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = scalar_from_json(rows[r][c]);
                }
                z.structures[name] = acs_from_matrix(m);
            } else {
                throw ConfigError("structure '" + name + "' needs a coframe or matrix");
            }
            if (z.default_structure.empty()) z.default_structure = name;
        }
    if (j.contains("forms"))
        for (auto& [name, fj] : j["forms"].items()) {
            FormExprContext ctx{z.pres.dim, {}, 2};
            if (!z.default_structure.empty()) ctx.coframe10 = z.structure().coframe10;
            z.forms[name] = parse_form_expr(fj.get<std::string>(), ctx);
        }
    if (j.contains("directions"))
        for (auto& [name, dj] : j["directions"].items()) {
            Matrix<Rational> m(dj.size(), dj.size());
            for (std::size_t r = 0; r < dj.size(); ++r)
                for (std::size_t c = 0; c < dj.size(); ++c) {
                    GaussianRational v = scalar_from_json(dj[r][c]);
                    if (!v.is_real()) throw ConfigError("direction matrices must be rational");
                    m(r, c) = v.re;
                }
            z.directions[name] = std::move(m);
        }
    if (j.contains("curves"))
        for (auto& [name, cj] : j["curves"].items()) {
            std::string type = cj["type"].get<std::string>();
            if (type == "coframe") {
                CoframeCurve cc{z.pres.dim, {}};
                FormExprContext ctx{z.pres.dim, {}, 2};
                if (!z.default_structure.empty()) ctx.coframe10 = z.structure().coframe10;
                for (const auto& e : cj["entries"])
                    cc.entries.push_back(parse_form_expr(e.get<std::string>(), ctx));
                z.curves[name] = cc;
            } else if (type == "endomorphism") {
                std::string skey = cj.contains("structure") ? cj["structure"].get<std::string>()
                                                            : z.default_structure;
                const auto& dj = cj["direction"];
                Matrix<Rational> m(dj.size(), dj.size());
                for (std::size_t r = 0; r < dj.size(); ++r)
                    for (std::size_t c = 0; c < dj.size(); ++c) m(r, c) = scalar_from_json(dj[r][c]).re;
                z.curves[name] = EndomorphismCurve{z.structure(skey), std::move(m)};
            } else {
                throw ConfigError("unknown curve type '" + type + "'");
            }
        }
    return z;
}

GaussianRational parse_gaussian_literal(const std::string& text) {
    std::string s = text;
    std::erase(s, ' ');
    // "i/4" style: move the denominator onto the unit.
    if (s.size() > 2 && (s.rfind("i/", 0) == 0 || s.rfind("-i/", 0) == 0)) {
        bool neg = s[0] == '-';
        std::string den = s.substr(s.find('/') + 1);
        Rational q(1);
        q = rational_from_string((neg ? "-1/" : "1/") + den);
        return GaussianRational(Rational(0), q);
    }
    return gaussian_from_string(s);
}

} // namespace purefull
