#include "purefull/zoo.hpp"

#include "purefull/errors.hpp"
#include "purefull/linalg.hpp"

namespace purefull {

std::string to_string(Validity v) {
    switch (v) {
        case Validity::Nilpotent: return "nilpotent";
        case Validity::CompletelySolvable: return "completely_solvable";
        case Validity::CompactFactor: return "compact_factor";
    }
    return "?";
}

const StageReport& ZooRunCache::stage(const ZooEntry& z, const std::string& structure, int k) {
    auto key = std::make_pair(structure, k);
    auto it = stages.find(key);
    if (it == stages.end())
        it = stages.emplace(key, purefull_stage(z.pres, z.structure(structure), k)).first;
    return it->second;
}

const ScanRow& ZooRunCache::scan(const ZooEntry& z, const std::string& curve,
                                 const GaussianRational& t) {
    auto key = std::make_pair(curve, to_string(t));
    auto it = scans.find(key);
    if (it == scans.end()) {
        auto rows = semicontinuity_scan(z.pres, z.curve(curve), {t});
        it = scans.emplace(key, rows.front()).first;
    }
    return it->second;
}

const AlmostComplexStructure& ZooEntry::structure(const std::string& key) const {
    const std::string& k = key.empty() ? default_structure : key;
    auto it = structures.find(k);
    if (it == structures.end()) throw ConfigError("unknown structure '" + k + "' on " + name);
    return it->second;
}

const Form& ZooEntry::form(const std::string& key) const {
    auto it = forms.find(key);
    if (it == forms.end()) throw ConfigError("unknown form '" + key + "' on " + name);
    return it->second;
}

const DeformationCurve& ZooEntry::curve(const std::string& key) const {
    auto it = curves.find(key);
    if (it == curves.end()) throw ConfigError("unknown curve '" + key + "' on " + name);
    return it->second;
}

const Matrix<Rational>& ZooEntry::direction(const std::string& key) const {
    auto it = directions.find(key);
    if (it == directions.end()) throw ConfigError("unknown direction '" + key + "' on " + name);
    return it->second;
}

namespace {

std::string yn(bool b) { return b ? "true" : "false"; }

AlmostComplexStructure coframe_from_pairs(int dim, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Form> spec;
    for (auto [re, im] : pairs) {
        Form f(dim, 1);
        f.set(Mask(1) << (re - 1), Scalar(1));
        f.set(Mask(1) << (im - 1), Scalar::i());
        spec.push_back(f);
    }
    return acs_from_coframe(dim, spec);
}

DeformationCurve first_entry_conjugate_curve(const AlmostComplexStructure& j, int order = 2) {
    CoframeCurve cc{j.dim, {}};
    for (int a = 0; a < j.half_dim(); ++a) {
        Form e = j.coframe10[std::size_t(a)];
        if (a == 0) e = e + Scalar::t(order) * j.coframe10[0].conj();
        cc.entries.push_back(e);
    }
    return cc;
}

// Shared expectation builders -----------------------------------------------

Expectation exp_betti(int k, int expected, std::string anchor) {
    Expectation e;
    e.operation = "betti";
    e.args = "k=" + std::to_string(k);
    e.expected = std::to_string(expected);
    e.anchor = std::move(anchor);
    e.compute = [k](const ZooEntry& z, ZooRunCache&) {
        return std::to_string(cohomology_space(z.pres, k).betti());
    };
    return e;
}

Expectation exp_stage2(const std::string& what, const std::string& structure,
                       std::string expected, std::string anchor) {
    Expectation e;
    e.operation = what;
    e.args = "stage=2 structure=" + (structure.empty() ? std::string("default") : structure);
    e.expected = std::move(expected);
    e.anchor = std::move(anchor);
    e.compute = [what, structure](const ZooEntry& z, ZooRunCache& cache) {
        const auto& st = cache.stage(z, structure, 2);
        if (what == "h_plus") return std::to_string(st.h_plus);
        if (what == "h_minus") return std::to_string(st.h_minus);
        if (what == "h_intersection") return std::to_string(st.h_intersection);
        if (what == "pure") return yn(st.forms.pure);
        if (what == "full") return yn(st.forms.full);
        if (what == "complex_pure") return yn(st.forms.complex_pure);
        if (what == "complex_full") return yn(st.forms.complex_full);
        throw ConfigError("unknown stage quantity " + what);
    };
    return e;
}

Expectation exp_stage(const std::string& what, int stage, const std::string& structure,
                      std::string expected, std::string anchor) {
    Expectation e;
    e.operation = what;
    e.args = "stage=" + std::to_string(stage) +
             " structure=" + (structure.empty() ? std::string("default") : structure);
    e.expected = std::move(expected);
    e.anchor = std::move(anchor);
    e.compute = [what, stage, structure](const ZooEntry& z, ZooRunCache& cache) {
        const auto& st = cache.stage(z, structure, stage);
        if (what == "pure") return yn(st.forms.pure);
        if (what == "full") return yn(st.forms.full);
        if (what == "complex_pure") return yn(st.forms.complex_pure);
        if (what == "complex_full") return yn(st.forms.complex_full);
        if (what == "complex_pure_currents") return yn(st.currents.complex_pure);
        if (what == "complex_full_currents") return yn(st.currents.complex_full);
        throw ConfigError("unknown stage quantity " + what);
    };
    return e;
}

Expectation exp_integrable(const std::string& structure, bool expected, std::string anchor) {
    Expectation e;
    e.operation = "is_integrable";
    e.args = "structure=" + (structure.empty() ? std::string("default") : structure);
    e.expected = yn(expected);
    e.anchor = std::move(anchor);
    e.compute = [structure](const ZooEntry& z, ZooRunCache&) {
        return yn(is_integrable(z.pres, z.structure(structure)));
    };
    return e;
}

Expectation exp_check_flag(const std::string& flag, bool expected, std::string anchor) {
    Expectation e;
    e.operation = "check_presentation";
    e.args = "flag=" + flag;
    e.expected = yn(expected);
    e.anchor = std::move(anchor);
    e.compute = [flag](const ZooEntry& z, ZooRunCache&) {
        auto rep = check_presentation(z.pres);
        if (flag == "jacobi") return yn(rep.jacobi);
        if (flag == "nilpotent") return yn(rep.nilpotent);
        if (flag == "solvable") return yn(rep.solvable);
        if (flag == "completely_solvable_heuristic") return yn(rep.completely_solvable_heuristic);
        if (flag == "unimodular") return yn(rep.unimodular);
        throw ConfigError("unknown flag " + flag);
    };
    return e;
}

Expectation exp_predicate(const std::string& form_key, const std::string& structure,
                          const std::string& flag, bool expected, std::string anchor) {
    Expectation e;
    e.operation = "form_predicates";
    e.args = "form=" + form_key + " flag=" + flag;
    e.expected = yn(expected);
    e.anchor = std::move(anchor);
    e.compute = [form_key, structure, flag](const ZooEntry& z, ZooRunCache&) {
        auto rep = form_predicates(z.pres, z.structure(structure), z.form(form_key));
        if (flag == "nondegenerate") return yn(rep.nondegenerate);
        if (flag == "taming") return yn(rep.taming);
        if (flag == "compatible") return yn(rep.compatible);
        if (flag == "closed") return yn(rep.closed);
        if (flag == "almost_kahler") return yn(rep.almost_kahler);
        if (flag == "semi_kahler") return yn(rep.semi_kahler);
        if (flag == "balanced") return yn(rep.balanced);
        throw ConfigError("unknown predicate flag " + flag);
    };
    return e;
}

Expectation exp_type_dim(const TypeSet& s, bool realness, int expected, std::string anchor) {
    Expectation e;
    e.operation = "type_subgroup_dim";
    std::string desc = "S={";
    for (auto [p, q] : s) desc += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    desc += realness ? "} real" : "} complex";
    e.args = desc;
    e.expected = std::to_string(expected);
    e.anchor = std::move(anchor);
    e.compute = [s, realness](const ZooEntry& z, ZooRunCache&) {
        int k = s.front().first + s.front().second;
        auto space = cohomology_space(z.pres, k);
        return std::to_string(type_subgroup(space, z.pres, z.structure(), s, realness).dim());
    };
    return e;
}

Expectation exp_cup_iso(const std::string& form_key, int power, int src_degree, bool expected,
                        std::string anchor) {
    Expectation e;
    e.operation = "cup_map";
    e.args = "gamma=" + form_key + "^" + std::to_string(power) +
             " src=H^" + std::to_string(src_degree);
    e.expected = yn(expected);
    e.anchor = std::move(anchor);
    e.compute = [form_key, power, src_degree](const ZooEntry& z, ZooRunCache&) {
        Form gamma = wedge_power(z.form(form_key), power);
        auto src = cohomology_space(z.pres, src_degree);
        auto dst = cohomology_space(z.pres, src_degree + gamma.degree());
        return yn(cup_map(src, dst, z.pres, gamma).iso);
    };
    return e;
}

Expectation exp_scan(const std::string& curve_key, const GaussianRational& t,
                     const std::string& what, std::string expected, std::string anchor) {
    Expectation e;
    e.operation = "semicontinuity_scan";
    e.args = "curve=" + curve_key + " t=" + to_string(t) + " " + what;
    e.expected = std::move(expected);
    e.anchor = std::move(anchor);
    e.compute = [curve_key, t, what](const ZooEntry& z, ZooRunCache& cache) {
        const auto& r = cache.scan(z, curve_key, t);
        if (!r.ok) return "error: " + r.error;
        if (what == "h_plus") return std::to_string(r.h_plus);
        if (what == "h_minus") return std::to_string(r.h_minus);
        if (what == "pure") return yn(r.pure);
        if (what == "full") return yn(r.full);
        throw ConfigError("unknown scan quantity " + what);
    };
    return e;
}

// Entry builders -------------------------------------------------------------

ZooEntry make_torus(int dim) {
    ZooEntry z;
    z.name = "torus" + std::to_string(dim);
    z.description = "abelian control (0^" + std::to_string(dim) + ")";
    z.pres = parse_presentation("(0^" + std::to_string(dim) + ")", PresentationMode::Real);
    z.validity = Validity::Nilpotent;
    z.default_structure = "J";
    z.structures["J"] = standard_acs(dim);
    int n = dim / 2;
    auto binom = [](int a, int b) {
        long r = 1;
        for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return int(r);
    };
    z.expectations.push_back(exp_betti(2, binom(dim, 2), "trivial control: b_k = C(2n, k)"));
    z.expectations.push_back(exp_integrable("J", true, "abelian algebra, any J: Nij = 0"));
    if (dim == 6)
        z.expectations.push_back(exp_type_dim({{1, 1}}, true, n * n,
                                              "conjugation-stable closed invariant (1,1) classes"));
    z.expectations.push_back(exp_stage2("pure", "J", "true", "tori are pure and full"));
    z.expectations.push_back(exp_stage2("full", "J", "true", "tori are pure and full"));
    return z;
}

ZooEntry make_n1() {
    ZooEntry z;
    z.name = "n1";
    z.description = "6-dim nilmanifold (0^3,12,14,24): C-full complex structure, not C-pure";
    z.pres = parse_presentation("(0^3, 12, 14, 24)", PresentationMode::Real);
    z.validity = Validity::Nilpotent;
    z.default_structure = "J";
    z.structures["J"] = standard_acs(6);
    z.expectations.push_back(exp_betti(2, 5, "H^2_dR(N_1;C) display (five classes)"));
    z.expectations.push_back(exp_integrable(
        "J", true, "the integrability condition is easily checked"));
    z.expectations.push_back(exp_type_dim({{2, 0}, {0, 2}}, false, 4,
                                          "H^{(2,0),(0,2)}_J(N_1) = C<phi^13, phi^1b3b> + ..."));
    z.expectations.push_back(
        exp_type_dim({{1, 1}}, false, 3, "the H^{(1,1)}_J(N_1) display"));
    z.expectations.push_back(
        exp_stage2("full", "J", "true", "a C-full complex structure which is not C-pure"));
    z.expectations.push_back(
        exp_stage2("pure", "J", "false", "a C-full complex structure which is not C-pure"));
    Expectation harm;
    harm.operation = "harmonic_space";
    harm.args = "k=2";
    harm.expected = "5";
    harm.anchor = "harmonic representatives with respect to the metric g = sum phi (.) bar-phi";
    harm.compute = [](const ZooEntry& zz, ZooRunCache&) {
        auto h = make_hermitian_default(zz.pres, zz.structure());
        return std::to_string(harmonic_space(h, 2).size());
    };
    z.expectations.push_back(harm);
    return z;
}

ZooEntry make_n2() {
    ZooEntry z;
    z.name = "n2";
    z.description = "6-dim nilmanifold (0^4,12,34): C-pure complex structure, not C-full";
    z.pres = parse_presentation("(0^4, 12, 34)", PresentationMode::Real);
    z.validity = Validity::Nilpotent;
    z.default_structure = "J";
    z.structures["J"] = standard_acs(6);
    z.expectations.push_back(exp_betti(2, 8, "H^2_dR(N_2;C) display (eight classes)"));
    z.expectations.push_back(exp_integrable("J", true, "the integrability condition follows"));
    z.expectations.push_back(
        exp_type_dim({{2, 0}, {0, 2}}, false, 2, "H^{(2,0),(0,2)}_J(N_2) = C<phi^12, phi^1b2b>"));
    z.expectations.push_back(
        exp_type_dim({{1, 1}}, false, 2, "H^{(1,1)}_J(N_2) = C<phi^1b2, phi^2b1>"));
    z.expectations.push_back(
        exp_stage2("pure", "J", "true", "a C-pure complex structure which is not C-full"));
    z.expectations.push_back(
        exp_stage2("full", "J", "false", "a C-pure complex structure which is not C-full"));
    return z;
}

ZooEntry make_kt4() {
    ZooEntry z;
    z.name = "kt4";
    z.description = "4-dim nilmanifold (0^2,14,12) with J and J'";
    z.pres = parse_presentation("(0^2, 14, 12)", PresentationMode::Real);
    z.validity = Validity::Nilpotent;
    z.default_structure = "J";
    z.structures["J"] = standard_acs(4);
    z.structures["Jprime"] = coframe_from_pairs(4, {{1, 3}, {2, 4}});
    z.expectations.push_back(exp_betti(1, 2, "H^1_dR(M;C) = C<phi^1, bar-phi^1>"));
    z.expectations.push_back(exp_betti(2, 2, "H^2_dR(M;C) display (two classes)"));
    z.expectations.push_back(exp_integrable("J", false, "Nij(theta_1, theta_3) != 0"));
    Expectation nij;
    nij.operation = "nijenhuis";
    nij.args = "structure=J pair=(1,3)";
    nij.expected = "nonzero";
    nij.anchor = "since Nij(theta_1, theta_3) != 0";
    nij.compute = [](const ZooEntry& zz, ZooRunCache&) {
        auto table = nijenhuis(zz.pres, zz.structure("J"));
        return table.count({1, 3}) ? "nonzero" : "zero";
    };
    z.expectations.push_back(nij);
    z.expectations.push_back(exp_stage2("pure", "J", "true", "just C-pure-and-full"));
    z.expectations.push_back(exp_stage2("full", "J", "true", "just C-pure-and-full"));
    z.expectations.push_back(exp_stage2(
        "complex_full", "J", "false", "not complex-C-pure-and-full at the 2-nd stage"));
    z.expectations.push_back(exp_stage2("h_minus", "Jprime", "0", "obviously h^-_{J'} = 0"));
    z.expectations.push_back(exp_stage2("complex_pure", "Jprime", "true",
                                        "complex-C-pure-and-full at the 2-nd stage structure"));
    z.expectations.push_back(exp_stage2("complex_full", "Jprime", "true",
                                        "complex-C-pure-and-full at the 2-nd stage structure"));
    z.expectations.push_back(exp_stage("complex_full", 1, "Jprime", "false",
                                       "which is not complex-C-pure-and-full at the 1-st stage"));
    return z;
}

ZooEntry make_ft6() {
    ZooEntry z;
    z.name = "ft6";
    z.description = "6-dim nilmanifold (0^4,12,13): semi-Kahler J, non-pure non-full J'";
    z.pres = parse_presentation("(0^4, 12, 13)", PresentationMode::Real);
    z.validity = Validity::Nilpotent;
    z.default_structure = "J";
    z.structures["J"] = coframe_from_pairs(6, {{1, 5}, {2, 3}, {4, 6}});
    z.structures["Jprime"] = standard_acs(6);
    Form omega = Form::basis(6, {1, 5}) + Form::basis(6, {2, 3}) + Form::basis(6, {4, 6});
    z.forms["omega"] = omega;
    z.expectations.push_back(exp_betti(1, 4, "H^1_dR(M;R) = R<e^1, e^2, e^3, e^4>"));
    z.expectations.push_back(
        exp_predicate("omega", "J", "compatible", true, "the non-degenerate J-compatible 2-form"));
    z.expectations.push_back(
        exp_predicate("omega", "J", "semi_kahler", true, "d omega^2 = 0"));
    z.expectations.push_back(
        exp_predicate("omega", "J", "balanced", false, "J is not integrable"));
    Expectation domega;
    domega.operation = "ce_differential";
    domega.args = "form=omega";
    domega.expected = "-e^{134}";
    domega.anchor = "a straightforward computation gives d omega = -e^{134} != 0";
    domega.compute = [](const ZooEntry& zz, ZooRunCache&) {
        return to_string(ce_differential(zz.pres, zz.form("omega")));
    };
    z.expectations.push_back(domega);
    Expectation cupzero;
    cupzero.operation = "cup_map";
    cupzero.args = "gamma=omega^2 class=[e^1]";
    cupzero.expected = "exact";
    cupzero.anchor = "omega^2 e^1 = e^{12346} = d e^{3456}";
    cupzero.compute = [](const ZooEntry& zz, ZooRunCache&) {
        auto dst = cohomology_space(zz.pres, 5);
        Form image = wedge(wedge_power(zz.form("omega"), 2), Form::basis(6, {1}));
        return dst.is_exact(image) ? "exact" : "nonzero";
    };
    z.expectations.push_back(cupzero);
    z.expectations.push_back(
        exp_cup_iso("omega", 2, 1, false, "omega^2: H^1 -> H^5 is not injective"));
    z.expectations.push_back(exp_stage2("pure", "Jprime", "false",
                                        "a first example of a compact non-C-pure manifold"));
    z.expectations.push_back(
        exp_stage2("full", "Jprime", "false", "note that it is not even C-full"));
    return z;
}

ZooEntry make_iwasawa() {
    ZooEntry z;
    z.name = "iwasawa";
    z.description = "Iwasawa manifold I_3: d phi^3 = -phi^1 ^ phi^2, balanced";
    z.pres = parse_presentation("(0, 0, -12)", PresentationMode::Complex);
    z.validity = Validity::Nilpotent;
    z.default_structure = "J";
    z.structures["J"] = standard_acs(6);
    auto h = make_hermitian_default(z.pres, z.structures["J"]);
    z.forms["omega"] = h.omega;
    z.expectations.push_back(exp_betti(1, 4, "H^1_dR(I_3;C) = C<phi^1, phi^2, bar1, bar2>"));
    z.expectations.push_back(exp_betti(5, 4, "H^5_dR(I_3;C) display (four classes)"));
    z.expectations.push_back(exp_integrable("J", true, "complex structure equations"));
    z.expectations.push_back(exp_predicate("omega", "J", "balanced", true,
                                           "endowed with the balanced form"));
    z.expectations.push_back(
        exp_cup_iso("omega", 2, 1, true, "omega^2: H^1 -> H^5 is an isomorphism"));
    z.expectations.push_back(exp_stage("complex_pure", 1, "J", "true",
                                       "complex-C-pure-and-full at the 1-st stage"));
    z.expectations.push_back(exp_stage("complex_full", 1, "J", "true",
                                       "complex-C-pure-and-full at the 1-st stage"));
    z.expectations.push_back(exp_stage("complex_pure_currents", 1, "J", "true",
                                       "complex-pure-and-full at the 1-st stage"));
    z.expectations.push_back(exp_stage("complex_full_currents", 1, "J", "true",
                                       "complex-pure-and-full at the 1-st stage"));
    return z;
}

ZooEntry make_etabeta5() {
    ZooEntry z;
    z.name = "etabeta5";
    z.description = "10-dim nilmanifold eta-beta_5: d phi^5 = -phi^12 - phi^34";
    z.pres = parse_presentation("(0^4, -12-34)", PresentationMode::Complex);
    z.validity = Validity::Nilpotent;
    z.default_structure = "J";
    z.structures["J"] = standard_acs(10);
    auto h = make_hermitian_default(z.pres, z.structures["J"]);
    z.forms["omega"] = h.omega;
    z.curves["t-deformation"] = first_entry_conjugate_curve(z.structures["J"]);
    z.expectations.push_back(exp_betti(1, 8, "H^1_dR display: phi^1..phi^4 and conjugates"));
    z.expectations.push_back(exp_betti(9, 8, "H^9_dR display (eight classes)"));
    z.expectations.push_back(exp_betti(2, 26, "H^2_dR display: 10 + 16 classes"));
    z.expectations.push_back(exp_integrable("J", true, "complex structure equations"));
    z.expectations.push_back(exp_stage2("h_minus", "J", "10", "h^-_J(eta beta_5) = 10"));
    z.expectations.push_back(exp_stage2("h_plus", "J", "16", "h^+_J(eta beta_5) = 16"));
    z.expectations.push_back(exp_stage2("pure", "J", "true", "a C-pure-and-full complex manifold"));
    z.expectations.push_back(exp_stage2("full", "J", "true", "a C-pure-and-full complex manifold"));
    z.expectations.push_back(
        exp_cup_iso("omega", 4, 1, true, "omega^4: H^1 -> H^9 an isomorphism"));
    z.expectations.push_back(exp_stage("complex_pure", 1, "J", "true",
                                       "complex-C-pure-and-full at the 1-st stage"));
    z.expectations.push_back(exp_stage("complex_full", 1, "J", "true",
                                       "complex-C-pure-and-full at the 1-st stage"));
    Expectation cur;
    cur.operation = "current_type_subgroup";
    cur.args = "S={(0,1)} degree=1";
    cur.expected = "4";
    cur.anchor = "H^{(1,0)}_J(M) ~ H^J_{(0,1)}(M) applied in the eta-beta_5 example";
    cur.compute = [](const ZooEntry& zz, ZooRunCache&) {
        auto cur1 = current_homology_space(zz.pres, 1);
        return std::to_string(type_subgroup(cur1, zz.pres, zz.structure(), {{0, 1}}, false).dim());
    };
    z.expectations.push_back(cur);
    z.expectations.push_back(exp_scan("t-deformation", GaussianRational(Rational(1, 2)), "pure",
                                      "false", "the complex structures J_t are not C-pure"));
    z.expectations.push_back(exp_scan("t-deformation", GaussianRational(Rational(1, 2)), "h_minus",
                                      "12", "h^-_{J_0} = 10 < 12 <= h^-_{J_t}"));
    return z;
}

ZooEntry make_s3t3() {
    ZooEntry z;
    z.name = "s3t3";
    z.description = "S^3 x T^3 (23,-13,12,0^3): lower semicontinuity of h^+ fails";
    z.pres = parse_presentation("(23, -13, 12, 0^3)", PresentationMode::Real);
    z.validity = Validity::CompactFactor;
    z.default_structure = "J";
    z.structures["J"] = coframe_from_pairs(6, {{1, 4}, {2, 5}, {3, 6}});
    z.curves["t-deformation"] = first_entry_conjugate_curve(z.structures["J"]);
    z.expectations.push_back(exp_betti(2, 3, "H^2_dR = C<[e^45], [e^46], [e^56]>"));
    z.expectations.push_back(exp_stage2("h_plus", "J", "3", "the H^+_J display (three classes)"));
    z.expectations.push_back(exp_stage2("h_minus", "J", "3", "the H^-_J display (three classes)"));
    z.expectations.push_back(exp_stage2("full", "J", "true", "it admits a C-full structure J"));
    z.expectations.push_back(exp_check_flag("solvable", false, "su(2) factor"));
    z.expectations.push_back(exp_check_flag("unimodular", true, "compact quotient"));
    z.expectations.push_back(exp_scan("t-deformation",
                                      GaussianRational(Rational(0), Rational(1, 4)), "h_plus", "1",
                                      "h^+_{J_t} = 1 < 3 = h^+_{J_0}"));
    return z;
}

ZooEntry make_solv6() {
    ZooEntry z;
    z.name = "solv6";
    z.description = "completely-solvable solvmanifold (0,-12,34,0,15,46) with omega_t";
    z.pres = parse_presentation("(0, -12, 34, 0, 15, 46)", PresentationMode::Real);
    z.validity = Validity::CompletelySolvable;
    z.default_structure = "J";
    z.structures["J"] = coframe_from_pairs(6, {{1, 4}, {2, 5}, {3, 6}});
    Form omega0 = Form::basis(6, {1, 4}) + Form::basis(6, {2, 5}) + Form::basis(6, {3, 6});
    z.forms["omega0"] = omega0;
    z.forms["e26"] = Form::basis(6, {2, 6});
    {
        CoframeCurve cc{6, {}};
        // phi^2_t = phi^2 + i t e^6, phi^1 and phi^3 fixed.
        auto spec = z.structures["J"].coframe10;
        Form e6(6, 1);
        e6.set(Mask(1) << 5, Scalar(1));
        spec[1] = spec[1] + (Scalar::i() * Scalar::t(2)) * e6;
        cc.entries = spec;
        z.curves["t-deformation"] = cc;
    }
    z.expectations.push_back(exp_betti(1, 2, "H^1_dR(M;R) = R<e^1, e^4>"));
    z.expectations.push_back(exp_betti(5, 2, "H^5_dR(M;R) = R<e^{23456}, e^{12356}>"));
    z.expectations.push_back(exp_check_flag("nilpotent", false, "completely-solvable, not nilpotent"));
    z.expectations.push_back(exp_check_flag("completely_solvable_heuristic", true,
                                            "simply-connected completely-solvable Lie group"));
    z.expectations.push_back(exp_predicate("omega0", "J", "almost_kahler", true,
                                           "the J-compatible symplectic structure omega"));
    Expectation sq;
    sq.operation = "omega_t_square";
    sq.args = "omega_t = omega0 + t e^{26}";
    sq.expected = "omega0^2 - 2t e^{1246}";
    sq.anchor = "omega_t^2 = omega_0^2 - t e^{1246} (coefficient re-derived exactly)";
    sq.compute = [](const ZooEntry& zz, ZooRunCache&) {
        Form omega_t = zz.form("omega0") + Scalar::t(2) * zz.form("e26");
        Form lhs = wedge(omega_t, omega_t);
        Form rhs = wedge(zz.form("omega0"), zz.form("omega0")) -
                   (Scalar(2) * Scalar::t(2)) * Form::basis(6, {1, 2, 4, 6});
        return lhs == rhs ? "omega0^2 - 2t e^{1246}" : to_string(lhs);
    };
    z.expectations.push_back(sq);
    Expectation cups;
    cups.operation = "cup_map";
    cups.args = "gamma=omega_t^2 at t=1/5 src=H^1";
    cups.expected = "iso [e^1]->[e^{12356}] [e^4]->[e^{23456}]";
    cups.anchor = "omega_t^2 e^1 = e^{12356}, omega_t^2 e^4 = e^{23456}";
    cups.compute = [](const ZooEntry& zz, ZooRunCache&) {
        Form omega_t = zz.form("omega0") + Scalar(Rational(1, 5)) * zz.form("e26");
        Form gamma = wedge(omega_t, omega_t);
        auto src = cohomology_space(zz.pres, 1);
        auto dst = cohomology_space(zz.pres, 5);
        auto cup = cup_map(src, dst, zz.pres, gamma);
        if (!cup.iso) return std::string("not iso");
        // The image classes must span the same lines as the displayed ones.
        auto c1 = dst.class_coordinates(wedge(gamma, Form::basis(6, {1})));
        auto c4 = dst.class_coordinates(wedge(gamma, Form::basis(6, {4})));
        auto l1 = dst.class_coordinates(Form::basis(6, {1, 2, 3, 5, 6}));
        auto l4 = dst.class_coordinates(Form::basis(6, {2, 3, 4, 5, 6}));
        auto proportional = [](const GVec& a, const GVec& b) {
            GRows rows{a, b};
            return span_dim(rows, a.size()) == 1;
        };
        if (proportional(c1, l1) && proportional(c4, l4))
            return std::string("iso [e^1]->[e^{12356}] [e^4]->[e^{23456}]");
        return std::string("iso, unexpected image classes");
    };
    z.expectations.push_back(cups);
    return z;
}

ZooEntry make_n6c1() {
    ZooEntry z;
    z.name = "n6c1";
    z.description = "N^6(1) = Sol(3) x Sol(3) / Gamma(1): obstructed direction b_1^3";
    z.pres = parse_presentation("(12, 0, -36, 24, 56, 0)", PresentationMode::Real);
    z.validity = Validity::CompletelySolvable;
    z.default_structure = "J";
    Matrix<Rational> jb(6, 6);
    for (int i = 0; i < 3; ++i) {
        jb(std::size_t(i), std::size_t(i + 3)) = Rational(-1);
        jb(std::size_t(i + 3), std::size_t(i)) = Rational(1);
    }
    z.structures["J"] = acs_from_matrix(jb);
    z.forms["alpha"] = Form::basis(6, {1, 4});
    Matrix<Rational> a(3, 3), b(3, 3);
    b(0, 2) = Rational(1);
    z.directions["b13"] = block_direction(a, b);
    z.expectations.push_back(exp_check_flag("solvable", true, "Sol(3) x Sol(3) quotient"));
    z.expectations.push_back(exp_check_flag("nilpotent", false, "Sol(3) x Sol(3) quotient"));
    z.expectations.push_back(exp_check_flag("completely_solvable_heuristic", true,
                                            "cohomologically Kahler without Kahler structures"));
    z.expectations.push_back(exp_check_flag("unimodular", true, "compact quotient exists"));
    Expectation pb;
    pb.operation = "pullback_endo";
    pb.args = "form=e^{13} endo=J";
    pb.expected = "e^{46}";
    pb.anchor = "block J: J theta_i = theta_{i+3}";
    pb.compute = [](const ZooEntry& zz, ZooRunCache&) {
        return to_string(pullback_endo(Form::basis(6, {1, 3}), zz.structure().frame));
    };
    z.expectations.push_back(pb);
    Expectation tw;
    tw.operation = "validate_twist_formula";
    tw.args = "(a12,a13,b12,b13)=(0,0,0,1)";
    tw.expected = "equal; value e^{123} + e^{136} - e^{246}";
    tw.anchor = "d beta = b_1^3 e^{123} + b_1^3 e^{136} - b_1^3 e^{246}";
    tw.compute = [](const ZooEntry& zz, ZooRunCache&) {
        Matrix<Rational> a(3, 3), b(3, 3);
        b(0, 2) = Rational(1);
        auto chk = validate_twist_formula(zz.pres, zz.structure(), zz.form("alpha"), a, b);
        if (!chk.equal) return std::string("mismatch");
        return "equal; value " + to_string(chk.engine);
    };
    z.expectations.push_back(tw);
    Expectation ob1;
    ob1.operation = "obstruction";
    ob1.args = "alpha=e^{14} direction=b13 order=1 mode=paper_literal";
    ob1.expected = "solvable";
    ob1.anchor = "the first order obstruction reads (free beta_1)";
    ob1.compute = [](const ZooEntry& zz, ZooRunCache&) {
        auto rep = obstruction(zz.pres, zz.structure(), zz.form("alpha"), zz.direction("b13"), 1,
                               ObstructionMode::PaperLiteral);
        return rep.orders.front().solvable ? "solvable" : "unsolvable";
    };
    z.expectations.push_back(ob1);
    Expectation ob2;
    ob2.operation = "obstruction";
    ob2.args = "alpha=e^{14} direction=b13 order=1 mode=projected";
    ob2.expected = "unsolvable with certificate";
    ob2.anchor = "no invariant beta satisfying the displayed equation could exist";
    ob2.compute = [](const ZooEntry& zz, ZooRunCache&) {
        auto rep = obstruction(zz.pres, zz.structure(), zz.form("alpha"), zz.direction("b13"), 1,
                               ObstructionMode::Projected);
        const auto& o = rep.orders.front();
        if (o.solvable) return std::string("solvable");
        return o.certificate ? std::string("unsolvable with certificate")
                             : std::string("unsolvable, no certificate");
    };
    z.expectations.push_back(ob2);
    return z;
}

} // namespace

const std::vector<ZooEntry>& zoo_catalog() {
    static const std::vector<ZooEntry> entries = [] {
        std::vector<ZooEntry> v;
        v.push_back(make_torus(4));
        v.push_back(make_torus(6));
        v.push_back(make_n1());
        v.push_back(make_n2());
        v.push_back(make_kt4());
        v.push_back(make_ft6());
        v.push_back(make_iwasawa());
        v.push_back(make_etabeta5());
        v.push_back(make_s3t3());
        v.push_back(make_solv6());
        v.push_back(make_n6c1());
        return v;
    }();
    return entries;
}

const ZooEntry& zoo_lookup(const std::string& name) {
    for (const auto& z : zoo_catalog())
        if (z.name == name) return z;
    throw ConfigError("unknown zoo entry '" + name + "'");
}

std::vector<ExpectationResult> run_expectations(const ZooEntry& entry) {
    std::vector<ExpectationResult> out;
    ZooRunCache cache;
    for (const auto& e : entry.expectations) {
        ExpectationResult r;
        r.record = &e;
        try {
            r.actual = e.compute(entry, cache);
            r.pass = r.actual == e.expected;
        } catch (const std::exception& ex) {
            r.actual = std::string("error: ") + ex.what();
            r.pass = false;
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace purefull
