#include "hopfdom/report.hpp"

#include <algorithm>

#include "hopfdom/spec_io.hpp"

namespace hopfdom {

Json report_header(const ReportConfig& cfg) {
    Json out;
    out["tool"] = "hopfdom";
    out["version"] = kToolVersion;
    out["command"] = cfg.command;
    out["config"] = {{"window", cfg.window}, {"seed", cfg.seed}, {"samples", cfg.samples}};
    return out;
}

Json instance_to_json(const FamilyParams& params, const FamilyAlgebra& alg) {
    const FamilyParams canon = canonicalize(params);
    Json out;
    out["input"] = params_to_json(params);
    out["canonical"] = params_to_json(canon);
    out["label"] = canon.label();
    out["level"] = alg.level();
    return out;
}

Json index_to_json(const BasisIndex& i) {
    Json out = Json::array();
    for (std::size_t k = 0; k < i.size(); ++k) out.push_back(i[k]);
    return out;
}

Json element_to_json(const Element& h, const StructureProvider& alg) {
    Json out = Json::array();
    for (const auto& [i, c] : h) {
        out.push_back({{"index", index_to_json(i)}, {"monomial", alg.format_index(i)}, {"scalar", scalar_to_json(c)}});
    }
    return out;
}

Json axiom_report_to_json(const AxiomReport& rep) {
    Json out;
    out["passed"] = rep.passed();
    out["total_checks"] = rep.total_checks();
    Json results = Json::array();
    for (const auto& r : rep.axioms) {
        Json fails = Json::array();
        for (const auto& f : r.failures) {
            Json idx = Json::array();
            for (const auto& i : f.indices) idx.push_back(index_to_json(i));
            fails.push_back({{"indices", idx}, {"residual", f.residual}});
        }
        results.push_back({{"axiom", r.axiom}, {"checks", r.checks}, {"passed", r.passed()}, {"failures", fails}});
    }
    out["results"] = results;
    return out;
}

int grouplike_bound(int window) { return std::clamp(window, 1, 2); }

Json invariants_to_json(const FamilyAlgebra& alg, int bound) {
    const FamilyParams& params = alg.params();
    const InvariantVector v = compute_invariants(alg, bound);
    Json out;
    Json comps;
    for (const auto& [name, value] : invariant_components(v)) comps[name] = value;
    out["vector"] = comps;

    Json ab;
    if (v.abelianization.goldie_rank) {
        ab["goldie_rank"] = *v.abelianization.goldie_rank;
    } else {
        ab["goldie_rank"] = nullptr;
    }
    ab["quotient"] = v.abelianization.quotient;
    out["abelianization"] = ab;

    const GrouplikeProfile g = grouplike_profile(alg, bound);
    Json gl;
    gl["bound"] = bound;
    gl["found"] = g.found;
    gl["rank"] = g.rank;
    gl["abelian"] = g.abelian;
    Json elems = Json::array();
    for (const auto& e : find_grouplikes(alg, std::min(bound, 1))) elems.push_back(element_to_json(e, alg));
    gl["elements_bound_1"] = elems;
    out["grouplikes"] = gl;

    out["ext1_dim"] = v.ext1_dim;
    out["gldim"] = gldim_name(gldim_class(params));
    out["gk_dim"] = 2;

    const PiProfile pi = pi_profile(params);
    Json pj;
    switch (pi.kind) {
        case PiProfile::Kind::Finite:
            pj["pideg"] = pi.pideg;
            break;
        case PiProfile::Kind::Infinite:
            pj["pideg"] = "infinite";
            break;
        case PiProfile::Kind::Unreported:
            pj["pideg"] = nullptr;
            break;
    }
    if (pi.io) {
        pj["io"] = *pi.io;
    } else {
        pj["io"] = nullptr;
    }
    out["pi"] = pj;

    const Resolution res = resolve(params);
    out["resolution"] = {{"canonical", params_to_json(res.params)}, {"label", res.params.label()}, {"rules", res.rules}};
    return out;
}

Json iso_to_json(const IsoResult& r) {
    Json out;
    out["isomorphic"] = r.isomorphic;
    out["left"] = params_to_json(r.left);
    out["right"] = params_to_json(r.right);
    out["rule"] = r.rule;
    if (r.difference) {
        out["difference"] = {{"invariant", r.difference->name}, {"left", r.difference->left},
                             {"right", r.difference->right}};
    } else {
        out["difference"] = nullptr;
    }
    out["explanation"] = r.explanation();
    return out;
}

namespace {

Json graded_to_json(const std::map<int, Element>& parts, const StructureProvider& alg) {
    Json out = Json::array();
    for (const auto& [n, e] : parts) out.push_back({{"degree", n}, {"coefficient", element_to_json(e, alg)}});
    return out;
}

Json basis_to_json(const std::vector<Element>& basis, const StructureProvider& alg) {
    Json out = Json::array();
    for (const auto& e : basis) out.push_back(element_to_json(e, alg));
    return out;
}

}  // namespace

Json comodule_to_json(const FamilyAlgebra& alg, const QuotientSpec& spec, int window) {
    Json out;
    out["quotient"] = spec.name();
    out["kind"] = quotient_kind_name(spec.kind());
    Json images = Json::array();
    for (const auto& g : alg.generators()) {
        Json img = Json::array();
        for (const auto& [k, c] : spec.image(g.index)) img.push_back({{"power", k}, {"scalar", scalar_to_json(c)}});
        images.push_back({{"generator", g.name}, {"image", img}});
    }
    out["generator_images"] = images;

    const bool laurent = spec.kind() == QuotientKind::Laurent;
    Json table = Json::array();
    for (const auto& i : alg.window(window)) {
        const Element h = alg.basis(i);
        Json row;
        row["index"] = index_to_json(i);
        row["monomial"] = alg.format_index(i);
        row["rho"] = graded_to_json(rho(alg, spec, h), alg);
        row["lambda"] = graded_to_json(lambda(alg, spec, h), alg);
        if (laurent) {
            Json bi = Json::array();
            for (const auto& [ij, e] : grade_projections(alg, spec, h)) {
                bi.push_back({{"right", ij.first}, {"left", ij.second}, {"component", element_to_json(e, alg)}});
            }
            row["bigrading"] = bi;
        } else {
            row["delta_r"] = element_to_json(delta_r(alg, spec, h), alg);
            row["delta_l"] = element_to_json(delta_l(alg, spec, h), alg);
        }
        table.push_back(row);
    }
    out[laurent ? "grading_table" : "derivation_table"] = table;
    out["right_coinvariants"] = basis_to_json(coinvariants_basis(alg, spec, window), alg);
    out["left_coinvariants"] = basis_to_json(left_coinvariants_basis(alg, spec, window), alg);

    Json checks = Json::array();
    bool all = true;
    for (const auto& c : comodule_property_checks(alg, spec, window)) {
        all = all && c.passed;
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
    }
    out["checks"] = checks;
    out["passed"] = all;
    return out;
}

std::string default_quotient(const FamilyParams& params) {
    switch (params.family) {
        case Family::GroupZ2:
        case Family::GroupZSemiZ:
        case Family::C:
        case Family::CLift:
            return "y-1";
        default:
            return "y";
    }
}

}  // namespace hopfdom
