#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hopfdom/comodule.hpp"
#include "hopfdom/invariants.hpp"
#include "hopfdom/report.hpp"
#include "hopfdom/spec_io.hpp"
#include "hopfdom/verify.hpp"

using namespace hopfdom;

namespace {

enum Exit { kOk = 0, kAxiomFailure = 1, kInputError = 2, kNotIsomorphic = 3 };

struct Options {
    int window = 3;
    std::string format = "human";
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::size_t samples = 64;
    std::vector<std::string> specs;
    std::string quotient;
};

bool structured(const Options& o) { return o.format == "structured"; }

ReportConfig config_of(const std::string& command, const Options& o) {
    return {command, o.window, o.seed, o.samples};
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

AxiomReport run_verify(const FamilyAlgebra& alg, const Options& o) {
    SuiteOptions so;
    so.window = o.window;
    so.jobs = o.jobs;
    so.samples = o.samples;
    so.seed = o.seed;
    return run_axiom_suite(alg, so);
}

void print_axioms(const AxiomReport& rep) {
    for (const auto& r : rep.axioms) {
        std::cout << "  " << std::left << std::setw(38) << r.axiom << std::right << std::setw(9) << r.checks
                  << " checks  " << (r.passed() ? "ok" : "FAIL") << "\n";
        for (const auto& f : r.failures) {
            std::cout << "    at";
            for (const auto& i : f.indices) std::cout << " " << i.to_string();
            std::cout << ": residual " << f.residual << "\n";
        }
    }
}

std::string format_graded(const std::map<int, Element>& parts, const StructureProvider& alg, const char* side) {
    std::string s;
    for (const auto& [n, e] : parts) {
        if (!s.empty()) s += " + ";
        const std::string t = "t^" + std::to_string(n);
        s += side[0] == 'r' ? "(" + format(e, alg) + ")(x)" + t : t + "(x)(" + format(e, alg) + ")";
    }
    return s.empty() ? "0" : s;
}

int cmd_verify(const Options& o) {
    const FamilyParams p = load_spec(o.specs[0]);
    const auto alg = build(p);
    const auto t0 = std::chrono::steady_clock::now();
    const AxiomReport rep = run_verify(*alg, o);
    if (structured(o)) {
        Json doc = report_header(config_of("verify", o));
        doc["instance"] = instance_to_json(p, *alg);
        doc["axioms"] = axiom_report_to_json(rep);
        emit(doc);
    } else {
        std::cout << alg->label() << "  window " << o.window << "\n";
        print_axioms(rep);
        std::cout << (rep.passed() ? "passed: " : "FAILED: ") << rep.total_checks() << " checks in " << std::fixed
                  << std::setprecision(2) << seconds_since(t0) << " s\n";
    }
    return rep.passed() ? kOk : kAxiomFailure;
}

void print_invariants(const Json& inv) {
    for (const auto& [k, v] : inv["vector"].items()) {
        std::cout << "  " << std::left << std::setw(28) << k << v.get<std::string>() << "\n";
    }
    std::cout << "  " << std::setw(28) << "abelianization" << inv["abelianization"]["quotient"].get<std::string>()
              << "\n";
    std::cout << "  " << std::setw(28) << "gldim" << inv["gldim"].get<std::string>() << "\n";
    std::cout << "  " << std::setw(28) << "gk_dim" << inv["gk_dim"].dump() << "\n";
    const auto& pi = inv["pi"];
    std::cout << "  " << std::setw(28) << "pideg" << (pi["pideg"].is_null() ? "unreported" : pi["pideg"].is_string() ? pi["pideg"].get<std::string>() : pi["pideg"].dump()) << "\n";
    std::cout << "  " << std::setw(28) << "io" << (pi["io"].is_null() ? "unreported" : pi["io"].dump()) << "\n";
    const auto& g = inv["grouplikes"];
    std::cout << "  " << std::setw(28) << "grouplikes" << g["found"].dump() << " found within bound "
              << g["bound"].dump() << ", rank " << g["rank"].dump()
              << (g["abelian"].get<bool>() ? ", abelian" : ", nonabelian") << "\n";
    const auto& r = inv["resolution"];
    std::cout << "  " << std::setw(28) << "resolves to" << r["label"].get<std::string>() << "\n";
    for (const auto& rule : r["rules"]) std::cout << "    via " << rule.get<std::string>() << "\n";
    std::cout << std::right;
}

int cmd_invariants(const Options& o) {
    const FamilyParams p = load_spec(o.specs[0]);
    const auto alg = build(p);
    const Json inv = invariants_to_json(*alg, grouplike_bound(o.window));
    if (structured(o)) {
        Json doc = report_header(config_of("invariants", o));
        doc["instance"] = instance_to_json(p, *alg);
        doc["invariants"] = inv;
        emit(doc);
    } else {
        std::cout << alg->label() << "\n";
        print_invariants(inv);
    }
    return kOk;
}

int cmd_iso(const Options& o) {
    const FamilyParams a = load_spec(o.specs[0]);
    const FamilyParams b = load_spec(o.specs[1]);
    const IsoResult r = isomorphic(a, b, grouplike_bound(o.window));
    if (structured(o)) {
        Json doc = report_header(config_of("iso", o));
        doc["iso"] = iso_to_json(r);
        emit(doc);
    } else {
        std::cout << a.label() << " vs " << b.label() << ": " << r.explanation() << "\n";
    }
    return r.isomorphic ? kOk : kNotIsomorphic;
}

QuotientSpec quotient_for(const FamilyAlgebra& alg, const Options& o) {
    const std::string name = o.quotient.empty() ? default_quotient(alg.params()) : o.quotient;
    return QuotientSpec::builtin(alg, name);
}

void print_comodule(const FamilyAlgebra& alg, const QuotientSpec& spec, const Json& com, int window) {
    std::cout << "  quotient " << spec.name() << " (" << quotient_kind_name(spec.kind()) << ")\n";
    for (const auto& g : alg.generators()) {
        std::string img;
        for (const auto& [k, c] : spec.image(g.index)) {
            if (!img.empty()) img += " + ";
            img += (c.is_one() ? std::string() : "(" + c.to_string() + ")") + "t^" + std::to_string(k);
        }
        std::cout << "    pi(" << g.name << ") = " << (img.empty() ? "0" : img) << "\n";
    }
    const bool laurent = spec.kind() == QuotientKind::Laurent;
    std::cout << "  " << (laurent ? "grading" : "derivation") << " table, window " << window << "\n";
    for (const auto& i : alg.window(window)) {
        const Element h = alg.basis(i);
        std::cout << "    " << alg.format_index(i) << "\n";
        std::cout << "      rho    = " << format_graded(rho(alg, spec, h), alg, "r") << "\n";
        std::cout << "      lambda = " << format_graded(lambda(alg, spec, h), alg, "l") << "\n";
        if (!laurent) {
            std::cout << "      delta_r = " << format(delta_r(alg, spec, h), alg) << "\n";
            std::cout << "      delta_l = " << format(delta_l(alg, spec, h), alg) << "\n";
        }
    }
    auto print_basis = [&](const char* title, const std::vector<Element>& basis) {
        std::cout << "  " << title << ":";
        for (const auto& e : basis) std::cout << " " << format(e, alg) << ";";
        std::cout << "\n";
    };
    print_basis("right coinvariants", coinvariants_basis(alg, spec, window));
    print_basis("left coinvariants", left_coinvariants_basis(alg, spec, window));
    for (const auto& c : com["checks"]) {
        std::cout << "  " << std::left << std::setw(26) << c["name"].get<std::string>() << std::right << std::setw(7)
                  << c["cases"].dump() << " cases  " << (c["passed"].get<bool>() ? "ok" : "FAIL") << "\n";
        if (!c["passed"].get<bool>()) std::cout << "    " << c["detail"].get<std::string>() << "\n";
    }
}

int cmd_comodule(const Options& o) {
    const FamilyParams p = load_spec(o.specs[0]);
    const auto alg = build(p);
    const QuotientSpec spec = quotient_for(*alg, o);
    const Json com = comodule_to_json(*alg, spec, o.window);
    if (structured(o)) {
        Json doc = report_header(config_of("comodule", o));
        doc["instance"] = instance_to_json(p, *alg);
        doc["comodule"] = com;
        emit(doc);
    } else {
        std::cout << alg->label() << "\n";
        print_comodule(*alg, spec, com, o.window);
    }
    return com["passed"].get<bool>() ? kOk : kAxiomFailure;
}

int cmd_report(const Options& o) {
    const FamilyParams p = load_spec(o.specs[0]);
    const auto alg = build(p);
    const auto t0 = std::chrono::steady_clock::now();
    const AxiomReport rep = run_verify(*alg, o);
    const Json inv = invariants_to_json(*alg, grouplike_bound(o.window));
    std::optional<QuotientSpec> spec;
    std::string quotient_error;
    try {
        spec = quotient_for(*alg, o);
    } catch (const InvalidQuotient& e) {
        if (!o.quotient.empty()) throw;
        quotient_error = e.what();
    }
    Json com = spec ? comodule_to_json(*alg, *spec, o.window) : Json();
    const bool ok = rep.passed() && (!spec || com["passed"].get<bool>());
    if (structured(o)) {
        Json doc = report_header(config_of("report", o));
        doc["instance"] = instance_to_json(p, *alg);
        doc["axioms"] = axiom_report_to_json(rep);
        doc["invariants"] = inv;
        if (spec) {
            doc["comodule"] = com;
        } else {
            doc["comodule"] = {{"error", quotient_error}};
        }
        emit(doc);
    } else {
        std::cout << alg->label() << "  window " << o.window << "\n";
        std::cout << "axioms\n";
        print_axioms(rep);
        std::cout << "invariants\n";
        print_invariants(inv);
        std::cout << "comodule\n";
        if (spec) {
            print_comodule(*alg, *spec, com, o.window);
        } else {
            std::cout << "  no built-in quotient: " << quotient_error << "\n";
        }
        std::cout << (ok ? "passed" : "FAILED") << " in " << std::fixed << std::setprecision(2) << seconds_since(t0)
                  << " s\n";
    }
    return ok ? kOk : kAxiomFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hopfdom: exact verification and classification of Hopf domain families"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--window", o.window, "exponent window for enumerated basis indices")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"human", "structured"}))
            ->capture_default_str();
        sub->add_option("--seed", o.seed, "seed for sampled checks")->capture_default_str();
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_option("--samples", o.samples, "random element pairs for sampled checks")->capture_default_str();
    };
    auto quotient_opt = [&](CLI::App* sub) {
        sub->add_option("--quotient", o.quotient, "built-in quotient: y (y -> 0) or y-1 (y -> 1)")
            ->check(CLI::IsMember({"y", "y-1"}));
    };

    auto* verify = app.add_subcommand("verify", "run the Hopf axiom suite on a window");
    verify->add_option("spec", o.specs, "instance spec file")->required()->expected(1);
    common(verify);
    auto* inv = app.add_subcommand("invariants", "compute the invariant vector");
    inv->add_option("spec", o.specs, "instance spec file")->required()->expected(1);
    common(inv);
    auto* iso = app.add_subcommand("iso", "decide isomorphism of two instances");
    iso->add_option("specs", o.specs, "two instance spec files")->required()->expected(2);
    common(iso);
    auto* com = app.add_subcommand("comodule", "comodule gradings, derivations and coinvariants");
    com->add_option("spec", o.specs, "instance spec file")->required()->expected(1);
    common(com);
    quotient_opt(com);
    auto* rep = app.add_subcommand("report", "axioms, invariants and comodule data in one document");
    rep->add_option("spec", o.specs, "instance spec file")->required()->expected(1);
    common(rep);
    quotient_opt(rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*verify) return cmd_verify(o);
        if (*inv) return cmd_invariants(o);
        if (*iso) return cmd_iso(o);
        if (*com) return cmd_comodule(o);
        if (*rep) return cmd_report(o);
    } catch (const InvalidParams& e) {
        std::cerr << (e.pointer().empty() ? std::string() : e.pointer() + ": ") << e.what() << "\n";
        return kInputError;
    } catch (const InvalidQuotient& e) {
        std::cerr << "/quotient: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
