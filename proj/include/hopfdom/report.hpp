#pragma once

#include <cstdint>
#include <string>

#include "hopfdom/comodule.hpp"
#include "hopfdom/invariants.hpp"
#include "hopfdom/verify.hpp"
#include "json.hpp"

namespace hopfdom {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct ReportConfig {
    std::string command;
    int window = 3;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
};

/// {"tool", "version", "command", "config"}. Worker count and timing are
/// deliberately absent so the document depends only on (spec, window, seed).
Json report_header(const ReportConfig& cfg);

/// {"input", "canonical", "label", "level"}.
Json instance_to_json(const FamilyParams& params, const FamilyAlgebra& alg);

Json index_to_json(const BasisIndex& i);
/// List of {"index", "monomial", "scalar"} records in index order.
Json element_to_json(const Element& h, const StructureProvider& alg);

Json axiom_report_to_json(const AxiomReport& rep);
Json invariants_to_json(const FamilyAlgebra& alg, int bound);
Json iso_to_json(const IsoResult& r);
/// Grading or derivation tables on the window plus coinvariants and
/// property checks.
Json comodule_to_json(const FamilyAlgebra& alg, const QuotientSpec& spec, int window);

/// Built-in quotient used when none is requested: "y-1" when y is invertible,
/// "y" otherwise.
std::string default_quotient(const FamilyParams& params);

/// Grouplike search bound used by reports for a given window.
int grouplike_bound(int window);

}  // namespace hopfdom
