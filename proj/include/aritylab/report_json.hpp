#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aritylab/arity.hpp"
#include "aritylab/automorph.hpp"
#include "aritylab/expansions.hpp"
#include "aritylab/structure.hpp"

namespace aritylab {

using Json = nlohmann::ordered_json;

// Machine-readable reports with stable key order. Canonical reports are
// byte-identical across runs and thread counts: they carry the semantic
// configuration (caps and sweep bounds) but no timings, thread counts, or
// paths. The schema is documented in docs/report_schema.md.

/// Shared header: schema, tool, version, command, config.
Json report_header(const std::string& command, const RunConfig& config);

Json json_of_class_report(const ClassReport& report);
Json json_of_aut_group(const AutGroup& aut);
Json json_of_checks(const std::vector<ArityCheck>& checks, const std::string& provenance);
Json json_of_arity_report(const ArityReport& report);
Json json_of_hypothesis_report(const HypothesisReport& report);

struct OracleAgreement {
    std::string what;  // e.g. "aut_order", "atoms(m=2,n=1)", "relation_arity"
    bool agrees = false;
};

Json report_validate(const FiniteStructure& s, const std::optional<ClassReport>& cls,
                     const RunConfig& config);

Json report_arity(const FiniteStructure& s, const AutGroup& aut, const ArityReport& report,
                  const RunConfig& config, const std::vector<OracleAgreement>& oracle = {});

struct RelationDescription {
    std::string kind;    // "graph", "power-graph", "named"
    std::string symbol;  // function or relation name
    int power = 0;       // power-graph only
    int m = 0;
    std::uint64_t cardinality = 0;
};

Json report_rel_arity(const FiniteStructure& s, const AutGroup& aut,
                      const RelationDescription& desc, int arity,
                      const std::vector<ArityCheck>& checks,
                      const std::optional<HypothesisReport>& hypotheses, const RunConfig& config,
                      const std::vector<OracleAgreement>& oracle = {});

Json report_expand(const FiniteStructure& base, const std::string& mode, const Expansion& expansion,
                   const AutGroup& combined_aut, const ArityReport& combined_arity,
                   const std::vector<std::string>& notes, const RunConfig& config);

struct FamilyRow {
    std::string name;
    int size = 0;
    std::uint64_t aut_order = 1;
    std::optional<int> theory_arity;
    bool exact = false;
    std::optional<int> expanded_arity;  // finite-range sweeps only
};

Json report_family(const std::string& kind, const std::vector<FamilyRow>& rows,
                   const std::vector<std::string>& notes, const RunConfig& config);

/// Canonical rendering: two-space indent plus trailing newline.
std::string render_report(const Json& report);

/// Plain-text table derived from a family report.
std::string render_family_table(const Json& report);

}  // namespace aritylab
