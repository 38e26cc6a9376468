#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace aritylab {

/// Caps and execution knobs shared across the toolkit. Every cap is data, not
/// a hardcoded constant; ARITYLAB_MAX_TUPLES overrides tuple_cap when set.
struct RunConfig {
    /// Largest universe accepted by the automorphism search.
    int aut_size_cap = 12;
    /// Largest materialized tuple space s^m (ranks).
    std::uint64_t tuple_cap = 20'000'000;
    /// Largest universe accepted by the family generators.
    int gen_size_cap = 64;
    /// Candidate arity sweep bound; 0 means "derive from the structure size".
    int max_n = 0;
    /// Tuple-length sweep bound; 0 means "derive from the structure size".
    int max_m = 0;
    /// Run oracle cross-checks alongside the engine.
    bool run_oracle = false;
    /// Worker threads for per-rank signature sweeps. Output is identical for
    /// any value; 1 is the default.
    int threads = 1;
    /// Report destination; empty means stdout.
    std::string output_path;

    /// Returns defaults with ARITYLAB_MAX_TUPLES applied when present.
    static RunConfig from_env();

    int effective_max_m(int structure_size) const {
        return max_m > 0 ? max_m : structure_size;
    }
    int effective_max_n(int structure_size) const {
        if (max_n > 0) return max_n;
        return structure_size > 0 ? structure_size : 1;
    }
};

/// Brute-force caps for the oracle module. The oracle exists at desk scale
/// only; tests widen these deliberately when pinning reference values.
struct OracleCaps {
    int max_size = 4;
    int max_m = 4;
    int max_n = 2;
    int aut_size_cap = 8;
    /// Largest family size the explicit Boolean closure may materialize.
    std::size_t closure_budget = 65536;
};

}  // namespace aritylab
