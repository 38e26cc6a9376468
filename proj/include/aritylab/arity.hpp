#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aritylab/orbits.hpp"
#include "aritylab/relation.hpp"

namespace aritylab {

/// The label a tuple carries in the algebra of level-n definable relations.
///
/// Component layout:
///   n == 1        m unary orbit ids followed by the m-entry restricted-growth
///                 string of the coordinate equality pattern
///   1 < n < m     one OrbitPartition(n) id per strictly increasing index
///                 n-tuple, in lexicographic index order
///   n >= m        the single OrbitPartition(m) id of the whole tuple
struct SubtypeSignature {
    int n = 0;
    std::vector<std::int32_t> components;

    bool operator==(const SubtypeSignature&) const = default;
};

SubtypeSignature signature_of(std::span<const int> tuple, int n, PartitionSet& partitions);

/// Variant indexing by every map {1..n} -> {1..m} (repeats allowed) instead of
/// the strictly increasing tuples; induces the same partition of M^m for
/// n >= 2. Exists to make that sufficiency claim testable.
SubtypeSignature signature_of_all_maps(std::span<const int> tuple, int n,
                                       PartitionSet& partitions);

enum class IndexScheme { Increasing, AllMaps };

/// Partition of M^m by level-n signature, canonical ids by first occurrence
/// in rank order. Deterministic for any thread count: the per-rank sweep is
/// parallel, the renumbering pass is sequential.
Partition signature_partition(PartitionSet& partitions, int m, int n,
                              IndexScheme scheme = IndexScheme::Increasing);

/// Counterexample to an equality-of-partitions check: two tuples with equal
/// signatures that the finer partition separates. Chosen deterministically:
/// lhs is the first rank of the earliest offending signature class, rhs the
/// first rank in that class the finer side separates from lhs.
struct CounterexamplePair {
    std::vector<int> lhs;
    std::vector<int> rhs;
};

struct NAryVerdict {
    bool holds = false;
    /// On failure: lhs in R, rhs outside R, equal level-n signatures.
    std::optional<CounterexamplePair> counterexample;
};

/// True iff every level-n signature class of M^m is contained in or disjoint
/// from r. Precondition: r is a union of orbits (InputError otherwise).
NAryVerdict is_n_ary_relation(const Relation& r, int n, PartitionSet& partitions);

/// 0 iff r is empty or all of M^m; otherwise the least n with
/// is_n_ary_relation(r, n). Never exceeds r.m().
int relation_arity(const Relation& r, PartitionSet& partitions);

struct ArityCheck {
    int n = 0;
    int m = 0;
    bool pass = false;
    std::optional<CounterexamplePair> counterexample;
};

/// Result of the theory-arity sweep.
struct ArityReport {
    std::string structure;
    int size = 0;
    int max_m = 0;
    int max_n = 0;
    std::uint64_t aut_order = 1;
    std::vector<ArityCheck> checks;
    /// Least n whose level-n signatures reproduce every orbit partition up to
    /// max_m; empty when every candidate up to max_n failed.
    std::optional<int> theory_arity;
    /// Certified only when max_m >= size (repeated coordinates reduce any
    /// longer tuple to one of length <= size).
    bool exact = false;
    /// Wall-clock seconds; carried for display, never serialized into
    /// canonical reports.
    double elapsed_seconds = 0.0;
};

/// For each candidate n = 1..max_n checks every m = n+1..max_m that the
/// level-n signature partition of M^m equals the orbit partition. max_m/max_n
/// default to the structure size when the config leaves them 0.
ArityReport theory_arity(const FiniteStructure& s, const AutGroup& aut,
                         PartitionSet& partitions, const RunConfig& config = {});

/// Verdict of an extended-signature check (witness or delta based).
struct WitnessVerdict {
    bool holds = false;
    int failed_m = 0;  // 0 when holds
    std::optional<CounterexamplePair> counterexample;
};

/// Extends the level-n signature with one membership bit per witness W of
/// arity k per index map {1..k} -> {1..m} (all m^k maps; substitution may
/// identify variables). Holds iff the extended partition equals the orbit
/// partition for every m <= max_m. Witnesses must be invariant and of arity
/// <= max_m. With no witnesses this is exactly the theory-arity per-n check.
WitnessVerdict almost_arity_check(const FiniteStructure& s,
                                  const std::vector<Relation>& witnesses, int n, int max_m,
                                  PartitionSet& partitions);

/// Signature made of membership bits of all substituted delta members; the
/// equality relation is always implicitly included. Holds iff the bit
/// partition equals the orbit partition for every m <= max_m.
WitnessVerdict delta_based_check(const FiniteStructure& s, const std::vector<Relation>& delta,
                                 int max_m, PartitionSet& partitions);

/// Finite-shadow check of the two solution-counting hypotheses.
struct HypothesisReport {
    int m = 0;
    std::int64_t sol_bound = 1;      // F
    std::int64_t cofinite_slack = 0; // C

    /// Condition (1): substituting any m-1 coordinates leaves between 1 and F
    /// completions inside the relation.
    bool condition1 = false;
    struct Extremal {
        int free_coordinate = 0;       // 1-based
        std::vector<int> fixed_values; // the other m-1 coordinates, in order
        std::int64_t count = 0;
    };
    Extremal min_completions;
    Extremal max_completions;

    /// Condition (2): each coordinate-deleted projection misses at most C
    /// tuples of M^(m-1).
    bool condition2 = false;
    std::vector<std::int64_t> missing_per_projection;  // per deleted coordinate
    std::optional<std::pair<int, std::vector<int>>> sample_missing;  // (coordinate, tuple)

    /// The non-aritizability conclusion drawn from these hypotheses concerns
    /// infinite structures; reports must mark it as not desk-testable.
    bool conclusion_desk_testable = false;
};

/// Exhaustive substitution scan; r must be nonempty. Defaults F = 1, C = 0
/// (the unique-solution / full-projection sharp form).
HypothesisReport check_arit_hypotheses(const Relation& r, std::int64_t sol_bound = 1,
                                       std::int64_t cofinite_slack = 0);

}  // namespace aritylab
