#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "aritylab/automorph.hpp"
#include "aritylab/config.hpp"
#include "aritylab/structure.hpp"

namespace aritylab {

/// Big-endian tuple rank: (a_1..a_m) -> sum a_i * s^(m-i). Entries must lie
/// in {0..s-1}.
std::uint64_t tuple_rank(std::span<const int> tuple, int size);

/// Inverse of tuple_rank.
std::vector<int> tuple_unrank(std::uint64_t rank, int m, int size);

/// s^m, or BudgetError naming the required budget when it exceeds
/// config.tuple_cap.
std::uint64_t tuple_space_size(int size, int m, const RunConfig& config);

/// Partition of the rank space {0..s^m-1} with canonical class ids: ids are
/// assigned by first occurrence in ascending rank order. Also reused for
/// signature partitions and oracle atom partitions, which share the rank
/// space and the canonical-id convention.
struct Partition {
    int m = 0;
    std::vector<std::int32_t> class_of;
    std::int32_t class_count = 0;

    bool operator==(const Partition&) const = default;
};

using OrbitPartition = Partition;

/// Orbit partition of M^m under the coordinatewise action of the generators:
/// union-find over ranks followed by a canonical renumbering pass, so the
/// result is independent of union order.
OrbitPartition orbit_partition(const FiniteStructure& s, const AutGroup& aut, int m,
                               const RunConfig& config = {});

std::int32_t orbit_of(const OrbitPartition& partition, std::span<const int> tuple, int size);

/// Lazy cache of orbit partitions per tuple length for one structure; the
/// arity engine needs several levels per run. Immutable once computed.
class PartitionSet {
public:
    PartitionSet(const FiniteStructure& s, const AutGroup& aut, RunConfig config = {});

    const OrbitPartition& at(int m);

    const FiniteStructure& structure() const { return *structure_; }
    const AutGroup& aut() const { return *aut_; }
    const RunConfig& config() const { return config_; }

private:
    const FiniteStructure* structure_;
    const AutGroup* aut_;
    RunConfig config_;
    std::map<int, OrbitPartition> cache_;
};

}  // namespace aritylab
