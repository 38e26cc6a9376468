#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aritylab/orbits.hpp"
#include "aritylab/structure.hpp"

namespace aritylab {

/// Subset of M^m stored as a membership mask over tuple ranks.
class Relation {
public:
    Relation(int m, int size, std::vector<char> mask);

    static Relation empty(int m, int size, const RunConfig& config = {});
    static Relation full(int m, int size, const RunConfig& config = {});
    static Relation from_tuples(int m, int size, const std::vector<std::vector<int>>& tuples,
                                const RunConfig& config = {});
    /// Graph of a function symbol: {(a_1..a_k, f(a))}; m = k + 1.
    static Relation graph_of(const FiniteStructure& s, std::string_view fn,
                             const RunConfig& config = {});
    /// Graph of the left-associated iterated product y = x_1 . x_2 . ... . x_n
    /// of a binary function symbol; m = n + 1.
    static Relation power_graph(const FiniteStructure& s, std::string_view fn, int n,
                                const RunConfig& config = {});
    static Relation named(const FiniteStructure& s, std::string_view relation,
                          const RunConfig& config = {});
    /// The diagonal {(a, a)}; m = 2.
    static Relation equality(int size, const RunConfig& config = {});

    int m() const { return m_; }
    int size() const { return size_; }
    std::uint64_t space() const { return mask_.size(); }
    std::uint64_t cardinality() const;
    bool is_empty() const { return cardinality() == 0; }
    bool is_full() const { return cardinality() == space(); }

    bool contains_rank(std::uint64_t rank) const { return mask_[rank] != 0; }
    bool contains(std::span<const int> tuple) const;
    const std::vector<char>& mask() const { return mask_; }

    std::vector<std::vector<int>> tuples() const;

    bool operator==(const Relation&) const = default;

private:
    int m_;
    int size_;
    std::vector<char> mask_;
};

/// Witness that a relation cuts through an orbit: the orbit's class id plus a
/// member rank inside and outside the relation.
struct OrbitSplit {
    std::int32_t orbit = 0;
    std::uint64_t in_rank = 0;
    std::uint64_t out_rank = 0;
};

/// Empty when r is a union of orbit classes; otherwise the first split in
/// ascending rank order.
std::optional<OrbitSplit> find_orbit_split(const Relation& r, const OrbitPartition& orbits);

/// Throws InputError describing the split when r is not a union of orbits.
void require_invariant(const Relation& r, const OrbitPartition& orbits, std::string_view what);

}  // namespace aritylab
