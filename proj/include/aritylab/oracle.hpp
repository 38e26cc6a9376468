#pragma once

#include <cstdint>
#include <vector>

#include "aritylab/config.hpp"
#include "aritylab/orbits.hpp"
#include "aritylab/permutation.hpp"
#include "aritylab/relation.hpp"
#include "aritylab/structure.hpp"

namespace aritylab {
namespace oracle {

// Brute-force reference implementations used to validate the engine. They
// share only the structure types, the tuple-rank convention, and
// is_automorphism with the engine; every algorithm here takes a different
// route (permutation filtering instead of stabilizer-chain search, orbit BFS
// instead of union-find, explicit set algebra instead of signatures).

/// Filters all s! permutations through is_automorphism, in lexicographic
/// order. Throws BudgetError when s exceeds caps.aut_size_cap.
std::vector<Permutation> brute_automorphisms(const FiniteStructure& s,
                                             const OracleCaps& caps = {});

/// Orbit partition computed by BFS under the full automorphism list.
OrbitPartition brute_orbit_partition(const FiniteStructure& s,
                                     const std::vector<Permutation>& automorphisms, int m);

/// Set of subsets of M^m as bitmasks, with the partition its Boolean closure
/// induces. The atoms are the membership-vector classes of the seeds, which
/// equal the atoms of the closed family; closing explicitly is exponential in
/// the atom count, so the closed family itself is materialized only on
/// demand and under a budget.
class AlgebraClosure {
public:
    using Bitset = std::vector<std::uint64_t>;

    AlgebraClosure(int m, int size, std::vector<Bitset> seeds);

    int m() const { return m_; }
    int size() const { return size_; }
    std::uint64_t ground_size() const { return ground_; }
    const std::vector<Bitset>& seeds() const { return seeds_; }

    /// Atoms of the Boolean algebra generated by the seeds, canonical ids by
    /// first occurrence in rank order.
    const Partition& atoms() const { return atoms_; }

    /// Explicit complement/intersection closure by worklist, duplicates
    /// removed by bitmask hashing. Throws BudgetError when the family would
    /// exceed the budget. Every member is a union of atoms and every atom is
    /// a member.
    std::vector<Bitset> close(std::size_t budget) const;

private:
    int m_;
    int size_;
    std::uint64_t ground_;
    std::vector<Bitset> seeds_;
    Partition atoms_;
};

/// Seeds the family with every cylindrification of every automorphism orbit
/// of M^k (k <= n) along every index map {1..k} -> {1..m}, plus the equality
/// diagonals {x_i = x_j} when n == 1, and derives the atoms.
AlgebraClosure brute_n_ary_atoms(const FiniteStructure& s, int m, int n,
                                 const OracleCaps& caps = {});

/// 0 for the empty/full relation; otherwise the least n such that r is a
/// union of brute_n_ary_atoms(m, n) classes.
int brute_relation_arity(const FiniteStructure& s, const Relation& r,
                         const OracleCaps& caps = {});

/// Least n <= max_n whose level-n atoms reproduce the orbit partition of M^m
/// for every m <= max_m; -1 when none does. Companion to the engine's
/// theory-arity sweep for pinning reference values.
int brute_theory_arity(const FiniteStructure& s, int max_m, int max_n,
                       const OracleCaps& caps = {});

}  // namespace oracle
}  // namespace aritylab
