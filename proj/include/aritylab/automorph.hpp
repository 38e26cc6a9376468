#pragma once

#include <cstdint>
#include <vector>

#include "aritylab/config.hpp"
#include "aritylab/permutation.hpp"
#include "aritylab/structure.hpp"

namespace aritylab {

/// Automorphism group of a finite structure, presented as the non-identity
/// transversal elements of a stabilizer chain over the fixed base 0,1,...,s-1.
///
/// chain_orders[i] is the orbit size of point i in the stabilizer of
/// 0..i-1; the group order is their product. The identity group is
/// represented by an empty generator list.
struct AutGroup {
    std::vector<Permutation> generators;
    std::vector<int> base;
    std::vector<std::uint64_t> chain_orders;
    std::uint64_t order = 1;
};

/// True iff p preserves every function table, relation table, and constant.
/// Throws InputError when p.degree() != s.
bool is_automorphism(const Permutation& p, const FiniteStructure& s);

/// Deterministic stabilizer-chain search: base 0,1,...,s-1; at each chain
/// extension the lexicographically least automorphism realizing the new base
/// image is chosen. Throws BudgetError when s exceeds config.aut_size_cap.
AutGroup automorphisms(const FiniteStructure& s, const RunConfig& config = {});

}  // namespace aritylab
