#pragma once

#include <string>
#include <vector>

#include "aritylab/structure.hpp"

namespace aritylab {

struct AddedPredicate {
    std::string name;
    int arity = 0;
    std::vector<std::vector<int>> tuples;
};

/// An expansion keeps the base structure and the same universe, adding named
/// predicates; combined reparses as an ordinary structure.
struct Expansion {
    FiniteStructure base;
    std::vector<AddedPredicate> added;
    FiniteStructure combined;
};

/// Adds the unary predicate P_a = {a} for every element. The combined
/// structure has a trivial automorphism group, hence theory arity 1; this
/// realizes the unary reduction with unary predicates where binary symbols
/// were also an option, certified by the engine rather than assumed.
Expansion expand_singletons(const FiniteStructure& s);

enum class RangeVariant {
    /// D_i ranges over products of non-identity elements (requires an
    /// identity; the predicates tile (M \ {e})^2).
    ExcludeIdentity,
    /// D_i ranges over all products (the predicates tile M^2). Forced when no
    /// identity exists.
    IncludeIdentity,
};

/// Finite-range binarization of the designated operation: with range
/// R(M) = {c_1 < ... < c_r}, adds binary D_i = {(a,b) : a.b = c_i} (domain
/// per variant) and unary R_i = {c_i}. Throws InputError without a binary
/// operation; asserts the D_i tile their domain exactly.
Expansion expand_finite_range(const FiniteStructure& s,
                              RangeVariant variant = RangeVariant::ExcludeIdentity);

/// General-algebra variant: R(A) is the union of all function ranges; for
/// each function f_j (1-based, canonical order) of arity n_j and each
/// c_i in R(A), adds the n_j-ary D_i_j = f_j^{-1}(c_i) and the unary
/// R_i = {c_i}. Throws InputError when the structure has no function symbols.
Expansion expand_general_algebra(const FiniteStructure& s);

}  // namespace aritylab
