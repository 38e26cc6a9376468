#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aritylab/config.hpp"
#include "aritylab/errors.hpp"

namespace aritylab {

enum class SymbolKind { Constant, Function, Relation };

struct Symbol {
    std::string name;
    SymbolKind kind = SymbolKind::Function;
    int arity = 0;  // constants are 0-ary; functions and relations have arity >= 1
};

/// Ordered symbol list of a finite language. Canonical order is constants,
/// then functions, then relations, each block sorted by name. Names are
/// unique across kinds.
class Signature {
public:
    /// Validates the symbol and inserts it at its canonical position.
    void add(Symbol sym);

    const std::vector<Symbol>& symbols() const { return symbols_; }
    const Symbol* find(std::string_view name) const;

    /// The designated operation of an algebra is the first binary function
    /// symbol in canonical order.
    std::optional<std::string> first_binary_function() const;

    bool operator==(const Signature&) const = default;

private:
    std::vector<Symbol> symbols_;
};

/// Immutable finite structure over universe {0..size-1}.
///
/// Function tables are flat vectors in lexicographic argument order with the
/// first argument most significant. Relation tables are kept as sorted,
/// duplicate-free tuple lists plus a membership mask over argument ranks.
class FiniteStructure {
public:
    struct FunctionTable {
        std::string name;
        int arity = 0;
        std::vector<int> values;  // size^arity entries
    };
    struct RelationTable {
        std::string name;
        int arity = 0;
        std::vector<std::vector<int>> tuples;  // sorted lexicographically
        std::vector<char> membership;          // indexed by tuple rank
    };
    struct ConstantTable {
        std::string name;
        int value = 0;
    };

    /// Validates totality and ranges, sorts symbols and tuples canonically.
    FiniteStructure(std::string name, int size, std::vector<ConstantTable> constants,
                    std::vector<FunctionTable> functions, std::vector<RelationTable> relations);

    const std::string& name() const { return name_; }
    int size() const { return size_; }
    const Signature& signature() const { return signature_; }

    const std::vector<ConstantTable>& constants() const { return constants_; }
    const std::vector<FunctionTable>& functions() const { return functions_; }
    const std::vector<RelationTable>& relations() const { return relations_; }

    const FunctionTable& function(std::string_view name) const;
    const RelationTable& relation(std::string_view name) const;
    int constant(std::string_view name) const;

    /// Table lookup; args.size() must equal f.arity.
    int apply(const FunctionTable& f, std::span<const int> args) const;
    int apply(std::string_view fn, std::span<const int> args) const;

    bool relation_contains(const RelationTable& r, std::span<const int> tuple) const;

    /// Returns a copy with added relations (used by the expansion builders).
    FiniteStructure with_relations(std::string name,
                                   std::vector<RelationTable> extra) const;

    /// Returns the image structure under the relabeling p (tables conjugated).
    FiniteStructure relabeled(const std::vector<int>& images, std::string name) const;

private:
    std::string name_;
    int size_ = 0;
    Signature signature_;
    std::vector<ConstantTable> constants_;
    std::vector<FunctionTable> functions_;
    std::vector<RelationTable> relations_;
};

/// Classification of the designated binary operation plus the range set used
/// by the finite-range expansion.
struct ClassReport {
    /// Every binary function symbol; each one is a total magma operation.
    std::vector<std::string> binary_functions;
    /// The designated operation (first binary function, canonical order).
    std::string op;
    bool is_associative = false;
    /// Witness triple (a, b, c) with (a.b).c != a.(b.c) when non-associative.
    std::optional<std::array<int, 3>> associativity_counterexample;
    std::optional<int> identity;
    bool is_monoid = false;
    bool is_group = false;
    /// With an identity e: {a.b | a,b != e}; without one: all products M.M.
    std::vector<int> range_r;
};

/// Parses the line-oriented structure file format. Throws ParseError with the
/// offending location on malformed input.
FiniteStructure parse_structure(std::string_view text);

/// Canonical serialization: sorted symbols, single-space separation, table
/// rows grouped by leading arguments. parse(serialize(s)) == s, and
/// serialize(parse(t)) is idempotent canonicalization of t.
std::string serialize_structure(const FiniteStructure& s);

/// Exhaustive classification of the designated operation. Throws InputError
/// when the structure has no binary function symbol.
ClassReport classify(const FiniteStructure& s);

enum class FamilyKind { Cyclic, DirectProduct, FlatMonoid, FiniteRangeMonoid };

struct FamilySpec {
    FamilyKind kind = FamilyKind::Cyclic;
    int p1 = 0;  // cyclic n / product a / flat k / finite-range k
    int p2 = 0;  // product b / finite-range r
};

/// Deterministic generators for the bundled families:
///   cyclic(n)                 addition table of Z_n, symbol "mul"
///   direct_product(a, b)      Z_a x Z_b componentwise
///   flat_monoid(k)            identity 0; all products of non-units equal 0
///   finite_range_monoid(k, r) identity 0; non-unit product i.j = 1 + ((i+j) mod r)
FiniteStructure gen_family(const FamilySpec& spec, const RunConfig& config = {});

FiniteStructure gen_cyclic(int n, const RunConfig& config = {});
FiniteStructure gen_direct_product(int a, int b, const RunConfig& config = {});
FiniteStructure gen_flat_monoid(int k, const RunConfig& config = {});
FiniteStructure gen_finite_range_monoid(int k, int r, const RunConfig& config = {});

std::optional<FamilyKind> family_kind_from_string(std::string_view name);
std::string family_kind_name(FamilyKind kind);

}  // namespace aritylab
