#pragma once

#include <compare>
#include <string>
#include <vector>

#include "aritylab/errors.hpp"

namespace aritylab {

/// Bijection on {0..n-1}; images()[i] is the image of point i.
class Permutation {
public:
    /// Validates bijectivity.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;

    /// (a.compose(b))(x) == a(b(x)).
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
    /// Lexicographic order on image vectors.
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Disjoint-cycle rendering, fixed points omitted; "()" for the identity.
std::string cycle_notation(const Permutation& p);

}  // namespace aritylab
