#pragma once

#include <vector>

#include "tcrit/errors.hpp"
#include "tcrit/vertex_set.hpp"

namespace tcrit {

/// Bijection on {0..n-1}, stored as its image array.
class Permutation {
public:
    /// Validates that `image` is a bijection; throws NotABijection otherwise.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const;
    const std::vector<int>& image() const { return image_; }

    Permutation inverse() const;
    VertexSet map(VertexSet s) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

/// compose(p, q)(i) = p(q(i)); q is applied first.
Permutation compose(const Permutation& p, const Permutation& q);

}  // namespace tcrit
