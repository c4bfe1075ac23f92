#include "tcrit/permutation.hpp"

#include <numeric>

namespace tcrit {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : image_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw NotABijection("image array is not a bijection on {0..n-1}");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw NotABijection("negative size");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

int Permutation::operator()(int i) const {
    if (i < 0 || i >= size()) throw OutOfRange("permutation argument out of range");
    return image_[static_cast<std::size_t>(i)];
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

VertexSet Permutation::map(VertexSet s) const {
    VertexSet out;
    for (int v : s) out.add((*this)(v));
    return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw NotABijection("size mismatch in composition");
    std::vector<int> img(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) img[static_cast<std::size_t>(i)] = p(q(i));
    return Permutation(std::move(img));
}

}  // namespace tcrit
