#include "tcrit/intervals.hpp"

namespace tcrit {

namespace {

void check_subset(const Tournament& t, VertexSet x, const char* what) {
    if (!x.subset_of(t.vertices())) throw OutOfRange(std::string(what) + ": members out of range");
}

}  // namespace

bool arcs_equivalent(const Tournament& t, std::pair<int, int> a, std::pair<int, int> b) {
    if (a.first == a.second || b.first == b.second)
        throw DegeneratePair("arc equivalence needs couples of distinct vertices");
    const bool fa = t.arc(a.first, a.second);
    const bool fb = t.arc(b.first, b.second);
    return a == b || fa == fb;
}

bool is_interval_within(const Tournament& t, VertexSet universe, VertexSet x) {
    check_subset(t, universe, "is_interval");
    if (!x.subset_of(universe)) throw OutOfRange("is_interval: set not inside universe");
    const std::uint64_t xb = x.bits();
    std::uint64_t outside = universe.bits() & ~xb;
    while (outside) {
        const int z = std::countr_zero(outside);
        outside &= outside - 1;
        const std::uint64_t seen = t.out_row(z) & xb;
        if (seen != 0 && seen != xb) return false;
    }
    return true;
}

bool is_interval(const Tournament& t, VertexSet x) { return is_interval_within(t, t.vertices(), x); }

VertexSet interval_closure_within(const Tournament& t, VertexSet universe, VertexSet seed) {
    check_subset(t, universe, "interval_closure");
    if (!seed.subset_of(universe)) throw OutOfRange("interval_closure: seed not inside universe");
    if (seed.size() < 2) throw PreconditionViolated("interval_closure: seed needs >= 2 members");
    std::uint64_t x = seed.bits();
    bool grew = true;
    while (grew) {
        grew = false;
        std::uint64_t outside = universe.bits() & ~x;
        while (outside) {
            const int z = std::countr_zero(outside);
            outside &= outside - 1;
            const std::uint64_t seen = t.out_row(z) & x;
            if (seen != 0 && seen != x) {  // z distinguishes two members
                x |= std::uint64_t{1} << z;
                grew = true;
            }
        }
    }
    return VertexSet::from_bits(x);
}

VertexSet interval_closure(const Tournament& t, VertexSet seed) {
    return interval_closure_within(t, t.vertices(), seed);
}

std::optional<VertexSet> find_nontrivial_interval_within(const Tournament& t, VertexSet universe) {
    check_subset(t, universe, "find_nontrivial_interval");
    if (universe.size() <= 2) return std::nullopt;
    const auto members = universe.to_vector();
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            const VertexSet seed = VertexSet::single(members[a]) | VertexSet::single(members[b]);
            const VertexSet closed = interval_closure_within(t, universe, seed);
            if (closed != universe) return closed;
        }
    }
    return std::nullopt;
}

std::optional<VertexSet> find_nontrivial_interval(const Tournament& t) {
    return find_nontrivial_interval_within(t, t.vertices());
}

bool is_indecomposable_within(const Tournament& t, VertexSet universe) {
    return !find_nontrivial_interval_within(t, universe).has_value();
}

bool is_indecomposable(const Tournament& t) { return is_indecomposable_within(t, t.vertices()); }

std::vector<VertexSet> enumerate_intervals(const Tournament& t) {
    if (t.order() > 20) throw TooLarge("subset scan capped at 20 vertices");
    std::vector<VertexSet> out;
    const std::uint64_t full = t.vertices().bits();
    for (std::uint64_t x = 0; x <= full; ++x)
        if (is_interval(t, VertexSet::from_bits(x))) out.push_back(VertexSet::from_bits(x));
    return out;
}

}  // namespace tcrit
