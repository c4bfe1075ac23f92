#include "tcrit/er_partition.hpp"

#include "tcrit/intervals.hpp"

namespace tcrit {

namespace {

void check_base(const Tournament& t, VertexSet x) {
    if (!x.subset_of(t.vertices())) throw OutOfRange("set has members >= order");
    if (x.size() < 3) throw PreconditionViolated("the base set needs >= 3 vertices");
    if (!is_indecomposable_within(t, x))
        throw PreconditionViolated("the base subtournament must be indecomposable");
}

}  // namespace

ErPartition compute_partition(const Tournament& t, VertexSet x) {
    check_base(t, x);
    ErPartition part;
    const std::uint64_t xb = x.bits();
    for (int v : t.vertices() - x) {
        const std::uint64_t seen = t.out_row(v) & xb;
        const bool uniform = (seen == 0 || seen == xb);
        const VertexSet extended = x.with(v);
        int twin = -1;
        int twin_count = 0;
        for (int u : x) {
            if (is_interval_within(t, extended, VertexSet::single(u).with(v))) {
                twin = u;
                ++twin_count;
            }
        }
        const bool extending = is_indecomposable_within(t, extended);
        // Exclusivity is a theorem about these three tests; verify it rather
        // than trusting the classification.
        const int matches = (uniform ? 1 : 0) + (twin_count > 0 ? 1 : 0) + (extending ? 1 : 0);
        if (matches != 1 || twin_count > 1)
            throw std::logic_error("outside-vertex classification is not exclusive at vertex " +
                                   std::to_string(v));
        if (uniform)
            part.bracket.add(v);
        else if (extending)
            part.ext.add(v);
        else
            part.attached[twin].add(v);
    }
    return part;
}

std::pair<int, int> find_indecomposable_extension_pair(const Tournament& t, VertexSet x) {
    check_base(t, x);
    if (!is_indecomposable(t)) throw PreconditionViolated("the host tournament must be indecomposable");
    const VertexSet outside = t.vertices() - x;
    if (outside.size() < 2) throw PreconditionViolated("need at least two outside vertices");
    const auto out = outside.to_vector();
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = a + 1; b < out.size(); ++b)
            if (is_indecomposable_within(t, x.with(out[a]).with(out[b])))
                return {out[a], out[b]};
    // Guaranteed to exist under the preconditions; reaching this line would
    // disprove the guarantee.
    throw std::logic_error("no indecomposable extension pair found");
}

}  // namespace tcrit
