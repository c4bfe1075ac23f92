#include "tcrit/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "tcrit/errors.hpp"

namespace tcrit {

namespace {

// Iterated neighborhood refinement. Colors are isomorphism-invariant: initial
// color is the out-degree, then vertices are repeatedly re-colored by the
// multisets of out- and in-neighbor colors until stable. Color ids are ranks
// of sorted signatures, so equal structures get equal ids across tournaments.
std::vector<int> stable_colors(const Tournament& t) {
    const int n = t.order();
    std::vector<int> color(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = std::popcount(t.out_row(v));

    using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
    for (int round = 0; round < n; ++round) {
        std::vector<Signature> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> outc, inc;
            for (int w = 0; w < n; ++w) {
                if (w == v) continue;
                if ((t.out_row(v) >> w) & 1)
                    outc.push_back(color[static_cast<std::size_t>(w)]);
                else
                    inc.push_back(color[static_cast<std::size_t>(w)]);
            }
            std::sort(outc.begin(), outc.end());
            std::sort(inc.begin(), inc.end());
            sig[static_cast<std::size_t>(v)] = {color[static_cast<std::size_t>(v)], std::move(outc), std::move(inc)};
        }
        std::map<Signature, int> rank;
        for (const auto& s : sig) rank.emplace(s, 0);
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            const int c = rank[sig[static_cast<std::size_t>(v)]];
            if (c != color[static_cast<std::size_t>(v)]) changed = true;
            color[static_cast<std::size_t>(v)] = c;
        }
        if (!changed) break;
    }
    return color;
}

bool extend_mapping(const Tournament& t1, const Tournament& t2, const std::vector<int>& c1,
                    const std::vector<int>& c2, std::vector<int>& img, std::uint64_t& used, int v) {
    const int n = t1.order();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1) continue;
        if (c1[static_cast<std::size_t>(v)] != c2[static_cast<std::size_t>(w)]) continue;
        bool consistent = true;
        for (int u = 0; u < v; ++u) {
            const bool a1 = (t1.out_row(u) >> v) & 1;
            const bool a2 = (t2.out_row(img[static_cast<std::size_t>(u)]) >> w) & 1;
            if (a1 != a2) {
                consistent = false;
                break;
            }
        }
        if (!consistent) continue;
        img[static_cast<std::size_t>(v)] = w;
        used |= std::uint64_t{1} << w;
        if (extend_mapping(t1, t2, c1, c2, img, used, v + 1)) return true;
        used &= ~(std::uint64_t{1} << w);
    }
    return false;
}

}  // namespace

std::optional<Permutation> find_isomorphism(const Tournament& t1, const Tournament& t2) {
    if (t1.order() != t2.order()) return std::nullopt;
    const int n = t1.order();
    const auto c1 = stable_colors(t1);
    const auto c2 = stable_colors(t2);
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;

    std::vector<int> img(static_cast<std::size_t>(n), -1);
    std::uint64_t used = 0;
    if (!extend_mapping(t1, t2, c1, c2, img, used, 0)) return std::nullopt;
    Permutation p{std::move(img)};
    if (!(t1.relabeled(p) == t2)) throw std::logic_error("isomorphism witness failed verification");
    return p;
}

namespace {

constexpr int kCanonicalCap = 12;

// Canonical rows are kept with column c at bit (n-1-c), so integer comparison
// of a row equals left-to-right comparison of its bit string.
CanonicalForm pack_key(int n, const std::vector<std::uint64_t>& canon_rows) {
    CanonicalForm key;
    key.push_back(static_cast<char>(n));
    const int row_bytes = (n + 7) / 8;
    for (int r = 0; r < n; ++r) {
        for (int b = 0; b < row_bytes; ++b) {
            unsigned byte = 0;
            for (int bit = 0; bit < 8; ++bit) {
                const int col = 8 * b + bit;
                if (col < n && ((canon_rows[static_cast<std::size_t>(r)] >> (n - 1 - col)) & 1))
                    byte |= 1u << (7 - bit);
            }
            key.push_back(static_cast<char>(byte));
        }
    }
    return key;
}

}  // namespace

CanonicalForm canonical_form(const Tournament& t) {
    const int n = t.order();
    if (n > kCanonicalCap) throw TooLarge("canonical form capped at 12 vertices");

    // Ordered-partition refinement. A state is a sequence of cells of
    // still-unplaced vertices occupying the remaining positions in order; all
    // vertices of a cell relate identically to every placed vertex. Placing
    // a candidate from the head cell fixes the next canonical row: its free
    // suffix is minimized regionwise by putting the candidate's in-neighbors
    // before its out-neighbors inside each cell. The frontier keeps every
    // state achieving the minimal row, so ties are resolved by later rows and
    // the greedy minimum is the true lexicographic minimum.
    std::vector<std::uint64_t> canon(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<std::uint64_t>> frontier{{t.vertices().bits()}};
    std::vector<std::vector<std::uint64_t>> next;
    for (int d = 0; d < n; ++d) {
        std::uint64_t prefix = 0;  // columns < d, complement of the column above the diagonal
        for (int a = 0; a < d; ++a)
            if (!((canon[static_cast<std::size_t>(a)] >> (n - 1 - d)) & 1))
                prefix |= std::uint64_t{1} << (n - 1 - a);

        bool have = false;
        std::uint64_t best = 0;
        next.clear();
        std::vector<std::uint64_t> cells;
        for (const auto& state : frontier) {
            std::uint64_t cands = state[0];
            while (cands) {
                const int u = std::countr_zero(cands);
                cands &= cands - 1;
                const std::uint64_t ou = t.out_row(u);
                std::uint64_t row = prefix;
                int pos = d + 1;
                cells.clear();
                bool worse = false;
                for (std::size_t ci = 0; ci < state.size(); ++ci) {
                    std::uint64_t cell = state[ci];
                    if (ci == 0) cell &= ~(std::uint64_t{1} << u);
                    if (!cell) continue;
                    const std::uint64_t cin = cell & ~ou;
                    const std::uint64_t cout = cell & ou;
                    const int si = std::popcount(cin);
                    const int so = std::popcount(cout);
                    if (so)
                        row |= ((std::uint64_t{1} << so) - 1) << (n - pos - si - so);
                    pos += si + so;
                    if (cin) cells.push_back(cin);
                    if (cout) cells.push_back(cout);
                }
                if (have && row > best) worse = true;
                if (!worse) {
                    if (!have || row < best) {
                        have = true;
                        best = row;
                        next.clear();
                    }
                    next.push_back(cells);
                }
            }
        }
        canon[static_cast<std::size_t>(d)] = best;
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier.swap(next);
    }
    return pack_key(n, canon);
}

std::string to_hex(const CanonicalForm& key) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(key.size() * 2);
    for (unsigned char c : key) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

std::vector<IsoClass> group_classes(const std::vector<Tournament>& ts) {
    std::vector<IsoClass> out;
    if (ts.empty()) return out;
    const int n = ts.front().order();
    std::map<CanonicalForm, std::size_t> index;
    for (const auto& t : ts) {
        if (t.order() != n) throw DimensionMismatch("group_classes needs tournaments of equal order");
        CanonicalForm key = canonical_form(t);
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, out.size());
            out.push_back(IsoClass{std::move(key), 1, t});
        } else {
            ++out[it->second].count;
        }
    }
    std::sort(out.begin(), out.end(), [](const IsoClass& a, const IsoClass& b) { return a.key < b.key; });
    return out;
}

}  // namespace tcrit
