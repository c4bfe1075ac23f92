#include "tcrit/families.hpp"

#include <numeric>

namespace tcrit {

namespace {

using Arcs = std::vector<std::pair<int, int>>;

void chain_arcs(Arcs& arcs, const std::vector<int>& labels) {
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = a + 1; b < labels.size(); ++b) arcs.emplace_back(labels[a], labels[b]);
}

// Chain with the arcs between even labels reversed (the U pattern, literal
// labels).
void u_pattern_arcs(Arcs& arcs, const std::vector<int>& labels) {
    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a + 1; b < labels.size(); ++b) {
            const int i = labels[a], j = labels[b];
            if (i % 2 == 0 && j % 2 == 0)
                arcs.emplace_back(j, i);
            else
                arcs.emplace_back(i, j);
        }
    }
}

// Chain on chain_labels plus a distinguished vertex dominating exactly the
// even-position chain elements (the V pattern).
void v_pattern_arcs(Arcs& arcs, const std::vector<int>& chain_labels, int special) {
    chain_arcs(arcs, chain_labels);
    for (std::size_t p = 0; p < chain_labels.size(); ++p) {
        if (p % 2 == 0)
            arcs.emplace_back(special, chain_labels[p]);
        else
            arcs.emplace_back(chain_labels[p], special);
    }
}

void check_tuv(int n) {
    if (n < 1) throw BadParams("order parameter must be >= 1");
    if (2 * n + 1 > Tournament::kMaxOrder) throw TooLarge("order exceeds the 64-vertex cap");
}

void check_efgh(int n, int k) {
    if (n < 3 || k < 1 || k > n - 2)
        throw BadParams("need n >= 3 and 1 <= k <= n-2, got n=" + std::to_string(n) +
                        " k=" + std::to_string(k));
    if (2 * n + 1 > Tournament::kMaxOrder) throw TooLarge("order exceeds the 64-vertex cap");
}

std::vector<int> range(int lo, int hi) {  // [lo, hi)
    std::vector<int> v(static_cast<std::size_t>(hi - lo));
    std::iota(v.begin(), v.end(), lo);
    return v;
}

enum class CrossRule { even_pairs, top_to_even, single_arc };

Tournament build_efgh(Family fam, int n, int k) {
    check_efgh(n, k);
    const int order = 2 * n + 1;
    const int a = 2 * k + 1;
    const auto ins = range(0, 2 * k + 1);
    const auto outs = range(2 * k + 2, 2 * n + 1);
    Arcs arcs;

    switch (fam) {
        case Family::E: chain_arcs(arcs, ins); break;
        case Family::F:
        case Family::G: u_pattern_arcs(arcs, ins); break;
        case Family::H: v_pattern_arcs(arcs, range(0, 2 * k), 2 * k); break;
        default: throw BadParams("not a base family");
    }
    if (fam == Family::E || fam == Family::F)
        chain_arcs(arcs, outs);
    else
        v_pattern_arcs(arcs, range(2 * k + 2, 2 * n), 2 * n);

    for (int y : ins) arcs.emplace_back(y, a);
    for (int x : outs) arcs.emplace_back(a, x);

    const CrossRule rule = (fam == Family::E || fam == Family::F) ? CrossRule::even_pairs
                           : fam == Family::G                     ? CrossRule::top_to_even
                                                                  : CrossRule::single_arc;
    for (int x : outs) {
        for (int y : ins) {
            bool forward = false;
            switch (rule) {
                case CrossRule::even_pairs: forward = (x % 2 == 0 && y % 2 == 0); break;
                case CrossRule::top_to_even: forward = (x == 2 * n && y % 2 == 0); break;
                case CrossRule::single_arc: forward = (x == 2 * n && y == 2 * k); break;
            }
            if (forward)
                arcs.emplace_back(x, y);
            else
                arcs.emplace_back(y, x);
        }
    }
    return Tournament::from_arcs(order, arcs);
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::L: return "L";
        case Family::T: return "T";
        case Family::U: return "U";
        case Family::V: return "V";
        case Family::E: return "E";
        case Family::F: return "F";
        case Family::Fdual: return "Fdual";
        case Family::G: return "G";
        case Family::Gdual: return "Gdual";
        case Family::H: return "H";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::L, Family::T, Family::U, Family::V, Family::E, Family::F,
                     Family::Fdual, Family::G, Family::Gdual, Family::H})
        if (name == family_name(f)) return f;
    throw BadParams("unknown family tag '" + name + "'");
}

bool family_takes_offset(Family f) {
    switch (f) {
        case Family::E:
        case Family::F:
        case Family::Fdual:
        case Family::G:
        case Family::Gdual:
        case Family::H: return true;
        default: return false;
    }
}

Tournament chain(int m) {
    if (m < 1) throw BadParams("chain length must be >= 1");
    if (m > Tournament::kMaxOrder) throw TooLarge("order exceeds the 64-vertex cap");
    Arcs arcs;
    chain_arcs(arcs, range(0, m));
    return Tournament::from_arcs(m, arcs);
}

Tournament t_tournament(int n) {
    check_tuv(n);
    const int order = 2 * n + 1;
    Arcs arcs;
    for (int i = 0; i < order; ++i)
        for (int d = 1; d <= n; ++d) arcs.emplace_back(i, (i + d) % order);
    return Tournament::from_arcs(order, arcs);
}

Tournament u_tournament(int n) {
    check_tuv(n);
    Arcs arcs;
    u_pattern_arcs(arcs, range(0, 2 * n + 1));
    return Tournament::from_arcs(2 * n + 1, arcs);
}

Tournament v_tournament(int n) {
    check_tuv(n);
    Arcs arcs;
    v_pattern_arcs(arcs, range(0, 2 * n), 2 * n);
    return Tournament::from_arcs(2 * n + 1, arcs);
}

Tournament e_tournament(int n, int k) { return build_efgh(Family::E, n, k); }
Tournament f_tournament(int n, int k) { return build_efgh(Family::F, n, k); }
Tournament g_tournament(int n, int k) { return build_efgh(Family::G, n, k); }
Tournament h_tournament(int n, int k) { return build_efgh(Family::H, n, k); }

Tournament make_family(Family f, int n, int k) {
    switch (f) {
        case Family::L: return chain(n);
        case Family::T: return t_tournament(n);
        case Family::U: return u_tournament(n);
        case Family::V: return v_tournament(n);
        case Family::E: return e_tournament(n, k);
        case Family::F: return f_tournament(n, k);
        case Family::Fdual: return f_tournament(n, k).dual();
        case Family::G: return g_tournament(n, k);
        case Family::Gdual: return g_tournament(n, k).dual();
        case Family::H: return h_tournament(n, k);
    }
    throw BadParams("unknown family");
}

Permutation dual_isomorphism(Family f, int n, int k) {
    check_efgh(n, k);
    std::vector<int> img(static_cast<std::size_t>(2 * n + 1));
    if (f == Family::E) {
        for (int q = 0; q <= 2 * n; ++q) img[static_cast<std::size_t>(q)] = 2 * n - q;
    } else if (f == Family::H) {
        for (int q = 0; q <= 2 * n; ++q) img[static_cast<std::size_t>(q)] = 2 * n - q - 1;
        img[static_cast<std::size_t>(2 * n)] = 2 * (n - k - 1);
        img[static_cast<std::size_t>(2 * k)] = 2 * n;
        img[static_cast<std::size_t>(2 * k + 1)] = 2 * (n - k - 1) + 1;
    } else {
        throw BadParams("explicit dual isomorphism is available for E and H only");
    }
    return Permutation(std::move(img));
}

std::string FamilyMember::name() const {
    return std::string(family_name(family)) + "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

std::vector<FamilyMember> minus_one_critical_members(int n) {
    if (n < 3) throw BadParams("members exist for n >= 3 only");
    std::vector<FamilyMember> out;
    out.reserve(static_cast<std::size_t>(6 * (n - 2)));
    for (int k = 1; k <= n - 2; ++k)
        for (Family f : {Family::E, Family::F, Family::Fdual, Family::G, Family::Gdual, Family::H})
            out.push_back(FamilyMember{f, n, k, make_family(f, n, k)});
    return out;
}

}  // namespace tcrit
