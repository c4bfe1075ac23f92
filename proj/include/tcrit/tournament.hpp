#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcrit/errors.hpp"
#include "tcrit/permutation.hpp"
#include "tcrit/vertex_set.hpp"

namespace tcrit {

/// Tournament on vertices {0..n-1}: exactly one arc between each pair of
/// distinct vertices. Dominance is stored as one bit-row per vertex
/// (bit j of row i set = arc i -> j), so uniformity tests against a vertex
/// subset are single-word operations.
///
/// Immutable after construction; n is capped at 64 (one machine word per row).
class Tournament {
public:
    static constexpr int kMaxOrder = 64;

    /// Builds from a full boolean dominance matrix. Rejects non-square input
    /// (DimensionMismatch) and digraphs that are not tournaments
    /// (NotATournament: true diagonal, or a pair with both/neither arc).
    static Tournament from_matrix(const std::vector<std::vector<bool>>& rows);

    /// Builds from an arc list; every unordered pair must be covered exactly once.
    static Tournament from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

    /// Trusted constructor for pre-validated dominance rows (hot enumeration
    /// paths). No invariant checks.
    static Tournament from_rows_unchecked(int n, std::vector<std::uint64_t> rows);

    int order() const { return n_; }

    bool arc(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        return (rows_[static_cast<std::size_t>(i)] >> j) & 1;
    }

    /// Raw dominance row: bit j = arc v -> j. No range check.
    std::uint64_t out_row(int v) const { return rows_[static_cast<std::size_t>(v)]; }

    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet out_set(int v) const;
    VertexSet in_set(int v) const;

    /// Every arc reversed. Involution.
    Tournament dual() const;

    /// Subtournament on X, relabeled 0..|X|-1 in increasing order of original
    /// labels; the label map is X.to_vector() (position -> original label).
    Tournament induced(VertexSet x) const;

    /// Transport along p: result has arc (p(i), p(j)) iff *this has arc (i, j).
    Tournament relabeled(const Permutation& p) const;

    friend bool operator==(const Tournament&, const Tournament&) = default;

private:
    Tournament(int n, std::vector<std::uint64_t> rows) : n_(n), rows_(std::move(rows)) {}

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw OutOfRange("vertex index out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

// --- text format ---
//
// `.trn`, bit-exact:
//   line 1: "trn 1"                      (format tag, version)
//   line 2: decimal n
//   lines 3..n+2: n characters '0'/'1', line i holding dominance row i
//                 (character j = arc i -> j), diagonal '0'.

std::string to_trn(const Tournament& t);
Tournament parse_trn(std::string_view text);

Tournament read_trn_file(const std::string& path);   // ParseError / IoError
void write_trn_file(const std::string& path, const Tournament& t);

/// Graphviz digraph with one directed edge per arc.
std::string to_dot(const Tournament& t);

}  // namespace tcrit
