#include "tcrit/tournament.hpp"

#include <fstream>
#include <sstream>

namespace tcrit {

namespace {

void check_order(int n) {
    if (n < 1) throw DimensionMismatch("tournament needs at least one vertex");
    if (n > Tournament::kMaxOrder) throw TooLarge("order exceeds the 64-vertex cap");
}

void validate_rows(int n, const std::vector<std::uint64_t>& rows) {
    for (int i = 0; i < n; ++i) {
        if ((rows[static_cast<std::size_t>(i)] >> i) & 1)
            throw NotATournament("diagonal arc at vertex " + std::to_string(i));
        for (int j = i + 1; j < n; ++j) {
            const int fwd = (rows[static_cast<std::size_t>(i)] >> j) & 1;
            const int bwd = (rows[static_cast<std::size_t>(j)] >> i) & 1;
            if (fwd + bwd != 1)
                throw NotATournament("pair {" + std::to_string(i) + "," + std::to_string(j) +
                                     "} is not oriented exactly one way");
        }
    }
}

}  // namespace

Tournament Tournament::from_matrix(const std::vector<std::vector<bool>>& m) {
    const int n = static_cast<int>(m.size());
    check_order(n);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const auto& r = m[static_cast<std::size_t>(i)];
        if (static_cast<int>(r.size()) != n) throw DimensionMismatch("matrix is not square");
        for (int j = 0; j < n; ++j)
            if (r[static_cast<std::size_t>(j)]) rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    }
    validate_rows(n, rows);
    return Tournament(n, std::move(rows));
}

Tournament Tournament::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    check_order(n);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (auto [i, j] : arcs) {
        if (i < 0 || i >= n || j < 0 || j >= n) throw OutOfRange("arc endpoint out of range");
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    }
    validate_rows(n, rows);
    return Tournament(n, std::move(rows));
}

Tournament Tournament::from_rows_unchecked(int n, std::vector<std::uint64_t> rows) {
    return Tournament(n, std::move(rows));
}

VertexSet Tournament::out_set(int v) const {
    check_vertex(v);
    return VertexSet::from_bits(rows_[static_cast<std::size_t>(v)]);
}

VertexSet Tournament::in_set(int v) const {
    check_vertex(v);
    return (vertices() - out_set(v)).without(v);
}

Tournament Tournament::dual() const {
    const std::uint64_t full = vertices().bits();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
        rows[static_cast<std::size_t>(i)] = full & ~rows_[static_cast<std::size_t>(i)] & ~(std::uint64_t{1} << i);
    return Tournament(n_, std::move(rows));
}

Tournament Tournament::induced(VertexSet x) const {
    if (!x.subset_of(vertices())) throw OutOfRange("induced set has members >= order");
    const auto members = x.to_vector();
    const int m = static_cast<int>(members.size());
    if (m < 1) throw DimensionMismatch("induced set is empty");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m; ++a) {
        const std::uint64_t orig = rows_[static_cast<std::size_t>(members[static_cast<std::size_t>(a)])];
        for (int b = 0; b < m; ++b)
            if ((orig >> members[static_cast<std::size_t>(b)]) & 1)
                rows[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    }
    return Tournament(m, std::move(rows));
}

Tournament Tournament::relabeled(const Permutation& p) const {
    if (p.size() != n_) throw NotABijection("permutation size differs from order");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        std::uint64_t r = rows_[static_cast<std::size_t>(i)];
        std::uint64_t mapped = 0;
        while (r) {
            const int j = std::countr_zero(r);
            r &= r - 1;
            mapped |= std::uint64_t{1} << p(j);
        }
        rows[static_cast<std::size_t>(p(i))] = mapped;
    }
    return Tournament(n_, std::move(rows));
}

std::string to_trn(const Tournament& t) {
    std::string out = "trn 1\n" + std::to_string(t.order()) + "\n";
    for (int i = 0; i < t.order(); ++i) {
        for (int j = 0; j < t.order(); ++j) out += ((t.out_row(i) >> j) & 1) ? '1' : '0';
        out += '\n';
    }
    return out;
}

Tournament parse_trn(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "trn 1") throw ParseError("missing 'trn 1' header");
    if (!std::getline(in, line)) throw ParseError("missing order line");
    int n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoi(line, &pos);
        if (pos != line.size()) throw ParseError("trailing characters after order");
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("order line is not a decimal integer");
    }
    if (n < 1) throw ParseError("order must be >= 1");
    if (n > Tournament::kMaxOrder) throw ParseError("order exceeds the 64-vertex cap");
    std::vector<std::vector<bool>> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line)) throw ParseError("missing matrix row " + std::to_string(i));
        if (static_cast<int>(line.size()) != n)
            throw ParseError("row " + std::to_string(i) + " has wrong length");
        auto& row = m[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            const char c = line[static_cast<std::size_t>(j)];
            if (c != '0' && c != '1') throw ParseError("row characters must be '0' or '1'");
            row[static_cast<std::size_t>(j)] = (c == '1');
        }
    }
    while (std::getline(in, line))
        if (!line.empty()) throw ParseError("trailing content after the matrix");
    try {
        return Tournament::from_matrix(m);
    } catch (const Error& e) {
        throw ParseError(std::string("not a tournament: ") + e.what());
    }
}

Tournament read_trn_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path);
    return parse_trn(buf.str());
}

void write_trn_file(const std::string& path, const Tournament& t) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << to_trn(t);
    if (!out) throw IoError("write failure on " + path);
}

std::string to_dot(const Tournament& t) {
    std::string out = "digraph tournament {\n";
    for (int i = 0; i < t.order(); ++i) out += "  " + std::to_string(i) + ";\n";
    for (int i = 0; i < t.order(); ++i)
        for (int j = 0; j < t.order(); ++j)
            if (j != i && ((t.out_row(i) >> j) & 1))
                out += "  " + std::to_string(i) + " -> " + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace tcrit
