#include "tcrit/census.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "json.hpp"
#include "tcrit/intervals.hpp"

namespace tcrit {

namespace {

int pair_count(int m) { return m * (m - 1) / 2; }

void check_census_order(int m) {
    if (m < 1) throw BadParams("order must be >= 1");
    if (m > 8) throw TooLarge("full enumeration capped at order 8 (2^28 codes)");
}

// Upper-triangle pair list in code-bit order.
std::vector<std::pair<int, int>> pair_table(int m) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(pair_count(m)));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    return pairs;
}

std::vector<std::uint64_t> rows_from_code(int m, std::uint64_t code,
                                          const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        if ((code >> p) & 1)
            rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        else
            rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
    }
    return rows;
}

int count_non_critical(const Tournament& t) {
    int k = 0;
    const VertexSet all = t.vertices();
    for (int v = 0; v < t.order(); ++v)
        if (is_indecomposable_within(t, all.without(v))) ++k;
    return k;
}

struct ClassAccum {
    std::uint64_t labeled = 0;
    std::uint64_t rep_code = 0;
    std::optional<Tournament> representative;
};

struct ShardResult {
    std::uint64_t indecomposable = 0;
    std::map<int, std::uint64_t> histogram;
    std::map<int, std::map<CanonicalForm, ClassAccum>> classes;
};

void run_shard(int m, std::uint64_t lo, std::uint64_t hi, bool collect,
               const std::vector<std::pair<int, int>>& pairs, ShardResult& out) {
    for (std::uint64_t code = lo; code < hi; ++code) {
        Tournament t = Tournament::from_rows_unchecked(m, rows_from_code(m, code, pairs));
        if (!is_indecomposable(t)) continue;
        ++out.indecomposable;
        const int k = count_non_critical(t);
        ++out.histogram[k];
        if (collect) {
            auto& acc = out.classes[k][canonical_form(t)];
            if (acc.labeled == 0) {
                acc.rep_code = code;
                acc.representative = t;
            }
            ++acc.labeled;
        }
    }
}

}  // namespace

std::uint64_t labeled_count(int m) {
    check_census_order(m);
    return std::uint64_t{1} << pair_count(m);
}

Tournament tournament_from_code(int m, std::uint64_t code) {
    check_census_order(m);
    if (code >= labeled_count(m)) throw OutOfRange("code out of range");
    return Tournament::from_rows_unchecked(m, rows_from_code(m, code, pair_table(m)));
}

void enumerate_labeled_range(int m, std::uint64_t lo, std::uint64_t hi,
                             const std::function<void(std::uint64_t, const Tournament&)>& visit) {
    check_census_order(m);
    const std::uint64_t total = labeled_count(m);
    if (lo > hi || hi > total) throw OutOfRange("code range out of bounds");
    const auto pairs = pair_table(m);
    for (std::uint64_t code = lo; code < hi; ++code)
        visit(code, Tournament::from_rows_unchecked(m, rows_from_code(m, code, pairs)));
}

void enumerate_labeled(int m, const std::function<void(std::uint64_t, const Tournament&)>& visit) {
    enumerate_labeled_range(m, 0, labeled_count(m), visit);
}

CensusResult run_census(int m, const CensusOptions& opts) {
    check_census_order(m);
    if (opts.jobs < 1 || opts.jobs > 256) throw BadParams("jobs must be in 1..256");

    const std::uint64_t total = labeled_count(m);
    const auto pairs = pair_table(m);
    const int jobs = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(opts.jobs), total));

    std::vector<ShardResult> shards(static_cast<std::size_t>(jobs));
    if (jobs == 1) {
        run_shard(m, 0, total, opts.collect_classes, pairs, shards[0]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int s = 0; s < jobs; ++s) {
            const std::uint64_t lo = total / static_cast<std::uint64_t>(jobs) * static_cast<std::uint64_t>(s) +
                                     std::min<std::uint64_t>(static_cast<std::uint64_t>(s), total % static_cast<std::uint64_t>(jobs));
            const std::uint64_t len = total / static_cast<std::uint64_t>(jobs) +
                                      (static_cast<std::uint64_t>(s) < total % static_cast<std::uint64_t>(jobs) ? 1 : 0);
            workers.emplace_back(run_shard, m, lo, lo + len, opts.collect_classes, std::cref(pairs),
                                 std::ref(shards[static_cast<std::size_t>(s)]));
        }
        for (auto& w : workers) w.join();
    }

    CensusResult r;
    r.order = m;
    r.labeled = total;
    // Shards are merged in ascending code order, so representatives are the
    // smallest-code members and the result is independent of the job count.
    std::map<int, std::map<CanonicalForm, ClassAccum>> classes;
    for (const auto& s : shards) {
        r.indecomposable += s.indecomposable;
        for (const auto& [k, c] : s.histogram) r.histogram[k] += c;
        for (const auto& [k, bykey] : s.classes) {
            for (const auto& [key, acc] : bykey) {
                auto& dst = classes[k][key];
                if (dst.labeled == 0) {
                    dst.rep_code = acc.rep_code;
                    dst.representative = acc.representative;
                }
                dst.labeled += acc.labeled;
            }
        }
    }
    for (const auto& [k, bykey] : classes)
        for (const auto& [key, acc] : bykey)
            r.classes.push_back(CensusClass{k, key, acc.labeled, *acc.representative});
    return r;
}

std::string census_summary(const CensusResult& r) {
    std::string out;
    out += "census order " + std::to_string(r.order) + "\n";
    out += "labeled: " + std::to_string(r.labeled) + "\n";
    out += "indecomposable: " + std::to_string(r.indecomposable) + "\n";
    std::map<int, std::uint64_t> class_counts;
    for (const auto& c : r.classes) ++class_counts[c.k];
    for (const auto& [k, labeled] : r.histogram) {
        out += "k=" + std::to_string(k) + " labeled: " + std::to_string(labeled) + "\n";
        if (auto it = class_counts.find(k); it != class_counts.end())
            out += "k=" + std::to_string(k) + " classes: " + std::to_string(it->second) + "\n";
    }
    return out;
}

std::string census_json(const CensusResult& r) {
    nlohmann::json doc;
    doc["order"] = r.order;
    doc["labeled"] = r.labeled;
    doc["indecomposable"] = r.indecomposable;
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [k, c] : r.histogram) hist[std::to_string(k)] = c;
    doc["histogram"] = hist;
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : r.classes) {
        nlohmann::json rec;
        rec["order"] = r.order;
        rec["k"] = c.k;
        rec["canonical"] = to_hex(c.key);
        rec["labeled"] = c.labeled;
        rec["trn"] = to_trn(c.representative);
        classes.push_back(rec);
    }
    doc["classes"] = classes;
    return doc.dump(2) + "\n";
}

}  // namespace tcrit
