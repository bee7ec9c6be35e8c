#pragma once

// Pair posets and monotone chains. For an index set I ⊆ {0..2k-4} with
// 0 ∈ I and |I| = k, the points (a+b, ab) over a <= b in I are ordered by
// coordinatewise dominance. Because x^2 + m*d*x + n*d^2 is strictly
// monotone in (m, n) for any x, d > 0, a dominance chain of length L forces
// at least L distinct products in any set {x + a*d : a ∈ I}. Certifying a
// chain of length >= 3k-3 in every case for k = 4..7 yields the product-set
// lower bound behind the small SP values.

#include "sumprod/numeric.hpp"
#include "sumprod/sets.hpp"

#include <json.hpp>

#include <algorithm>
#include <compare>
#include <sstream>
#include <string>
#include <vector>

namespace sumprod {

struct CaseInput {
    int k = 0;
    std::vector<int> indices; // sorted, 0 first, max <= 2k-4

    bool valid() const {
        if (k < 4 || k > 7) return false;
        if (static_cast<int>(indices.size()) != k) return false;
        if (indices.front() != 0) return false;
        if (indices.back() > 2 * k - 4) return false;
        for (std::size_t i = 1; i < indices.size(); ++i)
            if (indices[i] <= indices[i - 1]) return false;
        return true;
    }
};

struct PairNode {
    int m = 0;
    int n = 0;
    auto operator<=>(const PairNode&) const = default;
};

inline bool dominates_or_equal(const PairNode& lo, const PairNode& hi) {
    return lo.m <= hi.m && lo.n <= hi.n;
}

struct PairPoset {
    CaseInput input;
    std::vector<PairNode> nodes; // lexicographically sorted, distinct
};

struct Chain {
    std::vector<PairNode> path;
    long length() const { return static_cast<long>(path.size()); }
};

struct CaseReport {
    CaseInput input;
    Chain chain;
    long longest = 0;
    bool pass = false;
};

// Distinct (a+b, ab) pairs over a <= b. A pair (sum, product) determines
// {a, b}, so distinct index pairs never collide and the node count is
// always k(k+1)/2; the dedup below is set hygiene, not arithmetic.
inline PairPoset build_pair_poset(const CaseInput& c) {
    if (!c.valid()) throw std::invalid_argument("invalid case");
    PairPoset poset;
    poset.input = c;
    for (std::size_t i = 0; i < c.indices.size(); ++i)
        for (std::size_t j = i; j < c.indices.size(); ++j)
            poset.nodes.push_back({c.indices[i] + c.indices[j], c.indices[i] * c.indices[j]});
    std::sort(poset.nodes.begin(), poset.nodes.end());
    poset.nodes.erase(std::unique(poset.nodes.begin(), poset.nodes.end()), poset.nodes.end());
    return poset;
}

// Maximum-length dominance chain; among all maximum chains, the
// lexicographically least node sequence. Nodes are processed in lex order,
// which extends dominance, so longest-path DP over `up` (longest chain
// starting at each node) is well-founded; the greedy front-to-back pick of
// the least admissible node is then canonical.
inline Chain longest_chain(const PairPoset& poset) {
    const auto& nodes = poset.nodes;
    if (nodes.empty()) throw std::invalid_argument("empty poset");
    const std::size_t n = nodes.size();
    std::vector<long> up(n, 1);
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = i + 1; j < n; ++j)
            if (dominates_or_equal(nodes[i], nodes[j])) up[i] = std::max(up[i], 1 + up[j]);

    long best = *std::max_element(up.begin(), up.end());
    Chain chain;
    long need = best;
    std::size_t from = 0;
    PairNode prev{};
    bool have_prev = false;
    while (need > 0) {
        for (std::size_t i = from; i < n; ++i) {
            if (up[i] != need) continue;
            if (have_prev && !dominates_or_equal(prev, nodes[i])) continue;
            chain.path.push_back(nodes[i]);
            prev = nodes[i];
            have_prev = true;
            from = i + 1;
            break;
        }
        --need;
    }
    return chain;
}

// Independent validator: walks the path and re-tests membership and the
// dominance conditions, with no reference to the DP above.
inline bool validate_chain(const PairPoset& poset, const Chain& chain) {
    if (chain.path.empty()) return false;
    for (const PairNode& node : chain.path)
        if (!std::binary_search(poset.nodes.begin(), poset.nodes.end(), node)) return false;
    for (std::size_t i = 1; i < chain.path.size(); ++i) {
        const PairNode& a = chain.path[i - 1];
        const PairNode& b = chain.path[i];
        if (b.m < a.m || b.n < a.n) return false;
        if (std::max(b.m - a.m, b.n - a.n) <= 0) return false;
    }
    return true;
}

// For each sampled (x, d) with x, d > 0, the values x^2 + m*d*x + n*d^2
// must strictly increase along the chain.
inline bool verify_monotone_embedding(const CaseInput& c,
                                      const Chain& chain,
                                      const std::vector<std::pair<Rat, Rat>>& samples) {
    if (!c.valid()) throw std::invalid_argument("invalid case");
    for (const auto& [x, d] : samples) {
        if (x <= 0 || d <= 0) throw std::invalid_argument("samples must be positive");
        Rat prev;
        bool first = true;
        for (const PairNode& node : chain.path) {
            Rat value = x * x + node.m * d * x + node.n * d * d;
            if (!first && !(value > prev)) return false;
            prev = value;
            first = false;
        }
    }
    return true;
}

namespace detail {

// Subsets of {1..2k-4} of size k-1, in colex order (compare largest
// differing element); each becomes {0} ∪ subset.
inline std::vector<std::vector<int>> colex_subsets(int universe_max, int size) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == size) {
            all.push_back(cur);
            return;
        }
        for (int v = from; v <= universe_max; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(all.begin(), all.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return all;
}

} // namespace detail

// All C(2k-4, k-1) case inputs for one k, in colex rank order.
inline std::vector<CaseInput> case_inputs(int k) {
    if (k < 4 || k > 7) throw std::invalid_argument("invalid case");
    std::vector<CaseInput> cases;
    for (auto& rest : detail::colex_subsets(2 * k - 4, k - 1)) {
        CaseInput c;
        c.k = k;
        c.indices.push_back(0);
        c.indices.insert(c.indices.end(), rest.begin(), rest.end());
        cases.push_back(std::move(c));
    }
    return cases;
}

// Certify longest chain >= 3k-3 for every case; the chain is additionally
// re-checked by the independent validator.
inline std::vector<CaseReport> certify_all(int k) {
    std::vector<CaseReport> reports;
    for (const CaseInput& c : case_inputs(k)) {
        PairPoset poset = build_pair_poset(c);
        CaseReport r;
        r.input = c;
        r.chain = longest_chain(poset);
        r.longest = r.chain.length();
        r.pass = r.longest >= 3 * k - 3 && validate_chain(poset, r.chain);
        reports.push_back(std::move(r));
    }
    return reports;
}

// DOT digraph: covering edges of the dominance order, with consecutive
// chain steps in red. Node and edge ordering is canonical, so output is
// byte-identical across runs.
inline std::string emit_dot(const CaseReport& report) {
    PairPoset poset = build_pair_poset(report.input);
    const auto& nodes = poset.nodes;
    auto name = [](const PairNode& p) {
        std::ostringstream os;
        os << "\"(" << p.m << "," << p.n << ")\"";
        return os.str();
    };

    auto strictly_less = [](const PairNode& a, const PairNode& b) {
        return dominates_or_equal(a, b) && a != b;
    };
    std::vector<std::pair<PairNode, PairNode>> edges;
    for (const PairNode& a : nodes)
        for (const PairNode& b : nodes) {
            if (!strictly_less(a, b)) continue;
            bool covering = true;
            for (const PairNode& w : nodes)
                if (strictly_less(a, w) && strictly_less(w, b)) {
                    covering = false;
                    break;
                }
            if (covering) edges.emplace_back(a, b);
        }
    for (std::size_t i = 1; i < report.chain.path.size(); ++i)
        edges.emplace_back(report.chain.path[i - 1], report.chain.path[i]);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    auto on_chain = [&](const std::pair<PairNode, PairNode>& e) {
        for (std::size_t i = 1; i < report.chain.path.size(); ++i)
            if (report.chain.path[i - 1] == e.first && report.chain.path[i] == e.second) return true;
        return false;
    };

    std::ostringstream os;
    os << "// k=" << report.input.k << " indices=";
    for (std::size_t i = 0; i < report.input.indices.size(); ++i)
        os << (i ? "," : "") << report.input.indices[i];
    os << "\ndigraph chain_case {\n";
    for (const PairNode& p : nodes) os << "  " << name(p) << ";\n";
    for (const auto& e : edges) {
        os << "  " << name(e.first) << " -> " << name(e.second);
        if (on_chain(e)) os << " [color=red]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

inline nlohmann::json case_report_json(const CaseReport& r) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const PairNode& p : build_pair_poset(r.input).nodes) nodes.push_back({p.m, p.n});
    nlohmann::json path = nlohmann::json::array();
    for (const PairNode& p : r.chain.path) path.push_back({p.m, p.n});
    return nlohmann::json{{"k", r.input.k},
                          {"indices", r.input.indices},
                          {"nodes", nodes},
                          {"chain", path},
                          {"longest", r.longest},
                          {"pass", r.pass}};
}

inline nlohmann::json chains_summary_json(int k, const std::vector<CaseReport>& reports) {
    long min_longest = 0;
    bool all_pass = true;
    for (const CaseReport& r : reports) {
        min_longest = min_longest == 0 ? r.longest : std::min(min_longest, r.longest);
        all_pass = all_pass && r.pass;
    }
    return nlohmann::json{{"k", k},
                          {"cases", reports.size()},
                          {"min_longest_chain", min_longest},
                          {"all_pass", all_pass}};
}

} // namespace sumprod
