#pragma once

// Structure detectors for small-doubling sets: shortest arithmetic and
// geometric covers, decompositions into two progressions with a shared
// step/ratio, and exhaustive small-range verification of the 3k-4 cover
// bound on both the sum and product side.

#include "sumprod/factor.hpp"
#include "sumprod/numeric.hpp"
#include "sumprod/sets.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

namespace sumprod {

namespace detail {

template <typename T>
T exact_gcd(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, Int>)
        return int_gcd(a, b);
    else
        return rat_gcd(a, b);
}

// (value - base) / step, which must be a nonnegative integer.
template <typename T>
long progression_index(const T& value, const T& base, const T& step) {
    if constexpr (std::is_same_v<T, Int>) {
        Int diff = value - base;
        if (!mpz_divisible_p(diff.get_mpz_t(), step.get_mpz_t()))
            throw std::domain_error("value not on progression");
        return to_long(Int(diff / step));
    } else {
        return rat_exact_quotient(value - base, step);
    }
}

} // namespace detail

// Shortest arithmetic progression containing a set: base + i*step for
// i in [0, length), with `indices` marking where the set sits. Tight at
// both ends; step is the gcd of the differences.
template <typename T>
struct ApCoverT {
    T base;
    T step;
    long length = 0;
    std::vector<long> indices;
};

using ApCover = ApCoverT<Int>;
using RatApCover = ApCoverT<Rat>;

// Core form over plain values (zero and negatives are fine; only the
// IntSet/RatSet wrappers insist on positivity).
template <typename T>
ApCoverT<T> ap_cover_values(std::vector<T> vals) {
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    if (vals.size() < 2) throw std::invalid_argument("cover undefined");
    ApCoverT<T> cover;
    cover.base = vals.front();
    T d = vals[1] - vals[0];
    for (std::size_t i = 2; i < vals.size(); ++i) d = detail::exact_gcd(d, T(vals[i] - vals[0]));
    cover.step = d;
    cover.length = detail::progression_index(vals.back(), cover.base, d) + 1;
    cover.indices.reserve(vals.size());
    for (const T& v : vals) cover.indices.push_back(detail::progression_index(v, cover.base, d));
    return cover;
}

template <typename T>
ApCoverT<T> ap_cover(const BasicSet<T>& a) {
    if (a.size() < 2) throw std::invalid_argument("cover undefined");
    return ap_cover_values(a.elements());
}

// Shortest geometric progression lead * r^i with rational r > 1.
struct GpCover {
    Rat lead;
    Rat ratio;
    long length = 0;
    std::vector<long> indices;
};

// Map elements to exponent vectors of x_i/x_0; the set lies on a geometric
// progression exactly when those vectors are integer multiples of one
// primitive direction. The largest common multiplier gives the largest
// ratio, hence the shortest cover.
inline std::optional<GpCover> gp_cover(const RatSet& a) {
    if (a.size() < 2) throw std::invalid_argument("cover undefined");
    const auto& vals = a.elements();
    std::vector<ExponentVector> u;
    u.reserve(vals.size() - 1);
    for (std::size_t i = 1; i < vals.size(); ++i) u.push_back(factor_rat(vals[i] / vals[0]));

    ExponentVector dir = exvec_primitive(u.front());
    std::vector<long> t(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        auto mult = exvec_multiple_of(u[i], dir);
        if (!mult) return std::nullopt;
        t[i] = *mult; // positive: vals sorted ascending and value(dir) > 1
    }
    long g = 0;
    for (long ti : t) g = to_long(int_gcd(Int(g), Int(ti)));

    GpCover cover;
    cover.lead = vals[0];
    ExponentVector w;
    for (const auto& [p, e] : dir) w[p] = e * g;
    cover.ratio = exvec_value(w);
    cover.indices.push_back(0);
    for (long ti : t) cover.indices.push_back(ti / g);
    cover.length = cover.indices.back() + 1;
    return cover;
}

// A = first ∪ second, two arithmetic progressions with one common step.
struct TwoApDecomposition {
    ApCover first;
    ApCover second;
    Int step;
    bool disjoint = true;
};

struct TwoGpDecomposition {
    GpCover first;
    GpCover second;
    Rat ratio;
    bool disjoint = true;
};

namespace detail {

// Common difference if the sorted values form an AP (>= 2 elements).
inline std::optional<Int> ap_step_of(const std::vector<Int>& part) {
    Int d = part[1] - part[0];
    for (std::size_t i = 2; i < part.size(); ++i)
        if (part[i] - part[i - 1] != d) return std::nullopt;
    return d;
}

inline std::optional<Rat> gp_ratio_of(const std::vector<Rat>& part) {
    Rat r = part[1] / part[0];
    for (std::size_t i = 2; i < part.size(); ++i)
        if (part[i] / part[i - 1] != r) return std::nullopt;
    return r;
}

template <typename S>
struct SplitCandidate {
    bool genuine = false; // both parts have >= 2 elements
    S step;
    std::vector<S> first;
    std::vector<S> second;
};

// Preference order: genuine two-piece splits first, then least step/ratio,
// then lexicographically least first part. Total length and first lead are
// constant across bipartitions, so they never discriminate.
template <typename S>
bool better_split(const SplitCandidate<S>& a, const SplitCandidate<S>& b) {
    if (a.genuine != b.genuine) return a.genuine;
    if (a.step != b.step) return a.step < b.step;
    return a.first < b.first;
}

template <typename S>
std::optional<SplitCandidate<S>> best_common_step_split(
    const std::vector<S>& elems,
    auto&& step_of,
    auto&& pair_step) {
    const std::size_t k = elems.size();
    std::optional<SplitCandidate<S>> best;
    // Bipartitions with elems[0] pinned to the first part.
    for (std::uint64_t mask = 0; mask < (1ull << (k - 1)); ++mask) {
        std::vector<S> first{elems[0]}, second;
        for (std::size_t i = 1; i < k; ++i)
            (mask >> (i - 1) & 1 ? first : second).push_back(elems[i]);
        if (second.empty()) continue;

        std::optional<S> d1 = first.size() >= 2 ? step_of(first) : std::nullopt;
        std::optional<S> d2 = second.size() >= 2 ? step_of(second) : std::nullopt;
        if (first.size() >= 2 && !d1) continue;
        if (second.size() >= 2 && !d2) continue;
        if (d1 && d2 && *d1 != *d2) continue;

        SplitCandidate<S> cand;
        cand.genuine = first.size() >= 2 && second.size() >= 2;
        if (d1)
            cand.step = *d1;
        else if (d2)
            cand.step = *d2;
        else
            cand.step = pair_step(elems[0], second[0]); // two singletons (k == 2)
        cand.first = std::move(first);
        cand.second = std::move(second);
        if (!best || better_split(cand, *best)) best = std::move(cand);
    }
    return best;
}

} // namespace detail

// Decomposition into two APs sharing a step, or nullopt if none exists.
// A singleton part adapts to the other progression's step.
inline std::optional<TwoApDecomposition> decompose_two_aps(const IntSet& a) {
    if (a.size() < 2) throw std::invalid_argument("decomposition undefined");
    if (a.size() > 24) throw std::invalid_argument("set too large for bipartition scan");
    auto best = detail::best_common_step_split<Int>(
        a.elements(), [](const std::vector<Int>& p) { return detail::ap_step_of(p); },
        [](const Int& lo, const Int& hi) { return Int(hi - lo); });
    if (!best) return std::nullopt;
    auto as_cover = [&](const std::vector<Int>& part) {
        ApCover c;
        c.base = part.front();
        c.step = best->step;
        c.length = static_cast<long>(part.size());
        for (long i = 0; i < c.length; ++i) c.indices.push_back(i);
        return c;
    };
    TwoApDecomposition out{as_cover(best->first), as_cover(best->second), best->step, true};
    return out;
}

// Same for geometric progressions with a common ratio. Rejects ratio <= 1,
// which cannot occur for sorted parts but guards the singleton adaption.
inline std::optional<TwoGpDecomposition> decompose_two_gps(const RatSet& a) {
    if (a.size() < 2) throw std::invalid_argument("decomposition undefined");
    if (a.size() > 24) throw std::invalid_argument("set too large for bipartition scan");
    auto best = detail::best_common_step_split<Rat>(
        a.elements(), [](const std::vector<Rat>& p) { return detail::gp_ratio_of(p); },
        [](const Rat& lo, const Rat& hi) { return Rat(hi / lo); });
    if (!best || best->step <= 1) return std::nullopt;
    auto as_cover = [&](const std::vector<Rat>& part) {
        GpCover c;
        c.lead = part.front();
        c.ratio = best->step;
        c.length = static_cast<long>(part.size());
        for (long i = 0; i < c.length; ++i) c.indices.push_back(i);
        return c;
    };
    TwoGpDecomposition out{as_cover(best->first), as_cover(best->second), best->step, true};
    return out;
}

// ---------------------------------------------------------------------------
// Exhaustive small-range checks of the 3k-4 cover bound.

struct FreimanReport {
    int k = 0;
    int N = 0;
    long long sets_scanned = 0;
    long long hypothesis_hits = 0;
    std::vector<std::vector<long>> violations;
    bool complete = true;
};

inline nlohmann::json to_json(const FreimanReport& r) {
    return nlohmann::json{{"k", r.k},
                          {"N", r.N},
                          {"sets_scanned", r.sets_scanned},
                          {"hypothesis_hits", r.hypothesis_hits},
                          {"violations", r.violations},
                          {"complete", r.complete}};
}

namespace detail {

inline int popcount128(std::uint64_t lo, std::uint64_t hi) {
    return std::popcount(lo) + std::popcount(hi);
}

// Visit k-subsets of {from..N} extending `prefix`, calling f on each.
template <typename F>
void for_each_combination(std::vector<int>& prefix, int from, int N, int k, F&& f) {
    if (static_cast<int>(prefix.size()) == k) {
        f(prefix);
        return;
    }
    int need = k - static_cast<int>(prefix.size());
    for (int v = from; v <= N - need + 1; ++v) {
        prefix.push_back(v);
        for_each_combination(prefix, v + 1, N, k, f);
        prefix.pop_back();
    }
}

} // namespace detail

// Every A ⊆ {0..N} with |A| = k, min 0, gcd of differences 1: whenever
// |A+A| = 2k-1+b <= 3k-4, the interval cover must have length <= k+b.
// A violation would disprove a theorem, so the expected count is zero.
inline FreimanReport check_freiman_3k4_sum(int k, int N, long long budget = -1, int threads = 1) {
    if (k < 4) throw std::invalid_argument("k must be at least 4");
    // {0..N} holds N+1 values, so N = k-1 admits exactly the full interval.
    if (N < k - 1) throw std::invalid_argument("N must be at least k-1");
    if (N > 63) throw std::invalid_argument("N too large (sum masks support N <= 63)");

    FreimanReport report;
    report.k = k;
    report.N = N;

    std::atomic<long long> scanned{0};
    std::atomic<bool> over_budget{false};
    std::vector<std::vector<std::vector<long>>> shard_violations(static_cast<std::size_t>(N) + 1);
    std::atomic<long long> hits{0};

    // Shards by the smallest nonzero element; each is independent.
    auto run_shard = [&](int s) {
        std::vector<int> prefix{0, s};
        detail::for_each_combination(prefix, s + 1, N, k, [&](const std::vector<int>& a) {
            if (over_budget.load(std::memory_order_relaxed)) return;
            long g = 0;
            for (int v : a) g = std::gcd(g, static_cast<long>(v));
            if (g != 1) return;
            if (budget >= 0) {
                if (scanned.fetch_add(1) >= budget) {
                    over_budget = true;
                    scanned.fetch_sub(1);
                    return;
                }
            } else {
                ++scanned;
            }
            std::uint64_t lo = 0, hi = 0;
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = i; j < a.size(); ++j) {
                    int sum = a[i] + a[j];
                    if (sum < 64)
                        lo |= 1ull << sum;
                    else
                        hi |= 1ull << (sum - 64);
                }
            int doubling = detail::popcount128(lo, hi);
            int b = doubling - (2 * k - 1);
            if (b <= k - 3) {
                ++hits;
                long cover_len = a.back() + 1; // gcd 1, min 0
                if (cover_len > k + b)
                    shard_violations[static_cast<std::size_t>(s)].emplace_back(a.begin(), a.end());
            }
        });
    };

    std::atomic<int> next{1};
    auto worker = [&] {
        for (;;) {
            int s = next.fetch_add(1);
            if (s > N - k + 2 || over_budget) return;
            run_shard(s);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    report.sets_scanned = scanned;
    report.hypothesis_hits = hits;
    report.complete = !over_budget;
    for (auto& sv : shard_violations)
        for (auto& v : sv) report.violations.push_back(std::move(v));
    std::sort(report.violations.begin(), report.violations.end());
    return report;
}

// Product-side analog over A ⊆ {1..N}, gcd 1: whenever |AA| = 2k-1+b <=
// 3k-4, a geometric cover must exist with length <= k+b.
inline FreimanReport check_freiman_3k4_prod(int k, int N, long long budget = -1) {
    if (k < 4) throw std::invalid_argument("k must be at least 4");
    if (N < k) throw std::invalid_argument("N must be at least k");
    if (N > 256) throw std::invalid_argument("N too large");

    FreimanReport report;
    report.k = k;
    report.N = N;
    std::vector<int> stamp(static_cast<std::size_t>(N) * N + 1, -1);
    int tick = 0;

    std::vector<int> prefix;
    detail::for_each_combination(prefix, 1, N, k, [&](const std::vector<int>& a) {
        if (!report.complete) return;
        long g = 0;
        for (int v : a) g = std::gcd(g, static_cast<long>(v));
        if (g != 1) return;
        if (budget >= 0 && report.sets_scanned >= budget) {
            report.complete = false;
            return;
        }
        ++report.sets_scanned;
        ++tick;
        int prod_count = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i; j < a.size(); ++j) {
                int p = a[i] * a[j];
                if (stamp[static_cast<std::size_t>(p)] != tick) {
                    stamp[static_cast<std::size_t>(p)] = tick;
                    ++prod_count;
                }
            }
        int b = prod_count - (2 * k - 1);
        if (b <= k - 3) {
            ++report.hypothesis_hits;
            std::vector<Rat> vals;
            for (int v : a) vals.emplace_back(v);
            auto cover = gp_cover(RatSet(std::move(vals)));
            if (!cover || cover->length > k + b)
                report.violations.emplace_back(a.begin(), a.end());
        }
    });
    std::sort(report.violations.begin(), report.violations.end());
    return report;
}

// ---------------------------------------------------------------------------
// 3k-3 classification: a set with |A| = k > 6 and |A+A| <= 3k-3 must be
// covered by an AP of length 2k+1 or split into two same-step APs.

struct Classification {
    bool long_ap_cover = false;   // clause (i)
    bool two_ap_union = false;    // clause (ii)
    long cover_length = 0;

    bool neither() const { return !long_ap_cover && !two_ap_union; }
};

inline Classification classify_3k3(const IntSet& a) {
    long k = static_cast<long>(a.size());
    if (k <= 6) throw std::invalid_argument("hypothesis not met");
    if (sumset(a).size() > 3 * k - 3) throw std::invalid_argument("hypothesis not met");
    Classification c;
    c.cover_length = ap_cover(a).length;
    c.long_ap_cover = c.cover_length <= 2 * k + 1;
    c.two_ap_union = decompose_two_aps(a).has_value();
    return c;
}

} // namespace sumprod
