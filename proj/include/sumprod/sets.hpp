#pragma once

// Sumsets, product sets and representation counts for finite sets of
// positive exact numbers. IntSet holds arbitrary-precision integers, RatSet
// canonical rationals; every operation below works on either.

#include "sumprod/numeric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace sumprod {

// Strictly increasing positive elements; duplicates collapse (set semantics).
template <typename T>
class BasicSet {
public:
    BasicSet() = default;
    explicit BasicSet(std::vector<T> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        for (const T& v : elems_)
            if (v <= 0) throw std::invalid_argument("set elements must be positive");
    }
    BasicSet(std::initializer_list<T> elems) : BasicSet(std::vector<T>(elems)) {}

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const std::vector<T>& elements() const { return elems_; }
    const T& operator[](std::size_t i) const { return elems_[i]; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    bool operator==(const BasicSet& other) const { return elems_ == other.elems_; }

private:
    std::vector<T> elems_;
};

using IntSet = BasicSet<Int>;
using RatSet = BasicSet<Rat>;

inline RatSet to_rational(const IntSet& a) {
    std::vector<Rat> out;
    out.reserve(a.size());
    for (const Int& v : a) out.emplace_back(v);
    return RatSet(std::move(out));
}

// Size of A+A (or AA) together with the number of unordered representations
// a <= b of each value. Representation counts always total k(k+1)/2.
template <typename T>
struct SetStats {
    std::map<T, long> rep_counts;

    long size() const { return static_cast<long>(rep_counts.size()); }
    long total_representations() const {
        long t = 0;
        for (const auto& [v, c] : rep_counts) t += c;
        return t;
    }
    bool contains(const T& v) const { return rep_counts.count(v) != 0; }
};

template <typename T>
SetStats<T> sumset(const BasicSet<T>& a) {
    if (a.empty()) throw std::invalid_argument("empty set");
    SetStats<T> s;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i; j < a.size(); ++j) s.rep_counts[T(a[i] + a[j])] += 1;
    return s;
}

template <typename T>
SetStats<T> product_set(const BasicSet<T>& a) {
    if (a.empty()) throw std::invalid_argument("empty set");
    SetStats<T> s;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i; j < a.size(); ++j) s.rep_counts[T(a[i] * a[j])] += 1;
    return s;
}

// |A+A| == k(k+1)/2: no repeated sums beyond commutativity.
template <typename T>
bool is_sidon(const BasicSet<T>& a) {
    if (a.empty()) throw std::invalid_argument("empty set");
    long k = static_cast<long>(a.size());
    return sumset(a).size() == k * (k + 1) / 2;
}

// A / gcd(A); both |A+A| and |AA| are invariant under positive scaling.
inline IntSet normalize_multiplicative(const IntSet& a) {
    if (a.empty()) throw std::invalid_argument("empty set");
    Int g = 0;
    for (const Int& v : a) g = int_gcd(g, v);
    std::vector<Int> out;
    out.reserve(a.size());
    for (const Int& v : a) out.push_back(v / g);
    return IntSet(std::move(out));
}

struct MaxPair {
    long sum_size;
    long product_size;
    long maximum;
};

template <typename T>
MaxPair max_pair(const BasicSet<T>& a) {
    long s = sumset(a).size();
    long p = product_set(a).size();
    return {s, p, std::max(s, p)};
}

} // namespace sumprod
