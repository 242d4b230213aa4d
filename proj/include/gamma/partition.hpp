#pragma once

// Partitions and compositions of non-negative integers.
//
// A composition is a finite ordered sequence of positive integers; a
// partition additionally has weakly decreasing parts.  Both are immutable
// value types.  The empty sequence represents the unique partition of 0.
//
// Text form: comma-separated parts with no spaces ("3,2,1,1"); the empty
// string denotes the empty partition.

#include "gamma/core.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gamma_m {

namespace detail {

inline std::vector<int> parse_parts(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - pos);
        int value = 0;
        const char* first = token.data();
        const char* last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || token.empty())
            throw std::invalid_argument("malformed part '" + std::string(token) +
                                        "' in '" + std::string(text) + "'");
        if (value <= 0)
            throw std::invalid_argument("part must be positive in '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return parts;
}

inline std::string join_parts(const std::vector<int>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

}  // namespace detail

class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p <= 0) throw std::invalid_argument("composition parts must be positive");
    }

    static Composition parse(std::string_view text) {
        return Composition(detail::parse_parts(text));
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }

    // |alpha|, the sum of the parts.
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    std::string str() const { return detail::join_parts(parts_); }

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    static Partition parse(std::string_view text) {
        return Partition(detail::parse_parts(text));
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    Composition as_composition() const { return Composition(parts_); }
    operator Composition() const { return as_composition(); }

    std::string str() const { return detail::join_parts(parts_); }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Composition& c) {
    return os << '(' << c.str() << ')';
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << '(' << p.str() << ')';
}

// Sorted-descending rearrangement of a composition.
inline Partition type_of(const Composition& alpha) {
    std::vector<int> parts = alpha.parts();
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

inline Composition concat(const Composition& alpha, const Composition& beta) {
    std::vector<int> parts = alpha.parts();
    parts.insert(parts.end(), beta.parts().begin(), beta.parts().end());
    return Composition(std::move(parts));
}

// Multiset union: type of the concatenation.
inline Partition union_of(const Composition& alpha, const Composition& beta) {
    return type_of(concat(alpha, beta));
}

// (m*mu_1, ..., m*mu_s).
inline Partition scale(int m, const Partition& mu) {
    if (m <= 0) throw std::invalid_argument("scale factor must be positive");
    std::vector<int> parts = mu.parts();
    for (int& p : parts) p *= m;
    return Partition(std::move(parts));
}

// (-1)^(|lambda| - ell(lambda)): the sign of any permutation whose cycle
// type is lambda.  Multiplicative over concatenation.
inline int sign(const Partition& lambda) {
    return (lambda.size() - lambda.length()) % 2 == 0 ? 1 : -1;
}

namespace detail {

inline void partitions_rec(int n, int max_part, std::vector<int>& prefix,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        prefix.push_back(k);
        partitions_rec(n - k, k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

// All partitions of n in descending lexicographic order: (n) first, (1^n)
// last.  partitions_of(0) = { () }.
inline std::vector<Partition> partitions_of(int n, int guard = default_partitions_guard) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be non-negative");
    if (n > guard)
        throw guard_error("partitions_of: n = " + std::to_string(n) +
                          " exceeds guard " + std::to_string(guard));
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::partitions_rec(n, n, prefix, out);
    return out;
}

// All partitions mu with n - |mu| a non-negative multiple of m, i.e. the
// possible h-part sizes when splitting degree n with e-part degrees divisible
// by m.  Ordered by |mu| descending, then descending lexicographic.
inline std::vector<Partition> partitions_with_remainder(int n, int m,
                                                        int guard = default_partitions_guard) {
    if (n < 0) throw std::invalid_argument("partitions_with_remainder: n must be non-negative");
    if (m <= 0) throw std::invalid_argument("partitions_with_remainder: m must be positive");
    std::vector<Partition> out;
    for (int k = n; k >= 0; k -= m) {
        std::vector<Partition> layer = partitions_of(k, guard);
        out.insert(out.end(), std::make_move_iterator(layer.begin()),
                   std::make_move_iterator(layer.end()));
    }
    return out;
}

}  // namespace gamma_m
