#pragma once

// Pairs of partitions (lambda | m*mu) indexing the canonical basis, and the
// dominance order on pairs of equal size.
//
// The second component is stored literally (already scaled by the modulus):
// the pair printed "5,1,1,1|3,3" at modulus 3 has h-part (5,1,1,1) and
// e-part (3,3).  Text form: h-part, '|', e-part, each in partition text form
// and possibly empty ("|": the empty pair).

#include "gamma/core.hpp"
#include "gamma/partition.hpp"

#include <algorithm>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gamma_m {

struct PairPartition {
    Partition h;  // lambda
    Partition e;  // m*mu, parts stored literally, each divisible by modulus
    int modulus = 1;

    PairPartition() = default;

    PairPartition(Partition h_part, Partition e_part, int m)
        : h(std::move(h_part)), e(std::move(e_part)), modulus(m) {
        if (m <= 0) throw std::invalid_argument("PairPartition: modulus must be positive");
        for (int p : e.parts())
            if (p % m != 0)
                throw std::invalid_argument("PairPartition: e-part " + std::to_string(p) +
                                            " not divisible by " + std::to_string(m));
    }

    static PairPartition parse(std::string_view text, int m) {
        std::size_t bar = text.find('|');
        if (bar == std::string_view::npos)
            throw std::invalid_argument("pair '" + std::string(text) + "' lacks '|'");
        if (text.find('|', bar + 1) != std::string_view::npos)
            throw std::invalid_argument("pair '" + std::string(text) + "' has multiple '|'");
        return PairPartition(Partition::parse(text.substr(0, bar)),
                             Partition::parse(text.substr(bar + 1)), m);
    }

    // |h| + |e|: the degree of the basis monomial the pair indexes.
    int size() const { return h.size() + e.size(); }

    std::string str() const { return h.str() + "|" + e.str(); }

    friend bool operator==(const PairPartition&, const PairPartition&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const PairPartition& p) {
    return os << p.str();
}

// Canonical term order: degree ascending, then h-part descending
// lexicographic, then e-part descending lexicographic.  The modulus does not
// participate: keys compared with this order are expected to share it.
struct PairOrder {
    bool operator()(const PairPartition& a, const PairPartition& b) const {
        int da = a.size(), db = b.size();
        if (da != db) return da < db;
        if (a.h != b.h) return a.h > b.h;
        return a.e > b.e;
    }
};

// All pairs of total size n at modulus m, in canonical term order.
inline std::vector<PairPartition> pairs_of_total(int n, int m,
                                                 int guard = default_partitions_guard) {
    if (n < 0) throw std::invalid_argument("pairs_of_total: n must be non-negative");
    if (m <= 0) throw std::invalid_argument("pairs_of_total: m must be positive");
    std::vector<PairPartition> out;
    for (int s = 0; s * m <= n; ++s) {
        for (const Partition& lambda : partitions_of(n - s * m, guard))
            for (const Partition& mu : partitions_of(s, guard))
                out.emplace_back(lambda, scale(m, mu), m);
    }
    std::sort(out.begin(), out.end(), PairOrder());
    return out;
}

enum class Dominance { equal, greater_or_equal, less_or_equal, incomparable };

inline const char* to_string(Dominance d) {
    switch (d) {
        case Dominance::equal: return "equal";
        case Dominance::greater_or_equal: return "greater-or-equal";
        case Dominance::less_or_equal: return "less-or-equal";
        case Dominance::incomparable: return "incomparable";
    }
    return "";
}

namespace detail {

// Whether a >= b in the dominance order: for every l >= 1 both
//   (a) sum of the first l h-parts of a >= the same for b, and
//   (b) |a.h| + sum of the first l e-parts of a >= the same for b.
// (The e-parts are stored already scaled, so (b) uses them directly.)
inline bool pair_dominates(const PairPartition& a, const PairPartition& b) {
    auto prefix_ge = [](const std::vector<int>& x, const std::vector<int>& y, int x0, int y0) {
        std::size_t len = std::max(x.size(), y.size());
        long sx = x0, sy = y0;
        for (std::size_t l = 0; l < len; ++l) {
            if (l < x.size()) sx += x[l];
            if (l < y.size()) sy += y[l];
            if (sx < sy) return false;
        }
        return true;
    };
    return prefix_ge(a.h.parts(), b.h.parts(), 0, 0) &&
           prefix_ge(a.e.parts(), b.e.parts(), a.h.size(), b.h.size());
}

}  // namespace detail

// Full dominance relation between two pairs of the same size and modulus.
// Distinct comparable pairs report from the left argument's point of view.
inline Dominance dominance_compare(const PairPartition& a, const PairPartition& b, int m) {
    if (a.modulus != m || b.modulus != m)
        throw std::invalid_argument("dominance_compare: modulus mismatch");
    if (a.size() != b.size())
        throw std::invalid_argument("dominance_compare: sizes differ (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    if (a == b) return Dominance::equal;
    if (detail::pair_dominates(a, b)) return Dominance::greater_or_equal;
    if (detail::pair_dominates(b, a)) return Dominance::less_or_equal;
    return Dominance::incomparable;
}

}  // namespace gamma_m
