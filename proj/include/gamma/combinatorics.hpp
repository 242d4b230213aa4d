#pragma once

// Rearrangement counting and the enumerations behind the straightening
// coefficients.
//
// Throughout, m >= 1 is the truncation modulus.  A rearrangement of a
// partition lambda is "good" when none of its prefix sums (including the
// total) is divisible by m; the count of good rearrangements is the
// elementary building block of every coefficient in the library.

#include "gamma/core.hpp"
#include "gamma/partition.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace gamma_m {

// A finite sequence of partitions.  Used both for block decompositions
// (ordered divisible blocks followed by a remainder) and for split tuples
// (one partition per composition part).
using PartitionSequence = std::vector<Partition>;

namespace detail {

// (part, multiplicity) pairs, parts strictly descending.
using Multiset = std::vector<std::pair<int, int>>;

inline Multiset to_multiset(const Partition& lambda) {
    Multiset ms;
    for (int p : lambda.parts()) {
        if (!ms.empty() && ms.back().first == p)
            ++ms.back().second;
        else
            ms.emplace_back(p, 1);
    }
    return ms;
}

inline Partition multiset_to_partition(const Multiset& ms) {
    std::vector<int> parts;
    for (auto [p, c] : ms)
        for (int i = 0; i < c; ++i) parts.push_back(p);
    return Partition(std::move(parts));
}

inline int multiset_size(const Multiset& ms) {
    int n = 0;
    for (auto [p, c] : ms) n += p * c;
    return n;
}

// All ways to pick `take[i]` copies of part i; emits each choice as the
// chosen partition plus the remaining multiset.  Choices are produced in
// descending lexicographic order of the chosen partition.
template <typename Fn>
void for_each_sub_multiset(const Multiset& ms, std::size_t i, std::vector<int>& chosen,
                           Multiset& rest, Fn&& fn) {
    if (i == ms.size()) {
        fn(static_cast<const std::vector<int>&>(chosen), static_cast<const Multiset&>(rest));
        return;
    }
    auto [part, count] = ms[i];
    for (int take = count; take >= 0; --take) {
        std::size_t mark = chosen.size();
        for (int k = 0; k < take; ++k) chosen.push_back(part);
        if (take < count) rest.emplace_back(part, count - take);
        for_each_sub_multiset(ms, i + 1, chosen, rest, fn);
        if (take < count) rest.pop_back();
        chosen.resize(mark);
    }
}

template <typename Fn>
void for_each_sub_multiset(const Multiset& ms, Fn&& fn) {
    std::vector<int> chosen;
    Multiset rest;
    for_each_sub_multiset(ms, 0, chosen, rest, std::forward<Fn>(fn));
}

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace detail

// Number of distinct rearrangements of lambda: ell! / prod(multiplicities!).
inline Int count_rearrangements(const Partition& lambda) {
    Int result = detail::factorial(lambda.length());
    for (auto [part, count] : detail::to_multiset(lambda)) result /= detail::factorial(count);
    return result;
}

// All distinct rearrangements of lambda in descending lexicographic order.
inline std::vector<Composition> enumerate_rearrangements(const Partition& lambda,
                                                         int guard = default_enumeration_guard) {
    if (lambda.length() > guard)
        throw guard_error("enumerate_rearrangements: length " +
                          std::to_string(lambda.length()) + " exceeds guard " +
                          std::to_string(guard));
    std::vector<Composition> out;
    std::vector<int> parts = lambda.parts();
    do {
        out.emplace_back(Composition(parts));
    } while (std::prev_permutation(parts.begin(), parts.end()));
    return out;
}

// Number of rearrangements of lambda in which no prefix sum (including the
// full sum) is divisible by m.  Computed by dynamic programming over
// (remaining multiset, current prefix residue); never enumerates and is not
// guarded.  Zero whenever lambda is non-empty with m | |lambda|; one for the
// empty partition.
inline Int count_good_compositions(const Partition& lambda, int m) {
    if (m <= 0) throw std::invalid_argument("count_good_compositions: m must be positive");
    detail::Multiset ms = detail::to_multiset(lambda);
    std::vector<int> counts;
    for (auto [p, c] : ms) counts.push_back(c);

    std::map<std::pair<std::vector<int>, int>, Int> memo;

    auto rec = [&](auto&& self, std::vector<int>& remaining, int residue) -> Int {
        bool done = std::all_of(remaining.begin(), remaining.end(), [](int c) { return c == 0; });
        if (done) return 1;
        auto key = std::make_pair(remaining, residue);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Int total = 0;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (remaining[i] == 0) continue;
            int next = (residue + ms[i].first) % m;
            if (next == 0) continue;
            --remaining[i];
            total += self(self, remaining, next);
            ++remaining[i];
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(rec, counts, 0);
}

// ---- Products over partition sequences -------------------------------------

inline int sequence_sign(const PartitionSequence& seq) {
    int s = 1;
    for (const Partition& p : seq) s *= sign(p);
    return s;
}

inline Int sequence_count(const PartitionSequence& seq) {
    Int c = 1;
    for (const Partition& p : seq) c *= count_rearrangements(p);
    return c;
}

inline Int sequence_good_count(const PartitionSequence& seq, int m) {
    Int c = 1;
    for (const Partition& p : seq) c *= count_good_compositions(p, m);
    return c;
}

// ---- Block decompositions ---------------------------------------------------

// All sequences (delta_1, ..., delta_r, xi), r >= 0, where the delta_i are
// non-empty partitions with m | |delta_i|, xi is a partition (possibly
// empty), and the multiset union of all entries is lambda.  The order of the
// delta_i matters; the remainder xi is always the final entry, so every
// sequence has length r + 1 >= 1.  For the empty partition the unique
// decomposition is ( () ).  Results are in descending lexicographic order.
inline std::vector<PartitionSequence> enumerate_block_decompositions(
    const Partition& lambda, int m, int guard = default_enumeration_guard) {
    if (m <= 0) throw std::invalid_argument("enumerate_block_decompositions: m must be positive");
    if (lambda.length() > guard)
        throw guard_error("enumerate_block_decompositions: length " +
                          std::to_string(lambda.length()) + " exceeds guard " +
                          std::to_string(guard));

    std::vector<PartitionSequence> out;
    PartitionSequence current;

    auto rec = [&](auto&& self, const detail::Multiset& remaining) -> void {
        current.push_back(detail::multiset_to_partition(remaining));
        out.push_back(current);
        current.pop_back();

        std::vector<std::pair<Partition, detail::Multiset>> choices;
        detail::for_each_sub_multiset(remaining, [&](const std::vector<int>& chosen,
                                                     const detail::Multiset& rest) {
            if (chosen.empty()) return;
            int total = 0;
            for (int p : chosen) total += p;
            if (total % m != 0) return;
            choices.emplace_back(Partition(chosen), rest);
        });
        for (auto& [block, rest] : choices) {
            current.push_back(block);
            self(self, rest);
            current.pop_back();
        }
    };
    rec(rec, detail::to_multiset(lambda));
    std::sort(out.begin(), out.end(), std::greater<PartitionSequence>());
    return out;
}

// Rearrangements of lambda having at least one prefix sum equal to target.
inline std::vector<Composition> rearrangements_with_prefix_sum(
    const Partition& lambda, int target, int guard = default_enumeration_guard) {
    std::vector<Composition> out;
    for (Composition& c : enumerate_rearrangements(lambda, guard)) {
        int prefix = 0;
        for (int p : c.parts()) {
            prefix += p;
            if (prefix == target) {
                out.push_back(std::move(c));
                break;
            }
        }
    }
    return out;
}

// ---- Split tuples -----------------------------------------------------------

// All tuples (xi_1, ..., xi_s), s = ell(beta), such that
//   * |xi_i| <= beta_i and beta_i - |xi_i| is divisible by m,
//   * the multiset union of the xi_i is exactly xi,
//   * the non-zero differences beta_i - |xi_i| form exactly the multiset
//     e_part (whose parts must all be divisible by m).
// Empty when no tuple satisfies the constraints; in particular whenever
// |xi| + |e_part| != |beta|.  For beta = () the unique tuple is the empty
// one, available only for xi = e_part = ().  Results are in descending
// lexicographic order.
inline std::vector<PartitionSequence> enumerate_splits(const Composition& beta,
                                                       const Partition& xi,
                                                       const Partition& e_part, int m) {
    if (m <= 0) throw std::invalid_argument("enumerate_splits: m must be positive");
    for (int p : e_part.parts())
        if (p % m != 0)
            throw std::invalid_argument("enumerate_splits: e-part " + std::to_string(p) +
                                        " not divisible by " + std::to_string(m));

    std::vector<PartitionSequence> out;
    if (xi.size() + e_part.size() != beta.size()) return out;

    detail::Multiset rem_xi = detail::to_multiset(xi);
    detail::Multiset rem_e = detail::to_multiset(e_part);
    PartitionSequence current;
    const std::vector<int>& b = beta.parts();

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == b.size()) {
            if (detail::multiset_size(rem_xi) == 0 && detail::multiset_size(rem_e) == 0)
                out.push_back(current);
            return;
        }
        // Choose the e-share d of beta_i: zero or one available part of rem_e.
        std::vector<int> shares{0};
        for (auto [p, c] : rem_e)
            if (p <= b[i]) shares.push_back(p);
        for (int d : shares) {
            int want = b[i] - d;
            std::size_t e_slot = 0;
            if (d > 0) {
                while (rem_e[e_slot].first != d) ++e_slot;
                if (--rem_e[e_slot].second == 0) rem_e.erase(rem_e.begin() + e_slot);
            }
            detail::Multiset xi_snapshot = rem_xi;
            detail::for_each_sub_multiset(xi_snapshot, [&](const std::vector<int>& chosen,
                                                           const detail::Multiset& rest) {
                int total = 0;
                for (int p : chosen) total += p;
                if (total != want) return;
                current.emplace_back(chosen);
                rem_xi = rest;
                self(self, i + 1);
                rem_xi = xi_snapshot;
                current.pop_back();
            });
            if (d > 0) {
                if (e_slot < rem_e.size() && rem_e[e_slot].first == d)
                    ++rem_e[e_slot].second;
                else
                    rem_e.insert(rem_e.begin() + e_slot, {d, 1});
            }
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), std::greater<PartitionSequence>());
    return out;
}

// Sum over the split tuples of sign(tuple) * good_count(tuple): the
// coefficient of the basis monomial h_xi e_{e_part} in the expansion of
// e_beta (before multiplying in any h-factor).  Zero when no tuple exists.
inline Int structure_constant(const Composition& beta, const Partition& xi,
                              const Partition& e_part, int m) {
    Int total = 0;
    for (const PartitionSequence& tuple : enumerate_splits(beta, xi, e_part, m))
        total += Int(sequence_sign(tuple)) * sequence_good_count(tuple, m);
    return total;
}

}  // namespace gamma_m
