#pragma once

// Exact arithmetic in the truncated ring at modulus m.
//
// Elements are finite integer combinations of basis monomials h_lambda *
// e_{m*mu}, indexed by pairs (lambda | m*mu).  Products of generators that
// leave the basis are rewritten back into it: expand_e gives the canonical
// form of a single e_n, straighten_direct the canonical form of an arbitrary
// monomial h_alpha e_beta.  All values are immutable; every operation
// returns a fresh element.
//
// Element text form: terms in canonical key order, e.g.
//   -h[5,4,1,1] e[3] + 2 h[5,2,2,1,1] e[3]
// with coefficient magnitudes of 1 and empty index lists omitted; the unit
// element prints "1" and the zero element "0".

#include "gamma/combinatorics.hpp"
#include "gamma/core.hpp"
#include "gamma/pairs.hpp"
#include "gamma/partition.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace gamma_m {

using BasisKey = PairPartition;

class RingElement {
public:
    using TermMap = std::map<BasisKey, Int, PairOrder>;

    explicit RingElement(int m) : modulus_(m) {
        if (m <= 0) throw std::invalid_argument("RingElement: modulus must be positive");
    }

    static RingElement zero(int m) { return RingElement(m); }

    static RingElement one(int m) {
        RingElement r(m);
        r.terms_.emplace(BasisKey(Partition(), Partition(), m), Int(1));
        return r;
    }

    static RingElement from_terms(int m, TermMap terms) {
        RingElement r(m);
        for (auto it = terms.begin(); it != terms.end();) {
            if (it->first.modulus != m)
                throw std::invalid_argument("RingElement: key modulus mismatch");
            it = it->second == 0 ? terms.erase(it) : std::next(it);
        }
        r.terms_ = std::move(terms);
        return r;
    }

    int modulus() const { return modulus_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // The common degree of all keys, when the element is homogeneous and
    // non-zero; otherwise nullopt.
    std::optional<int> degree() const {
        if (terms_.empty()) return std::nullopt;
        int d = terms_.begin()->first.size();
        for (const auto& [key, coeff] : terms_)
            if (key.size() != d) return std::nullopt;
        return d;
    }

    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    int modulus_;
    TermMap terms_;
};

inline RingElement basis_monomial(const Partition& h, const Partition& e, int m) {
    RingElement::TermMap terms;
    terms.emplace(BasisKey(h, e, m), Int(1));
    return RingElement::from_terms(m, std::move(terms));
}

namespace detail {

inline void require_same_modulus(const RingElement& a, const RingElement& b, const char* op) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument(std::string(op) + ": modulus mismatch (" +
                                    std::to_string(a.modulus()) + " vs " +
                                    std::to_string(b.modulus()) + ")");
}

}  // namespace detail

inline RingElement add(const RingElement& a, const RingElement& b) {
    detail::require_same_modulus(a, b, "add");
    RingElement::TermMap terms = a.terms();
    for (const auto& [key, coeff] : b.terms()) terms[key] += coeff;
    return RingElement::from_terms(a.modulus(), std::move(terms));
}

inline RingElement scalar_mul(const Int& c, const RingElement& a) {
    RingElement::TermMap terms;
    if (c != 0)
        for (const auto& [key, coeff] : a.terms()) terms.emplace(key, c * coeff);
    return RingElement::from_terms(a.modulus(), std::move(terms));
}

inline RingElement negate(const RingElement& a) { return scalar_mul(Int(-1), a); }

// Bilinear extension of key union: h-parts and e-parts merge as multisets.
inline RingElement mul(const RingElement& a, const RingElement& b) {
    detail::require_same_modulus(a, b, "mul");
    const int m = a.modulus();
    RingElement::TermMap terms;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            BasisKey key(union_of(ka.h, kb.h), union_of(ka.e, kb.e), m);
            terms[key] += ca * cb;
        }
    return RingElement::from_terms(m, std::move(terms));
}

inline RingElement operator+(const RingElement& a, const RingElement& b) { return add(a, b); }
inline RingElement operator-(const RingElement& a) { return negate(a); }
inline RingElement operator-(const RingElement& a, const RingElement& b) {
    return add(a, negate(b));
}
inline RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }
inline RingElement operator*(const Int& c, const RingElement& a) { return scalar_mul(c, a); }

inline Int coefficient(const RingElement& a, const BasisKey& key) {
    if (key.modulus != a.modulus())
        throw std::invalid_argument("coefficient: key modulus mismatch");
    auto it = a.terms().find(key);
    return it == a.terms().end() ? Int(0) : it->second;
}

// Coefficient of h_mu e_{(n-|mu|)} in the canonical form of e_n: the signed
// count of good rearrangements.  Depends only on mu and m, not on n.
inline Int d_coefficient(const Partition& mu, int m) {
    return Int(sign(mu)) * count_good_compositions(mu, m);
}

// Canonical form of the single generator product e_n at modulus m:
//   e_n = sum over mu in partitions_with_remainder(n, m) of
//         d_coefficient(mu, m) * h_mu e_{(n - |mu|)}.
// When m | n this collapses to the basis monomial e_{(n)} itself, and
// expand_e(0, m) = 1.  Results are memoized per (n, m).
inline RingElement expand_e(int n, int m, int guard = default_partitions_guard) {
    if (n < 0) throw std::invalid_argument("expand_e: n must be non-negative");
    if (m <= 0) throw std::invalid_argument("expand_e: m must be positive");
    if (n > guard)
        throw guard_error("expand_e: n = " + std::to_string(n) + " exceeds the guard " +
                          std::to_string(guard));

    static std::map<std::pair<int, int>, RingElement> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({n, m});
        if (it != cache.end()) return it->second;
    }

    RingElement::TermMap terms;
    for (const Partition& mu : partitions_with_remainder(n, m, guard)) {
        Int d = d_coefficient(mu, m);
        if (d == 0) continue;
        int rest = n - mu.size();
        Partition e_part = rest == 0 ? Partition() : Partition({rest});
        terms.emplace(BasisKey(mu, e_part, m), std::move(d));
    }
    RingElement result = RingElement::from_terms(m, std::move(terms));

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(n, m), result);
    return result;
}

// Canonical form of h_alpha e_beta, computed termwise: for every pair
// (xi | m*mu) of total size |beta|, the structure constant of beta at that
// pair contributes  c * h_{alpha union xi} e_{m*mu}.  Depends on alpha and
// beta only through their types.
inline RingElement straighten_direct(const Composition& alpha, const Composition& beta, int m,
                                     int guard = default_partitions_guard) {
    if (m <= 0) throw std::invalid_argument("straighten_direct: m must be positive");
    RingElement::TermMap terms;
    for (const PairPartition& pair : pairs_of_total(beta.size(), m, guard)) {
        Int c = structure_constant(beta, pair.h, pair.e, m);
        if (c == 0) continue;
        terms.emplace(BasisKey(union_of(alpha, pair.h), pair.e, m), std::move(c));
    }
    return RingElement::from_terms(m, std::move(terms));
}

// Same value as straighten_direct, obtained by multiplying out the factors:
// the h_{alpha_i} as basis monomials and each e_{beta_j} via expand_e.
inline RingElement straighten_product(const Composition& alpha, const Composition& beta, int m,
                                      int guard = default_partitions_guard) {
    if (m <= 0) throw std::invalid_argument("straighten_product: m must be positive");
    RingElement acc = RingElement::one(m);
    for (int a : alpha.parts()) acc = mul(acc, basis_monomial(Partition({a}), Partition(), m));
    for (int b : beta.parts()) acc = mul(acc, expand_e(b, m, guard));
    return acc;
}

// The graded involution exchanging the two families of generators:
// psi(h_i) = e_i and psi(e_i) = h_i, extended as a ring homomorphism.  On a
// basis monomial h_lambda e_{m*mu} this gives e_lambda h_{m*mu}, which is
// straightened back into canonical form, so psi(psi(a)) = a.
inline RingElement psi(const RingElement& a, int guard = default_partitions_guard) {
    const int m = a.modulus();
    RingElement result = RingElement::zero(m);
    for (const auto& [key, coeff] : a.terms()) {
        RingElement term = basis_monomial(key.e, Partition(), m);
        for (int part : key.h.parts()) term = mul(term, expand_e(part, m, guard));
        result = add(result, scalar_mul(coeff, term));
    }
    return result;
}

inline std::string to_text(const RingElement& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, coeff] : a.terms()) {
        bool negative = coeff < 0;
        Int magnitude = negative ? Int(-coeff) : coeff;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        bool unit_key = key.h.empty() && key.e.empty();
        if (magnitude != 1 || unit_key) {
            out << magnitude.str();
            if (!unit_key) out << ' ';
        }
        if (!key.h.empty()) {
            out << "h[" << key.h.str() << ']';
            if (!key.e.empty()) out << ' ';
        }
        if (!key.e.empty()) out << "e[" << key.e.str() << ']';
    }
    return out.str();
}

inline std::ostream& operator<<(std::ostream& os, const RingElement& a) {
    return os << to_text(a);
}

}  // namespace gamma_m
