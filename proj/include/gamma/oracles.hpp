#pragma once

// Independent computations used to cross-check the closed-form expansions in
// ring.hpp.  Each oracle reaches the same values by a different route:
//
//   * expand_e_recursive   solves the defining relations bottom-up,
//   * expand_e_determinant evaluates a symbolic Hessenberg determinant,
//   * d_via_blocks         computes expansion coefficients by inclusion-
//                          exclusion over block decompositions,
//   * evaluate_h/evaluate_e specialize symmetric functions at integer
//                          points, so straightening identities can be
//                          falsified numerically (still in exact integers).

#include "gamma/combinatorics.hpp"
#include "gamma/core.hpp"
#include "gamma/ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace gamma_m {

// Canonical form of e_n obtained from the defining relations alone:
//   e_0 = 1,  e_n = e_{(n)} when m | n,  and otherwise
//   e_n = sum_{i=1}^{n} (-1)^{i-1} h_i e_{n-i}.
// Memoized per (n, m); shares no code with expand_e.
inline RingElement expand_e_recursive(int n, int m) {
    if (n < 0) throw std::invalid_argument("expand_e_recursive: n must be non-negative");
    if (m <= 0) throw std::invalid_argument("expand_e_recursive: m must be positive");

    static std::map<std::pair<int, int>, RingElement> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({n, m});
        if (it != cache.end()) return it->second;
    }

    RingElement result = RingElement::zero(m);
    if (n == 0) {
        result = RingElement::one(m);
    } else if (n % m == 0) {
        result = basis_monomial(Partition(), Partition({n}), m);
    } else {
        for (int i = 1; i <= n; ++i) {
            RingElement term = mul(basis_monomial(Partition({i}), Partition(), m),
                                   expand_e_recursive(n - i, m));
            result = add(result, i % 2 == 1 ? term : negate(term));
        }
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(n, m), result);
    return result;
}

// The d x d matrix whose determinant is the canonical form of e_d.  Columns
// not divisible by m carry the usual h-band; each column j = s*m instead has
// (-1)^(j+1) e_j at the top and a 1 just below the diagonal.  Entries are
// ring elements; indices are 1-based.
struct HessenbergMatrix {
    int dimension;
    int modulus;

    HessenbergMatrix(int d, int m) : dimension(d), modulus(m) {
        if (d < 1) throw std::invalid_argument("HessenbergMatrix: dimension must be positive");
        if (m <= 0) throw std::invalid_argument("HessenbergMatrix: modulus must be positive");
    }

    RingElement entry(int i, int j) const {
        if (i < 1 || i > dimension || j < 1 || j > dimension)
            throw std::invalid_argument("HessenbergMatrix::entry: index out of range");
        if (j % modulus != 0) {
            int k = 1 - i + j;
            if (k < 0) return RingElement::zero(modulus);
            if (k == 0) return RingElement::one(modulus);
            return basis_monomial(Partition({k}), Partition(), modulus);
        }
        if (i == 1) {
            RingElement e = basis_monomial(Partition(), Partition({j}), modulus);
            return j % 2 == 0 ? negate(e) : e;
        }
        if (i == j + 1) return RingElement::one(modulus);
        return RingElement::zero(modulus);
    }
};

// det of the d x d matrix above, expanded along the last column with
// memoized leading principal minors.  The matrix is upper Hessenberg, so the
// minor obtained by deleting row i and the last column is block-triangular:
// the leading principal minor of order i-1 times the subdiagonal entries
// below row i.  Cost is quadratic in d instead of factorial.
inline RingElement expand_e_determinant(int d, int m, int guard = default_determinant_guard) {
    if (d < 1) throw std::invalid_argument("expand_e_determinant: d must be positive");
    if (m <= 0) throw std::invalid_argument("expand_e_determinant: m must be positive");
    if (d > guard)
        throw guard_error("expand_e_determinant: dimension " + std::to_string(d) +
                          " exceeds guard " + std::to_string(guard));

    HessenbergMatrix matrix(d, m);
    for (int j = 1; j <= d; ++j)          // the expansion below relies on
        for (int i = j + 2; i <= d; ++i)  // vanishing below the subdiagonal
            if (!matrix.entry(i, j).is_zero())
                throw std::logic_error("expand_e_determinant: matrix not Hessenberg");

    std::vector<RingElement> minor(d + 1, RingElement::one(m));
    for (int j = 1; j <= d; ++j) {
        RingElement det = RingElement::zero(m);
        RingElement subdiagonal = RingElement::one(m);  // prod a_{k+1,k}, k = i..j-1
        for (int i = j; i >= 1; --i) {
            RingElement cofactor = mul(matrix.entry(i, j), mul(subdiagonal, minor[i - 1]));
            det = add(det, (j - i) % 2 == 0 ? cofactor : negate(cofactor));
            if (i > 1) subdiagonal = mul(subdiagonal, matrix.entry(i, i - 1));
        }
        minor[j] = det;
    }
    return minor[d];
}

// d_coefficient recomputed by inclusion-exclusion over block decompositions:
//   d(lambda) = -sign(lambda) * sum_A (-1)^(len A) * count(A)
// with A ranging over enumerate_block_decompositions(lambda, m).
inline Int d_via_blocks(const Partition& lambda, int m,
                        int guard = default_enumeration_guard) {
    Int total = 0;
    for (const PartitionSequence& seq : enumerate_block_decompositions(lambda, m, guard)) {
        Int term = sequence_count(seq);
        total += seq.size() % 2 == 0 ? term : -term;
    }
    return Int(-sign(lambda)) * total;
}

// The recursion characterizing the d coefficients: for every partition,
//   sign(lambda) * count_rearrangements(lambda)
//     = sum over sub-multisets delta of lambda with m | |delta| of
//       sign(delta) * d_coefficient(lambda minus delta, m)
//                   * count_rearrangements(delta).
// Returns whether both sides agree (evaluated exactly).
inline bool check_d_recurrence(const Partition& lambda, int m) {
    if (m <= 0) throw std::invalid_argument("check_d_recurrence: m must be positive");
    Int lhs = Int(sign(lambda)) * count_rearrangements(lambda);
    Int rhs = 0;
    detail::for_each_sub_multiset(detail::to_multiset(lambda),
                                  [&](const std::vector<int>& chosen,
                                      const detail::Multiset& rest) {
        int total = 0;
        for (int p : chosen) total += p;
        if (total % m != 0) return;
        Partition delta(chosen);
        rhs += Int(sign(delta)) * d_coefficient(detail::multiset_to_partition(rest), m) *
               count_rearrangements(delta);
    });
    return lhs == rhs;
}

// The alternating convolution sum_{i=0}^{d} (-1)^i h_i e_{d-i} in canonical
// form.  It is the zero element exactly when m does not divide d (these are
// the relations the ring imposes).
inline RingElement defining_relation_sum(int d, int m) {
    if (d < 0) throw std::invalid_argument("defining_relation_sum: d must be non-negative");
    RingElement acc = RingElement::zero(m);
    for (int i = 0; i <= d; ++i) {
        RingElement h = i == 0 ? RingElement::one(m)
                               : basis_monomial(Partition({i}), Partition(), m);
        RingElement term = mul(h, expand_e(d - i, m));
        acc = add(acc, i % 2 == 0 ? term : negate(term));
    }
    return acc;
}

// A point with finitely many variables set to integers (the rest to zero).
struct EvaluationPoint {
    std::vector<int> values;

    explicit EvaluationPoint(std::vector<int> v) : values(std::move(v)) {
        if (values.empty())
            throw std::invalid_argument("EvaluationPoint: need at least one variable");
    }
};

// Complete homogeneous symmetric polynomial h_r at the point, by the
// one-variable-at-a-time recurrence (exact, no monomial enumeration).
inline Int evaluate_h(int r, const EvaluationPoint& pt) {
    if (r < 0) throw std::invalid_argument("evaluate_h: r must be non-negative");
    std::vector<Int> h(static_cast<std::size_t>(r) + 1, Int(0));
    h[0] = 1;
    for (int v : pt.values)
        for (int j = 1; j <= r; ++j) h[j] += v * h[j - 1];
    return h[r];
}

// Elementary symmetric polynomial e_r at the point, from the coefficients of
// prod_i (1 + v_i t).  Zero when r exceeds the number of variables.
inline Int evaluate_e(int r, const EvaluationPoint& pt) {
    if (r < 0) throw std::invalid_argument("evaluate_e: r must be non-negative");
    std::vector<Int> e(static_cast<std::size_t>(r) + 1, Int(0));
    e[0] = 1;
    int seen = 0;
    for (int v : pt.values) {
        ++seen;
        for (int j = std::min(r, seen); j >= 1; --j) e[j] += v * e[j - 1];
    }
    return e[r];
}

inline Int evaluate_monomial(const BasisKey& key, const EvaluationPoint& pt) {
    Int value = 1;
    for (int p : key.h.parts()) value *= evaluate_h(p, pt);
    for (int p : key.e.parts()) value *= evaluate_e(p, pt);
    return value;
}

inline Int evaluate_element(const RingElement& a, const EvaluationPoint& pt) {
    Int value = 0;
    for (const auto& [key, coeff] : a.terms()) value += coeff * evaluate_monomial(key, pt);
    return value;
}

// Specializes both sides of the straightening of h_alpha e_beta at the point
// and compares exactly.  The left side never touches the straightening code.
inline bool check_specialization(const Composition& alpha, const Composition& beta, int m,
                                 const EvaluationPoint& pt) {
    Int lhs = 1;
    for (int a : alpha.parts()) lhs *= evaluate_h(a, pt);
    for (int b : beta.parts()) lhs *= evaluate_e(b, pt);
    return lhs == evaluate_element(straighten_direct(alpha, beta, m), pt);
}

// With m > n nothing truncates, so e_n must expand with the classical
// coefficients: sign(lambda) * count_rearrangements(lambda) over all
// partitions lambda of n, with no e-part remaining.
inline bool check_classical_limit(int n) {
    if (n < 0) throw std::invalid_argument("check_classical_limit: n must be non-negative");
    const int m = n + 1;
    RingElement expansion = expand_e(n, m);
    std::vector<Partition> all = partitions_of(n);
    if (expansion.terms().size() != all.size()) return false;
    for (const Partition& lambda : all) {
        Int expected = Int(sign(lambda)) * count_rearrangements(lambda);
        if (coefficient(expansion, BasisKey(lambda, Partition(), m)) != expected) return false;
    }
    return true;
}

}  // namespace gamma_m
