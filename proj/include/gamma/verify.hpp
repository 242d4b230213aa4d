#pragma once

// Batched cross-checks of the straightening code against the oracles.  Each
// suite sweeps a bounded family, counts exact agreements, and records a
// short description of anything that disagrees.  Randomized suites are fully
// determined by their seed.

#include "gamma/combinatorics.hpp"
#include "gamma/core.hpp"
#include "gamma/oracles.hpp"
#include "gamma/pairs.hpp"
#include "gamma/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace gamma_m {

struct SuiteResult {
    std::string name;
    long passed = 0;
    long failed = 0;
    std::vector<std::string> failures;  // first few disagreements

    explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

    void check(bool ok, const std::string& what) {
        if (ok) {
            ++passed;
        } else {
            ++failed;
            if (failures.size() < 8) failures.push_back(what);
        }
    }

    bool ok() const { return failed == 0; }
};

// Deterministic RNG: mt19937_64 output reduced by modulo, so sequences are
// identical across platforms for a given seed.
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    int below(int n) { return static_cast<int>(engine() % static_cast<std::uint64_t>(n)); }
};

inline Composition random_composition(Rng& rng, int total) {
    std::vector<int> parts;
    while (total > 0) {
        int part = 1 + rng.below(total);
        parts.push_back(part);
        total -= part;
    }
    return Composition(std::move(parts));
}

// 4 to 8 variables with values in [-3, 3].
inline EvaluationPoint random_point(Rng& rng) {
    int n = 4 + rng.below(5);
    std::vector<int> values;
    for (int i = 0; i < n; ++i) values.push_back(rng.below(7) - 3);
    return EvaluationPoint(std::move(values));
}

namespace detail {

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

}  // namespace detail

// For every j, the rearrangements of lambda counted with multiplicity
// "number of j-subsets of the divisible prefix targets they hit" must match
// the total rearrangement count over block decompositions of length j + 1.
inline bool check_prefix_block_identity(const Partition& lambda, int m,
                                        int guard = default_enumeration_guard) {
    const int b = lambda.size() / m;
    if (b == 0) return true;

    std::vector<Int> lhs(static_cast<std::size_t>(b) + 1, Int(0));
    for (const Composition& comp : enumerate_rearrangements(lambda, guard)) {
        int hits = 0;
        int prefix = 0;
        for (int p : comp.parts()) {
            prefix += p;
            if (prefix % m == 0 && prefix > 0 && prefix <= b * m) ++hits;
        }
        for (int j = 1; j <= b; ++j) lhs[j] += detail::binomial(hits, j);
    }

    std::vector<Int> rhs(static_cast<std::size_t>(b) + 1, Int(0));
    for (const PartitionSequence& seq : enumerate_block_decompositions(lambda, m, guard)) {
        int j = static_cast<int>(seq.size()) - 1;
        if (j >= 1 && j <= b) rhs[j] += sequence_count(seq);
    }

    for (int j = 1; j <= b; ++j)
        if (lhs[j] != rhs[j]) return false;
    return true;
}

inline SuiteResult run_recursive_suite(int m, int max_degree) {
    SuiteResult result{"recursive"};
    for (int n = 0; n <= max_degree; ++n)
        result.check(expand_e(n, m) == expand_e_recursive(n, m),
                     "e_" + std::to_string(n) + " at m=" + std::to_string(m));
    return result;
}

inline SuiteResult run_determinant_suite(int m, int max_degree,
                                         int det_guard = default_determinant_guard) {
    SuiteResult result{"determinant"};
    for (int d = 1; d <= max_degree; ++d)
        result.check(expand_e(d, m) == expand_e_determinant(d, m, det_guard),
                     "e_" + std::to_string(d) + " at m=" + std::to_string(m));
    return result;
}

inline SuiteResult run_numeric_suite(const std::vector<int>& moduli, int max_degree, int trials,
                                     std::uint64_t seed) {
    SuiteResult result{"numeric"};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        int m = moduli[static_cast<std::size_t>(rng.below(static_cast<int>(moduli.size())))];
        int total = rng.below(max_degree + 1);
        int ha = rng.below(total + 1);
        Composition alpha = random_composition(rng, ha);
        Composition beta = random_composition(rng, total - ha);
        EvaluationPoint pt = random_point(rng);
        result.check(check_specialization(alpha, beta, m, pt),
                     "trial " + std::to_string(t) + ": h_(" + alpha.str() + ") e_(" +
                         beta.str() + ") at m=" + std::to_string(m));
    }
    return result;
}

// ---- Identity families -------------------------------------------------------

inline std::vector<SuiteResult> run_identities_suite(int m, int max_degree,
                                                     int guard = default_enumeration_guard) {
    std::vector<SuiteResult> suites;

    {
        SuiteResult r{"straighten-consistency"};
        for (int a = 0; a <= max_degree; ++a)
            for (const Partition& alpha : partitions_of(a))
                for (int b = 0; a + b <= max_degree; ++b)
                    for (const Partition& beta : partitions_of(b))
                        r.check(straighten_direct(alpha, beta, m) ==
                                    straighten_product(alpha, beta, m),
                                "h_(" + alpha.str() + ") e_(" + beta.str() + ")");
        suites.push_back(std::move(r));
    }
    {
        SuiteResult r{"d-concordance"};
        int cap = std::min(max_degree, 9);
        for (int n = 0; n <= cap; ++n)
            for (const Partition& lambda : partitions_of(n)) {
                Int direct = d_coefficient(lambda, m);
                bool ok = direct == d_via_blocks(lambda, m, guard);
                for (int rep = 0; ok && rep <= 2; ++rep) {
                    int rest = rep * m;
                    Partition e_part = rest == 0 ? Partition() : Partition({rest});
                    ok = direct == coefficient(expand_e(n + rest, m),
                                               BasisKey(lambda, e_part, m));
                }
                r.check(ok, "d(" + lambda.str() + ")");
            }
        suites.push_back(std::move(r));
    }
    {
        SuiteResult r{"d-recurrence"};
        int cap = std::min(max_degree, 9);
        for (int n = 0; n <= cap; ++n)
            for (const Partition& lambda : partitions_of(n))
                r.check(check_d_recurrence(lambda, m), "lambda=(" + lambda.str() + ")");
        suites.push_back(std::move(r));
    }
    {
        SuiteResult r{"prefix-block-counts"};
        int cap = std::min(max_degree, 8);
        for (int n = 0; n <= cap; ++n)
            for (const Partition& lambda : partitions_of(n))
                r.check(check_prefix_block_identity(lambda, m, guard),
                        "lambda=(" + lambda.str() + ")");
        suites.push_back(std::move(r));
    }
    {
        SuiteResult r{"defining-relations"};
        for (int d = 1; d <= max_degree; ++d) {
            if (d % m == 0) continue;
            r.check(defining_relation_sum(d, m).is_zero(), "d=" + std::to_string(d));
        }
        suites.push_back(std::move(r));
    }
    {
        SuiteResult r{"classical-limit"};
        for (int n = 0; n <= std::min(max_degree, 8); ++n)
            r.check(check_classical_limit(n), "n=" + std::to_string(n));
        suites.push_back(std::move(r));
    }
    {
        SuiteResult r{"psi-involution"};
        for (int n = 0; n <= std::min(max_degree, 8); ++n)
            for (const PairPartition& pair : pairs_of_total(n, m)) {
                RingElement b = basis_monomial(pair.h, pair.e, m);
                r.check(psi(psi(b)) == b, "pair " + pair.str());
            }
        suites.push_back(std::move(r));
    }
    {
        SuiteResult r{"basis-fixpoint"};
        for (int n = 0; n <= max_degree; ++n)
            for (const PairPartition& pair : pairs_of_total(n, m))
                r.check(straighten_direct(pair.h, pair.e, m) ==
                            basis_monomial(pair.h, pair.e, m),
                        "pair " + pair.str());
        suites.push_back(std::move(r));
    }
    return suites;
}

}  // namespace gamma_m
