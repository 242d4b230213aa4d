#pragma once

// Modular-representation reading of the straightening data at an odd prime p.
//
// Basis pairs (lambda | p*mu) label both the mixed permutation-style modules
// M(lambda | p*mu) and the indecomposable summands Y(lambda | p*mu); the
// straightening coefficients transport multiplicities between the two
// labelings.  Everything here is bookkeeping over straighten_direct at
// modulus p; no new arithmetic.

#include "gamma/combinatorics.hpp"
#include "gamma/core.hpp"
#include "gamma/pairs.hpp"
#include "gamma/ring.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gamma_m {

inline bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline void require_odd_prime(int p, const char* where) {
    if (!is_odd_prime(p))
        throw std::invalid_argument(std::string(where) + ": " + std::to_string(p) +
                                    " is not an odd prime");
}

// How an expansion is displayed: bracketed module symbols [M(lambda|p*mu)]
// or tensor products of symmetric and exterior powers S^lambda E (x) /\^ E.
// The underlying coefficients are identical.
enum class ModuleFlavor { modules, tensors };

struct ModuleExpansion {
    ModuleFlavor flavor;
    int prime;
    RingElement value;
};

// Image of M(alpha | beta) in the basis labeling: the straightening of
// h_alpha e_beta at modulus p, term (lambda | p*mu) giving the coefficient
// of M(lambda | p*mu).
inline ModuleExpansion expand_module(const Composition& alpha, const Composition& beta, int p,
                                     ModuleFlavor flavor = ModuleFlavor::modules,
                                     int guard = default_partitions_guard) {
    require_odd_prime(p, "expand_module");
    return ModuleExpansion{flavor, p, straighten_direct(alpha, beta, p, guard)};
}

// The basis pair whose summand Y appears exactly once in M(alpha | beta):
// write beta_i = p*eta_i + r_i with 0 <= r_i < p, collect the remainders
// into a column (1^r) next to alpha and the quotients eta into the scaled
// part.  Order within alpha and beta is immaterial.
inline PairPartition canonical_summand(const Composition& alpha, const Composition& beta,
                                       int p) {
    require_odd_prime(p, "canonical_summand");
    int r = 0;
    std::vector<int> eta;
    for (int b : beta.parts()) {
        r += b % p;
        if (b / p > 0) eta.push_back(b / p);
    }
    std::vector<int> column(static_cast<std::size_t>(r), 1);
    Partition h = union_of(alpha, Composition(column));
    Partition mu = type_of(Composition(eta));
    return PairPartition(h, scale(p, mu), p);
}

// Labels of the indecomposable summand a single mixed monomial h_a e_b is
// known to coincide with: with b = s*p + r,
//   a = 0            ->  Y((1^r) | p*(s)),
//   a > 0, p | a+b   ->  Y((a,1^r) | p*(s)),
// and no label otherwise.
inline std::optional<PairPartition> indecomposable_label(int a, int b, int p) {
    require_odd_prime(p, "indecomposable_label");
    if (a < 0 || b < 0)
        throw std::invalid_argument("indecomposable_label: degrees must be non-negative");
    const int s = b / p, r = b % p;
    if (a != 0 && (a + b) % p != 0) return std::nullopt;
    std::vector<int> h(static_cast<std::size_t>(r), 1);
    if (a != 0) h.insert(h.begin(), a);
    Partition mu = s == 0 ? Partition() : Partition({s});
    return PairPartition(Partition(std::move(h)), scale(p, mu), p);
}

// ---- Display ---------------------------------------------------------------

namespace detail {

inline std::string partition_symbol(const Partition& p) {
    return p.empty() ? "∅" : "(" + p.str() + ")";
}

// One tensor factor: F = "S" with h-parts or the exterior power wedge with
// e-parts.  S^(1) E collapses to E.
inline std::string power_symbol(const char* functor, const Partition& index) {
    if (index.length() == 1) {
        if (functor[0] == 'S' && index.parts()[0] == 1) return "E";
        return std::string(functor) + "^" + std::to_string(index.parts()[0]) + "E";
    }
    return std::string(functor) + "^{(" + index.str() + ")}E";
}

inline std::string term_label(const BasisKey& key, ModuleFlavor flavor) {
    if (flavor == ModuleFlavor::modules)
        return "[M(" + partition_symbol(key.h) + "|" + partition_symbol(key.e) + ")]";
    std::string out;
    if (!key.h.empty()) out += power_symbol("S", key.h);
    if (!key.e.empty()) {
        if (!out.empty()) out += "⊗";
        out += power_symbol("⋀", key.e);
    }
    if (out.empty()) out = "k";
    return "[" + out + "]";
}

}  // namespace detail

inline std::string render(const ModuleExpansion& expansion) {
    if (expansion.value.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, coeff] : expansion.value.terms()) {
        bool negative = coeff < 0;
        Int magnitude = negative ? Int(-coeff) : coeff;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (magnitude != 1) out << magnitude.str() << ' ';
        out << detail::term_label(key, expansion.flavor);
    }
    return out.str();
}

// ---- Multiplicity tables ----------------------------------------------------

// Partial map (base, summand) -> multiplicity of Y(summand) in M(base).
// Stored entries must respect what the theory forces: multiplicities are
// non-negative, diagonal entries are 1, and an off-diagonal entry can be
// positive only when the summand strictly dominates the base.
class KostkaTable {
public:
    explicit KostkaTable(int p) : prime_(p) { require_odd_prime(p, "KostkaTable"); }

    int prime() const { return prime_; }
    std::size_t size() const { return entries_.size(); }

    void insert(const PairPartition& base, const PairPartition& summand, Int mult) {
        const std::string what = "entry " + base.str() + " -> " + summand.str();
        if (base.modulus != prime_ || summand.modulus != prime_)
            throw table_error(what + ": modulus differs from table prime " +
                              std::to_string(prime_));
        if (mult < 0) throw table_error(what + ": negative multiplicity");
        if (base.size() != summand.size())
            throw table_error(what + ": base and summand sizes differ");
        if (base == summand) {
            if (mult != 1) throw table_error(what + ": diagonal multiplicity must be 1");
        } else if (mult > 0 &&
                   dominance_compare(summand, base, prime_) != Dominance::greater_or_equal) {
            throw table_error(what + ": positive multiplicity requires the summand to "
                              "strictly dominate the base");
        }
        entries_[{base, summand}] = std::move(mult);
    }

    std::optional<Int> lookup(const PairPartition& base, const PairPartition& summand) const {
        auto it = entries_.find({base, summand});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

private:
    struct EntryOrder {
        bool operator()(const std::pair<PairPartition, PairPartition>& a,
                        const std::pair<PairPartition, PairPartition>& b) const {
            PairOrder less;
            if (less(a.first, b.first)) return true;
            if (less(b.first, a.first)) return false;
            return less(a.second, b.second);
        }
    };

    int prime_;
    std::map<std::pair<PairPartition, PairPartition>, Int, EntryOrder> entries_;
};

struct TransferResult {
    Int multiplicity;
    // False when the computed multiplicity is negative, which no consistent
    // table can produce; the value is still reported.
    bool consistent;
};

// Multiplicity of Y(target) in M(alpha | beta), transported through the
// expansion: sum over expansion terms (base, c) of c * (M(base) : Y(target)).
// Per-term multiplicities the theory already determines are filled in
// (diagonal = 1, non-dominating = 0); the rest must come from the table, and
// the call fails with the list of needed entries when any is absent.
inline TransferResult transfer_multiplicity(const Composition& alpha, const Composition& beta,
                                            const PairPartition& target,
                                            const KostkaTable& table, int p,
                                            int guard = default_partitions_guard) {
    require_odd_prime(p, "transfer_multiplicity");
    if (target.modulus != p)
        throw std::invalid_argument("transfer_multiplicity: target modulus mismatch");
    if (table.prime() != p)
        throw std::invalid_argument("transfer_multiplicity: table prime mismatch");

    RingElement expansion = straighten_direct(alpha, beta, p, guard);
    Int total = 0;
    std::vector<std::string> missing;
    for (const auto& [base, coeff] : expansion.terms()) {
        if (base.size() != target.size()) continue;  // different degree: never a summand
        Dominance rel = dominance_compare(target, base, p);
        if (rel == Dominance::equal) {
            total += coeff;
        } else if (rel == Dominance::greater_or_equal) {
            std::optional<Int> entry = table.lookup(base, target);
            if (!entry)
                missing.push_back(base.str() + " -> " + target.str());
            else
                total += coeff * *entry;
        }
        // less_or_equal / incomparable: the multiplicity is forced to 0.
    }
    if (!missing.empty()) {
        std::string what = "incomplete table; needed entries:";
        for (const std::string& k : missing) what += " [" + k + "]";
        throw table_error(what);
    }
    return TransferResult{total, total >= 0};
}

}  // namespace gamma_m
