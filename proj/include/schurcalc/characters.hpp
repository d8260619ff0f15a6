#pragma once

#include <span>
#include <vector>

#include "schurcalc/partition.hpp"

namespace schurcalc {

// Character tables are memoized up to this n.
inline constexpr int kMaxCharacterTableN = 12;

// A partition of n read as a cycle type of the symmetric group on n letters.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(Partition rho) : rho_(std::move(rho)) {}
    const Partition& parts() const { return rho_; }
    int n() const { return rho_.size(); }
    friend auto operator<=>(const CycleType&, const CycleType&) = default;

private:
    Partition rho_;
};

// Order of the centralizer of a permutation of cycle type rho:
// prod_k k^{m_k} m_k!  (m_k = multiplicity of part k).
long long centralizer_order(const CycleType& rho);

// n! / centralizer_order.
long long class_size(const CycleType& rho);

// Irreducible character value chi^lambda(rho) via recursive border-strip
// removal on beta-sets (Murnaghan-Nakayama), memoized. |lambda| must equal
// the cycle type's n.
long long mn_character(const Partition& lambda, const CycleType& rho);

class CharacterTable {
public:
    // Fill-once memoized table for Sigma_n; throws BoundExceeded past the
    // configured n. Safe to call concurrently.
    static const CharacterTable& of(int n);

    int n() const { return n_; }
    // Rows and columns are both indexed by partitions_of(n) in that order.
    const std::vector<Partition>& labels() const { return labels_; }
    long long value(size_t row, size_t col) const { return values_[row][col]; }
    long long value(const Partition& lambda, const CycleType& rho) const;

private:
    explicit CharacterTable(int n);
    int n_ = 0;
    std::vector<Partition> labels_;
    std::vector<std::vector<long long>> values_;
};

// [lambda : mu_1, ..., mu_m], the multiplicity of V_lambda in the
// representation induced from the outer product of the V_{mu_i}, computed by
// iterated two-factor Frobenius reciprocity in exact arithmetic.
long long induction_multiplicity(const Partition& lambda, std::span<const Partition> factors);

// Multiplicity of V_lambda in V_mu (x) V_nu (internal product, same n):
// (1/n!) sum_rho class_size(rho) chi^mu chi^nu chi^lambda.
long long kronecker_multiplicity(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace schurcalc
