#pragma once

#include <map>

#include "schurcalc/partition.hpp"
#include "schurcalc/report.hpp"

namespace schurcalc {

// Finite multiset of partitions with positive multiplicities; the
// decomposition of an induced/tensor representation into irreducibles.
class SchurExpansion {
public:
    SchurExpansion() = default;

    void add(const Partition& lambda, long long multiplicity);
    long long multiplicity(const Partition& lambda) const;
    const std::map<Partition, long long>& terms() const { return terms_; }
    bool operator==(const SchurExpansion&) const = default;

private:
    std::map<Partition, long long> terms_;  // no zero entries
};

// Littlewood-Richardson coefficient [lambda : mu, nu], counted as the number
// of column-strict skew tableaux of shape lambda/mu and content nu whose
// reverse reading word is a lattice word. Size mismatches and failures of
// mu subset lambda return 0 (decomposition sweeps generate them routinely).
// Memoized and safe for concurrent use.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Decomposition of S_mu(X) (x) S_nu(X) for the free object X: all lambda with
// lr_coefficient(lambda, mu, nu) > 0, with multiplicities.
SchurExpansion tensor_product_expansion(const Partition& mu, const Partition& nu);

// Multiplicity of V_lambda in the induction of V_mu boxed with |lambda|-|mu|
// copies of the one-box representation, via iterated one-box (Pieri) steps.
// Used as the third leg of the inclusion equivalence; nonzero exactly when
// mu fits inside lambda.
long long iterated_box_multiplicity(const Partition& lambda, const Partition& mu);

// Support of the product of two rectangles (p)^q and (r)^s, generated
// directly from the closed-form conditions (length <= q+s, middle rows pinned
// to p, lambda_s >= max(p,r), complementary pairs summing to p+r). Inputs are
// normalized so the first rectangle has at least as many rows. Output in
// reverse-lexicographic order.
std::vector<Partition> rectangular_lr_support(int p, int q, int r, int s);

// Exhaustive check of the three-way equivalence
//   (exists nu: [lambda:mu,nu] != 0) <=> mu fits in lambda <=> iterated
//   one-box multiplicity != 0
// over all |lambda| <= max_size and |mu| <= |lambda|.
VerificationReport verify_inclusions_equivalence(int max_size);

// Exhaustive check of the two-corner support bound: whenever the cell
// (p+r+1, q+s+1) lies in lambda and [lambda:mu,nu] != 0, the cell (p+1,q+1)
// lies in mu or (r+1,s+1) lies in nu. Corners range over 0..max_corner.
VerificationReport verify_deligne_110(int max_size, int max_corner);

}  // namespace schurcalc
