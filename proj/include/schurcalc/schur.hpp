#pragma once

#include <memory>
#include <span>

#include "schurcalc/graded.hpp"
#include "schurcalc/partition.hpp"
#include "schurcalc/report.hpp"

namespace schurcalc {

// Size limits for schur_of_object. The defaults keep every multiplicity well
// inside 64 bits; verification sweeps pass explicit larger bounds (checked
// 128-bit arithmetic covers them).
struct SchurBounds {
    int max_partition_size = 12;
    Count max_total_dimension = 8;
};

inline constexpr SchurBounds kSweepBounds{30, 32};

// S_mu applied to a single shifted line Sigma^e 1: the unit for empty mu;
// Sigma^{e|mu|} 1 when mu is one row (e even) or one column (e odd); zero
// otherwise.
GradedObject schur_of_line(const Partition& mu, int degree);

// S_lambda(X), computed by peeling one line off X and expanding with the
// direct-sum rule S_lambda(A + B) = sum over (mu,nu) of
// (S_mu(A) (x) S_nu(B))^{[lambda:mu,nu]}; for a single line the inner
// coefficients reduce to Pieri strips. The result depends only on the graded
// dimensions of X, not the peeling order.
GradedObject schur_of_object(const Partition& lambda, const GradedObject& x, const SchurBounds& bounds = {});

// Same recursion over an explicit line sequence (one entry per copy, any
// order). Exposed so tests can assert peeling-order independence.
GradedObject schur_of_object_lines(const Partition& lambda, std::span<const int> lines);

// Evaluates many Schur functors of one object, sharing the recursion states
// between queries. Not safe for concurrent use of a single instance.
class SchurEvaluator {
public:
    explicit SchurEvaluator(const GradedObject& x, const SchurBounds& bounds = {});
    SchurEvaluator(SchurEvaluator&&) noexcept;
    SchurEvaluator& operator=(SchurEvaluator&&) noexcept;
    ~SchurEvaluator();

    const GradedObject& eval(const Partition& lambda);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Whether S_lambda annihilates 1^p + Sigma 1^q: the cell (p+1, q+1) lies in
// lambda, equivalently [(q+1)^(p+1)] fits inside lambda.
bool hook_vanishing_test(const Partition& lambda, int p, int q);

// The unique containment-minimal partition annihilating x: the rectangle
// with even_total(x)+1 rows of length odd_total(x)+1. Throws ZeroObject for
// the zero object (everything annihilates it).
Partition minimal_annihilating_rectangle(const GradedObject& x);

// The fiber Y of a map 1 -> x in the semisimple model. The map is either
// zero (Y = 1 + Sigma^{-1} x) or split (Y = Sigma^{-1}(x minus one copy of
// the unit); requires dims[0] >= 1, else InvalidSplit).
GradedObject fiber_of_unit_map(const GradedObject& x, bool split_case);

// With (a)^b the minimal annihilating rectangle of x: checks even_total =
// b-1, odd_total = a-1, super_dimension = b-a and the window
// 1-a <= super_dimension <= b-1, plus the constructive minimality of the
// rectangle (it annihilates, its two maximal sub-rectangles do not).
VerificationReport verify_dimension_window(const GradedObject& x);

// Checks that vanishing of both Sym^n and the m-th exterior power forces the
// zero object on each trial, and the strip-cover fact behind it: every
// partition of k = n*m contains the row (n) or the column (1)^m.
VerificationReport verify_kill_sym_and_alt(int n, int m, std::span<const GradedObject> trials);

// For every rectangle (p)^q with p, q <= 5 annihilating x, checks that
// (q)^(p+1) annihilates the fiber of 1 -> x (split or non-split model). Both
// vanishings are established by the constructive recursion.
VerificationReport cofiber_bound_check(const GradedObject& x, bool split_case);

}  // namespace schurcalc
