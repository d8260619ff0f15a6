#include <doctest.h>

#include <array>

#include "schurcalc/characters.hpp"
#include "schurcalc/lr.hpp"

using namespace schurcalc;

namespace {
Partition P(const char* text) { return Partition::parse(text); }

long long binomial(int n, int k) {
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}
}  // namespace

TEST_CASE("coefficient base cases") {
    CHECK(lr_coefficient(P("2,1"), P("1"), P("1,1")) == 1);
    CHECK(lr_coefficient(P("3,3"), P("2,1"), P("2,1")) == 1);
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n)) CHECK(lr_coefficient(lambda, lambda, Partition{}) == 1);
    CHECK(lr_coefficient(P("3"), P("1"), P("1")) == 0);         // size mismatch is 0, not an error
    CHECK(lr_coefficient(P("2"), P("1,1"), Partition{}) == 0);  // mu outside lambda
    CHECK(lr_coefficient(P("4,2"), P("2,2"), P("2")) == 1);
}

TEST_CASE("agreement with the character-theoretic induction") {
    for (int total = 0; total <= 6; ++total)
        for (int a = 0; a <= total; ++a)
            for (const Partition& mu : partitions_of(a))
                for (const Partition& nu : partitions_of(total - a))
                    for (const Partition& lambda : partitions_of(total))
                        CHECK(lr_coefficient(lambda, mu, nu) == induction_multiplicity(lambda, std::array{mu, nu}));
}

TEST_CASE("symmetry in the two factors") {
    for (int total = 0; total <= 8; ++total)
        for (int a = 0; a <= total / 2; ++a)
            for (const Partition& mu : partitions_of(a))
                for (const Partition& nu : partitions_of(total - a))
                    for (const Partition& lambda : partitions_of(total))
                        CHECK(lr_coefficient(lambda, mu, nu) == lr_coefficient(lambda, nu, mu));
}

TEST_CASE("transpose covariance") {
    for (int total = 0; total <= 8; ++total)
        for (int a = 0; a <= total; ++a)
            for (const Partition& mu : partitions_of(a))
                for (const Partition& nu : partitions_of(total - a))
                    for (const Partition& lambda : partitions_of(total))
                        CHECK(lr_coefficient(lambda, mu, nu) ==
                              lr_coefficient(lambda.transposed(), mu.transposed(), nu.transposed()));
}

TEST_CASE("product expansions") {
    SchurExpansion boxes;
    boxes.add(P("2"), 1);
    boxes.add(P("1,1"), 1);
    CHECK(tensor_product_expansion(P("1"), P("1")) == boxes);

    SchurExpansion pieri;
    pieri.add(P("3"), 1);
    pieri.add(P("2,1"), 1);
    CHECK(tensor_product_expansion(P("2"), P("1")) == pieri);

    SchurExpansion rect;
    rect.add(P("3,2"), 1);
    rect.add(P("2,2,1"), 1);
    CHECK(tensor_product_expansion(P("2,2"), P("1")) == rect);
}

TEST_CASE("expansion dimensions match the induced representation") {
    for (int total = 1; total <= 7; ++total)
        for (int a = 0; a <= total; ++a)
            for (const Partition& mu : partitions_of(a))
                for (const Partition& nu : partitions_of(total - a)) {
                    long long weighted = 0;
                    const SchurExpansion expansion = tensor_product_expansion(mu, nu);
                    for (const auto& [lambda, mult] : expansion.terms()) weighted += mult * specht_dim(lambda);
                    const long long dim_mu = mu.empty() ? 1 : specht_dim(mu);
                    const long long dim_nu = nu.empty() ? 1 : specht_dim(nu);
                    CHECK(weighted == binomial(total, a) * dim_mu * dim_nu);
                }
}

TEST_CASE("iterated one-box multiplicities detect containment") {
    CHECK(iterated_box_multiplicity(P("2,1"), P("1,1")) == 1);
    CHECK(iterated_box_multiplicity(P("2"), P("1,1")) == 0);
    CHECK(iterated_box_multiplicity(P("3"), Partition{}) == 1);  // one tableau of row shape
    CHECK(iterated_box_multiplicity(P("2,1"), Partition{}) == 2);
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int m = 0; m <= n; ++m)
                for (const Partition& mu : partitions_of(m))
                    CHECK((iterated_box_multiplicity(lambda, mu) != 0) == contains(mu, lambda));
}

TEST_CASE("rectangle product support") {
    using PV = std::vector<Partition>;
    CHECK(rectangular_lr_support(2, 2, 1, 1) == PV{P("3,2"), P("2,2,1")});
    CHECK(rectangular_lr_support(1, 1, 1, 1) == PV{P("2"), P("1,1")});
    CHECK(rectangular_lr_support(1, 1, 2, 2) == rectangular_lr_support(2, 2, 1, 1));  // normalization
    CHECK_THROWS_AS(rectangular_lr_support(0, 1, 1, 1), ParseError);
}

TEST_CASE("rectangle support formula equals brute force and is multiplicity free") {
    for (int p = 1; p <= 10; ++p)
        for (int q = 1; p * q <= 10; ++q)
            for (int r = 1; p * q + r <= 10; ++r)
                for (int s = 1; p * q + r * s <= 10; ++s) {
                    const Partition left = Partition::rectangle(p, q);
                    const Partition right = Partition::rectangle(r, s);
                    std::vector<Partition> brute;
                    for (const Partition& lambda : partitions_of(p * q + r * s)) {
                        const long long c = lr_coefficient(lambda, left, right);
                        if (c > 0) {
                            brute.push_back(lambda);
                            CHECK(c == 1);
                        }
                    }
                    std::vector<Partition> formula = rectangular_lr_support(p, q, r, s);
                    std::sort(formula.begin(), formula.end());
                    std::sort(brute.begin(), brute.end());
                    CHECK(formula == brute);
                }
}

TEST_CASE("inclusion equivalence verifier") {
    // Spot instances first: (2,1)/(1,1) satisfies all three ways, (2)/(1,1) none.
    CHECK(lr_coefficient(P("2,1"), P("1,1"), P("1")) == 1);
    CHECK(contains(P("1,1"), P("2,1")));
    CHECK(iterated_box_multiplicity(P("2,1"), P("1,1")) != 0);
    CHECK_FALSE(contains(P("1,1"), P("2")));
    CHECK(iterated_box_multiplicity(P("2"), P("1,1")) == 0);

    const VerificationReport report = verify_inclusions_equivalence(6);
    CHECK(report.passed);
    CHECK(report.checked > 0);
    CHECK(report.counterexamples.empty());
    CHECK_THROWS_AS(verify_inclusions_equivalence(11), BoundExceeded);
}

TEST_CASE("two-corner support bound verifier") {
    const VerificationReport report = verify_deligne_110(6, 2);
    CHECK(report.passed);
    CHECK(report.checked > 0);
    CHECK_THROWS_AS(verify_deligne_110(11, 2), BoundExceeded);
    CHECK_THROWS_AS(verify_deligne_110(6, 5), BoundExceeded);

    // Worked instance: lambda=(2,2,2), corners (1,1,0,0), mu=(2,1), nu=(2,1).
    // The cell (2,2) is missing from mu, so (1,1) must lie in nu.
    CHECK(lr_coefficient(P("2,2,2"), P("2,1"), P("2,1")) == 1);
    CHECK(has_cell(P("2,2,2"), 1 + 0 + 1, 1 + 0 + 1));
    CHECK_FALSE(has_cell(P("2,1"), 2, 2));
    CHECK(has_cell(P("2,1"), 1, 1));
}
