#include "schurcalc/verify.hpp"

#include <algorithm>
#include <array>

#include "parallel.hpp"
#include "schurcalc/balmer.hpp"
#include "schurcalc/characters.hpp"
#include "schurcalc/lr.hpp"
#include "schurcalc/schur.hpp"

namespace schurcalc {
namespace {

int clamped(const SuiteOptions& options, int fallback, int max) {
    return std::min(options.max_n.value_or(fallback), max);
}

void merge(VerificationReport& into, const VerificationReport& part) {
    into.checked += part.checked;
    if (!part.passed) into.passed = false;
    into.counterexamples.insert(into.counterexamples.end(), part.counterexamples.begin(),
                                part.counterexamples.end());
}

Count count_pow(Count base, int exp) {
    Count out = 1;
    for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

// ---- lr-oracles: tableau counting vs character-theoretic induction --------

VerificationReport suite_lr_oracles(const SuiteOptions& options) {
    const int max_total = clamped(options, 8, 10);
    VerificationReport report{.suite = "lr-oracles"};
    std::vector<std::pair<Partition, Partition>> pairs;
    for (int a = 0; a <= max_total; ++a)
        for (const Partition& mu : partitions_of(a))
            for (int b = 0; a + b <= max_total; ++b)
                for (const Partition& nu : partitions_of(b)) pairs.emplace_back(mu, nu);
    std::vector<VerificationReport> parts(pairs.size());
    detail::parallel_for(pairs.size(), [&](size_t i) {
        const auto& [mu, nu] = pairs[i];
        const std::array<Partition, 2> factors{mu, nu};
        for (const Partition& lambda : partitions_of(mu.size() + nu.size())) {
            ++parts[i].checked;
            const long long tableaux = lr_coefficient(lambda, mu, nu);
            const long long characters = induction_multiplicity(lambda, factors);
            if (tableaux != characters)
                parts[i].fail("lambda=" + lambda.to_string() + " mu=" + mu.to_string() + " nu=" + nu.to_string() +
                              " tableaux=" + std::to_string(tableaux) + " characters=" + std::to_string(characters));
        }
    });
    for (const auto& part : parts) merge(report, part);
    return report;
}

// ---- hook: constructive vanishing vs the hook criterion -------------------

VerificationReport suite_hook(const SuiteOptions& options) {
    const int max_size = clamped(options, 7, 9);
    VerificationReport report{.suite = "hook"};
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int p = 0; p <= 3; ++p)
                for (int q = 0; q <= 3; ++q) {
                    if (p + q == 0) continue;
                    std::map<int, Count> dims;
                    if (p) dims[0] = p;
                    if (q) dims[1] = q;
                    const GradedObject x = GradedObject::from_dims(std::move(dims));
                    const bool constructive =
                        lambda.empty() ? false : schur_of_object(lambda, x, kSweepBounds).is_zero();
                    const bool criterion = hook_vanishing_test(lambda, p, q);
                    ++report.checked;
                    if (constructive != criterion)
                        report.fail("lambda=" + lambda.to_string() + " p=" + std::to_string(p) +
                                    " q=" + std::to_string(q) + " constructive=" + std::to_string(constructive) +
                                    " criterion=" + std::to_string(criterion));
                }
    return report;
}

// ---- shifts: S_lambda(Sigma X) = Sigma^{|lambda|} S_{lambda^t}(X) ---------

VerificationReport suite_shifts(const SuiteOptions& options) {
    const int max_size = clamped(options, 6, 8);
    VerificationReport report{.suite = "shifts"};
    const std::vector<GradedObject> battery = graded_battery_total(4);
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            const Partition transposed = lambda.transposed();
            for (const GradedObject& x : battery) {
                ++report.checked;
                const GradedObject lhs = schur_of_object(lambda, x.shifted(1), kSweepBounds);
                const GradedObject rhs = schur_of_object(transposed, x, kSweepBounds).shifted(lambda.size());
                if (!(lhs == rhs))
                    report.fail("lambda=" + lambda.to_string() + " x=" + x.to_string() + " lhs=" + lhs.to_string() +
                                " rhs=" + rhs.to_string());
            }
        }
    return report;
}

// ---- euler: tensor-power partition and dimension power identities ---------

VerificationReport suite_euler(const SuiteOptions& options) {
    const int max_n = clamped(options, 5, 6);
    VerificationReport report{.suite = "euler"};
    const std::vector<GradedObject> battery = graded_battery_total(4);
    for (const GradedObject& x : battery) {
        for (int n = 1; n <= max_n; ++n) {
            GradedObject isotypic_sum;
            Count sdim_sum = 0;
            Count total_sum = 0;
            for (const Partition& lambda : partitions_of(n)) {
                const GradedObject piece = schur_of_object(lambda, x, kSweepBounds);
                const long long dim = specht_dim(lambda);
                isotypic_sum = direct_sum(isotypic_sum, scaled(piece, dim));
                sdim_sum = checked_add(sdim_sum, checked_mul(dim, super_dimension(piece)));
                total_sum = checked_add(total_sum, checked_mul(dim, piece.total_dimension()));
            }
            ++report.checked;
            if (!(isotypic_sum == tensor_power(x, n)))
                report.fail("x=" + x.to_string() + " n=" + std::to_string(n) + ": isotypic pieces do not sum to X^n");
            ++report.checked;
            if (sdim_sum != count_pow(super_dimension(x), n))
                report.fail("x=" + x.to_string() + " n=" + std::to_string(n) + ": super dimension identity");
            ++report.checked;
            if (total_sum != count_pow(x.total_dimension(), n))
                report.fail("x=" + x.to_string() + " n=" + std::to_string(n) + ": total dimension identity");
        }
    }
    return report;
}

// ---- characters: orthogonality, dimension counts, Kronecker sum rule ------

VerificationReport suite_characters(const SuiteOptions& options) {
    const int max_orth = clamped(options, 6, 8);
    const int max_dimsq = std::max(clamped(options, 8, 10), max_orth);
    VerificationReport report{.suite = "characters"};
    for (int n = 1; n <= max_orth; ++n) {
        const CharacterTable& table = CharacterTable::of(n);
        const auto& labels = table.labels();
        __int128 factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        // Row orthogonality.
        for (size_t i = 0; i < labels.size(); ++i)
            for (size_t j = 0; j < labels.size(); ++j) {
                __int128 sum = 0;
                for (size_t c = 0; c < labels.size(); ++c)
                    sum += static_cast<__int128>(class_size(CycleType(labels[c]))) * table.value(i, c) *
                           table.value(j, c);
                ++report.checked;
                if (sum != (i == j ? factorial : 0))
                    report.fail("row orthogonality fails at n=" + std::to_string(n) + " (" + labels[i].to_string() +
                                ", " + labels[j].to_string() + ")");
            }
        // Column orthogonality.
        for (size_t c = 0; c < labels.size(); ++c)
            for (size_t d = 0; d < labels.size(); ++d) {
                __int128 sum = 0;
                for (size_t i = 0; i < labels.size(); ++i)
                    sum += static_cast<__int128>(table.value(i, c)) * table.value(i, d);
                const __int128 expected = c == d ? centralizer_order(CycleType(labels[c])) : 0;
                ++report.checked;
                if (sum != expected)
                    report.fail("column orthogonality fails at n=" + std::to_string(n) + " (" +
                                labels[c].to_string() + ", " + labels[d].to_string() + ")");
            }
        // chi(identity) = dimension, and Kronecker dimension sum rule.
        const CycleType identity(Partition::column(n));
        for (const Partition& lambda : labels) {
            ++report.checked;
            if (table.value(lambda, identity) != specht_dim(lambda))
                report.fail("chi(identity) != dim at " + lambda.to_string());
        }
        if (n <= clamped(options, 6, 8)) {
            for (const Partition& mu : labels)
                for (const Partition& nu : labels) {
                    __int128 sum = 0;
                    for (const Partition& lambda : labels)
                        sum += static_cast<__int128>(kronecker_multiplicity(lambda, mu, nu)) * specht_dim(lambda);
                    ++report.checked;
                    if (sum != static_cast<__int128>(specht_dim(mu)) * specht_dim(nu))
                        report.fail("Kronecker dimension sum fails at n=" + std::to_string(n) + " (" +
                                    mu.to_string() + ", " + nu.to_string() + ")");
                }
        }
    }
    for (int n = 1; n <= max_dimsq; ++n) {
        __int128 sum = 0;
        for (const Partition& lambda : partitions_of(n)) {
            const __int128 dim = specht_dim(lambda);
            sum += dim * dim;
        }
        __int128 factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        ++report.checked;
        if (sum != factorial) report.fail("sum of dim^2 != n! at n=" + std::to_string(n));
    }
    return report;
}

// ---- cofiber ---------------------------------------------------------------

VerificationReport suite_cofiber(const SuiteOptions&) {
    VerificationReport report{.suite = "cofiber"};
    const std::vector<GradedObject> battery = graded_battery_per_degree(3);
    std::vector<VerificationReport> parts(battery.size());
    detail::parallel_for(battery.size(), [&](size_t i) {
        merge(parts[i], cofiber_bound_check(battery[i], false));
        if (battery[i].multiplicity(0) >= 1) merge(parts[i], cofiber_bound_check(battery[i], true));
    });
    for (const auto& part : parts) merge(report, part);
    return report;
}

// ---- killsymalt ------------------------------------------------------------

VerificationReport suite_killsymalt(const SuiteOptions& options) {
    const int max_nm = clamped(options, 12, 12);
    VerificationReport report{.suite = "killsymalt"};
    const std::vector<GradedObject> battery = graded_battery_total(4);
    for (int n = 1; n <= max_nm; ++n)
        for (int m = 1; n * m <= max_nm; ++m) merge(report, verify_kill_sym_and_alt(n, m, battery));
    return report;
}

// ---- dimension-window ------------------------------------------------------

VerificationReport suite_dimension_window(const SuiteOptions&) {
    VerificationReport report{.suite = "dimension-window"};
    for (const GradedObject& x : graded_battery_total(4)) {
        if (x.is_zero()) continue;
        merge(report, verify_dimension_window(x));
    }
    return report;
}

// ---- balmer ----------------------------------------------------------------

VerificationReport suite_balmer(const SuiteOptions& options) {
    const int max_size = clamped(options, 5, kMaxTruncationSize);
    VerificationReport report{.suite = "balmer"};
    const std::vector<IdealTruncation> passing = enumerate_prime_truncations(max_size);

    bool zero_seen = false;
    std::vector<std::pair<PrimeLabel, IdealTruncation>> classified;
    std::vector<const IdealTruncation*> spurious;
    for (const IdealTruncation& s : passing) {
        const Classification c = classify(s);
        switch (c.kind) {
            case Classification::Kind::Zero:
                zero_seen = true;
                break;
            case Classification::Kind::Prime:
                classified.emplace_back(c.label, s);
                break;
            case Classification::Kind::NotPrime:
                spurious.push_back(&s);
                break;
        }
    }

    ++report.checked;
    if (!zero_seen) report.fail("zero ideal missing from the enumeration");

    // The classified family must be exactly the truncations of the primes
    // labeled (p,q) with pq <= N (larger labels truncate to the zero ideal).
    std::vector<PrimeLabel> expected_labels;
    for (int p = 1; p <= max_size; ++p)
        for (int q = 1; p * q <= max_size; ++q) expected_labels.push_back({p, q});
    std::sort(expected_labels.begin(), expected_labels.end());
    std::vector<PrimeLabel> got_labels;
    for (const auto& [label, s] : classified) got_labels.push_back(label);
    std::sort(got_labels.begin(), got_labels.end());
    ++report.checked;
    if (got_labels != expected_labels) {
        std::string got;
        for (const auto& l : got_labels) got += "(" + std::to_string(l.p) + "," + std::to_string(l.q) + ")";
        report.fail("classified labels != {(p,q) : pq <= N}; got " + got);
    }
    for (const auto& [label, s] : classified) {
        ++report.checked;
        if (!(s == prime_truncation(label, max_size)))
            report.fail("classified set does not match its prime truncation at (" + std::to_string(label.p) + "," +
                        std::to_string(label.q) + ")");
        ++report.checked;
        if (minimal_rectangles(s).size() != 1)
            report.fail("classified prime without a unique minimal rectangle at (" + std::to_string(label.p) + "," +
                        std::to_string(label.q) + ")");
    }

    // Sets passing the truncated test without extending to a genuine prime
    // are truncation artifacts: reported as a distinct category, not failed.
    report.details["classified"] = std::to_string(classified.size());
    report.details["spurious"] = std::to_string(spurious.size());
    report.details["zero_ideal"] = zero_seen ? "present" : "missing";
    return report;
}

// ---- thin wrappers ---------------------------------------------------------

VerificationReport suite_inclusions(const SuiteOptions& options) {
    return verify_inclusions_equivalence(clamped(options, 8, 10));
}

VerificationReport suite_deligne110(const SuiteOptions& options) {
    return verify_deligne_110(clamped(options, 9, 10), 3);
}

VerificationReport suite_okada(const SuiteOptions& options) {
    return verify_okada_consistency(clamped(options, 12, 12));
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "lr-oracles", "inclusions", "deligne110", "hook",        "okada",  "shifts",
        "euler",      "characters", "cofiber",    "killsymalt",  "balmer", "dimension-window",
    };
    return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
    if (name == "lr-oracles") return suite_lr_oracles(options);
    if (name == "inclusions") return suite_inclusions(options);
    if (name == "deligne110") return suite_deligne110(options);
    if (name == "hook") return suite_hook(options);
    if (name == "okada") return suite_okada(options);
    if (name == "shifts") return suite_shifts(options);
    if (name == "euler") return suite_euler(options);
    if (name == "characters") return suite_characters(options);
    if (name == "cofiber") return suite_cofiber(options);
    if (name == "killsymalt") return suite_killsymalt(options);
    if (name == "balmer") return suite_balmer(options);
    if (name == "dimension-window") return suite_dimension_window(options);
    throw ParseError("unknown suite '" + name + "'");
}

std::vector<VerificationReport> run_all_suites(const SuiteOptions& options) {
    std::vector<VerificationReport> reports;
    reports.reserve(suite_names().size());
    for (const std::string& name : suite_names()) reports.push_back(run_suite(name, options));
    return reports;
}

std::vector<GradedObject> graded_battery_total(int max_total) {
    std::vector<GradedObject> out;
    std::array<int, 5> mults{};
    auto rec = [&](auto&& self, size_t degree_index, int remaining) -> void {
        if (degree_index == mults.size()) {
            std::map<int, Count> dims;
            for (size_t i = 0; i < mults.size(); ++i)
                if (mults[i]) dims[static_cast<int>(i) - 2] = mults[i];
            out.push_back(GradedObject::from_dims(std::move(dims)));
            return;
        }
        for (int m = 0; m <= remaining; ++m) {
            mults[degree_index] = m;
            self(self, degree_index + 1, remaining - m);
        }
        mults[degree_index] = 0;
    };
    rec(rec, 0, max_total);
    return out;
}

std::vector<GradedObject> graded_battery_per_degree(int max_mult) {
    std::vector<GradedObject> out;
    std::array<int, 5> mults{};
    auto rec = [&](auto&& self, size_t degree_index) -> void {
        if (degree_index == mults.size()) {
            std::map<int, Count> dims;
            for (size_t i = 0; i < mults.size(); ++i)
                if (mults[i]) dims[static_cast<int>(i) - 2] = mults[i];
            out.push_back(GradedObject::from_dims(std::move(dims)));
            return;
        }
        for (int m = 0; m <= max_mult; ++m) {
            mults[degree_index] = m;
            self(self, degree_index + 1);
        }
        mults[degree_index] = 0;
    };
    rec(rec, 0);
    return out;
}

}  // namespace schurcalc
