#include "schurcalc/balmer.hpp"

#include <algorithm>

#include "schurcalc/lr.hpp"

namespace schurcalc {

IdealTruncation::IdealTruncation(int max_size, std::set<Partition> members)
    : max_size_(max_size), members_(std::move(members)) {
    if (max_size_ < 1 || max_size_ > kMaxTruncationSize)
        throw BoundExceeded("ideal truncation size must be between 1 and " + std::to_string(kMaxTruncationSize));
    for (const Partition& mu : members_) {
        if (mu.empty()) throw ImproperIdeal("the empty partition generates the whole category");
        if (mu.size() > max_size_) throw SizeMismatch("ideal member larger than the truncation size");
    }
    // Upward closure within size <= N.
    for (const Partition& mu : members_)
        for (int n = mu.size(); n <= max_size_; ++n)
            for (const Partition& lambda : partitions_of(n))
                if (contains(mu, lambda) && !members_.contains(lambda))
                    throw ImproperIdeal("member set is not upward closed: " + mu.to_string() + " in, " +
                                        lambda.to_string() + " out");
}

std::vector<Partition> IdealTruncation::sorted_members() const {
    std::vector<Partition> out(members_.begin(), members_.end());
    std::sort(out.begin(), out.end(), size_revlex_less);
    return out;
}

bool prime_membership(PrimeLabel label, const Partition& lambda) {
    return lambda.part(label.q) >= label.p;
}

IdealTruncation prime_truncation(PrimeLabel label, int max_size) {
    std::set<Partition> members;
    for (int n = 1; n <= max_size; ++n)
        for (const Partition& lambda : partitions_of(n))
            if (prime_membership(label, lambda)) members.insert(lambda);
    return IdealTruncation(max_size, std::move(members));
}

IdealTruncation ideal_closure(const std::vector<Partition>& generators, int max_size) {
    std::set<Partition> members;
    for (const Partition& g : generators) {
        if (g.empty()) throw ImproperIdeal("the empty partition generates the whole category");
        if (g.size() > max_size) throw SizeMismatch("generator larger than the truncation size");
        for (int n = g.size(); n <= max_size; ++n)
            for (const Partition& lambda : partitions_of(n))
                if (contains(g, lambda)) members.insert(lambda);
    }
    return IdealTruncation(max_size, std::move(members));
}

namespace {

// Nonempty (mu, nu) pairs with |mu|+|nu| <= N, ordered by (size, revlex) on
// each component — the witness order promised by PrimalityResult.
std::vector<std::pair<Partition, Partition>> factor_pairs(int max_size) {
    std::vector<Partition> small;
    for (int n = 1; n < max_size; ++n)
        for (const Partition& p : partitions_of(n)) small.push_back(p);
    std::vector<std::pair<Partition, Partition>> pairs;
    for (const Partition& mu : small)
        for (const Partition& nu : small)
            if (mu.size() + nu.size() <= max_size) pairs.emplace_back(mu, nu);
    std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        const int sa = a.first.size() + a.second.size();
        const int sb = b.first.size() + b.second.size();
        if (sa != sb) return sa < sb;
        if (a.first != b.first) return size_revlex_less(a.first, b.first);
        return size_revlex_less(a.second, b.second);
    });
    return pairs;
}

}  // namespace

PrimalityResult is_prime_truncation(const IdealTruncation& s) {
    for (const auto& [mu, nu] : factor_pairs(s.max_size())) {
        bool support_inside = true;
        for (const Partition& lambda : partitions_of(mu.size() + nu.size())) {
            if (lr_coefficient(lambda, mu, nu) > 0 && !s.contains_member(lambda)) {
                support_inside = false;
                break;
            }
        }
        if (support_inside && !s.contains_member(mu) && !s.contains_member(nu))
            return {.prime = false, .witness = PrimalityWitness{mu, nu}};
    }
    return {.prime = true, .witness = std::nullopt};
}

std::vector<Partition> minimal_rectangles(const IdealTruncation& s) {
    if (s.empty()) throw EmptyIdeal("minimal_rectangles of the zero ideal");
    std::vector<Partition> rects;
    for (const Partition& lambda : s.members())
        if (lambda.as_rectangle()) rects.push_back(lambda);
    std::vector<Partition> minimal;
    for (const Partition& r : rects) {
        bool is_minimal = true;
        for (const Partition& other : rects)
            if (other != r && contains(other, r)) {
                is_minimal = false;
                break;
            }
        if (is_minimal) minimal.push_back(r);
    }
    std::sort(minimal.begin(), minimal.end(), size_revlex_less);
    return minimal;
}

std::vector<IdealTruncation> enumerate_prime_truncations(int max_size) {
    if (max_size < 1 || max_size > kMaxTruncationSize)
        throw BoundExceeded("enumeration bound is max_size <= " + std::to_string(kMaxTruncationSize));
    std::vector<Partition> elems;
    for (int n = 1; n <= max_size; ++n)
        for (const Partition& p : partitions_of(n)) elems.push_back(p);
    std::sort(elems.begin(), elems.end(), size_revlex_less);

    // Upward-closed sets correspond to antichains of minimal generators;
    // depth-first over the fixed element order, extending only by elements
    // incomparable to everything chosen.
    std::vector<IdealTruncation> passing;
    std::vector<Partition> chosen;
    auto emit = [&] {
        IdealTruncation s = ideal_closure(chosen, max_size);
        if (is_prime_truncation(s).prime) passing.push_back(std::move(s));
    };
    auto rec = [&](auto&& self, size_t start) -> void {
        emit();
        for (size_t i = start; i < elems.size(); ++i) {
            const Partition& e = elems[i];
            bool comparable = false;
            for (const Partition& c : chosen)
                if (contains(c, e) || contains(e, c)) {
                    comparable = true;
                    break;
                }
            if (comparable) continue;
            chosen.push_back(e);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);

    std::sort(passing.begin(), passing.end(), [](const IdealTruncation& a, const IdealTruncation& b) {
        if (a.members().size() != b.members().size()) return a.members().size() < b.members().size();
        return std::lexicographical_compare(a.members().begin(), a.members().end(), b.members().begin(),
                                            b.members().end(), size_revlex_less);
    });
    return passing;
}

Classification classify(const IdealTruncation& s) {
    if (s.empty()) return {.kind = Classification::Kind::Zero};
    const PrimalityResult primality = is_prime_truncation(s);
    if (!primality.prime)
        return {.kind = Classification::Kind::NotPrime, .witness = primality.witness};
    const std::vector<Partition> rects = minimal_rectangles(s);
    if (rects.size() != 1) return {.kind = Classification::Kind::NotPrime};
    const RectangleShape shape = *rects.front().as_rectangle();
    const PrimeLabel label{shape.width, shape.rows};
    if (!(s == prime_truncation(label, s.max_size()))) return {.kind = Classification::Kind::NotPrime};
    return {.kind = Classification::Kind::Prime, .label = label};
}

VerificationReport verify_okada_consistency(int max_total) {
    if (max_total < 2 || max_total > 12) throw BoundExceeded("verify_okada_consistency: max_total <= 12");
    VerificationReport report{.suite = "okada"};
    for (int p = 1; p * 1 <= max_total; ++p)
        for (int q = 1; p * q <= max_total; ++q)
            for (int r = 1; p * q + r <= max_total; ++r)
                for (int s = 1; p * q + r * s <= max_total; ++s) {
                    const Partition left = Partition::rectangle(p, q);
                    const Partition right = Partition::rectangle(r, s);
                    std::vector<Partition> brute;
                    bool multiplicity_free = true;
                    for (const Partition& lambda : partitions_of(p * q + r * s)) {
                        const long long c = lr_coefficient(lambda, left, right);
                        if (c > 0) brute.push_back(lambda);
                        if (c > 1) multiplicity_free = false;
                    }
                    std::vector<Partition> formula = rectangular_lr_support(p, q, r, s);
                    std::sort(formula.begin(), formula.end());
                    std::sort(brute.begin(), brute.end());
                    ++report.checked;
                    if (formula != brute)
                        report.fail("(" + std::to_string(p) + ")^" + std::to_string(q) + " x (" + std::to_string(r) +
                                    ")^" + std::to_string(s) + ": support formula disagrees with LR");
                    ++report.checked;
                    if (!multiplicity_free)
                        report.fail("(" + std::to_string(p) + ")^" + std::to_string(q) + " x (" + std::to_string(r) +
                                    ")^" + std::to_string(s) + ": rectangle pair is not multiplicity free");
                }
    return report;
}

}  // namespace schurcalc
