#pragma once

#include <optional>
#include <set>

#include "schurcalc/partition.hpp"
#include "schurcalc/report.hpp"

namespace schurcalc {

// Antichain enumeration over partitions of size <= N stays tractable here.
inline constexpr int kMaxTruncationSize = 6;

// Label (p, q) of a nonzero prime: the upward-closed set of partitions
// containing the rectangle (p)^q (q rows of length p), i.e. lambda_q >= p.
struct PrimeLabel {
    int p = 1;
    int q = 1;
    friend bool operator==(const PrimeLabel&, const PrimeLabel&) = default;
    friend auto operator<=>(const PrimeLabel&, const PrimeLabel&) = default;
};

// A thick tensor ideal of the free category, cut off at size N: an
// upward-closed (under diagram containment) set of nonempty partitions of
// size <= N. Proper by construction: the empty partition is never a member.
class IdealTruncation {
public:
    // Validates the type invariants (sizes, properness, upward closure).
    IdealTruncation(int max_size, std::set<Partition> members);

    int max_size() const { return max_size_; }
    const std::set<Partition>& members() const { return members_; }
    bool contains_member(const Partition& lambda) const { return members_.contains(lambda); }
    bool empty() const { return members_.empty(); }

    // Members ordered by (size, reverse-lex); the order used for output.
    std::vector<Partition> sorted_members() const;

    friend bool operator==(const IdealTruncation& a, const IdealTruncation& b) {
        return a.max_size_ == b.max_size_ && a.members_ == b.members_;
    }

private:
    int max_size_;
    std::set<Partition> members_;
};

// lambda lies in the prime labeled (p,q): lambda_q >= p.
bool prime_membership(PrimeLabel label, const Partition& lambda);

// The truncation of the prime labeled (p,q) at size N.
IdealTruncation prime_truncation(PrimeLabel label, int max_size);

// Smallest upward-closed set of partitions of size <= N containing the
// generators. Throws ImproperIdeal if the empty partition is a generator.
IdealTruncation ideal_closure(const std::vector<Partition>& generators, int max_size);

struct PrimalityWitness {
    Partition mu, nu;
    friend bool operator==(const PrimalityWitness&, const PrimalityWitness&) = default;
};

struct PrimalityResult {
    bool prime = true;
    std::optional<PrimalityWitness> witness;  // first failing pair, in (size, revlex) order
};

// Truncated primality: for every nonempty mu, nu with |mu|+|nu| <= N, if the
// whole support of mu (x) nu lies in S then mu or nu does. A set passing at N
// may still fail at N+1; no claim beyond the truncation is made.
PrimalityResult is_prime_truncation(const IdealTruncation& s);

// Rectangles in S minimal under containment among the rectangles in S.
// Throws EmptyIdeal when S has no members.
std::vector<Partition> minimal_rectangles(const IdealTruncation& s);

// Every proper upward-closed subset (via its minimal antichain of
// generators) passing is_prime_truncation, the zero ideal included. Results
// ordered by (member count, member list).
std::vector<IdealTruncation> enumerate_prime_truncations(int max_size);

// classify(S): Zero for the empty set; (p,q) when S passes the truncated
// primality test, has the single minimal rectangle (p)^q and equals the
// truncation of the prime labeled (p,q); NotPrime otherwise.
struct Classification {
    enum class Kind { Zero, Prime, NotPrime };
    Kind kind = Kind::Zero;
    PrimeLabel label;                          // meaningful when kind == Prime
    std::optional<PrimalityWitness> witness;   // set when primality failed
    friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const IdealTruncation& s);

// Rectangle-pair support formula against the brute-force LR support, for all
// rectangle pairs with pq + rs <= max_total (and multiplicity-freeness).
VerificationReport verify_okada_consistency(int max_total);

}  // namespace schurcalc
