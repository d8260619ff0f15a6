#include "schurcalc/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "schurcalc/count.hpp"

namespace schurcalc {

long long centralizer_order(const CycleType& rho) {
    __int128 order = 1;
    const auto& parts = rho.parts().parts();
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const auto mult = static_cast<int>(j - i);
        for (int r = 0; r < mult; ++r) order *= parts[i];
        for (int r = 2; r <= mult; ++r) order *= r;
        i = j;
    }
    return static_cast<long long>(order);
}

long long class_size(const CycleType& rho) {
    __int128 factorial = 1;
    for (int k = 2; k <= rho.n(); ++k) factorial *= k;
    return static_cast<long long>(factorial / centralizer_order(rho));
}

namespace {

// Memo for the Murnaghan-Nakayama recursion. Fills are idempotent: concurrent
// callers may recompute a value but always insert the same integer.
std::mutex mn_mutex;
std::map<std::pair<Partition, Partition>, long long> mn_memo;

long long mn_recurse(const Partition& lambda, const Partition& rho) {
    if (lambda.empty()) return 1;  // rho is empty too (sizes stay equal)
    const auto key = std::make_pair(lambda, rho);
    {
        std::lock_guard lock(mn_mutex);
        if (auto it = mn_memo.find(key); it != mn_memo.end()) return it->second;
    }

    const int k = rho.part(1);
    std::vector<int> rest_parts(rho.parts().begin() + 1, rho.parts().end());
    const Partition rest(std::move(rest_parts));

    // Beta-set b_i = lambda_i + (L - i); removing a border strip of length k
    // means lowering one beta number by k onto an unoccupied value, with sign
    // (-1)^{number of beta numbers jumped over}.
    const int L = lambda.length();
    std::vector<int> beta(static_cast<size_t>(L));
    for (int i = 1; i <= L; ++i) beta[static_cast<size_t>(i - 1)] = lambda.part(i) + (L - i);

    long long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - k;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int b : beta)
            if (target < b && b < beta[i]) ++height;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> parts;
        for (int j = 1; j <= L; ++j) {
            const int p = nb[static_cast<size_t>(j - 1)] - (L - j);
            if (p > 0) parts.push_back(p);
        }
        const long long sub = mn_recurse(Partition(std::move(parts)), rest);
        total += (height % 2 == 0) ? sub : -sub;
    }

    std::lock_guard lock(mn_mutex);
    mn_memo.emplace(key, total);
    return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const CycleType& rho) {
    if (lambda.size() != rho.n())
        throw SizeMismatch("mn_character: |lambda| != |rho|");
    return mn_recurse(lambda, rho.parts());
}

CharacterTable::CharacterTable(int n) : n_(n), labels_(partitions_of(n)) {
    values_.resize(labels_.size());
    for (size_t i = 0; i < labels_.size(); ++i) {
        values_[i].resize(labels_.size());
        for (size_t j = 0; j < labels_.size(); ++j)
            values_[i][j] = mn_character(labels_[i], CycleType(labels_[j]));
    }
}

const CharacterTable& CharacterTable::of(int n) {
    if (n < 0 || n > kMaxCharacterTableN)
        throw BoundExceeded("character table bound is n <= " + std::to_string(kMaxCharacterTableN));
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CharacterTable>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return *it->second;
    }
    auto table = std::unique_ptr<CharacterTable>(new CharacterTable(n));
    std::lock_guard lock(mutex);
    auto [it, _] = cache.try_emplace(n, std::move(table));
    return *it->second;
}

long long CharacterTable::value(const Partition& lambda, const CycleType& rho) const {
    const auto row = std::find(labels_.begin(), labels_.end(), lambda);
    const auto col = std::find(labels_.begin(), labels_.end(), rho.parts());
    if (row == labels_.end() || col == labels_.end())
        throw SizeMismatch("character table lookup outside Sigma_" + std::to_string(n_));
    return values_[static_cast<size_t>(row - labels_.begin())][static_cast<size_t>(col - labels_.begin())];
}

namespace {

// Frobenius reciprocity: [lambda : mu, nu] as the inner product of the
// restriction of chi^lambda with chi^mu x chi^nu, summed over pairs of
// conjugacy classes. Exact; the division by |mu|! |nu|! must be remainder
// free.
long long induction_two_factor(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const int a = mu.size();
    const int b = nu.size();
    __int128 sum = 0;
    for (const Partition& rho : partitions_of(a)) {
        const long long xm = mn_character(mu, CycleType(rho));
        if (xm == 0) continue;
        for (const Partition& sigma : partitions_of(b)) {
            const long long xn = mn_character(nu, CycleType(sigma));
            if (xn == 0) continue;
            std::vector<int> merged;
            merged.reserve(static_cast<size_t>(rho.length() + sigma.length()));
            std::merge(rho.parts().begin(), rho.parts().end(), sigma.parts().begin(), sigma.parts().end(),
                       std::back_inserter(merged), std::greater<>());
            const long long xl = mn_character(lambda, CycleType(Partition(std::move(merged))));
            if (xl == 0) continue;
            sum += static_cast<__int128>(class_size(CycleType(rho))) * class_size(CycleType(sigma)) * xm * xn * xl;
        }
    }
    __int128 denom = 1;
    for (int k = 2; k <= a; ++k) denom *= k;
    for (int k = 2; k <= b; ++k) denom *= k;
    if (sum % denom != 0) throw ArithmeticOverflow("induction multiplicity: non-exact division");
    return static_cast<long long>(sum / denom);
}

}  // namespace

long long induction_multiplicity(const Partition& lambda, std::span<const Partition> factors) {
    int total = 0;
    for (const Partition& f : factors) total += f.size();
    if (total != lambda.size()) throw SizeMismatch("induction_multiplicity: factor sizes must sum to |lambda|");
    if (factors.empty()) return lambda.empty() ? 1 : 0;
    if (factors.size() == 1) return lambda == factors[0] ? 1 : 0;
    if (factors.size() == 2) return induction_two_factor(lambda, factors[0], factors[1]);
    // Iterated two-factor induction; associativity is covered by tests.
    const int head = factors[0].size() + factors[1].size();
    long long result = 0;
    for (const Partition& kappa : partitions_of(head)) {
        const long long c = induction_two_factor(kappa, factors[0], factors[1]);
        if (c == 0) continue;
        std::vector<Partition> rest;
        rest.reserve(factors.size() - 1);
        rest.push_back(kappa);
        rest.insert(rest.end(), factors.begin() + 2, factors.end());
        result += c * induction_multiplicity(lambda, rest);
    }
    return result;
}

long long kronecker_multiplicity(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() || mu.size() != nu.size())
        throw SizeMismatch("kronecker_multiplicity: all three partitions must have the same size");
    const int n = lambda.size();
    __int128 sum = 0;
    for (const Partition& rho : partitions_of(n)) {
        const CycleType ct(rho);
        sum += static_cast<__int128>(class_size(ct)) * mn_character(lambda, ct) * mn_character(mu, ct) *
               mn_character(nu, ct);
    }
    __int128 factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    if (sum % factorial != 0)
        throw ArithmeticOverflow("kronecker multiplicity: non-exact division");
    const __int128 result = sum / factorial;
    if (result < 0) throw ArithmeticOverflow("kronecker multiplicity: negative result");
    return static_cast<long long>(result);
}

}  // namespace schurcalc
