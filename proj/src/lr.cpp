#include "schurcalc/lr.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace schurcalc {

void SchurExpansion::add(const Partition& lambda, long long multiplicity) {
    if (multiplicity == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, multiplicity);
    if (!inserted) {
        it->second += multiplicity;
        if (it->second == 0) terms_.erase(it);
    }
}

long long SchurExpansion::multiplicity(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? 0 : it->second;
}

namespace {

// Backtracking count of LR fillings. Cells are visited in reverse reading
// order (rows top to bottom, right to left within a row), which is exactly
// the order in which the lattice-word condition must hold.
struct LRCounter {
    const Partition& lambda;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::pair<int, int>> cells;     // (row, col), 1-based
    std::vector<std::vector<int>> grid;          // 0 = unfilled
    std::vector<int> used;                       // used[v] = copies of v placed
    long long total = 0;

    LRCounter(const Partition& l, const Partition& m, const Partition& n) : lambda(l), mu(m), nu(n) {
        grid.assign(static_cast<size_t>(lambda.length()) + 1,
                    std::vector<int>(static_cast<size_t>(lambda.part(1)) + 2, 0));
        for (int i = 1; i <= lambda.length(); ++i)
            for (int j = lambda.part(i); j > mu.part(i); --j) cells.emplace_back(i, j);
        used.assign(static_cast<size_t>(nu.length()) + 1, 0);
    }

    bool in_skew(int i, int j) const { return j > mu.part(i) && j <= lambda.part(i); }

    void run(size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        const auto [i, j] = cells[idx];
        // Row-weak bound from the right neighbor, column-strict bound from
        // the cell above (both already placed if present in the skew shape).
        int hi = nu.length();
        if (i <= lambda.length() && in_skew(i, j + 1)) hi = std::min(hi, grid[i][j + 1]);
        int lo = 1;
        if (i > 1 && in_skew(i - 1, j)) lo = std::max(lo, grid[i - 1][j] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (used[v] >= nu.part(v)) continue;
            if (v >= 2 && used[v] + 1 > used[v - 1]) continue;  // lattice word
            ++used[v];
            grid[i][j] = v;
            run(idx + 1);
            grid[i][j] = 0;
            --used[v];
        }
    }
};

std::mutex lr_mutex;
std::map<std::tuple<Partition, Partition, Partition>, long long> lr_memo;

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lambda.size()) return 0;
    if (!contains(mu, lambda)) return 0;
    if (nu.empty()) return 1;  // lambda == mu at this point
    auto key = std::make_tuple(lambda, mu, nu);
    {
        std::lock_guard lock(lr_mutex);
        if (auto it = lr_memo.find(key); it != lr_memo.end()) return it->second;
    }
    LRCounter counter(lambda, mu, nu);
    counter.run(0);
    std::lock_guard lock(lr_mutex);
    lr_memo.emplace(std::move(key), counter.total);
    return counter.total;
}

SchurExpansion tensor_product_expansion(const Partition& mu, const Partition& nu) {
    SchurExpansion out;
    for (const Partition& lambda : partitions_of(mu.size() + nu.size()))
        out.add(lambda, lr_coefficient(lambda, mu, nu));
    return out;
}

long long iterated_box_multiplicity(const Partition& lambda, const Partition& mu) {
    if (mu.size() > lambda.size()) return 0;
    if (mu.size() == lambda.size()) return lambda == mu ? 1 : 0;
    const Partition box = Partition::row(1);
    long long total = 0;
    // One Pieri step: every kappa = mu + one box with [kappa : mu, (1)] != 0.
    for (const Partition& kappa : partitions_of(mu.size() + 1)) {
        const long long c = lr_coefficient(kappa, mu, box);
        if (c != 0) total += c * iterated_box_multiplicity(lambda, kappa);
    }
    return total;
}

std::vector<Partition> rectangular_lr_support(int p, int q, int r, int s) {
    if (p < 1 || q < 1 || r < 1 || s < 1) throw ParseError("rectangular_lr_support: sides must be positive");
    if (q < s) {
        std::swap(p, r);
        std::swap(q, s);
    }
    // Free choices are lambda_1 >= ... >= lambda_s in [max(p,r), p+r]; rows
    // s+1..q are pinned to p and rows q+1..q+s are the complements
    // p+r-lambda_s, ..., p+r-lambda_1 (weakly decreasing automatically).
    std::vector<Partition> out;
    std::vector<int> head(static_cast<size_t>(s));
    const int lo = std::max(p, r);
    auto emit = [&] {
        std::vector<int> parts(head.begin(), head.end());
        parts.insert(parts.end(), static_cast<size_t>(q - s), p);
        for (int i = s - 1; i >= 0; --i) parts.push_back(p + r - head[static_cast<size_t>(i)]);
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        out.emplace_back(std::move(parts));
    };
    auto rec = [&](auto&& self, int i, int cap) -> void {
        if (i == s) {
            emit();
            return;
        }
        for (int v = cap; v >= lo; --v) {
            head[static_cast<size_t>(i)] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, p + r);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.parts() > b.parts(); });
    return out;
}

VerificationReport verify_inclusions_equivalence(int max_size) {
    if (max_size < 0 || max_size > 10) throw BoundExceeded("verify_inclusions_equivalence: max_size <= 10");
    VerificationReport report{.suite = "inclusions"};
    for (int n = 0; n <= max_size; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (int m = 0; m <= n; ++m) {
                for (const Partition& mu : partitions_of(m)) {
                    bool exists_nu = false;
                    for (const Partition& nu : partitions_of(n - m))
                        if (lr_coefficient(lambda, mu, nu) != 0) {
                            exists_nu = true;
                            break;
                        }
                    const bool inclusion = contains(mu, lambda);
                    const bool boxes = iterated_box_multiplicity(lambda, mu) != 0;
                    ++report.checked;
                    if (exists_nu != inclusion || inclusion != boxes)
                        report.fail("lambda=" + lambda.to_string() + " mu=" + mu.to_string() +
                                    " exists_nu=" + std::to_string(exists_nu) +
                                    " inclusion=" + std::to_string(inclusion) + " boxes=" + std::to_string(boxes));
                }
            }
        }
    }
    return report;
}

VerificationReport verify_deligne_110(int max_size, int max_corner) {
    if (max_size < 0 || max_size > 10) throw BoundExceeded("verify_deligne_110: max_size <= 10");
    if (max_corner < 0 || max_corner > 4) throw BoundExceeded("verify_deligne_110: max_corner <= 4");
    VerificationReport report{.suite = "deligne110"};
    for (int n = 0; n <= max_size; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            // Collect the support of all two-factor decompositions once.
            std::vector<std::pair<Partition, Partition>> pairs;
            for (int m = 0; m <= n; ++m)
                for (const Partition& mu : partitions_of(m))
                    for (const Partition& nu : partitions_of(n - m))
                        if (lr_coefficient(lambda, mu, nu) != 0) pairs.emplace_back(mu, nu);
            for (int p = 0; p <= max_corner; ++p)
                for (int q = 0; q <= max_corner; ++q)
                    for (int r = 0; r <= max_corner; ++r)
                        for (int s = 0; s <= max_corner; ++s) {
                            if (!has_cell(lambda, p + r + 1, q + s + 1)) continue;
                            for (const auto& [mu, nu] : pairs) {
                                ++report.checked;
                                if (!has_cell(mu, p + 1, q + 1) && !has_cell(nu, r + 1, s + 1))
                                    report.fail("lambda=" + lambda.to_string() + " mu=" + mu.to_string() +
                                                " nu=" + nu.to_string() + " corners=(" + std::to_string(p) + "," +
                                                std::to_string(q) + "," + std::to_string(r) + "," +
                                                std::to_string(s) + ")");
                            }
                        }
        }
    }
    return report;
}

}  // namespace schurcalc
