#include "schurcalc/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace schurcalc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw ParseError("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw ParseError("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw ParseError("empty partition text (use \"0\" for the empty partition)");
    if (text == "0") return Partition{};
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("bad partition token '" + std::string(tok) + "'");
        if (value <= 0) throw ParseError("partition parts must be positive");
        if (!parts.empty() && parts.back() < value)
            throw ParseError("partition parts must be weakly decreasing");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::rectangle(int width, int rows) {
    if (width < 0 || rows < 0) throw ParseError("rectangle dimensions must be nonnegative");
    if (width == 0 || rows == 0) return Partition{};
    return Partition(std::vector<int>(static_cast<size_t>(rows), width));
}

int Partition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
}

Partition Partition::transposed() const {
    if (parts_.empty()) return {};
    std::vector<int> t(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[static_cast<size_t>(j)];
    return Partition(std::move(t));
}

std::optional<RectangleShape> Partition::as_rectangle() const {
    if (parts_.empty()) return std::nullopt;
    if (parts_.front() != parts_.back()) return std::nullopt;
    return RectangleShape{parts_.front(), length()};
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool contains(const Partition& mu, const Partition& lambda) {
    if (mu.length() > lambda.length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

bool has_cell(const Partition& lambda, int row, int col) {
    return row >= 1 && col >= 1 && row <= lambda.length() && col <= lambda.part(row);
}

namespace {

void emit_partitions(int remaining, int cap, std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int first = std::min(remaining, cap); first >= 1; --first) {
        acc.push_back(first);
        emit_partitions(remaining - first, first, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_n) {
    if (n < 0) throw ParseError("partitions_of: n must be nonnegative");
    if (n > max_n || max_n > kMaxPartitionSize)
        throw BoundExceeded("partitions_of: n exceeds the configured bound");
    std::vector<Partition> out;
    std::vector<int> acc;
    emit_partitions(n, n, acc, out);
    return out;
}

long long specht_dim(const Partition& lambda) {
    if (lambda.empty()) throw EmptyPartition("specht_dim of the empty partition");
    if (lambda.size() > kMaxPartitionSize) throw BoundExceeded("specht_dim: |lambda| > 30");
    const Partition t = lambda.transposed();
    __int128 hook_product = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            const int hook = (lambda.part(i) - j) + (t.part(j) - i) + 1;
            hook_product *= hook;
        }
    __int128 factorial = 1;
    for (int k = 2; k <= lambda.size(); ++k) factorial *= k;
    if (factorial % hook_product != 0) throw ArithmeticOverflow("hook length formula: non-exact division");
    const __int128 dim = factorial / hook_product;
    return static_cast<long long>(dim);
}

bool size_revlex_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();  // reverse-lexicographic within a size
}

}  // namespace schurcalc
