#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schurcalc/errors.hpp"

namespace schurcalc {

// Partitions of size > 30 are out of scope for every operation here.
inline constexpr int kMaxPartitionSize = 30;

// A rectangle (p)^q: q rows, each of length p. Kept as named fields because
// the width/rows orientation is the most error-prone convention in this
// domain; every consumer spells it out.
struct RectangleShape {
    int width = 0;  // p, the common part value
    int rows = 0;   // q, the number of parts
    friend bool operator==(const RectangleShape&, const RectangleShape&) = default;
};

// Weakly decreasing sequence of positive integers. The empty partition is a
// first-class value; trailing zeros are never stored, so equality is
// structural.
class Partition {
public:
    Partition() = default;
    // Throws ParseError unless parts are positive and weakly decreasing
    // (trailing zeros are stripped first).
    explicit Partition(std::vector<int> parts);

    // Text format: "0" for the empty partition, else comma-separated positive
    // integers, weakly decreasing. Rejects rather than re-sorts.
    static Partition parse(std::string_view text);

    static Partition rectangle(int width, int rows);  // (width)^rows
    static Partition row(int n) { return rectangle(n, n > 0 ? 1 : 0); }
    static Partition column(int n) { return rectangle(n > 0 ? 1 : 0, n); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }                       // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const;  // 1-based; 0 beyond the length

    Partition transposed() const;
    std::optional<RectangleShape> as_rectangle() const;  // nullopt for empty / non-rectangles

    std::string to_string() const;  // inverse of parse

    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// [mu] subset of [lambda], i.e. mu_i <= lambda_i for all i.
bool contains(const Partition& mu, const Partition& lambda);

// Cell (row, col) of the diagram, 1-based: col <= lambda_row.
bool has_cell(const Partition& lambda, int row, int col);

// All partitions of n in reverse-lexicographic order ((n) first, (1)^n last).
// Downstream code may rely on determinism but not on the particular order.
std::vector<Partition> partitions_of(int n, int max_n = kMaxPartitionSize);

// Number of standard Young tableaux of shape lambda, by the hook length
// formula with exact division (remainder asserted zero).
long long specht_dim(const Partition& lambda);

// (size, reverse-lex) order used whenever mixed-size partition lists are
// emitted: smaller sizes first, reverse-lexicographic within a size.
bool size_revlex_less(const Partition& a, const Partition& b);

}  // namespace schurcalc
