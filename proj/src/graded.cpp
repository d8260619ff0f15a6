#include "schurcalc/graded.hpp"

#include <charconv>
#include <cstdlib>

namespace schurcalc {

GradedObject GradedObject::line(int degree, Count multiplicity) {
    GradedObject out;
    if (multiplicity < 0) throw ParseError("graded multiplicities must be nonnegative");
    if (multiplicity > 0) out.dims_[degree] = multiplicity;
    return out;
}

GradedObject GradedObject::from_dims(std::map<int, Count> dims) {
    GradedObject out;
    for (const auto& [degree, mult] : dims) {
        if (mult < 0) throw ParseError("graded multiplicities must be nonnegative");
        if (mult > 0) out.dims_[degree] = mult;
    }
    return out;
}

GradedObject GradedObject::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    GradedObject out;
    if (text.empty()) return out;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = text.find(',', pos);
        std::string_view pair = trim(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
        const size_t colon = pair.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("bad graded entry '" + std::string(pair) + "' (expected degree:multiplicity)");
        std::string_view deg_tok = trim(pair.substr(0, colon));
        std::string_view mult_tok = trim(pair.substr(colon + 1));
        int degree = 0;
        long long mult = 0;
        auto [dp, de] = std::from_chars(deg_tok.data(), deg_tok.data() + deg_tok.size(), degree);
        auto [mp, me] = std::from_chars(mult_tok.data(), mult_tok.data() + mult_tok.size(), mult);
        if (de != std::errc{} || dp != deg_tok.data() + deg_tok.size())
            throw ParseError("bad degree '" + std::string(deg_tok) + "'");
        if (me != std::errc{} || mp != mult_tok.data() + mult_tok.size())
            throw ParseError("bad multiplicity '" + std::string(mult_tok) + "'");
        if (mult <= 0) throw ParseError("graded multiplicities must be positive");
        if (out.dims_.contains(degree)) throw ParseError("duplicate degree " + std::to_string(degree));
        out.dims_[degree] = mult;
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

Count GradedObject::multiplicity(int degree) const {
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

Count GradedObject::total_dimension() const {
    Count total = 0;
    for (const auto& [_, mult] : dims_) total = checked_add(total, mult);
    return total;
}

Count GradedObject::even_total() const {
    Count total = 0;
    for (const auto& [degree, mult] : dims_)
        if (degree % 2 == 0) total = checked_add(total, mult);
    return total;
}

Count GradedObject::odd_total() const {
    Count total = 0;
    for (const auto& [degree, mult] : dims_)
        if (degree % 2 != 0) total = checked_add(total, mult);
    return total;
}

GradedObject GradedObject::shifted(int by) const {
    GradedObject out;
    for (const auto& [degree, mult] : dims_) out.dims_[degree + by] = mult;
    return out;
}

GradedObject GradedObject::collapsed_mod2() const {
    GradedObject out;
    const Count even = even_total();
    const Count odd = odd_total();
    if (even > 0) out.dims_[0] = even;
    if (odd > 0) out.dims_[1] = odd;
    return out;
}

std::string GradedObject::to_string() const {
    std::string out;
    for (const auto& [degree, mult] : dims_) {
        if (!out.empty()) out += ',';
        out += std::to_string(degree) + ":" + count_to_string(mult);
    }
    return out;
}

GradedObject direct_sum(const GradedObject& a, const GradedObject& b) {
    std::map<int, Count> dims = a.dims();
    for (const auto& [degree, mult] : b.dims()) {
        auto [it, inserted] = dims.try_emplace(degree, mult);
        if (!inserted) it->second = checked_add(it->second, mult);
    }
    return GradedObject::from_dims(std::move(dims));
}

GradedObject tensor(const GradedObject& a, const GradedObject& b) {
    std::map<int, Count> dims;
    for (const auto& [da, ma] : a.dims())
        for (const auto& [db, mb] : b.dims()) {
            auto [it, inserted] = dims.try_emplace(da + db, 0);
            it->second = checked_add(it->second, checked_mul(ma, mb));
        }
    return GradedObject::from_dims(std::move(dims));
}

GradedObject scaled(const GradedObject& a, Count factor) {
    if (factor < 0) throw ParseError("scaled: factor must be nonnegative");
    std::map<int, Count> dims;
    for (const auto& [degree, mult] : a.dims()) dims[degree] = checked_mul(mult, factor);
    return GradedObject::from_dims(std::move(dims));
}

GradedObject tensor_power(const GradedObject& a, int n) {
    GradedObject out = GradedObject::unit();
    for (int i = 0; i < n; ++i) out = tensor(out, a);
    return out;
}

Count super_dimension(const GradedObject& x) {
    Count total = 0;
    for (const auto& [degree, mult] : x.dims())
        total = checked_add(total, degree % 2 == 0 ? mult : -mult);
    return total;
}

}  // namespace schurcalc
