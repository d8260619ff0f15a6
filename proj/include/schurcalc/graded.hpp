#pragma once

#include <map>
#include <string>
#include <string_view>

#include "schurcalc/count.hpp"

namespace schurcalc {

// Finitely supported map from integer degrees to positive multiplicities:
// the isomorphism class of a bounded complex of rational vector spaces.
// The empty map is the zero object; {0:1} is the tensor unit.
class GradedObject {
public:
    GradedObject() = default;  // zero object
    static GradedObject zero() { return {}; }
    static GradedObject unit() { return line(0); }
    static GradedObject line(int degree, Count multiplicity = 1);
    static GradedObject from_dims(std::map<int, Count> dims);  // validates positivity

    // Text format: comma-separated "degree:multiplicity" pairs with distinct
    // degrees and positive multiplicities, e.g. "-1:1,0:2,1:1". The empty
    // string is the zero object.
    static GradedObject parse(std::string_view text);

    bool is_zero() const { return dims_.empty(); }
    Count multiplicity(int degree) const;
    const std::map<int, Count>& dims() const { return dims_; }

    Count total_dimension() const;
    Count even_total() const;  // sum over even degrees
    Count odd_total() const;   // sum over odd degrees

    GradedObject shifted(int by) const;        // degree d -> d + by
    GradedObject collapsed_mod2() const;       // totals in degrees 0 and 1

    std::string to_string() const;  // inverse of parse ("" for zero)

    bool operator==(const GradedObject&) const = default;

private:
    std::map<int, Count> dims_;
};

GradedObject direct_sum(const GradedObject& a, const GradedObject& b);
GradedObject tensor(const GradedObject& a, const GradedObject& b);
GradedObject scaled(const GradedObject& a, Count factor);  // factor >= 0; 0 gives zero
GradedObject tensor_power(const GradedObject& a, int n);

// Euler characteristic sum_d (-1)^d dims[d].
Count super_dimension(const GradedObject& x);

}  // namespace schurcalc
