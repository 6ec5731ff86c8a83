#pragma once

#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "mdpcc/finite_field.hpp"

namespace mdpcc {

// Sentinel degree of the zero polynomial. It must never take part in degree
// arithmetic; guard with is_zero() first.
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();

// Univariate polynomial over a finite field. Coefficients ascending, no
// trailing zeros; the zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly(Field field, std::vector<FieldElement> coeffs);

    static Poly zero(const Field& f) { return Poly(f, {}); }
    static Poly constant(const Field& f, FieldElement c) { return Poly(f, {c}); }
    static Poly one(const Field& f) { return constant(f, f.one()); }
    static Poly monomial(const Field& f, FieldElement c, int deg);
    // Convenience for fixtures: integer coefficients reduced into the prime
    // subfield, e.g. from_ints(GF3, {1, 2}) == 1 + 2z.
    static Poly from_ints(const Field& f, std::initializer_list<std::int64_t> cs);

    const Field& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kZeroPolyDegree : static_cast<int>(coeffs_.size()) - 1; }
    FieldElement coeff(int i) const;
    FieldElement leading_coeff() const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly shifted(int k) const;  // multiply by z^k
    Poly scaled(FieldElement c) const;
    Poly monic() const;  // monic associate; zero stays zero
    FieldElement eval(FieldElement x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

private:
    Field field_;
    std::vector<FieldElement> coeffs_;
};

// Quotient and remainder; b must be nonzero over the same field.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Division that must be exact; throws std::logic_error on a nonzero remainder.
Poly exact_div(const Poly& a, const Poly& b);
// Monic greatest common divisor; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

std::string to_string(const Poly& f);

}  // namespace mdpcc
