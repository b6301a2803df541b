#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "vrmat/kernel.hpp"

namespace vrmat {

/// Dense univariate polynomial with Integer coefficients, stored in
/// ascending degree. The zero polynomial is the empty coefficient list;
/// every operation strips trailing zero coefficients.
class Poly {
public:
    Poly() = default;  // zero
    explicit Poly(std::vector<Integer> coeffs);

    static Poly constant(Integer c);
    static Poly indeterminate();  // x

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of x^k (zero beyond the stored length).
    Integer coeff(std::size_t k) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    /// Evaluation by Horner's rule.
    Integer operator()(const Integer& x) const;

    bool operator==(const Poly&) const = default;

    /// Human form, ascending degree: "1 + 3x + x^2"; "0" for zero.
    std::string pretty() const;

    /// JSON array of decimal coefficient strings, ascending degree.
    std::string to_json() const;
    static Poly from_json(const std::string& text);

private:
    std::vector<Integer> coeffs_;
    void normalize();
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

/// c * x^shift * p.
Poly scale_shift(const Poly& p, const Integer& c, std::size_t shift);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace vrmat
