#pragma once

#include "kstab/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace kstab {

/// Univariate polynomial in k with rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients);
    UniPoly(std::initializer_list<Rational> coefficients);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, std::size_t degree);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of k^i; zero past the degree.
    Rational coefficient(std::size_t i) const;
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    Rational operator()(const Rational& k) const;

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
    friend UniPoly operator*(UniPoly lhs, const UniPoly& rhs) { return lhs *= rhs; }
    friend UniPoly operator*(UniPoly lhs, const Rational& c) { return lhs *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly rhs) { return rhs *= c; }
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Human-readable form in the variable `var`, e.g. "-1/2*k^2 - 1/2*k".
    std::string to_string(char var = 'k') const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

} // namespace kstab
