#pragma once

#include "kstab/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace kstab {

using Exponents = std::vector<unsigned>;

/// Sparse polynomial in a fixed number of variables u_1..u_n over Q.
/// Zero coefficients are never stored. Terms are ordered lexicographically
/// by exponent vector, which is the lex monomial order with u_1 > u_2 > ...
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational>;

    explicit MultiPoly(std::size_t arity = 0) : arity_(arity) {}

    static MultiPoly constant(std::size_t arity, const Rational& c);
    /// The variable u_{index+1}.
    static MultiPoly variable(std::size_t arity, std::size_t index);
    static MultiPoly term(const Exponents& exponents, const Rational& c);

    std::size_t arity() const noexcept { return arity_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    Rational coefficient(const Exponents& exponents) const;
    unsigned total_degree() const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend MultiPoly operator*(MultiPoly lhs, const Rational& c) { return lhs *= c; }
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// Exact quotient lhs / rhs. Throws InputError if rhs is zero or does not divide lhs.
    friend MultiPoly divide_exact(const MultiPoly& lhs, const MultiPoly& rhs);

    std::string to_string() const;

private:
    void add_term(const Exponents& exponents, const Rational& c);
    void check_arity(const MultiPoly& other) const;

    std::size_t arity_;
    TermMap terms_;
};

/// The Vandermonde product prod_{i<j} (u_i - u_j) in n variables, expanded.
MultiPoly vandermonde_product(std::size_t n);

} // namespace kstab
