#include "kstab/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace kstab {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients)
{
    trim();
}

UniPoly UniPoly::constant(const Rational& c)
{
    return UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return UniPoly(std::move(coeffs));
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational UniPoly::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::operator()(const Rational& k) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * k + *it;
    }
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs)
{
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) {
        x *= c;
    }
    trim();
    return *this;
}

std::string UniPoly::to_string(char var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (first) {
            os << (c < 0 ? "-" : "");
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << kstab::to_string(mag);
            continue;
        }
        if (mag != 1) {
            os << kstab::to_string(mag) << '*';
        }
        os << var;
        if (i > 1) {
            os << '^' << i;
        }
    }
    return os.str();
}

} // namespace kstab
