#include "kstab/multipoly.hpp"

#include "kstab/error.hpp"

#include <sstream>

namespace kstab {

MultiPoly MultiPoly::constant(std::size_t arity, const Rational& c)
{
    MultiPoly p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index)
{
    if (index >= arity) {
        throw InputError("variable index out of range");
    }
    Exponents e(arity, 0);
    e[index] = 1;
    MultiPoly p(arity);
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::term(const Exponents& exponents, const Rational& c)
{
    MultiPoly p(exponents.size());
    p.add_term(exponents, c);
    return p;
}

Rational MultiPoly::coefficient(const Exponents& exponents) const
{
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::total_degree() const
{
    unsigned best = 0;
    for (const auto& [e, c] : terms_) {
        unsigned d = 0;
        for (unsigned x : e) {
            d += x;
        }
        best = std::max(best, d);
    }
    return best;
}

void MultiPoly::add_term(const Exponents& exponents, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void MultiPoly::check_arity(const MultiPoly& other) const
{
    if (arity_ != other.arity_) {
        throw InputError("polynomial arity mismatch");
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs)
{
    check_arity(rhs);
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs)
{
    check_arity(rhs);
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) {
        x *= c;
    }
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out = *this;
    for (auto& [e, x] : out.terms_) {
        x = -x;
    }
    return out;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs)
{
    lhs.check_arity(rhs);
    MultiPoly out(lhs.arity_);
    Exponents e(lhs.arity_);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly divide_exact(const MultiPoly& lhs, const MultiPoly& rhs)
{
    lhs.check_arity(rhs);
    if (rhs.is_zero()) {
        throw InputError("division by the zero polynomial");
    }
    // Repeatedly cancel the lex-leading term of the remainder.
    const auto& [lead_e, lead_c] = *rhs.terms_.rbegin();
    MultiPoly remainder = lhs;
    MultiPoly quotient(lhs.arity_);
    Exponents q_e(lhs.arity_);
    while (!remainder.is_zero()) {
        const auto& [re, rc] = *remainder.terms_.rbegin();
        for (std::size_t i = 0; i < q_e.size(); ++i) {
            if (re[i] < lead_e[i]) {
                throw InputError("polynomial division is not exact");
            }
            q_e[i] = re[i] - lead_e[i];
        }
        const Rational q_c = rc / lead_c;
        quotient.add_term(q_e, q_c);
        remainder -= MultiPoly::term(q_e, q_c) * rhs;
    }
    return quotient;
}

std::string MultiPoly::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            os << '-';
        }
        first = false;
        const Rational mag = abs(c);
        bool constant = true;
        for (unsigned x : e) {
            constant = constant && x == 0;
        }
        if (mag != 1 || constant) {
            os << kstab::to_string(mag);
        }
        bool need_star = mag != 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            os << (need_star ? "*" : "") << 'u' << (i + 1);
            if (e[i] > 1) {
                os << '^' << e[i];
            }
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly vandermonde_product(std::size_t n)
{
    MultiPoly out = MultiPoly::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            out = out * (MultiPoly::variable(n, i) - MultiPoly::variable(n, j));
        }
    }
    return out;
}

} // namespace kstab
