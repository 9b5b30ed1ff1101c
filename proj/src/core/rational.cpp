#include "kstab/rational.hpp"

#include "kstab/error.hpp"

#include <cctype>

namespace kstab {

Rational ratio(const Integer& p, const Integer& q)
{
    if (q == 0) {
        throw InputError("rational with zero denominator");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole)
{
    if (digits.empty()) {
        throw InputError("malformed rational \"" + std::string(whole) + "\"");
    }
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw InputError("malformed rational \"" + std::string(whole) + "\"");
        }
    }
    return Integer(std::string(digits), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    Integer num = parse_integer(body.substr(0, slash), text);
    Integer den = 1;
    if (slash != std::string_view::npos) {
        den = parse_integer(body.substr(slash + 1), text);
    }
    if (negative) {
        num = -num;
    }
    return ratio(num, den);
}

Integer floor(const Rational& q)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Integer ceil(const Rational& q)
{
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

} // namespace kstab
