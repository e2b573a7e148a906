#include "filiform/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace filiform {

Rational rat_from_string(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("rational: empty string");
    std::size_t slash = s.find('/');
    auto check_int = [&](std::size_t from, std::size_t to) {
        if (from >= to)
            throw std::invalid_argument("rational: malformed '" + s + "'");
        std::size_t k = from;
        if (s[k] == '-')
            ++k;
        if (k >= to)
            throw std::invalid_argument("rational: malformed '" + s + "'");
        for (; k < to; ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                throw std::invalid_argument("rational: malformed '" + s + "'");
    };
    check_int(0, slash == std::string::npos ? s.size() : slash);
    if (slash != std::string::npos)
        check_int(slash + 1, s.size());
    Rational q(s);
    if (q.get_den() == 0)
        throw std::invalid_argument("rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rational& q) {
    return q.get_str();
}

bool rat_is_canonical(const Rational& q) {
    if (q.get_den() <= 0)
        return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (q.get_num() == 0)
        return q.get_den() == 1;
    return g == 1;
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(r);
}

}  // namespace filiform
