#include "keller/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace keller {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    // strict shape check before handing the string to GMP
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto digits = [&](std::size_t& pos) {
        std::size_t start = pos;
        while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return pos > start;
    };
    if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
    if (!digits(i)) throw std::invalid_argument("Rational: malformed literal '" + text + "'");
    if (i < n) {
        if (text[i] != '/') throw std::invalid_argument("Rational: malformed literal '" + text + "'");
        ++i;
        std::size_t den_start = i;
        if (!digits(i) || i != n) throw std::invalid_argument("Rational: malformed literal '" + text + "'");
        if (mpz_class(text.substr(den_start)) == 0)
            throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    }
    mpq_class q(text);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational factorial(std::uint32_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

}  // namespace keller
