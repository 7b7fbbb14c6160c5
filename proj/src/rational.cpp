#include "racahops/rational.hpp"

#include <cassert>
#include <ostream>

namespace racahops {

Rational::Rational(long n, long d) {
    if (d == 0)
        throw ZeroDenominator("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0)
        throw ZeroDenominator("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    const auto slash = s.find('/');
    mpz_class num, den;
    const std::string num_str = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den_str = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (num_str.empty() || den_str.empty() || mpz_set_str(num.get_mpz_t(), num_str.c_str(), 10) != 0 ||
        mpz_set_str(den.get_mpz_t(), den_str.c_str(), 10) != 0)
        throw ParseError("invalid rational: '" + s + "'");
    if (den_str.find('-') != std::string::npos)
        throw ParseError("sign must be on the numerator: '" + s + "'");
    if (den == 0)
        throw ZeroDenominator("rational with zero denominator: '" + s + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

bool Rational::is_integer_in(long lo, long hi) const {
    if (!is_integer())
        return false;
    return q_ >= lo && q_ <= hi;
}

long Rational::to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p())
        throw Error("rational " + str() + " is not a small integer");
    return q_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw ZeroDenominator("division by zero");
    q_ /= o.q_;
    assert_canonical();
    return *this;
}

void Rational::assert_canonical() const {
#ifndef NDEBUG
    assert(sgn(q_.get_den()) > 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    assert(g == 1);
#endif
}

std::string Rational::str() const {
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace racahops
