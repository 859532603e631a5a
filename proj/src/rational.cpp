#include "ypgl2/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "ypgl2/errors.hpp"

namespace ypgl2 {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw Error("cannot parse empty string as rational");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw Error("cannot parse rational: \"" + s + "\"");
    if (v.get_den() == 0) throw Error("rational with zero denominator: \"" + s + "\"");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return v_.get_str();
}

long Rational::to_long() const {
    if (!is_integer()) throw Error("to_long on non-integer rational " + str());
    mpz_class n = v_.get_num();
    if (!n.fits_slong_p()) throw Error("integer out of long range: " + str());
    return n.get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace ypgl2
