#include "nilrev/rational.hpp"

#include <ostream>

namespace nilrev {

Rational::Rational(long n, long d) {
    if (d == 0) throw ZeroInverseError();
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    std::string num = s, den = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (num.empty() || den.empty() || den.find('/') != std::string::npos)
            throw ParseError("malformed rational literal '" + s + "'");
    }
    auto digits_ok = [](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && (t[0] == '+' || t[0] == '-')) i = 1;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw ParseError("malformed rational literal '" + s + "'");
    mpq_class v;
    mpz_class n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    v = mpq_class(n) / mpq_class(d);
    return Rational(v);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw ZeroInverseError();
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::inverse() const {
    if (is_zero()) throw ZeroInverseError();
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(r);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace nilrev
