#include "nilrev/scalar.hpp"

#include <cctype>
#include <ostream>

#include "nilrev/errors.hpp"

namespace nilrev {

int ring_dim(Ring r) {
    switch (r) {
        case Ring::Rat: return 1;
        case Ring::Gauss: return 2;
        case Ring::Quat: return 4;
    }
    return 0;
}

const char* ring_name(Ring r) {
    switch (r) {
        case Ring::Rat: return "rat";
        case Ring::Gauss: return "gauss";
        case Ring::Quat: return "quat";
    }
    return "?";
}

Ring ring_from_name(const std::string& name) {
    if (name == "rat") return Ring::Rat;
    if (name == "gauss") return Ring::Gauss;
    if (name == "quat") return Ring::Quat;
    throw ParseError("unknown ring '" + name + "' (expected rat|gauss|quat)");
}

Scalar Scalar::integer(Ring r, long v) {
    Scalar s(r);
    s.c_[0] = Rational(v);
    return s;
}

Scalar Scalar::rational(Ring r, const Rational& a) {
    Scalar s(r);
    s.c_[0] = a;
    return s;
}

Scalar Scalar::gauss(const Rational& re, const Rational& im) {
    Scalar s(Ring::Gauss);
    s.c_[0] = re;
    s.c_[1] = im;
    return s;
}

Scalar Scalar::quat(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    Scalar s(Ring::Quat);
    s.c_ = {a, b, c, d};
    return s;
}

Scalar Scalar::from_components(Ring r, const std::array<Rational, 4>& c) {
    for (int i = ring_dim(r); i < 4; ++i)
        if (!c[static_cast<std::size_t>(i)].is_zero())
            throw RingMismatchError("nonzero component outside ring dimension");
    Scalar s(r);
    s.c_ = c;
    return s;
}

bool Scalar::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Scalar::is_one() const {
    return c_[0].is_one() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool Scalar::equals_rational(const Rational& r) const {
    return c_[0] == r && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

namespace {
void require_same_ring(const Scalar& x, const Scalar& y) {
    if (x.ring() != y.ring())
        throw RingMismatchError(std::string("scalar rings differ: ") + ring_name(x.ring()) + " vs " + ring_name(y.ring()));
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_ring(*this, o);
    Scalar r(ring_);
    for (int i = 0; i < ring_dim(ring_); ++i)
        r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] + o.c_[static_cast<std::size_t>(i)];
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_ring(*this, o);
    Scalar r(ring_);
    for (int i = 0; i < ring_dim(ring_); ++i)
        r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] - o.c_[static_cast<std::size_t>(i)];
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_ring(*this, o);
    Scalar r(ring_);
    const auto& x = c_;
    const auto& y = o.c_;
    switch (ring_) {
        case Ring::Rat:
            r.c_[0] = x[0] * y[0];
            break;
        case Ring::Gauss:
            r.c_[0] = x[0] * y[0] - x[1] * y[1];
            r.c_[1] = x[0] * y[1] + x[1] * y[0];
            break;
        case Ring::Quat:
            r.c_[0] = x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
            r.c_[1] = x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
            r.c_[2] = x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1];
            r.c_[3] = x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0];
            break;
    }
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r(ring_);
    for (std::size_t i = 0; i < 4; ++i) r.c_[i] = -c_[i];
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (ring_ != o.ring_) return false;
    for (std::size_t i = 0; i < 4; ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

Scalar Scalar::conj() const {
    Scalar r(ring_);
    r.c_[0] = c_[0];
    for (std::size_t i = 1; i < 4; ++i) r.c_[i] = -c_[i];
    return r;
}

Rational Scalar::norm() const {
    Rational n;
    for (const auto& x : c_) n += x * x;
    return n;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ZeroInverseError();
    Rational ninv = norm().inverse();
    Scalar r = conj();
    for (std::size_t i = 0; i < 4; ++i) r.c_[i] *= ninv;
    return r;
}

std::string Scalar::str() const {
    if (ring_ == Ring::Rat) return c_[0].str();
    static const char* units[4] = {"", "i", "j", "k"};
    std::string out;
    for (int i = 0; i < ring_dim(ring_); ++i) {
        const Rational& v = c_[static_cast<std::size_t>(i)];
        if (v.is_zero()) continue;
        std::string term;
        Rational a = v.abs();
        if (i == 0) {
            term = a.str();
        } else if (a.is_one()) {
            term = units[i];
        } else {
            term = a.str() + units[i];
        }
        if (out.empty())
            out += v.is_negative() ? "-" + term : term;
        else
            out += (v.is_negative() ? "-" : "+") + term;
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

RatMatrix left_mul_matrix(const Scalar& q) {
    const int d = ring_dim(q.ring());
    const Rational& a = q.comp(0);
    const Rational& b = q.comp(1);
    const Rational& c = q.comp(2);
    const Rational& e = q.comp(3);
    RatMatrix m(d, d);
    m(0, 0) = a;
    if (d >= 2) {
        m(0, 1) = -b;
        m(1, 0) = b;
        m(1, 1) = a;
    }
    if (d == 4) {
        m(0, 2) = -c; m(0, 3) = -e;
        m(1, 2) = -e; m(1, 3) = c;
        m(2, 0) = c;  m(2, 1) = e;  m(2, 2) = a; m(2, 3) = -b;
        m(3, 0) = e;  m(3, 1) = -c; m(3, 2) = b; m(3, 3) = a;
    }
    return m;
}

RatMatrix right_mul_matrix(const Scalar& q) {
    const int d = ring_dim(q.ring());
    if (d < 4) return left_mul_matrix(q);  // commutative rings
    const Rational& a = q.comp(0);
    const Rational& b = q.comp(1);
    const Rational& c = q.comp(2);
    const Rational& e = q.comp(3);
    RatMatrix m(4, 4);
    m(0, 0) = a;  m(0, 1) = -b; m(0, 2) = -c; m(0, 3) = -e;
    m(1, 0) = b;  m(1, 1) = a;  m(1, 2) = e;  m(1, 3) = -c;
    m(2, 0) = c;  m(2, 1) = -e; m(2, 2) = a;  m(2, 3) = b;
    m(3, 0) = e;  m(3, 1) = c;  m(3, 2) = -b; m(3, 3) = a;
    return m;
}

namespace {

struct TermParser {
    const std::string& s;  // whitespace already stripped
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    Rational parse_number() {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) throw ParseError("expected digits in scalar literal", 0, static_cast<int>(start + 1));
        std::string num = s.substr(start, pos - start);
        if (!done() && peek() == '/') {
            ++pos;
            std::size_t dstart = pos;
            while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
            if (pos == dstart) throw ParseError("expected denominator digits", 0, static_cast<int>(dstart + 1));
            return Rational::from_string(num + "/" + s.substr(dstart, pos - dstart));
        }
        return Rational::from_string(num);
    }
};

int unit_index(char ch) {
    switch (ch) {
        case 'i': return 1;
        case 'j': return 2;
        case 'k': return 3;
        default: return -1;
    }
}

}  // namespace

Scalar parse_scalar(const std::string& text, Ring ring) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty scalar literal");

    std::array<Rational, 4> comps{};
    TermParser tp{s};
    bool first = true;
    while (!tp.done()) {
        bool negative = false;
        if (tp.peek() == '+' || tp.peek() == '-') {
            negative = tp.peek() == '-';
            ++tp.pos;
            if (tp.done()) throw ParseError("dangling sign in scalar literal", 0, static_cast<int>(tp.pos));
        } else if (!first) {
            throw ParseError("expected '+' or '-' between scalar terms", 0, static_cast<int>(tp.pos + 1));
        }
        first = false;

        Rational coeff(1);
        bool has_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(tp.peek()))) {
            coeff = tp.parse_number();
            has_coeff = true;
        }
        int unit = 0;
        if (!tp.done()) {
            int u = unit_index(tp.peek());
            if (u > 0) {
                unit = u;
                ++tp.pos;
            } else if (!has_coeff) {
                throw ParseError(std::string("unexpected character '") + tp.peek() + "' in scalar literal",
                                 0, static_cast<int>(tp.pos + 1));
            }
        }
        if (!has_coeff && unit == 0)
            throw ParseError("empty term in scalar literal", 0, static_cast<int>(tp.pos + 1));
        if (unit >= ring_dim(ring))
            throw ParseError(std::string("unit '") + "ijk"[unit - 1] + "' not available in ring " + ring_name(ring),
                             0, static_cast<int>(tp.pos));
        comps[static_cast<std::size_t>(unit)] += negative ? -coeff : coeff;
    }
    return Scalar::from_components(ring, comps);
}

}  // namespace nilrev
