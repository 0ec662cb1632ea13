#include "relent/scalar.hpp"

#include <cmath>
#include <cstdlib>

namespace relent {

namespace {

Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

}  // namespace

Rat::Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("division by zero");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

int Rat::cmp(const Rat& a, const Rat& b) {
    Int lhs = a.num_ * b.den_ - b.num_ * a.den_;
    return lhs == 0 ? 0 : (lhs < 0 ? -1 : 1);
}

Int Rat::floor() const {
    Int q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
}

double Rat::to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

std::string Rat::str() const { return num_.str() + "/" + den_.str(); }

bool is_squarefree(long d) {
    if (d < 0) return false;
    if (d <= 1) return true;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

Scalar::Scalar(Rat u, Rat v, long d) : u_(std::move(u)), v_(std::move(v)), d_(d) {
    if (v_.is_zero()) {
        d_ = 0;
        return;
    }
    if (d_ == 0) throw std::domain_error("nonzero radical part with d = 0");
    if (d_ == 1 || !is_squarefree(d_)) throw std::domain_error("discriminant must be 0 or a square-free integer >= 2");
}

namespace {

// Combined discriminant of two scalars; at most one may be rational-free.
long merge_disc(long a, long b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a != b) throw FieldMismatch{};
    return a;
}

}  // namespace

int Scalar::sign() const {
    int su = u_.sign();
    int sv = v_.sign();
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // Opposite signs: compare |u| vs |v|*sqrt(d) by squaring.
    Rat t = u_ * u_ - v_ * v_ * Rat(d_);
    int st = t.sign();
    return su > 0 ? st : -st;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) { return (a - b).sign(); }

Scalar Scalar::operator-() const {
    Scalar r;
    r.u_ = -u_;
    r.v_ = -v_;
    r.d_ = d_;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    long d = merge_disc(a.d_, b.d_);
    Rat v = a.v_ + b.v_;
    return v.is_zero() ? Scalar(a.u_ + b.u_) : Scalar(a.u_ + b.u_, std::move(v), d);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    long d = merge_disc(a.d_, b.d_);
    Rat u = a.u_ * b.u_ + a.v_ * b.v_ * Rat(d);
    Rat v = a.u_ * b.v_ + a.v_ * b.u_;
    return v.is_zero() ? Scalar(u) : Scalar(u, v, d);
}

Scalar Scalar::reciprocal() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (d_ == 0) return Scalar(Rat(1) / u_);
    // 1/(u + v sqrt d) = (u - v sqrt d) / (u^2 - v^2 d); the norm is nonzero
    // because sqrt(d) is irrational.
    Rat norm = u_ * u_ - v_ * v_ * Rat(d_);
    return Scalar(u_ / norm, -(v_ / norm), d_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.reciprocal(); }

Int Scalar::floor() const {
    double est = to_double();
    if (!std::isfinite(est)) est = 0.0;
    Int k = static_cast<long long>(std::floor(est));
    while (Scalar(Rat(k)) > *this) --k;
    while (Scalar(Rat(k + 1)) <= *this) ++k;
    return k;
}

Int Scalar::ceil() const {
    Int f = floor();
    return *this == Scalar(Rat(f)) ? f : f + 1;
}

double Scalar::to_double() const { return u_.to_double() + v_.to_double() * std::sqrt(static_cast<double>(d_)); }

std::string Scalar::str() const {
    if (d_ == 0) return u_.str();
    std::string out = u_.str();
    if (v_.sign() < 0) {
        out += "-" + (-v_).str();
    } else {
        out += "+" + v_.str();
    }
    out += "*sqrt(" + std::to_string(d_) + ")";
    return out;
}

namespace {

// Parses "p" or "p/q" from text[pos..), advancing pos.
Rat parse_rat(const std::string& s, size_t& pos) {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw std::invalid_argument("bad scalar literal: " + s);
    Int num(s.substr(digits, pos - digits));
    if (neg) num = -num;
    Int den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw std::invalid_argument("bad scalar literal: " + s);
        den = Int(s.substr(dstart, pos - dstart));
    }
    return Rat(num, den);
}

}  // namespace

Scalar Scalar::parse(const std::string& text, long expect_d) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw std::invalid_argument("empty scalar literal");

    size_t pos = 0;
    Rat u(0), v(0);
    long d = 0;
    bool have_radical = false;

    Rat first = parse_rat(s, pos);
    if (pos < s.size() && s[pos] == '*') {
        // The whole leading term is a radical coefficient: "r/s*sqrt(d)".
        v = first;
        have_radical = true;
    } else {
        u = first;
    }

    if (!have_radical && pos < s.size()) {
        if (s[pos] != '+' && s[pos] != '-') throw std::invalid_argument("bad scalar literal: " + text);
        v = parse_rat(s, pos);
    }

    if (!v.is_zero() || have_radical || pos < s.size()) {
        if (pos >= s.size() || s[pos] != '*') throw std::invalid_argument("bad scalar literal: " + text);
        ++pos;
        if (s.compare(pos, 5, "sqrt(") != 0) throw std::invalid_argument("bad scalar literal: " + text);
        pos += 5;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart || pos >= s.size() || s[pos] != ')')
            throw std::invalid_argument("bad scalar literal: " + text);
        d = std::stol(s.substr(dstart, pos - dstart));
        ++pos;
        if (pos != s.size()) throw std::invalid_argument("bad scalar literal: " + text);
    }

    if (!v.is_zero() && expect_d >= 0 && d != expect_d)
        throw std::invalid_argument("scalar uses sqrt(" + std::to_string(d) + ") but the file declares d = " +
                                    std::to_string(expect_d));
    return v.is_zero() ? Scalar(u) : Scalar(u, v, d);
}

}  // namespace relent
