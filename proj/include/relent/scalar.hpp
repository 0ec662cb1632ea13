#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace relent {

using Int = boost::multiprecision::cpp_int;

/// Thrown when scalars from incompatible quadratic fields meet in one
/// operation (both have nonzero radical parts with different discriminants).
struct FieldMismatch : std::domain_error {
    FieldMismatch() : std::domain_error("field mismatch: incompatible sqrt discriminants") {}
};

/// Arbitrary-precision rational, always in lowest terms, denominator > 0.
class Rat {
public:
    Rat() = default;
    Rat(long v) : num_(v) {}
    Rat(Int n) : num_(std::move(n)) {}
    Rat(Int n, Int d);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rat operator-() const;
    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);

    /// Exact trichotomy: sign of a - b.
    static int cmp(const Rat& a, const Rat& b);

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a, b) >= 0; }

    Int floor() const;
    double to_double() const;
    std::string str() const;  // "p/q"

private:
    Int num_ = 0;
    Int den_ = 1;
};

/// True iff d has no repeated prime factor (d >= 0; 0 and 1 count as square-free).
bool is_squarefree(long d);

/// Element of the real quadratic field Q(sqrt(d)): value = u + v*sqrt(d),
/// u and v rational, d a square-free integer >= 2 (d == 0 marks a plain
/// rational). Canonical form forces v == 0  =>  d == 0, so rationals mix
/// freely with any field; two nonzero radical parts must share d.
///
/// The sign test is exact: for u, v of opposite sign the sign of
/// u + v*sqrt(d) equals sign(u) * sign(u^2 - v^2 d), the conjugate-magnitude
/// comparison, so no floating point enters any comparison.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : u_(v) {}
    Scalar(Rat u) : u_(std::move(u)) {}
    Scalar(Rat u, Rat v, long d);

    /// v * sqrt(d)
    static Scalar sqrt_term(Rat v, long d) { return Scalar(Rat(0), std::move(v), d); }

    const Rat& rational_part() const { return u_; }
    const Rat& radical_part() const { return v_; }
    long disc() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

    int sign() const;
    static int cmp(const Scalar& a, const Scalar& b);

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    Scalar reciprocal() const;
    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.d_ == b.d_ && a.u_ == b.u_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return cmp(a, b) >= 0; }

    /// Largest integer <= value. Exact (double estimate corrected by exact cmp).
    Int floor() const;
    Int ceil() const;

    double to_double() const;

    /// Canonical text form: "p/q" or "p/q+r/s*sqrt(d)" / "p/q-r/s*sqrt(d)".
    std::string str() const;

    /// Parse the canonical form (also accepts a bare integer and a bare
    /// radical term). If expect_d >= 0, a nonzero radical part must use it.
    static Scalar parse(const std::string& text, long expect_d = -1);

private:
    Rat u_;
    Rat v_;
    long d_ = 0;
};

inline Scalar min(const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b) <= 0 ? a : b; }
inline Scalar max(const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b) >= 0 ? a : b; }

}  // namespace relent
