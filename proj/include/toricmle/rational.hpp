#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

/// Arbitrary-precision rational number (GMP-backed), always kept canonical
/// (lowest terms, positive denominator).
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Serialize as "num/den" in lowest terms with positive denominator.
/// Integers are rendered with an explicit "/1" so the format is uniform.
std::string to_fraction_string(const Rational& r);

/// Parse "num/den", "num", or a decimal integer string.
Rational parse_rational(const std::string& s);

/// r^e for integer e (negative exponents invert; r must be nonzero then).
Rational rational_pow(const Rational& r, long long e);

/// Element of the real quadratic field Q(sqrt 5), stored as a + b*sqrt(5).
/// Used where the computations of interest live in this field exactly.
struct QuadSqrt5 {
    Rational a;  // rational part
    Rational b;  // coefficient of sqrt(5)

    QuadSqrt5() : a(0), b(0) {}
    QuadSqrt5(Rational ra) : a(std::move(ra)), b(0) {}
    QuadSqrt5(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
    QuadSqrt5(long long ra) : a(ra), b(0) {}

    static QuadSqrt5 sqrt5() { return QuadSqrt5(Rational(0), Rational(1)); }

    bool is_zero() const { return a == 0 && b == 0; }
    QuadSqrt5 conjugate() const { return {a, -b}; }

    friend QuadSqrt5 operator+(const QuadSqrt5& x, const QuadSqrt5& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend QuadSqrt5 operator-(const QuadSqrt5& x, const QuadSqrt5& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend QuadSqrt5 operator-(const QuadSqrt5& x) { return {-x.a, -x.b}; }
    friend QuadSqrt5 operator*(const QuadSqrt5& x, const QuadSqrt5& y) {
        return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    QuadSqrt5 inverse() const {
        Rational n = a * a - 5 * b * b;  // field norm
        if (n == 0) throw std::domain_error("QuadSqrt5: division by zero");
        return {a / n, -b / n};
    }
    friend QuadSqrt5 operator/(const QuadSqrt5& x, const QuadSqrt5& y) {
        return x * y.inverse();
    }
    friend bool operator==(const QuadSqrt5& x, const QuadSqrt5& y) {
        return x.a == y.a && x.b == y.b;
    }
    double to_double() const {
        return toric::to_double(a) + toric::to_double(b) * 2.2360679774997896;
    }
};

QuadSqrt5 quad_pow(const QuadSqrt5& x, long long e);

std::string to_string(const QuadSqrt5& x);

}  // namespace toric
