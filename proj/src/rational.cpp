#include "toricmle/rational.hpp"

#include <sstream>

namespace toric {

std::string to_fraction_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r) << "/" << denominator(r);
    return os.str();
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(s));
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

Rational rational_pow(const Rational& r, long long e) {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned long long n = inv ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    if (inv && r == 0) throw std::domain_error("0 raised to a negative power");
    Rational base = r, acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    if (inv) return Rational(1) / acc;
    return acc;
}

QuadSqrt5 quad_pow(const QuadSqrt5& x, long long e) {
    if (e == 0) return QuadSqrt5(Rational(1));
    bool inv = e < 0;
    unsigned long long n = inv ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    QuadSqrt5 base = x, acc(Rational(1));
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    if (inv) return acc.inverse();
    return acc;
}

std::string to_string(const QuadSqrt5& x) {
    std::ostringstream os;
    os << to_fraction_string(x.a) << " + " << to_fraction_string(x.b) << "*sqrt(5)";
    return os.str();
}

}  // namespace toric
