#include "toricmle/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace toric {

namespace {

std::vector<double> strip_leading(const std::vector<double>& c) {
    double mx = 0.0;
    for (double x : c) mx = std::max(mx, std::abs(x));
    if (mx == 0.0) throw std::invalid_argument("poly_roots: zero polynomial");
    size_t k = 0;
    while (k < c.size() && std::abs(c[k]) <= 1e-14 * mx) ++k;
    return std::vector<double>(c.begin() + k, c.end());
}

}  // namespace

double evaluate_poly(const std::vector<double>& coeffs, double x) {
    double v = 0.0;
    for (double c : coeffs) v = v * x + c;
    return v;
}

std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs) {
    std::vector<double> c = strip_leading(coeffs);
    const int d = static_cast<int>(c.size()) - 1;
    if (d <= 0) return {};
    if (d == 1) return {std::complex<double>(-c[1] / c[0], 0.0)};

    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[d - i] / c[0];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(d);
    for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()[i];
    std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

namespace {

using C = std::complex<double>;

std::vector<C> roots_quadratic(double a, double b, double c) {
    C disc = std::sqrt(C(b * b - 4 * a * c, 0.0));
    // Citardauq variant on the smaller root for stability
    C q = -0.5 * (b + (b >= 0 ? disc : -disc));
    std::vector<C> r = {q / a, c == 0.0 ? C(0.0) : C(c) / q};
    return r;
}

std::vector<C> roots_cubic(double a, double b, double c, double d) {
    // depressed cubic t^3 + pt + q with x = t - b/(3a)
    double p = (3 * a * c - b * b) / (3 * a * a);
    double q = (2 * b * b * b - 9 * a * b * c + 27 * a * a * d) / (27 * a * a * a);
    C shift(-b / (3 * a), 0.0);
    C delta = std::sqrt(C(q * q / 4 + p * p * p / 27, 0.0));
    C u3 = C(-q / 2) + delta;
    if (std::abs(u3) < 1e-300) u3 = C(-q / 2) - delta;
    C u = std::pow(u3, 1.0 / 3.0);
    const C omega(-0.5, std::sqrt(3.0) / 2.0);
    std::vector<C> out;
    for (int k = 0; k < 3; ++k) {
        C uk = u * std::pow(omega, k);
        C t = (std::abs(uk) < 1e-300) ? C(0) : uk - C(p) / (3.0 * uk);
        out.push_back(t + shift);
    }
    return out;
}

std::vector<C> roots_quartic(double a, double b, double c, double d, double e) {
    // Ferrari on the depressed quartic y^4 + p y^2 + q y + r, x = y - b/(4a)
    double A = b / a, B = c / a, Cc = d / a, D = e / a;
    double p = B - 3 * A * A / 8;
    double q = Cc - A * B / 2 + A * A * A / 8;
    double r = D - A * Cc / 4 + A * A * B / 16 - 3 * A * A * A * A / 256;
    C shift(-A / 4, 0.0);
    std::vector<C> out;
    if (std::abs(q) < 1e-13 * (1 + std::abs(p) + std::abs(r))) {
        // biquadratic
        for (C z : roots_quadratic(1.0, p, r)) {
            C s = std::sqrt(z);
            out.push_back(s + shift);
            out.push_back(-s + shift);
        }
        return out;
    }
    // resolvent cubic: m^3 + p m^2 + (p^2/4 - r) m - q^2/8 = 0
    auto ms = roots_cubic(1.0, p, p * p / 4 - r, -q * q / 8);
    C m = ms[0];
    for (const C& z : ms)
        if (std::abs(z.imag()) < std::abs(m.imag()) ||
            (std::abs(z.imag()) == std::abs(m.imag()) && z.real() > m.real()))
            m = z;
    C s2m = std::sqrt(2.0 * m);
    if (std::abs(s2m) < 1e-150) s2m = C(1e-150);
    for (int sgn1 : {+1, -1}) {
        C lin = C(sgn1) * s2m;
        C cst = C(p) / 2.0 + m - C(sgn1) * C(q) / (2.0 * s2m);
        // y^2 + lin*y + cst = 0
        C disc = std::sqrt(lin * lin - 4.0 * cst);
        out.push_back((-lin + disc) / 2.0 + shift);
        out.push_back((-lin - disc) / 2.0 + shift);
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> poly_roots_analytic(const std::vector<double>& coeffs) {
    std::vector<double> c = strip_leading(coeffs);
    const int d = static_cast<int>(c.size()) - 1;
    std::vector<C> out;
    switch (d) {
        case 0: return {};
        case 1: return {C(-c[1] / c[0], 0.0)};
        case 2: out = roots_quadratic(c[0], c[1], c[2]); break;
        case 3: out = roots_cubic(c[0], c[1], c[2], c[3]); break;
        case 4: out = roots_quartic(c[0], c[1], c[2], c[3], c[4]); break;
        default:
            throw std::invalid_argument("poly_roots_analytic: degree > 4");
    }
    std::sort(out.begin(), out.end(), [](auto a, auto b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

std::vector<double> real_roots(const std::vector<double>& coeffs, double imag_tol) {
    std::vector<double> out;
    double scale = 0.0;
    auto roots = poly_roots(coeffs);
    for (const auto& z : roots) scale = std::max(scale, std::abs(z));
    for (const auto& z : roots)
        if (std::abs(z.imag()) <= imag_tol * std::max(1.0, scale)) out.push_back(z.real());
#ifndef NDEBUG
    // cross-check against the closed forms where they exist
    if (coeffs.size() <= 5 && !roots.empty()) {
        auto ana = poly_roots_analytic(coeffs);
        assert(ana.size() == roots.size());
        for (size_t i = 0; i < roots.size(); ++i)
            assert(std::abs(ana[i] - roots[i]) < 1e-5 * std::max(1.0, scale));
    }
#endif
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace toric
