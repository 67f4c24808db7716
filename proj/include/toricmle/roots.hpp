#pragma once

#include <complex>
#include <vector>

namespace toric {

/// All complex roots of c[0] x^d + c[1] x^(d-1) + ... + c[d], coefficients in
/// descending order, via the eigenvalues of the companion matrix.  Leading
/// (near-)zero coefficients are stripped.
std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs);

/// Closed-form roots for degrees 1-4 (Cardano / Ferrari); used to cross-check
/// the companion-matrix path.
std::vector<std::complex<double>> poly_roots_analytic(const std::vector<double>& coeffs);

/// Real roots only (imaginary part below `imag_tol` relative to magnitude).
std::vector<double> real_roots(const std::vector<double>& coeffs, double imag_tol = 1e-8);

double evaluate_poly(const std::vector<double>& coeffs, double x);

}  // namespace toric
