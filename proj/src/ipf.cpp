#include "toricmle/ipf.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace toric {

DesignMatrix normalize_matrix(const DesignMatrix& A) {
    DesignMatrix B(A.rows + 1, A.cols);
    for (int i = 0; i < A.rows; ++i) {
        long long mn = 0;
        for (int j = 0; j < A.cols; ++j) mn = std::min(mn, A(i, j));
        for (int j = 0; j < A.cols; ++j) B(i, j) = A(i, j) - mn;
    }
    long long common = 0;
    std::vector<long long> colsum(A.cols, 0);
    for (int j = 0; j < A.cols; ++j) {
        for (int i = 0; i < A.rows; ++i) colsum[j] += B(i, j);
        common = std::max(common, colsum[j]);
    }
    if (common == 0) common = 1;  // zero matrix: slack row is constant
    for (int j = 0; j < A.cols; ++j) B(A.rows, j) = common - colsum[j];
    return B;
}

namespace {

IpfResult solve_impl(const DesignMatrix& A, const DataVector& u, std::vector<double> p,
                     const IpfConfig& cfg) {
    if (u.size() != A.cols) throw std::invalid_argument("ipf_solve: dimension mismatch");
    if (cfg.tolerance <= 0 || cfg.max_iterations <= 0)
        throw std::invalid_argument("ipf_solve: invalid config");

    const DesignMatrix B = normalize_matrix(A);
    long long common = 0;
    for (int i = 0; i < B.rows; ++i) common += B(i, 0);
    const double C = static_cast<double>(common);

    std::vector<double> uhat(u.size());
    for (int j = 0; j < u.size(); ++j)
        uhat[j] = static_cast<double>(u.counts[j]) / static_cast<double>(u.total);
    const std::vector<double> t = B.multiply(uhat);
    const std::vector<double> target = A.multiply(uhat);

    auto margin_residual = [&](const std::vector<double>& q) {
        auto Aq = A.multiply(q);
        double r = 0.0;
        for (int i = 0; i < A.rows; ++i) r = std::max(r, std::abs(Aq[i] - target[i]));
        return r;
    };

    IpfResult res;
    std::vector<double> m(B.rows);
#ifndef NDEBUG
    double last_ll = -std::numeric_limits<double>::infinity();
#endif
    long long it = 0;
    double residual = std::numeric_limits<double>::infinity();
    for (; it < cfg.max_iterations; ++it) {
        m = B.multiply(p);
        for (int j = 0; j < A.cols; ++j) {
            double f = 0.0;
            for (int i = 0; i < B.rows; ++i) {
                long long e = B(i, j);
                if (e == 0) continue;
                if (t[i] <= 0.0) { f = -std::numeric_limits<double>::infinity(); break; }
                f += static_cast<double>(e) * (std::log(t[i]) - std::log(m[i]));
            }
            p[j] = std::isinf(f) ? 0.0 : p[j] * std::exp(f / C);
        }
        if (it % 16 == 0 || it == cfg.max_iterations - 1) {
            double s = 0.0;
            for (double x : p) s += x;
            std::vector<double> q(p);
            for (double& x : q) x /= s;
            residual = std::max(std::abs(s - 1.0), margin_residual(q));
            if (residual <= cfg.tolerance) {
                p = std::move(q);
                ++it;
                res.converged = true;
                break;
            }
#ifndef NDEBUG
            if (it % 112 == 0) {
                ProbVector pv = ProbVector::floating(q, false, 1e-6);
                double ll = log_likelihood(pv, u);
                assert(ll >= last_ll - 1e-9);
                last_ll = ll;
            }
#endif
        }
    }
    if (!res.converged) {
        double s = 0.0;
        for (double x : p) s += x;
        if (s > 0)
            for (double& x : p) x /= s;
        residual = std::max(std::abs(s - 1.0), margin_residual(p));
    }
    for (double x : p)
        if (x < cfg.tolerance) res.boundary = true;
    res.iterations = it;
    res.final_residual = margin_residual(p);
    res.converged = res.converged && res.final_residual <= cfg.tolerance;
    res.estimate = ProbVector::floating(std::move(p), !res.boundary, 1e-6);
    return res;
}

}  // namespace

IpfResult ipf_solve(const DesignMatrix& A, const DataVector& u, const IpfConfig& cfg) {
    std::vector<double> p(A.cols, 1.0 / A.cols);
    return solve_impl(A, u, std::move(p), cfg);
}

IpfResult ipf_solve(const DesignMatrix& A, const DataVector& u, const Scaling& init,
                    const IpfConfig& cfg) {
    if (init.size() != A.cols) throw std::invalid_argument("ipf_solve: init size mismatch");
    std::vector<double> p = init.as_double();
    double s = 0.0;
    for (double x : p) {
        if (x <= 0) throw std::invalid_argument("ipf_solve: initial scaling must be positive");
        s += x;
    }
    for (double& x : p) x /= s;
    return solve_impl(A, u, std::move(p), cfg);
}

}  // namespace toric
