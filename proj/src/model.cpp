#include "toricmle/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace toric {

LatticePolytope::LatticePolytope(std::vector<std::vector<long long>> pts)
    : points(std::move(pts)) {
    if (points.empty()) throw std::invalid_argument("LatticePolytope: empty point list");
    dim = static_cast<int>(points.front().size());
    std::set<std::vector<long long>> seen;
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("LatticePolytope: inconsistent dimensions");
        if (!seen.insert(p).second)
            throw std::invalid_argument("LatticePolytope: duplicate point");
    }
}

std::vector<long long> DesignMatrix::column(int j) const {
    std::vector<long long> c(rows);
    for (int i = 0; i < rows; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<BigInt> DesignMatrix::multiply(const std::vector<long long>& u) const {
    if (static_cast<int>(u.size()) != cols)
        throw std::invalid_argument("DesignMatrix::multiply: size mismatch");
    std::vector<BigInt> out(rows, BigInt(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out[i] += BigInt((*this)(i, j)) * u[j];
    return out;
}

std::vector<Rational> DesignMatrix::multiply(const std::vector<Rational>& u) const {
    if (static_cast<int>(u.size()) != cols)
        throw std::invalid_argument("DesignMatrix::multiply: size mismatch");
    std::vector<Rational> out(rows, Rational(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out[i] += Rational((*this)(i, j)) * u[j];
    return out;
}

std::vector<double> DesignMatrix::multiply(const std::vector<double>& u) const {
    if (static_cast<int>(u.size()) != cols)
        throw std::invalid_argument("DesignMatrix::multiply: size mismatch");
    std::vector<double> out(rows, 0.0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out[i] += static_cast<double>((*this)(i, j)) * u[j];
    return out;
}

DesignMatrix polytope_to_matrix(const LatticePolytope& q) {
    DesignMatrix A(q.dim, q.size());
    for (int j = 0; j < q.size(); ++j)
        for (int i = 0; i < q.dim; ++i) A(i, j) = q.points[j][i];
    return A;
}

DataVector::DataVector(std::vector<long long> u) : counts(std::move(u)) {
    for (long long c : counts) {
        if (c < 0) throw std::invalid_argument("DataVector: negative count");
        total += c;
    }
    if (total <= 0) throw std::invalid_argument("DataVector: u_+ must be positive");
}

Scaling::Scaling(std::vector<Rational> v) : values(std::move(v)) {
    for (const auto& c : values)
        if (c == 0) throw std::invalid_argument("Scaling: zero entry");
}

Scaling Scaling::ones(int n) {
    return Scaling(std::vector<Rational>(n, Rational(1)));
}

std::vector<double> Scaling::as_double() const {
    std::vector<double> out(values.size());
    for (size_t j = 0; j < values.size(); ++j) out[j] = to_double(values[j]);
    return out;
}

ProbVector ProbVector::exact(std::vector<Rational> v, bool distribution) {
    Rational s(0);
    for (const auto& x : v) {
        s += x;
        if (distribution && x < 0)
            throw std::invalid_argument("ProbVector: negative entry in a distribution");
    }
    if (s != 1) throw std::invalid_argument("ProbVector: exact entries must sum to 1");
    ProbVector p;
    p.repr_ = Repr::Exact;
    p.distribution_ = distribution;
    p.exact_ = std::move(v);
    return p;
}

ProbVector ProbVector::floating(std::vector<double> v, bool distribution, double sum_tol) {
    double s = 0;
    for (double x : v) {
        s += x;
        if (distribution && x < -sum_tol)
            throw std::invalid_argument("ProbVector: negative entry in a distribution");
    }
    if (std::abs(s - 1.0) > sum_tol)
        throw std::invalid_argument("ProbVector: float entries must sum to 1 within tolerance");
    ProbVector p;
    p.repr_ = Repr::Float;
    p.distribution_ = distribution;
    p.float_ = std::move(v);
    return p;
}

int ProbVector::size() const {
    return static_cast<int>(repr_ == Repr::Exact ? exact_.size() : float_.size());
}

const std::vector<Rational>& ProbVector::exact_values() const {
    if (repr_ != Repr::Exact)
        throw std::logic_error("ProbVector: exact_values() on a FLOAT vector");
    return exact_;
}

std::vector<double> ProbVector::as_double() const {
    if (repr_ == Repr::Float) return float_;
    std::vector<double> out(exact_.size());
    for (size_t j = 0; j < exact_.size(); ++j) out[j] = to_double(exact_[j]);
    return out;
}

Monomial Monomial::from_indices(const std::vector<int>& idx) {
    std::map<int, int> acc;
    for (int i : idx) {
        if (i < 0) throw std::invalid_argument("Monomial: negative index");
        ++acc[i];
    }
    Monomial m;
    m.factors.assign(acc.begin(), acc.end());
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto& [i, e] : factors) d += e;
    return d;
}

int Monomial::max_index() const {
    int m = -1;
    for (auto& [i, e] : factors) m = std::max(m, i);
    return m;
}

Binomial::Binomial(Monomial l, Monomial r) : lhs(std::move(l)), rhs(std::move(r)) {
    if (lhs.degree() != rhs.degree())
        throw std::invalid_argument("Binomial: monomials must have equal total degree");
}

Binomial Binomial::from_indices(const std::vector<int>& l, const std::vector<int>& r) {
    return Binomial(Monomial::from_indices(l), Monomial::from_indices(r));
}

int Binomial::max_index() const { return std::max(lhs.max_index(), rhs.max_index()); }

std::string Binomial::to_string(const std::string& var) const {
    auto side = [&](const Monomial& m) {
        std::ostringstream os;
        bool first = true;
        for (auto& [i, e] : m.factors) {
            if (!first) os << "*";
            first = false;
            os << var << (i + 1);
            if (e > 1) os << "^" << e;
        }
        if (first) os << "1";
        return os.str();
    };
    return side(lhs) + " - " + side(rhs);
}

namespace {

template <typename T>
T power_checked(const T& base, long long e);

template <>
double power_checked<double>(const double& base, long long e) {
    if (base == 0.0 && e < 0) throw std::domain_error("zero theta with negative exponent");
    return std::pow(base, static_cast<double>(e));
}

template <>
Rational power_checked<Rational>(const Rational& base, long long e) {
    return rational_pow(base, e);
}

template <typename T, typename S>
std::vector<T> parametrize_impl(const DesignMatrix& A, const std::vector<T>& c, const S& s,
                                const std::vector<T>& theta) {
    if (static_cast<int>(c.size()) != A.cols)
        throw std::invalid_argument("parametrize: scaling size mismatch");
    if (static_cast<int>(theta.size()) != A.rows)
        throw std::invalid_argument("parametrize: theta size mismatch");
    std::vector<T> out(A.cols);
    for (int j = 0; j < A.cols; ++j) {
        T v = c[j] * s;
        for (int i = 0; i < A.rows; ++i) {
            long long e = A(i, j);
            if (e != 0) v = v * power_checked<T>(theta[i], e);
        }
        out[j] = v;
    }
    return out;
}

template <typename T>
T evaluate_binomial_impl(const Binomial& g, const std::vector<T>& p) {
    if (g.max_index() >= static_cast<int>(p.size()))
        throw std::invalid_argument("evaluate_binomial: index out of range");
    auto mono = [&](const Monomial& m) {
        T v(1);
        for (auto& [i, e] : m.factors)
            for (int k = 0; k < e; ++k) v = v * p[i];
        return v;
    };
    return mono(g.lhs) - mono(g.rhs);
}

}  // namespace

std::vector<double> parametrize(const DesignMatrix& A, const std::vector<double>& c, double s,
                                const std::vector<double>& theta) {
    return parametrize_impl(A, c, s, theta);
}

std::vector<Rational> parametrize(const DesignMatrix& A, const std::vector<Rational>& c,
                                  const Rational& s, const std::vector<Rational>& theta) {
    return parametrize_impl(A, c, s, theta);
}

double evaluate_binomial(const Binomial& g, const std::vector<double>& p) {
    return evaluate_binomial_impl(g, p);
}
Rational evaluate_binomial(const Binomial& g, const std::vector<Rational>& p) {
    return evaluate_binomial_impl(g, p);
}
QuadSqrt5 evaluate_binomial(const Binomial& g, const std::vector<QuadSqrt5>& p) {
    return evaluate_binomial_impl(g, p);
}

double log_likelihood(const ProbVector& p, const DataVector& u) {
    std::vector<double> pv = p.as_double();
    if (static_cast<int>(pv.size()) != u.size())
        throw std::invalid_argument("log_likelihood: size mismatch");
    double total = 0.0, psum = 0.0;
    for (double x : pv) psum += x;
    if (psum <= 0) throw std::invalid_argument("log_likelihood: sum p must be positive");
    for (int j = 0; j < u.size(); ++j) {
        if (u.counts[j] == 0) continue;
        if (pv[j] <= 0.0) return -std::numeric_limits<double>::infinity();
        total += static_cast<double>(u.counts[j]) * std::log(pv[j]);
    }
    return total - static_cast<double>(u.total) * std::log(psum);
}

double BirchResidual::max() const {
    return std::max(sum_residual, std::max(margin_residual, generator_residual));
}

namespace {

BirchResidual birch_residual_exact(const std::vector<Rational>& p, const DataVector& u,
                                   const DesignMatrix& A, const std::vector<Binomial>& gens) {
    BirchResidual r;
    Rational s(0);
    for (const auto& x : p) s += x;
    r.sum_residual = std::abs(to_double(s - 1));

    auto Ap = A.multiply(p);
    auto Au = A.multiply(u.counts);
    for (int i = 0; i < A.rows; ++i) {
        Rational d = Ap[i] - Rational(Au[i], u.total);
        r.margin_residual = std::max(r.margin_residual, std::abs(to_double(d)));
    }
    for (const auto& g : gens) {
        auto mono = [&](const Monomial& m) {
            Rational v(1);
            for (auto& [i, e] : m.factors) v *= rational_pow(p[i], e);
            return v;
        };
        Rational l = mono(g.lhs), h = mono(g.rhs);
        Rational scale = std::max(abs(l), abs(h));
        Rational v = scale == 0 ? Rational(0) : (l - h) / scale;
        r.generator_residual = std::max(r.generator_residual, std::abs(to_double(v)));
    }
    return r;
}

BirchResidual birch_residual_float(const std::vector<double>& p, const DataVector& u,
                                   const DesignMatrix& A, const std::vector<Binomial>& gens) {
    BirchResidual r;
    double s = 0.0;
    for (double x : p) s += x;
    r.sum_residual = std::abs(s - 1.0);

    auto Ap = A.multiply(p);
    auto Au = A.multiply(u.counts);
    for (int i = 0; i < A.rows; ++i) {
        double target = Au[i].convert_to<double>() / static_cast<double>(u.total);
        r.margin_residual = std::max(r.margin_residual, std::abs(Ap[i] - target));
    }
    for (const auto& g : gens) {
        auto mono = [&](const Monomial& m) {
            double v = 1.0;
            for (auto& [i, e] : m.factors) v *= std::pow(p[i], e);
            return v;
        };
        double l = mono(g.lhs), h = mono(g.rhs);
        double scale = std::max({std::abs(l), std::abs(h), 1e-300});
        r.generator_residual = std::max(r.generator_residual, std::abs(l - h) / scale);
    }
    return r;
}

}  // namespace

BirchResidual birch_residual(const ProbVector& p, const DataVector& u, const DesignMatrix& A,
                             const std::vector<Binomial>& gens) {
    if (p.size() != u.size() || u.size() != A.cols)
        throw std::invalid_argument("birch_residual: dimension mismatch");
    if (p.repr() == Repr::Exact) return birch_residual_exact(p.exact_values(), u, A, gens);
    return birch_residual_float(p.as_double(), u, A, gens);
}

}  // namespace toric
