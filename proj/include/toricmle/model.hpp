#pragma once

#include "toricmle/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace toric {

/// Ordered list of distinct integer lattice points in a fixed ambient
/// dimension.  The ordering is part of the identity: it fixes the variable
/// indices p_1..p_n of the associated model.
struct LatticePolytope {
    std::vector<std::vector<long long>> points;
    int dim = 0;

    LatticePolytope() = default;
    explicit LatticePolytope(std::vector<std::vector<long long>> pts);

    int size() const { return static_cast<int>(points.size()); }
};

/// Integer matrix whose columns are the lattice points of a polytope.
/// The homogenizing parameter s is implicit (an all-ones row is always
/// understood to be appended to the row span).
struct DesignMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;  // row-major

    DesignMatrix() = default;
    DesignMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    long long& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    long long operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    std::vector<long long> column(int j) const;

    /// A u as exact integers.
    std::vector<BigInt> multiply(const std::vector<long long>& u) const;
    std::vector<Rational> multiply(const std::vector<Rational>& u) const;
    std::vector<double> multiply(const std::vector<double>& u) const;
};

/// Column j equals point j of the polytope, order preserved.
DesignMatrix polytope_to_matrix(const LatticePolytope& q);

/// Observed counts u with u_+ > 0.
struct DataVector {
    std::vector<long long> counts;
    long long total = 0;

    DataVector() = default;
    explicit DataVector(std::vector<long long> u);

    int size() const { return static_cast<int>(counts.size()); }
};

/// Nonzero rational scaling c applied coordinatewise to a parametrization.
struct Scaling {
    std::vector<Rational> values;

    Scaling() = default;
    explicit Scaling(std::vector<Rational> v);
    static Scaling ones(int n);

    int size() const { return static_cast<int>(values.size()); }
    std::vector<double> as_double() const;
};

enum class Repr : std::uint8_t { Exact, Float };

/// Probability-simplex point (or, more generally, a critical point summing to
/// one), carried either as exact rationals or as binary64 and tagged with its
/// representation.
class ProbVector {
public:
    ProbVector() = default;

    static ProbVector exact(std::vector<Rational> v, bool distribution = true);
    static ProbVector floating(std::vector<double> v, bool distribution = true,
                               double sum_tol = 1e-9);

    Repr repr() const { return repr_; }
    bool is_distribution() const { return distribution_; }
    int size() const;

    const std::vector<Rational>& exact_values() const;
    std::vector<double> as_double() const;

private:
    Repr repr_ = Repr::Float;
    bool distribution_ = true;
    std::vector<Rational> exact_;
    std::vector<double> float_;
};

/// Sparse monomial: list of (variable index, exponent), sorted by index,
/// exponents positive.
struct Monomial {
    std::vector<std::pair<int, int>> factors;

    Monomial() = default;
    /// From a flat list of variable indices (repetition = exponent).
    static Monomial from_indices(const std::vector<int>& idx);

    int degree() const;
    int max_index() const;
};

/// Difference of two monomials of equal total degree, sign convention
/// first-minus-second.
struct Binomial {
    Monomial lhs, rhs;

    Binomial() = default;
    Binomial(Monomial l, Monomial r);
    static Binomial from_indices(const std::vector<int>& l, const std::vector<int>& r);

    int degree() const { return lhs.degree(); }
    int max_index() const;
    std::string to_string(const std::string& var = "p") const;

    friend bool operator==(const Binomial& x, const Binomial& y) {
        return x.lhs.factors == y.lhs.factors && x.rhs.factors == y.rhs.factors;
    }
};

/// Entry j of the result is c_j * s * prod_i theta_i^(A_ij).
/// Zero theta entries are rejected when they would meet a negative exponent.
std::vector<double> parametrize(const DesignMatrix& A, const std::vector<double>& c,
                                double s, const std::vector<double>& theta);
std::vector<Rational> parametrize(const DesignMatrix& A, const std::vector<Rational>& c,
                                  const Rational& s, const std::vector<Rational>& theta);

/// Monomial difference lhs(p) - rhs(p).
double evaluate_binomial(const Binomial& g, const std::vector<double>& p);
Rational evaluate_binomial(const Binomial& g, const std::vector<Rational>& p);
QuadSqrt5 evaluate_binomial(const Binomial& g, const std::vector<QuadSqrt5>& p);

/// sum_j u_j log p_j - u_+ log(sum_j p_j); -inf when some p_j = 0 has u_j > 0.
double log_likelihood(const ProbVector& p, const DataVector& u);

/// Distance of (p, u) from a Birch point on the variety: all three components
/// are zero exactly at the MLE.  Exact-mode inputs are evaluated in rational
/// arithmetic, so exact zeros survive the conversion to double.
struct BirchResidual {
    double sum_residual = 0.0;        // |sum p - 1|
    double margin_residual = 0.0;     // max_i |(Ap)_i - (Au)_i / u_+|
    double generator_residual = 0.0;  // max_g |g(p)| / max monomial magnitude

    double max() const;
};

BirchResidual birch_residual(const ProbVector& p, const DataVector& u,
                             const DesignMatrix& A,
                             const std::vector<Binomial>& gens = {});

}  // namespace toric
