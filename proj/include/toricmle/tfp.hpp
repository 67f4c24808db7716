#pragma once

#include "toricmle/model.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace toric::tfp {

/// Codimension-zero toric fiber product data: grading vectors a^i and, per
/// grading class i, the configurations b^i_j (the B side, s_i vectors of
/// dimension d1) and c^i_k (the C side, t_i vectors of dimension d2).
/// The grading vectors must be linearly independent and admit a rational
/// functional w with w . a^i = 1 for all i; both are checked exactly.
struct GradedConfig {
    std::vector<std::vector<long long>> grading;           // r vectors, dim d
    std::vector<std::vector<std::vector<long long>>> B;    // [i][j] -> dim d1
    std::vector<std::vector<std::vector<long long>>> C;    // [i][k] -> dim d2
    std::optional<std::vector<std::vector<long long>>> pi1;  // d x d1
    std::optional<std::vector<std::vector<long long>>> pi2;  // d x d2

    GradedConfig() = default;
    GradedConfig(std::vector<std::vector<long long>> a,
                 std::vector<std::vector<std::vector<long long>>> b,
                 std::vector<std::vector<std::vector<long long>>> c,
                 std::optional<std::vector<std::vector<long long>>> p1 = std::nullopt,
                 std::optional<std::vector<std::vector<long long>>> p2 = std::nullopt);

    int r() const { return static_cast<int>(grading.size()); }
    int s(int i) const { return static_cast<int>(B[i].size()); }
    int t(int i) const { return static_cast<int>(C[i].size()); }
    int dim_b() const { return B.front().front().empty() ? 0 : static_cast<int>(B[0][0].size()); }
    int dim_c() const { return static_cast<int>(C[0][0].size()); }

    /// Count and flat lexicographic (i, j, k) indexing of the z variables.
    int z_count() const;
    int z_index(int i, int j, int k) const;
    std::array<int, 3> z_unindex(int flat) const;
    /// Flat (i, j) indexing of the x variables and (i, k) of the y variables.
    int x_count() const;
    int x_index(int i, int j) const;
    int y_count() const;
    int y_index(int i, int k) const;
};

/// Vector indexed like the z variables of a GradedConfig (lex by (i, j, k)).
struct TfpVector {
    std::vector<Rational> entries;

    TfpVector() = default;
    TfpVector(const GradedConfig& cfg, std::vector<Rational> e);
};

/// One variable of a fiber-product binomial: grading class i plus the j index
/// (B side), the k index (C side), or both (a z variable).
struct TfpVar {
    int i = 0;
    int j = -1;
    int k = -1;

    friend bool operator==(const TfpVar&, const TfpVar&) = default;
    friend auto operator<=>(const TfpVar&, const TfpVar&) = default;
};

/// Binomial over x, y, or z variables; both monomials must use the same
/// multiset of grading classes (multihomogeneity under the grading).
struct TfpBinomial {
    std::vector<TfpVar> lhs, rhs;  // kept sorted

    TfpBinomial() = default;
    TfpBinomial(std::vector<TfpVar> l, std::vector<TfpVar> r);

    int degree() const { return static_cast<int>(lhs.size()); }
    bool is_zero() const { return lhs == rhs; }
    std::string to_string() const;

    friend bool operator==(const TfpBinomial&, const TfpBinomial&) = default;
    friend auto operator<=>(const TfpBinomial&, const TfpBinomial&) = default;
};

/// Lift of a binomial f over the x variables: one z binomial f_k per
/// k in prod_l [t_{i_l}], pairing the l-th factors of the two monomials.
std::vector<TfpBinomial> lift(const TfpBinomial& f, const GradedConfig& cfg);
/// Symmetric lift of a binomial over the y variables.
std::vector<TfpBinomial> lift_y(const TfpBinomial& g, const GradedConfig& cfg);

/// All quadrics z^i_{j1 k1} z^i_{j2 k2} - z^i_{j1 k2} z^i_{j2 k1} with
/// j1 < j2, k1 < k2; their count is sum_i C(s_i,2) C(t_i,2).
std::vector<TfpBinomial> quad(const GradedConfig& cfg);

/// Lift(F) u Lift(G) u Quad with duplicates and zero binomials removed;
/// generates the fiber product ideal when F and G generate the factors.
std::vector<TfpBinomial> generators(const std::vector<TfpBinomial>& F,
                                    const std::vector<TfpBinomial>& G,
                                    const GradedConfig& cfg);

struct Marginals {
    std::vector<Rational> A;  // u^i_++, indexed by i
    std::vector<Rational> B;  // u^i_j+, flat (i, j)
    std::vector<Rational> C;  // u^i_+k, flat (i, k)
};

Marginals marginals(const GradedConfig& cfg, const TfpVector& u);

/// Compose critical points of the factor models into a critical point of the
/// fiber product: pbar^i_jk = pB^i_j pC^i_k / pA^i, exact.  Requires the
/// margin compatibility pB^i_+ = pC^i_+ = pA^i exactly and pA^i != 0.
TfpVector compose_critical(const GradedConfig& cfg, const std::vector<Rational>& pA,
                           const std::vector<Rational>& pB, const std::vector<Rational>& pC);

/// ML degrees multiply across a codimension-zero toric fiber product.
long long mldeg_product(long long m_B, long long m_C);

/// Design matrix with columns (b^i_j, c^i_k) stacked, lex (i, j, k) order.
DesignMatrix tfp_matrix(const GradedConfig& cfg);

/// Evaluate a z-variable binomial on a TfpVector (exact).
Rational evaluate(const TfpBinomial& g, const GradedConfig& cfg, const TfpVector& p);

}  // namespace toric::tfp
