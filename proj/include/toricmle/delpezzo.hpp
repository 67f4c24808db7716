#pragma once

#include "toricmle/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric::delpezzo {

/// One of the 16 two-dimensional Gorenstein toric Fano surfaces: its reflexive
/// polygon (translated into the nonnegative orthant), the binomial generators
/// of its toric ideal, its degree and its ML degree.
struct DelPezzoEntry {
    std::string label;
    LatticePolytope polytope;
    std::vector<Binomial> generators;
    int degree = 0;
    int ml_degree = 0;
};

const std::vector<DelPezzoEntry>& catalog();
const DelPezzoEntry& entry(const std::string& label);
int ml_degree(const std::string& label);
bool has_closed_form(const std::string& label);

struct Coefficients {
    Rational a, b, c;
};

/// The data coefficients (a, b, c) of the closed-form row for `label`,
/// exact rationals.  `u` is indexed by the row's own variable ordering
/// (see ClosedFormEntry::design_points).
Coefficients coefficients(const std::string& label, const DataVector& u);

/// Coefficients of the univariate likelihood polynomial in x, descending
/// order; degree 3 for labels 3 and 5a, degree 4 for 4a/4b/4c.
std::vector<Rational> likelihood_polynomial(const std::string& label, const Rational& a,
                                            const Rational& b, const Rational& c);

/// Closed-form MLE record for one of the five surfaces with ML degree < 5.
/// The variable ordering of the closed-form row differs from the catalog
/// ordering for labels 4a/4b/4c/5a; `catalog_permutation[j]` is the catalog
/// index playing the role of closed-form variable j (the two ordered
/// configurations are affinely equivalent under that identification).
struct ClosedFormEntry {
    std::string label;
    LatticePolytope design_points;
    DesignMatrix design_matrix;
    std::vector<int> catalog_permutation;
    int ml_degree = 0;
};

const std::vector<ClosedFormEntry>& closed_forms();
const ClosedFormEntry& closed_form(const std::string& label);

struct ClosedFormResult {
    ProbVector estimate;  // FLOAT, indexed like design_points
    double s_hat = 0.0;
    double theta1_hat = 0.0;
    double theta2_hat = 0.0;
    double x = 0.0;                 // the admissible real root
    std::vector<double> real_roots_found;
    BirchResidual residual;
};

/// Thrown when no real root yields a strictly positive estimate (degenerate
/// data); carries every real root that was examined.
class NoAdmissibleRootError : public std::runtime_error {
public:
    NoAdmissibleRootError(std::string msg, std::vector<double> roots)
        : std::runtime_error(std::move(msg)), real_roots(std::move(roots)) {}
    std::vector<double> real_roots;
};

/// Evaluate the closed-form MLE: root of the likelihood polynomial, recovery
/// of (s, theta), p_j = s * theta^(a_j).  Exactly one admissible (all-positive)
/// root must exist; more than one contradicts Birch uniqueness and raises
/// std::logic_error.
ClosedFormResult closed_form_mle(const std::string& label, const DataVector& u,
                                 double tol = 1e-8);

}  // namespace toric::delpezzo
