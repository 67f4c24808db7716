#pragma once

#include "toricmle/model.hpp"

#include <array>
#include <optional>
#include <vector>

namespace toric::disc {

/// A nonempty face of a 2-dimensional lattice polytope, as the column indices
/// of the design matrix lying on it.  Edge faces list their points in order
/// along the edge, so the lattice length is indices.size() - 1.
struct FaceConfig {
    std::vector<int> indices;
    int dim = 0;
};

/// A scaled point configuration c_j * theta^(a_j) together with its full face
/// lattice (vertices, edges, and the polytope itself).
struct ScaledConfig {
    LatticePolytope polytope;
    DesignMatrix matrix;
    Scaling scaling;
    std::vector<FaceConfig> faces;

    static ScaledConfig make(const LatticePolytope& q, const Scaling& c);
};

template <typename T>
struct FcValue {
    T value;
    std::vector<T> gradient;
};

/// f_c(theta) = sum_j c_j theta^(a_j) and its partial derivatives.
FcValue<double> f_c(const ScaledConfig& cfg, const std::vector<double>& theta);
FcValue<Rational> f_c(const ScaledConfig& cfg, const std::vector<Rational>& theta);
FcValue<QuadSqrt5> f_c(const ScaledConfig& cfg, const std::vector<QuadSqrt5>& theta);

/// True iff |f_c(theta)| and every |df_c/dtheta_i| are within tol.
bool verify_singular_point(const ScaledConfig& cfg, const std::vector<double>& theta,
                           double tol = 1e-12);
/// Exact version over Q(sqrt 5).
bool verify_singular_point(const ScaledConfig& cfg, const std::vector<QuadSqrt5>& theta);

/// Discriminant of the restriction of f_c to a face: 1 for vertices and
/// lattice-length-one edges, c1^2 - 4 c0 c2 for a lattice-length-two edge.
/// Longer edges are not supported.
Rational edge_discriminant(const ScaledConfig& cfg, const FaceConfig& face);

/// Face discriminants implemented in closed form: vertices, edges of lattice
/// length <= 2, and 2-dimensional faces that are an empty triangle (simplex
/// discriminant 1).  Throws for anything else.
Rational face_discriminant(const ScaledConfig& cfg, const FaceConfig& face);

/// Scaling data of the quadratic Veronese surface, stored as the symmetric
/// matrix C = [[2c00, c10, c01], [c10, 2c20, c11], [c01, c11, 2c02]].
struct VeroneseScaling {
    std::array<std::array<Rational, 3>, 3> C;

    static VeroneseScaling from_matrix(const std::array<std::array<Rational, 3>, 3>& m);
    static VeroneseScaling from_coeffs(const Rational& c00, const Rational& c10,
                                       const Rational& c20, const Rational& c01,
                                       const Rational& c11, const Rational& c02);
    /// Scaling vector (c00, c10, c20, c01, c11, c02) matching veronese_points().
    Scaling scaling() const;
};

/// Lattice points (0,0),(1,0),(2,0),(0,1),(1,1),(0,2) of the Veronese triangle,
/// ordered to match VeroneseScaling::scaling().
const LatticePolytope& veronese_points();

struct VeroneseFactors {
    Rational det_c;        // discriminant of the full configuration
    Rational edge_bottom;  // det [[2c00, c10], [c10, 2c20]]
    Rational edge_right;   // det [[2c20, c11], [c11, 2c02]]
    Rational edge_left;    // det [[2c00, c01], [c01, 2c02]]
    Rational product;
};

/// The four factors of the principal determinant of the scaled Veronese and
/// their product; the model's ML degree drops below 4 iff the product is 0.
VeroneseFactors veronese_EA(const VeroneseScaling& vs);
bool predict_drop_veronese(const VeroneseScaling& vs);

/// The d-1 linear forms (Au)_i L_c(p) - u_+ L_{c,i}(p) cutting out the
/// critical points, as coefficient vectors over p.
std::vector<std::vector<Rational>> critical_linear_system(const DesignMatrix& A,
                                                          const Scaling& c,
                                                          const DataVector& u);

/// True iff p satisfies every generator and L_c(p) = L_{c,1} = ... = 0: these
/// are the points removed from the critical intersection, independent of u.
bool removal_point_check(const std::vector<Binomial>& gens, const DesignMatrix& A,
                         const Scaling& c, const std::vector<double>& p, double tol = 1e-9);
bool removal_point_check(const std::vector<Binomial>& gens, const DesignMatrix& A,
                         const Scaling& c, const std::vector<QuadSqrt5>& p);

/// Solve C (1, theta1, theta2)^T = 0; returns theta with both coordinates
/// nonzero when such a kernel vector exists, otherwise nothing.  Decides
/// whether a scaling with vanishing discriminant lies in the closure only.
std::optional<std::array<Rational, 2>> veronese_rank_singularity(const VeroneseScaling& vs);

// --- exact witness data for the two quintic surfaces of the running example ---

/// Quintic with the ML degree drop: matrix [[0,0,1,1,1,2],[1,2,0,1,2,1]], c = 1.
const ScaledConfig& quintic_drop_config();
/// Quintic without a drop: matrix [[0,0,1,1,1,2],[1,2,0,1,2,2]], c = 1.
const ScaledConfig& quintic_nodrop_config();
/// The five ideal generators in the ordering of quintic_drop_config().
const std::vector<Binomial>& quintic_drop_generators();
/// The two singular points of f_c: solutions of x + y = 0, y^2 - y - 1 = 0.
std::vector<std::array<QuadSqrt5, 2>> quintic_drop_singular_thetas();
/// The two removal points in Q(sqrt 5) causing the drop from 5 to 3.
std::vector<std::vector<QuadSqrt5>> quintic_drop_removal_points();

}  // namespace toric::disc
