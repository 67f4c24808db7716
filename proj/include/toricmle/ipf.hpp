#pragma once

#include "toricmle/model.hpp"

namespace toric {

struct IpfConfig {
    double tolerance = 1e-10;           // max Birch residual at convergence
    long long max_iterations = 1000000;
};

struct IpfResult {
    ProbVector estimate;     // FLOAT, normalized to sum 1
    long long iterations = 0;
    double final_residual = 0.0;
    bool converged = false;
    bool boundary = false;   // some estimate entry fell below tolerance
};

/// Translate A to nonnegative entries (per-row shifts; translating the
/// polytope does not change the model) and append a slack row making all
/// column sums equal.  The row space together with the all-ones vector is
/// unchanged.
DesignMatrix normalize_matrix(const DesignMatrix& A);

/// Generalized iterative scaling for the Birch point of the log-linear model
/// of A: multiplicative updates p_j <- p_j * prod_i (t_i/(A'p)_i)^(A'_ij/C)
/// on the normalized matrix A' with common column sum C and target margins
/// t = A'u/u_+.  Converges to the unique positive MLE for strictly positive
/// data; zero counts may drive the iterate to the boundary, which is flagged.
IpfResult ipf_solve(const DesignMatrix& A, const DataVector& u, const IpfConfig& cfg = {});

/// Same solver started from a positive initial distribution proportional to
/// `init` instead of uniform; this computes the MLE of the model scaled by
/// `init` when all entries are positive.
IpfResult ipf_solve(const DesignMatrix& A, const DataVector& u, const Scaling& init,
                    const IpfConfig& cfg);

}  // namespace toric
