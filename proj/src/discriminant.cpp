#include "toricmle/discriminant.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace toric::disc {

namespace {

long long cross(const std::vector<long long>& o, const std::vector<long long>& a,
                const std::vector<long long>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// counterclockwise convex hull (monotone chain), vertices only
std::vector<std::vector<long long>> hull_ccw(std::vector<std::vector<long long>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<std::vector<long long>> lo, hi;
    for (const auto& p : pts) {
        while (lo.size() >= 2 && cross(lo[lo.size() - 2], lo.back(), p) <= 0) lo.pop_back();
        lo.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (hi.size() >= 2 && cross(hi[hi.size() - 2], hi.back(), *it) <= 0) hi.pop_back();
        hi.push_back(*it);
    }
    lo.pop_back();
    hi.pop_back();
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
}

bool on_segment(const std::vector<long long>& a, const std::vector<long long>& b,
                const std::vector<long long>& p) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

}  // namespace

ScaledConfig ScaledConfig::make(const LatticePolytope& q, const Scaling& c) {
    if (q.dim != 2) throw std::invalid_argument("ScaledConfig: only 2-dimensional polytopes");
    if (c.size() != q.size()) throw std::invalid_argument("ScaledConfig: scaling size mismatch");
    ScaledConfig cfg;
    cfg.polytope = q;
    cfg.matrix = polytope_to_matrix(q);
    cfg.scaling = c;

    auto hull = hull_ccw(q.points);
    if (hull.size() < 3) throw std::invalid_argument("ScaledConfig: degenerate polytope");

    // vertices
    for (const auto& v : hull) {
        for (int j = 0; j < q.size(); ++j)
            if (q.points[j] == v) cfg.faces.push_back({{j}, 0});
    }
    // edges, points ordered along each edge
    for (size_t e = 0; e < hull.size(); ++e) {
        const auto& a = hull[e];
        const auto& b = hull[(e + 1) % hull.size()];
        std::vector<int> on;
        for (int j = 0; j < q.size(); ++j)
            if (on_segment(a, b, q.points[j])) on.push_back(j);
        std::sort(on.begin(), on.end(), [&](int i, int j) {
            const auto& p = q.points[i];
            const auto& r = q.points[j];
            long long di = (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1]);
            long long dj = (r[0] - a[0]) * (b[0] - a[0]) + (r[1] - a[1]) * (b[1] - a[1]);
            return di < dj;
        });
        cfg.faces.push_back({std::move(on), 1});
    }
    // the polytope itself
    std::vector<int> all(q.size());
    std::iota(all.begin(), all.end(), 0);
    cfg.faces.push_back({std::move(all), 2});
    return cfg;
}

namespace {

template <typename T>
T power_of(const T& x, long long e);

template <>
double power_of<double>(const double& x, long long e) {
    return std::pow(x, static_cast<double>(e));
}
template <>
Rational power_of<Rational>(const Rational& x, long long e) {
    return rational_pow(x, e);
}
template <>
QuadSqrt5 power_of<QuadSqrt5>(const QuadSqrt5& x, long long e) {
    return quad_pow(x, e);
}

template <typename T>
T from_rational(const Rational& r);

template <>
double from_rational<double>(const Rational& r) {
    return to_double(r);
}
template <>
Rational from_rational<Rational>(const Rational& r) {
    return r;
}
template <>
QuadSqrt5 from_rational<QuadSqrt5>(const Rational& r) {
    return QuadSqrt5(r);
}

template <typename T>
FcValue<T> f_c_impl(const ScaledConfig& cfg, const std::vector<T>& theta) {
    const DesignMatrix& A = cfg.matrix;
    if (static_cast<int>(theta.size()) != A.rows)
        throw std::invalid_argument("f_c: theta size mismatch");
    FcValue<T> out;
    out.value = T(0);
    out.gradient.assign(A.rows, T(0));
    for (int j = 0; j < A.cols; ++j) {
        T cj = from_rational<T>(cfg.scaling.values[j]);
        T term = cj;
        for (int i = 0; i < A.rows; ++i)
            if (A(i, j) != 0) term = term * power_of<T>(theta[i], A(i, j));
        out.value = out.value + term;
        for (int i = 0; i < A.rows; ++i) {
            long long e = A(i, j);
            if (e == 0) continue;
            // d/dtheta_i of c_j theta^(a_j): exponent a_ij - 1 stays >= 0
            T d = cj * T(e);
            for (int k = 0; k < A.rows; ++k) {
                long long ek = A(k, j) - (k == i ? 1 : 0);
                if (ek != 0) d = d * power_of<T>(theta[k], ek);
            }
            out.gradient[i] = out.gradient[i] + d;
        }
    }
    return out;
}

}  // namespace

FcValue<double> f_c(const ScaledConfig& cfg, const std::vector<double>& theta) {
    return f_c_impl(cfg, theta);
}
FcValue<Rational> f_c(const ScaledConfig& cfg, const std::vector<Rational>& theta) {
    return f_c_impl(cfg, theta);
}
FcValue<QuadSqrt5> f_c(const ScaledConfig& cfg, const std::vector<QuadSqrt5>& theta) {
    return f_c_impl(cfg, theta);
}

bool verify_singular_point(const ScaledConfig& cfg, const std::vector<double>& theta,
                           double tol) {
    auto v = f_c(cfg, theta);
    if (std::abs(v.value) > tol) return false;
    for (double g : v.gradient)
        if (std::abs(g) > tol) return false;
    return true;
}

bool verify_singular_point(const ScaledConfig& cfg, const std::vector<QuadSqrt5>& theta) {
    auto v = f_c(cfg, theta);
    if (!v.value.is_zero()) return false;
    for (const auto& g : v.gradient)
        if (!g.is_zero()) return false;
    return true;
}

Rational edge_discriminant(const ScaledConfig& cfg, const FaceConfig& face) {
    if (face.dim == 0) return Rational(1);
    if (face.dim != 1) throw std::invalid_argument("edge_discriminant: not an edge");
    const auto& idx = face.indices;
    if (idx.size() <= 2) return Rational(1);  // lattice length one
    if (idx.size() == 3) {
        const Rational& c0 = cfg.scaling.values[idx[0]];
        const Rational& c1 = cfg.scaling.values[idx[1]];
        const Rational& c2 = cfg.scaling.values[idx[2]];
        return c1 * c1 - 4 * c0 * c2;
    }
    throw std::invalid_argument("edge_discriminant: lattice length > 2 unsupported");
}

Rational face_discriminant(const ScaledConfig& cfg, const FaceConfig& face) {
    if (face.dim <= 1) return edge_discriminant(cfg, face);
    if (face.indices.size() == 3) return Rational(1);  // empty triangle
    throw std::invalid_argument("face_discriminant: no closed form for this face");
}

VeroneseScaling VeroneseScaling::from_matrix(const std::array<std::array<Rational, 3>, 3>& m) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (m[i][j] != m[j][i])
                throw std::invalid_argument("VeroneseScaling: matrix not symmetric");
    VeroneseScaling vs;
    vs.C = m;
    return vs;
}

VeroneseScaling VeroneseScaling::from_coeffs(const Rational& c00, const Rational& c10,
                                             const Rational& c20, const Rational& c01,
                                             const Rational& c11, const Rational& c02) {
    VeroneseScaling vs;
    vs.C = {{{2 * c00, c10, c01}, {c10, 2 * c20, c11}, {c01, c11, 2 * c02}}};
    return vs;
}

Scaling VeroneseScaling::scaling() const {
    return Scaling({C[0][0] / 2, C[0][1], C[1][1] / 2, C[0][2], C[1][2], C[2][2] / 2});
}

const LatticePolytope& veronese_points() {
    static const LatticePolytope q(
        {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}});
    return q;
}

namespace {

Rational det2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    return a * d - b * c;
}

}  // namespace

VeroneseFactors veronese_EA(const VeroneseScaling& vs) {
    const auto& C = vs.C;
    VeroneseFactors f;
    f.det_c = C[0][0] * det2(C[1][1], C[1][2], C[2][1], C[2][2]) -
              C[0][1] * det2(C[1][0], C[1][2], C[2][0], C[2][2]) +
              C[0][2] * det2(C[1][0], C[1][1], C[2][0], C[2][1]);
    f.edge_bottom = det2(C[0][0], C[0][1], C[1][0], C[1][1]);
    f.edge_right = det2(C[1][1], C[1][2], C[2][1], C[2][2]);
    f.edge_left = det2(C[0][0], C[0][2], C[2][0], C[2][2]);
    f.product = f.det_c * f.edge_bottom * f.edge_right * f.edge_left;
    return f;
}

bool predict_drop_veronese(const VeroneseScaling& vs) {
    return veronese_EA(vs).product == 0;
}

std::vector<std::vector<Rational>> critical_linear_system(const DesignMatrix& A,
                                                          const Scaling& c,
                                                          const DataVector& u) {
    if (c.size() != A.cols || u.size() != A.cols)
        throw std::invalid_argument("critical_linear_system: dimension mismatch");
    auto Au = A.multiply(u.counts);
    std::vector<std::vector<Rational>> forms;
    for (int i = 0; i < A.rows; ++i) {
        std::vector<Rational> form(A.cols);
        for (int j = 0; j < A.cols; ++j)
            form[j] = (Rational(Au[i]) - Rational(u.total) * A(i, j)) * c.values[j];
        forms.push_back(std::move(form));
    }
    return forms;
}

namespace {

template <typename T>
bool removal_check_impl(const std::vector<Binomial>& gens, const DesignMatrix& A,
                        const Scaling& c, const std::vector<T>& p,
                        const std::function<bool(const T&)>& is_small) {
    if (static_cast<int>(p.size()) != A.cols)
        throw std::invalid_argument("removal_point_check: dimension mismatch");
    bool nonzero = false;
    for (const auto& x : p)
        if (!is_small(x)) nonzero = true;
    if (!nonzero) throw std::invalid_argument("removal_point_check: zero vector");

    for (const auto& g : gens)
        if (!is_small(evaluate_binomial(g, p))) return false;

    T lc(0);
    for (int j = 0; j < A.cols; ++j) lc = lc + from_rational<T>(c.values[j]) * p[j];
    if (!is_small(lc)) return false;
    for (int i = 0; i < A.rows; ++i) {
        T li(0);
        for (int j = 0; j < A.cols; ++j)
            li = li + from_rational<T>(c.values[j] * A(i, j)) * p[j];
        if (!is_small(li)) return false;
    }
    return true;
}

}  // namespace

bool removal_point_check(const std::vector<Binomial>& gens, const DesignMatrix& A,
                         const Scaling& c, const std::vector<double>& p, double tol) {
    std::function<bool(const double&)> small = [tol](const double& x) {
        return std::abs(x) <= tol;
    };
    return removal_check_impl<double>(gens, A, c, p, small);
}

bool removal_point_check(const std::vector<Binomial>& gens, const DesignMatrix& A,
                         const Scaling& c, const std::vector<QuadSqrt5>& p) {
    std::function<bool(const QuadSqrt5&)> small = [](const QuadSqrt5& x) {
        return x.is_zero();
    };
    return removal_check_impl<QuadSqrt5>(gens, A, c, p, small);
}

std::optional<std::array<Rational, 2>> veronese_rank_singularity(const VeroneseScaling& vs) {
    // exact kernel of the symmetric 3x3 matrix
    std::array<std::array<Rational, 3>, 3> m = vs.C;
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < 3 && row < 3; ++col) {
        int pr = -1;
        for (int r = row; r < 3; ++r)
            if (m[r][col] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        for (int r = 0; r < 3; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[row][col];
            for (int cc = 0; cc < 3; ++cc) m[r][cc] -= f * m[row][cc];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    const int rank = row;
    if (rank == 3) return std::nullopt;

    // kernel basis via free columns
    std::vector<std::array<Rational, 3>> kernel;
    for (int col = 0; col < 3; ++col) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), col) != pivot_cols.end()) continue;
        std::array<Rational, 3> v{Rational(0), Rational(0), Rational(0)};
        v[col] = 1;
        for (int r = rank - 1; r >= 0; --r) {
            int pc = pivot_cols[r];
            Rational s(0);
            for (int cc = pc + 1; cc < 3; ++cc) s += m[r][cc] * v[cc];
            v[pc] = -s / m[r][pc];
        }
        kernel.push_back(v);
    }
    // need a kernel vector with all three coordinates nonzero; over Q this
    // exists iff no coordinate vanishes on the whole kernel
    for (int t = 0; t <= 4 * static_cast<int>(kernel.size()); ++t) {
        std::array<Rational, 3> v = kernel[0];
        if (kernel.size() > 1)
            for (int c3 = 0; c3 < 3; ++c3) v[c3] += Rational(t) * kernel[1][c3];
        if (v[0] != 0 && v[1] != 0 && v[2] != 0)
            return std::array<Rational, 2>{v[1] / v[0], v[2] / v[0]};
    }
    return std::nullopt;
}

// ---- quintic witness data ----

namespace {

LatticePolytope quintic_points(bool drop) {
    // columns of the example matrices; last point is (2,1) or (2,2)
    std::vector<std::vector<long long>> pts = {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}};
    pts.push_back(drop ? std::vector<long long>{2, 1} : std::vector<long long>{2, 2});
    return LatticePolytope(pts);
}

}  // namespace

const ScaledConfig& quintic_drop_config() {
    static const ScaledConfig cfg = ScaledConfig::make(quintic_points(true), Scaling::ones(6));
    return cfg;
}

const ScaledConfig& quintic_nodrop_config() {
    static const ScaledConfig cfg = ScaledConfig::make(quintic_points(false), Scaling::ones(6));
    return cfg;
}

const std::vector<Binomial>& quintic_drop_generators() {
    // the five quadrics relabeled to the ordering of quintic_drop_config()
    static const std::vector<Binomial> gens = {
        Binomial::from_indices({1, 5}, {3, 4}), Binomial::from_indices({0, 5}, {3, 3}),
        Binomial::from_indices({0, 4}, {1, 3}), Binomial::from_indices({2, 4}, {3, 3}),
        Binomial::from_indices({1, 2}, {0, 3})};
    return gens;
}

std::vector<std::array<QuadSqrt5, 2>> quintic_drop_singular_thetas() {
    // y = (1 +- sqrt5)/2, x = -y
    QuadSqrt5 yp(Rational(1, 2), Rational(1, 2));
    QuadSqrt5 ym(Rational(1, 2), Rational(-1, 2));
    return {{-yp, yp}, {-ym, ym}};
}

std::vector<std::vector<QuadSqrt5>> quintic_drop_removal_points() {
    std::vector<std::vector<QuadSqrt5>> pts;
    for (int sgn : {+1, -1}) {
        Rational h(sgn, 2);  // sgn * 1/2 as the sqrt5 coefficient
        pts.push_back({QuadSqrt5(Rational(1, 2), h), QuadSqrt5(Rational(3, 2), h),
                       QuadSqrt5(Rational(-1, 2), -h), QuadSqrt5(Rational(-3, 2), -h),
                       QuadSqrt5(Rational(-2), Rational(-sgn)),
                       QuadSqrt5(Rational(2), Rational(sgn))});
    }
    return pts;
}

}  // namespace toric::disc
