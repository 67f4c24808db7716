#include "toricmle/delpezzo.hpp"

#include "toricmle/roots.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace toric::delpezzo {

namespace {

struct RawEntry {
    const char* label;
    std::vector<std::vector<long long>> points;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> gens;  // 0-based indices
    int degree;
    int ml_degree;
};

// Polygons recovered from the saturated relation lattice of each generator
// set, translated minimally into the nonnegative orthant.  Label 3 uses the
// ordering of the worked cubic example; the others are canonical
// representatives validated by the generator-vanishing tests.
const std::vector<RawEntry>& raw_entries() {
    static const std::vector<RawEntry> entries = {
        {"3", {{2, 1}, {1, 2}, {0, 0}, {1, 1}},
         {{{0, 1, 2}, {3, 3, 3}}},
         3, 3},
        {"4a", {{0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}},
         {{{1, 3}, {0, 4}}, {{2, 2}, {0, 4}}},
         4, 4},
        {"4b", {{0, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}},
         {{{1, 3}, {2, 2}}, {{1, 2}, {0, 4}}},
         4, 4},
        {"4c", {{0, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}},
         {{{1, 3}, {2, 2}}, {{1, 1}, {0, 4}}},
         4, 4},
        {"5a", {{0, 0}, {0, 1}, {1, 2}, {2, 2}, {2, 1}, {1, 1}},
         {{{2, 4}, {3, 5}}, {{1, 4}, {5, 5}}, {{1, 3}, {2, 5}}, {{0, 3}, {5, 5}},
          {{0, 2}, {1, 5}}},
         5, 3},
        {"5b", {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 1}, {1, 1}},
         {{{2, 4}, {3, 5}}, {{1, 4}, {5, 5}}, {{1, 3}, {2, 5}}, {{0, 3}, {1, 5}},
          {{1, 1}, {0, 2}}},
         5, 5},
        {"6a", {{0, 0}, {0, 1}, {1, 2}, {2, 2}, {2, 1}, {1, 0}, {1, 1}},
         {{{3, 5}, {4, 6}}, {{2, 5}, {6, 6}}, {{1, 5}, {0, 6}}, {{2, 4}, {3, 6}},
          {{1, 4}, {6, 6}}, {{0, 4}, {5, 6}}, {{1, 3}, {2, 6}}, {{0, 3}, {6, 6}},
          {{0, 2}, {1, 6}}},
         6, 6},
        {"6b", {{0, 1}, {1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 0}, {1, 1}},
         {{{4, 5}, {0, 6}}, {{3, 5}, {1, 6}}, {{2, 4}, {3, 6}}, {{1, 4}, {6, 6}},
          {{1, 3}, {2, 6}}, {{0, 3}, {6, 6}}, {{0, 2}, {1, 6}}, {{1, 1}, {2, 5}},
          {{0, 1}, {5, 6}}},
         6, 6},
        {"6c", {{0, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}},
         {{{5, 5}, {4, 6}}, {{3, 5}, {2, 6}}, {{2, 5}, {1, 6}}, {{3, 4}, {1, 6}},
          {{2, 4}, {1, 5}}, {{1, 3}, {0, 6}}, {{2, 2}, {0, 6}}, {{1, 2}, {0, 5}},
          {{1, 1}, {0, 4}}},
         6, 6},
        {"6d", {{0, 1}, {1, 2}, {1, 1}, {2, 3}, {2, 2}, {2, 1}, {2, 0}},
         {{{5, 5}, {4, 6}}, {{4, 5}, {3, 6}}, {{2, 5}, {1, 6}}, {{4, 4}, {3, 5}},
          {{2, 4}, {1, 5}}, {{2, 3}, {1, 4}}, {{2, 2}, {0, 5}}, {{1, 2}, {0, 4}},
          {{1, 1}, {0, 3}}},
         6, 6},
        {"7a", {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}},
         {{{4, 6}, {3, 7}}, {{3, 6}, {2, 7}}, {{1, 6}, {0, 7}}, {{4, 5}, {2, 7}},
          {{3, 5}, {2, 6}}, {{1, 5}, {0, 6}}, {{3, 4}, {1, 7}}, {{2, 4}, {0, 7}},
          {{3, 3}, {0, 7}}, {{2, 3}, {0, 6}}, {{1, 3}, {0, 4}}, {{2, 2}, {0, 5}},
          {{6, 6}, {5, 7}}, {{1, 2}, {0, 3}}},
         7, 7},
        {"7b", {{0, 1}, {1, 2}, {1, 1}, {1, 0}, {2, 3}, {2, 2}, {2, 1}, {2, 0}},
         {{{6, 6}, {5, 7}}, {{5, 6}, {4, 7}}, {{3, 6}, {2, 7}}, {{2, 6}, {1, 7}},
          {{5, 5}, {4, 6}}, {{3, 5}, {1, 7}}, {{2, 5}, {1, 6}}, {{3, 4}, {1, 6}},
          {{2, 4}, {1, 5}}, {{2, 3}, {0, 7}}, {{1, 3}, {0, 6}}, {{2, 2}, {0, 6}},
          {{1, 2}, {0, 5}}, {{1, 1}, {0, 4}}},
         7, 7},
        {"8a", {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}},
         {{{7, 7}, {6, 8}}, {{5, 7}, {4, 8}}, {{4, 7}, {3, 8}}, {{2, 7}, {1, 8}},
          {{1, 7}, {0, 8}}, {{5, 6}, {3, 8}}, {{4, 6}, {3, 7}}, {{2, 6}, {0, 8}},
          {{1, 6}, {0, 7}}, {{5, 5}, {2, 8}}, {{4, 5}, {1, 8}}, {{3, 5}, {0, 8}},
          {{4, 4}, {0, 8}}, {{3, 4}, {0, 7}}, {{2, 4}, {1, 5}}, {{1, 4}, {0, 5}},
          {{3, 3}, {0, 6}}, {{2, 3}, {0, 5}}, {{1, 3}, {0, 4}}, {{1, 1}, {0, 2}}},
         8, 8},
        {"8b", {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}, {2, 3}},
         {{{7, 7}, {6, 8}}, {{6, 7}, {5, 8}}, {{4, 7}, {3, 8}}, {{3, 7}, {2, 8}},
          {{1, 7}, {0, 8}}, {{6, 6}, {5, 7}}, {{4, 6}, {2, 8}}, {{3, 6}, {2, 7}},
          {{1, 6}, {0, 7}}, {{4, 5}, {2, 7}}, {{3, 5}, {2, 6}}, {{1, 5}, {0, 6}},
          {{4, 4}, {1, 8}}, {{3, 4}, {0, 8}}, {{2, 4}, {0, 7}}, {{3, 3}, {0, 7}},
          {{2, 3}, {0, 6}}, {{1, 3}, {0, 4}}, {{2, 2}, {0, 5}}, {{1, 2}, {0, 3}}},
         8, 8},
        {"8c", {{0, 0}, {1, 2}, {1, 1}, {1, 0}, {2, 4}, {2, 3}, {2, 2}, {2, 1}, {2, 0}},
         {{{7, 7}, {6, 8}}, {{6, 7}, {5, 8}}, {{5, 7}, {4, 8}}, {{3, 7}, {2, 8}},
          {{2, 7}, {1, 8}}, {{6, 6}, {4, 8}}, {{5, 6}, {4, 7}}, {{3, 6}, {1, 8}},
          {{2, 6}, {1, 7}}, {{5, 5}, {4, 6}}, {{3, 5}, {1, 7}}, {{2, 5}, {1, 6}},
          {{3, 4}, {1, 6}}, {{2, 4}, {1, 5}}, {{3, 3}, {0, 8}}, {{2, 3}, {0, 7}},
          {{1, 3}, {0, 6}}, {{2, 2}, {0, 6}}, {{1, 2}, {0, 5}}, {{1, 1}, {0, 4}}},
         8, 8},
        {"9", {{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}, {0, 3}, {1, 2}, {2, 1}, {3, 0}},
         {{{8, 8}, {7, 9}}, {{7, 8}, {6, 9}}, {{5, 8}, {4, 9}}, {{4, 8}, {3, 9}},
          {{2, 8}, {1, 9}}, {{7, 7}, {6, 8}}, {{5, 7}, {3, 9}}, {{4, 7}, {3, 8}},
          {{2, 7}, {1, 8}}, {{5, 6}, {3, 8}}, {{4, 6}, {3, 7}}, {{2, 6}, {1, 7}},
          {{5, 5}, {2, 9}}, {{4, 5}, {1, 9}}, {{3, 5}, {1, 8}}, {{2, 5}, {0, 9}},
          {{1, 5}, {0, 8}}, {{4, 4}, {1, 8}}, {{3, 4}, {1, 7}}, {{2, 4}, {0, 8}},
          {{1, 4}, {0, 7}}, {{3, 3}, {1, 6}}, {{2, 3}, {0, 7}}, {{1, 3}, {0, 6}},
          {{2, 2}, {0, 5}}, {{1, 2}, {0, 4}}, {{1, 1}, {0, 3}}},
         9, 9},
    };
    return entries;
}

std::vector<DelPezzoEntry> build_catalog() {
    std::vector<DelPezzoEntry> out;
    for (const auto& raw : raw_entries()) {
        DelPezzoEntry e;
        e.label = raw.label;
        e.polytope = LatticePolytope(raw.points);
        for (const auto& [l, r] : raw.gens) e.generators.push_back(Binomial::from_indices(l, r));
        e.degree = raw.degree;
        e.ml_degree = raw.ml_degree;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

const std::vector<DelPezzoEntry>& catalog() {
    static const std::vector<DelPezzoEntry> entries = build_catalog();
    return entries;
}

const DelPezzoEntry& entry(const std::string& label) {
    for (const auto& e : catalog())
        if (e.label == label) return e;
    throw std::invalid_argument("unknown del Pezzo label '" + label + "'");
}

int ml_degree(const std::string& label) { return entry(label).ml_degree; }

bool has_closed_form(const std::string& label) {
    return label == "3" || label == "4a" || label == "4b" || label == "4c" || label == "5a";
}

namespace {

// Closed-form variable orderings.  These differ from the catalog orderings:
// the closed-form rows index the lattice points by the figure labeling of the
// MLE table, the catalog by the ideal table.  catalog_permutation records the
// identification (validated by an affine-equivalence test).
struct RawClosedForm {
    const char* label;
    std::vector<std::vector<long long>> design;
    std::vector<int> perm;
};

const std::vector<RawClosedForm>& raw_closed_forms() {
    static const std::vector<RawClosedForm> rows = {
        {"3", {{2, 1}, {1, 2}, {0, 0}, {1, 1}}, {0, 1, 2, 3}},
        {"4a", {{2, 1}, {1, 2}, {1, 0}, {0, 1}, {1, 1}}, {0, 1, 3, 4, 2}},
        {"4b", {{2, 1}, {1, 2}, {0, 2}, {1, 0}, {1, 1}}, {0, 1, 4, 3, 2}},
        {"4c", {{1, 0}, {2, 2}, {1, 2}, {0, 2}, {1, 1}}, {3, 0, 1, 4, 2}},
        {"5a", {{2, 1}, {1, 2}, {1, 1}, {1, 0}, {0, 2}, {0, 1}}, {0, 1, 5, 4, 2, 3}},
    };
    return rows;
}

std::vector<ClosedFormEntry> build_closed_forms() {
    std::vector<ClosedFormEntry> out;
    for (const auto& raw : raw_closed_forms()) {
        ClosedFormEntry e;
        e.label = raw.label;
        e.design_points = LatticePolytope(raw.design);
        e.design_matrix = polytope_to_matrix(e.design_points);
        e.catalog_permutation = raw.perm;
        e.ml_degree = ml_degree(raw.label);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

const std::vector<ClosedFormEntry>& closed_forms() {
    static const std::vector<ClosedFormEntry> rows = build_closed_forms();
    return rows;
}

const ClosedFormEntry& closed_form(const std::string& label) {
    for (const auto& e : closed_forms())
        if (e.label == label) return e;
    throw std::invalid_argument("no closed form for label '" + label + "'");
}

Coefficients coefficients(const std::string& label, const DataVector& u) {
    const int n = u.size();
    auto need = [&](int k) {
        if (n != k)
            throw std::invalid_argument("coefficients: label " + label + " expects " +
                                        std::to_string(k) + " counts");
    };
    const auto& uc = u.counts;
    const Rational up(u.total);
    if (label == "3") {
        need(4);
        return {Rational(uc[0] - uc[2]) / up, Rational(uc[1] - uc[2]) / up,
                Rational(3 * uc[2] + uc[3]) / up};
    }
    if (label == "4a") {
        need(5);
        return {Rational(uc[0] - uc[3]) / up, Rational(uc[1] - uc[2]) / up,
                Rational(2 * uc[2] + 2 * uc[3] + uc[4]) / up};
    }
    if (label == "4b") {
        need(5);
        return {Rational(uc[0] + 2 * uc[3] + uc[4]) / up, Rational(uc[2] + 2 * uc[3] + uc[4]) / up,
                Rational(uc[1] - 3 * uc[3] - uc[4]) / up};
    }
    if (label == "4c") {
        need(5);
        return {Rational(uc[1] - uc[3]) / up, Rational(2 * uc[0] + uc[4]) / up,
                Rational(2 * uc[2] + 4 * uc[3] + uc[4]) / up};
    }
    if (label == "5a") {
        need(6);
        return {Rational(uc[1] - uc[2] - 3 * uc[3] - 2 * uc[5]) / up,
                Rational(uc[2] + uc[4] + 2 * (uc[3] + uc[5])) / up,
                Rational(uc[0] + uc[2] + uc[5] + 2 * uc[3]) / up};
    }
    throw std::invalid_argument("coefficients: unknown label '" + label + "'");
}

std::vector<Rational> likelihood_polynomial(const std::string& label, const Rational& a,
                                            const Rational& b, const Rational& c) {
    if (label == "3") {
        return {Rational(28), (a + b) - 27 * c, a * b + 9 * c * c, -c * c * c};
    }
    if (label == "4a") {
        return {Rational(15), Rational(-16), 8 * a * a - 22 * b * b - 56,
                16 * (4 - 4 * a * a + 5 * b * b),
                8 * (4 * a * a - 5 * b * b - 2) -
                    (4 * a * a - 3 * b * b) * (4 * a * a - 3 * b * b)};
    }
    if (label == "4b") {
        return {Rational(17), 17 * c - 16, 3 + 9 * a * b - 8 * c + 4 * c * c,
                4 * a * b * c - 5 * a * b - c, a * a * b * b};
    }
    if (label == "4c") {
        return {Rational(-55), Rational(12), c * (4 * a + c) + b * (5 * b - 8),
                -(4 * b * (a * b + a * c + c)), (4 * a + c) * b * b * c};
    }
    if (label == "5a") {
        return {Rational(-5), 3 - 5 * a, -a - b * (b + 5 * c), b * b * c};
    }
    throw std::invalid_argument("likelihood_polynomial: unknown label '" + label + "'");
}

namespace {

struct Recovered {
    double s, t1, t2;
    bool ok;
};

// Recovery maps (s, theta1, theta2) as functions of the admissible root x.
// The 4a map's cube numerator follows the theta denominators; the version
// with an extra +8 printed in the source table fails the oracle check.
Recovered recover(const std::string& label, double x, double a, double b, double c) {
    auto div = [](double num, double den) { return den == 0.0 ? std::nan("") : num / den; };
    double s, t1, t2;
    if (label == "3") {
        s = div(std::pow(-3 * x + c, 3), (x + a) * (x + b));
        t1 = div(x + a, -3 * x + c);
        t2 = div(x + b, -3 * x + c);
    } else if (label == "4a") {
        double D = -x * x + 8 * x - (3 * b * b - 4 * a * a + 4);
        double N1 = -7 * x * x + (8 * a + 8) * x + (3 * b * b - 4 * a * a - 4 - 8 * a);
        s = div(D * D * D, 16 * (x - 1) * (x - 1) * (x + b) * N1);
        t1 = div(N1, 2 * D);
        t2 = div(4 * (x + b) * (x - 1), D);
    } else if (label == "4b") {
        double Q = 4 * x * x + 2 * (c - 1) * x + a * b;
        s = div(Q * Q * Q, (1 - x) * (x * x + (c + 1) * x + a * b + c) *
                               (-2 * x * x - (2 * c + a) * x + a - a * b));
        t1 = div(-2 * x * x - (a + 2 * c) * x + (a - a * b), Q);
        t2 = div(x * x + (c + 1) * x + (a * b + c), Q);
    } else if (label == "4c") {
        double N = -3 * x * x - (2 * a + 2) * x + (4 * a + c) * b;
        s = div(4 * x * x * (b - x), N);
        t1 = div(N, 8 * x * x);
        t2 = div(2 * x, b - x);
    } else if (label == "5a") {
        double Q = 2 * x * x - (b + 2 * c) * x + b * c;
        s = div((-x * x + c * x) * (x * x + (a + b) * x), Q);
        t1 = div(Q, x * x + (a + b) * x);
        t2 = div(Q, -x * x + c * x);
    } else {
        throw std::invalid_argument("recover: unknown label '" + label + "'");
    }
    bool ok = std::isfinite(s) && std::isfinite(t1) && std::isfinite(t2);
    return {s, t1, t2, ok};
}

}  // namespace

ClosedFormResult closed_form_mle(const std::string& label, const DataVector& u, double tol) {
    const ClosedFormEntry& cf = closed_form(label);
    if (u.size() != cf.design_points.size())
        throw std::invalid_argument("closed_form_mle: data size mismatch");
    for (long long x : u.counts)
        if (x <= 0) throw std::invalid_argument("closed_form_mle: counts must be positive");

    Coefficients abc = coefficients(label, u);
    auto poly_q = likelihood_polynomial(label, abc.a, abc.b, abc.c);
    std::vector<double> poly(poly_q.size());
    for (size_t i = 0; i < poly_q.size(); ++i) poly[i] = to_double(poly_q[i]);

    const double a = to_double(abc.a), bb = to_double(abc.b), c = to_double(abc.c);
    auto roots = real_roots(poly);

    const double positivity_tol = 1e-12;
    std::vector<ClosedFormResult> admissible;
    for (double x : roots) {
        Recovered r = recover(label, x, a, bb, c);
        if (!r.ok) continue;
        std::vector<double> p;
        try {
            p = parametrize(cf.design_matrix, std::vector<double>(u.size(), 1.0), r.s,
                            {r.t1, r.t2});
        } catch (const std::domain_error&) {
            continue;
        }
        double sum = 0.0;
        bool positive = true;
        for (double v : p) {
            positive = positive && v > positivity_tol;
            sum += v;
        }
        if (!positive || std::abs(sum - 1.0) > 1e-6) continue;
        ClosedFormResult res;
        res.estimate = ProbVector::floating(std::move(p), true, 1e-6);
        res.s_hat = r.s;
        res.theta1_hat = r.t1;
        res.theta2_hat = r.t2;
        res.x = x;
        admissible.push_back(std::move(res));
    }
    if (admissible.empty())
        throw NoAdmissibleRootError("closed_form_mle: no positive root for label " + label,
                                    roots);
    if (admissible.size() > 1)
        throw std::logic_error(
            "closed_form_mle: several positive roots contradict Birch uniqueness");

    ClosedFormResult res = std::move(admissible.front());
    res.real_roots_found = roots;
    res.residual = birch_residual(res.estimate, u, cf.design_matrix);
    if (res.residual.max() > tol)
        throw std::logic_error("closed_form_mle: Birch residual " +
                               std::to_string(res.residual.max()) + " exceeds tolerance");
    return res;
}

}  // namespace toric::delpezzo
