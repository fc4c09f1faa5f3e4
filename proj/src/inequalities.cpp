#include "matintegra/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace matintegra {
namespace {

void settle(InequalityReport& r) {
    if (r.exact_lhs && r.exact_rhs) {
        r.slack = Rational(*r.exact_rhs - *r.exact_lhs).get_d();
        r.equality = *r.exact_lhs == *r.exact_rhs;
        return;
    }
    r.slack = r.rhs - r.lhs;
    r.equality = std::abs(r.slack) <= r.tolerance * std::max(std::abs(r.lhs), std::abs(r.rhs));
}

double sum_abs2(std::span<const ApproxComplex> pts) {
    double s = 0.0;
    for (const auto& z : pts) {
        s += std::norm(z);
    }
    return s;
}

// Critical points of p, which must all be simple and pairwise separated.
std::vector<ApproxComplex> distinct_critical_points(const ApproxPoly& p, double tolerance) {
    const auto crit = find_roots(derivative(p));
    std::vector<ApproxComplex> w;
    for (const auto& r : crit) {
        if (r.multiplicity != 1) {
            throw RepeatedCriticalPointsError("critical points are not distinct; use the factored dual inequality instead");
        }
        w.push_back(r.value);
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(w[i] - w[j]) <= tolerance * std::max(1.0, std::abs(w[i]))) {
                throw RepeatedCriticalPointsError("critical points are not separated by more than the tolerance");
            }
        }
    }
    return w;
}

// Smallest-denominator rational within a relative 1e-7 of x, if any with
// denominator <= max_den.
std::optional<Rational> rationalize(double x, int max_den) {
    for (int q = 1; q <= max_den; ++q) {
        const double p = std::round(x * q);
        if (std::abs(p) > 1e15) {
            return std::nullopt;
        }
        if (std::abs(x - p / q) <= 1e-7 * std::max(1.0, std::abs(x))) {
            Rational r(mpz_class(static_cast<long>(p)), mpz_class(q));
            r.canonicalize();
            return r;
        }
    }
    return std::nullopt;
}

struct RootSquares {
    Rational exact{0};
    double approx = 0.0;
    bool all_exact = true;
};

// sum |z|^2 over the roots of r, recovering Gaussian-rational roots with
// denominators <= 100 exactly and the remainder numerically.
RootSquares root_squares(ExactPoly r) {
    RootSquares out;
    if (r.degree() < 1) {
        return out;
    }
    for (const auto& approx : find_roots(to_approx(r))) {
        const auto re = rationalize(approx.value.real(), 100);
        const auto im = rationalize(approx.value.imag(), 100);
        if (!re || !im) {
            continue;
        }
        const ExactComplex candidate(*re, *im);
        const int mult = root_multiplicity(r, candidate);
        for (int i = 0; i < mult; ++i) {
            r = divide_linear(r, candidate).first;
        }
        out.exact += Rational(mult * candidate.abs2());
        if (r.degree() < 1) {
            return out;
        }
    }
    out.all_exact = false;
    for (const auto& z : flatten(find_roots(to_approx(r)))) {
        out.approx += std::norm(z);
    }
    return out;
}

}  // namespace

ApproxComplex centroid(std::span<const ApproxComplex> points) {
    if (points.empty()) {
        throw std::invalid_argument("centroid: no points");
    }
    return std::accumulate(points.begin(), points.end(), ApproxComplex(0.0)) / static_cast<double>(points.size());
}

bool collinear(std::span<const ApproxComplex> points, double tolerance) {
    if (points.size() <= 2) {
        return true;
    }
    const ApproxComplex c = centroid(points);
    Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
    double spread = 0.0;
    for (const auto& z : points) {
        const Eigen::Vector2d d((z - c).real(), (z - c).imag());
        cov += d * d.transpose();
        spread = std::max(spread, d.norm());
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(cov);
    const Eigen::Vector2d dir = es.eigenvectors().col(1);
    double deviation = 0.0;
    for (const auto& z : points) {
        const Eigen::Vector2d d((z - c).real(), (z - c).imag());
        deviation = std::max(deviation, std::abs(dir.x() * d.y() - dir.y() * d.x()));
    }
    return deviation <= tolerance * (1.0 + spread);
}

InequalityReport schoenberg_check(std::span<const ApproxComplex> zeros, double tolerance) {
    const auto n = zeros.size();
    if (n < 2) {
        throw std::invalid_argument("schoenberg_check: need at least two zeros");
    }
    std::vector<ApproxRoot> as_roots;
    for (const auto& z : zeros) {
        as_roots.push_back({z, 1});
    }
    const ApproxPoly p = rebuild(ApproxComplex(1.0), as_roots);
    const auto crit = flatten(find_roots(derivative(p)));

    InequalityReport r;
    r.tolerance = tolerance;
    r.lhs = sum_abs2(crit);
    r.rhs = std::norm(centroid(zeros)) + (static_cast<double>(n) - 2.0) / static_cast<double>(n) * sum_abs2(zeros);
    r.condition_met = collinear(zeros, tolerance);
    settle(r);
    return r;
}

InequalityReport dual_schoenberg_check(const ExactFactoredPoly& f, double tolerance) {
    if (f.leading() != ExactComplex(1)) {
        throw std::invalid_argument("dual_schoenberg_check: polynomial must be monic");
    }
    const auto outcome = full_integral(f);
    if (!has_full_integral(outcome)) {
        throw NoFullIntegralError("dual_schoenberg_check: polynomial has no full integral");
    }
    const ExactPoly& big_f = integral_of(outcome);
    const int n = f.degree();
    const ExactDiagonalSpec spec(f.multiple_roots(), f.simple_roots());
    const ExactComplex g = tau(spec);
    const auto rho = simple_cofactor_values(spec);

    InequalityReport r;
    r.tolerance = tolerance;

    // Right-hand side: ||B||_F^2 + |G|^2 exactly, plus the border term.
    Rational base = abs2(g);
    for (const auto& rf : f.factors()) {
        base += Rational(rf.multiplicity * abs2(rf.root));
    }
    std::optional<Rational> border = Rational(0);
    double border_approx = 0.0;
    r.condition_met = true;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const ExactComplex& a = spec.simples()[i];
        const ExactComplex c = evaluate(big_f, a) / rho[i];
        border_approx += std::abs(to_approx(c));
        if (border) {
            if (const auto abs_c = exact_abs(c)) {
                *border += *abs_c;
            } else {
                border.reset();
            }
        }
        if (!(c * (a - g).conj()).is_real()) {
            r.condition_met = false;
        }
    }
    const Rational scale(2 * (n + 1));
    r.rhs = base.get_d() + scale.get_d() * border_approx;
    if (border) {
        r.exact_rhs = Rational(base + scale * *border);
        r.rhs = r.exact_rhs->get_d();
    }

    // Left-hand side: the multiple roots of f are roots of F with one higher
    // multiplicity; the cofactor carries the remaining k + 1 - m roots.
    ExactPoly cofactor = big_f;
    Rational known(0);
    for (const auto& rf : f.multiple_roots()) {
        for (int i = 0; i <= rf.multiplicity; ++i) {
            auto [q, rem] = divide_linear(cofactor, rf.root);
            if (!rem.is_zero()) {
                throw std::logic_error("dual_schoenberg_check: full integral does not vanish to the expected order");
            }
            cofactor = std::move(q);
        }
        known += Rational((rf.multiplicity + 1) * abs2(rf.root));
    }
    const RootSquares rest = root_squares(cofactor);
    r.lhs = Rational(known + rest.exact).get_d() + rest.approx;
    if (rest.all_exact) {
        r.exact_lhs = Rational(known + rest.exact);
    }
    settle(r);
    return r;
}

InequalityReport dual_schoenberg_from_p(const ApproxPoly& p, double tolerance) {
    const int n = p.degree();
    if (n < 2) {
        throw std::invalid_argument("dual_schoenberg_from_p: degree must be >= 2");
    }
    const auto w = distinct_critical_points(p, tolerance);
    const auto z = flatten(find_roots(p));
    const ApproxPoly d2 = derivative(derivative(p));
    const ApproxComplex g = -p.coeff(n - 1) / (static_cast<double>(n) * p.leading());

    double border = 0.0;
    std::vector<ApproxComplex> ratios;
    for (const auto& wi : w) {
        ratios.push_back(evaluate(p, wi) / evaluate(d2, wi));
        border += std::abs(ratios.back());
    }

    InequalityReport r;
    r.tolerance = tolerance;
    r.lhs = sum_abs2(z);
    r.rhs = std::norm(g) + sum_abs2(w) + 2.0 * n * border;
    const double scale = std::norm(g) + sum_abs2(w);
    r.condition_met = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const ApproxComplex x = ratios[i] * std::conj(w[i] - g);
        if (std::abs(x.imag()) > tolerance * (std::abs(x) + scale)) {
            r.condition_met = false;
        }
    }
    settle(r);
    return r;
}

ZeroLocalization gerschgorin_zero_localization(const ApproxPoly& p, double membership_tolerance) {
    const int n = p.degree();
    if (n < 2) {
        throw std::invalid_argument("gerschgorin_zero_localization: degree must be >= 2");
    }
    const auto w = distinct_critical_points(p, kDefaultInequalityTolerance);
    ZeroLocalization out;
    out.zeros = flatten(find_roots(p));
    double s = 0.0;
    for (const auto& z : out.zeros) {
        s = std::max(s, std::abs(z));
    }
    if (s == 0.0) {
        throw std::invalid_argument("gerschgorin_zero_localization: all zeros vanish, the similarity scale is zero");
    }
    const ApproxPoly d2 = derivative(derivative(p));
    double border = 0.0;
    for (const auto& wi : w) {
        out.disks.push_back({wi, s});
        border += std::abs(evaluate(p, wi) / evaluate(d2, wi));
    }
    // The corner entry of the integral is trace(diag(w)) / (n - 1).
    out.disks.push_back({centroid(w), n / s * border});
    out.all_zeros_covered = std::all_of(out.zeros.begin(), out.zeros.end(), [&](const ApproxComplex& z) {
        return std::any_of(out.disks.begin(), out.disks.end(),
                           [&](const Disk& d) { return d.contains(z, membership_tolerance); });
    });
    return out;
}

InequalityReport schur_check(const ApproxMatrix& a, double tolerance) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw std::invalid_argument("schur_check: matrix must be square and nonempty");
    }
    if (!a.allFinite()) {
        throw std::invalid_argument("schur_check: non-finite entry");
    }
    const Eigen::ComplexEigenSolver<ApproxMatrix> solver(a, false);
    if (solver.info() != Eigen::Success) {
        throw RootFindingError("schur_check: eigenvalue iteration failed");
    }
    InequalityReport r;
    r.tolerance = tolerance;
    r.lhs = solver.eigenvalues().squaredNorm();
    r.rhs = a.squaredNorm();
    const ApproxMatrix commutator = a * a.adjoint() - a.adjoint() * a;
    r.condition_met = commutator.norm() <= tolerance * r.rhs;
    settle(r);
    return r;
}

}  // namespace matintegra
