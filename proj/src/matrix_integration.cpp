#include "matintegra/matrix_integration.hpp"

#include <cmath>
#include <sstream>

#include "matintegra/linear_algebra.hpp"

namespace matintegra {
namespace {

std::string witness_message(const std::vector<ExactComplex>& w) {
    std::ostringstream os;
    os << "matrix is not integrable: antiderivative values at the multiple eigenvalues differ (";
    for (std::size_t i = 0; i < w.size(); ++i) {
        os << (i ? ", " : "") << w[i];
    }
    os << ")";
    return os.str();
}

const ExactPoly& require_full_integral(const FullIntegralOutcome& outcome) {
    if (const auto* none = std::get_if<NoFullIntegral>(&outcome)) {
        throw NotIntegrableError(none->antiderivative_values);
    }
    return integral_of(outcome);
}

ExactBordered canonical_integral(const ExactDiagonalSpec& b, const ExactPoly& f) {
    const int n = b.size();
    const auto t = border_products(b, f);
    Vector<ExactComplex> u = Vector<ExactComplex>::Constant(n, ExactComplex(1));
    Vector<ExactComplex> v = Vector<ExactComplex>::Zero(n);
    for (std::size_t j = 0; j < t.size(); ++j) {
        v(b.simple_index(static_cast<int>(j))) = t[j];
    }
    ExactBordered a(b, std::move(u), std::move(v));
    if (bordered_char_poly(a) != f * ExactComplex(n + 1)) {
        throw std::logic_error("integrate: constructed border does not reproduce (n + 1) F");
    }
    return a;
}

}  // namespace

std::string to_string(IntegrabilityClass c) {
    switch (c) {
        case IntegrabilityClass::FreelyIntegrable:
            return "freely_integrable";
        case IntegrabilityClass::UniquelyIntegrable:
            return "uniquely_integrable";
        case IntegrabilityClass::NonIntegrable:
            return "non_integrable";
    }
    return "unknown";
}

NotIntegrableError::NotIntegrableError(std::vector<ExactComplex> witness)
    : std::runtime_error(witness_message(witness)), witness_(std::move(witness)) {}

bool is_non_derogatory(const ExactDiagonalSpec& b) { return b.blocks().empty(); }

IntegrabilityClass classify_integrability(const ExactDiagonalSpec& b) {
    if (is_non_derogatory(b)) {
        return IntegrabilityClass::FreelyIntegrable;
    }
    return has_full_integral(full_integral(b.characteristic_polynomial())) ? IntegrabilityClass::UniquelyIntegrable
                                                                          : IntegrabilityClass::NonIntegrable;
}

std::vector<ExactComplex> simple_cofactor_values(const ExactDiagonalSpec& b) {
    const auto pb = b.characteristic_polynomial();
    std::vector<ExactComplex> rho;
    for (const auto& a : b.simples()) {
        ExactComplex acc(1);
        for (const auto& [root, mult] : pb.factors()) {
            if (root == a) {
                continue;
            }
            const ExactComplex d = a - root;
            for (int i = 0; i < mult; ++i) {
                acc *= d;
            }
        }
        rho.push_back(std::move(acc));
    }
    return rho;
}

std::vector<ExactComplex> border_products(const ExactDiagonalSpec& b, const ExactPoly& full_integral) {
    const auto rho = simple_cofactor_values(b);
    const ExactComplex scale(b.size() + 1);
    std::vector<ExactComplex> t;
    for (std::size_t j = 0; j < rho.size(); ++j) {
        t.push_back(-(scale * evaluate(full_integral, b.simples()[j])) / rho[j]);
    }
    return t;
}

ExactBordered integrate(const ExactDiagonalSpec& b) {
    return canonical_integral(b, require_full_integral(full_integral(b.characteristic_polynomial())));
}

ExactBordered integrate_with_determinant(const ExactDiagonalSpec& b, const ExactComplex& determinant) {
    if (!is_non_derogatory(b)) {
        throw std::invalid_argument("integrate_with_determinant: the determinant is only free for freely integrable matrices");
    }
    const int n = b.size();
    // p_A(0) = (-1)^(n+1) det(A) and p_A = (n + 1)(F0 + C) with F0(0) = 0.
    ExactComplex constant = determinant / ExactComplex(n + 1);
    if ((n + 1) % 2 != 0) {
        constant = -constant;
    }
    ExactPoly f = integral_of(full_integral(b.characteristic_polynomial()));
    f += ExactPoly::constant(constant);
    return canonical_integral(b, f);
}

MinNormIntegral integrate_min_norm(const ExactDiagonalSpec& b) {
    const auto outcome = full_integral(b.characteristic_polynomial());
    const ExactPoly& f = require_full_integral(outcome);
    const int n = b.size();
    const auto t = border_products(b, f);

    Vector<ApproxComplex> border = Vector<ApproxComplex>::Zero(n);
    for (std::size_t j = 0; j < t.size(); ++j) {
        border(b.simple_index(static_cast<int>(j))) = std::sqrt(to_approx(t[j]));
    }
    std::vector<RootFactor<ApproxComplex>> blocks;
    for (const auto& blk : b.blocks()) {
        blocks.push_back({to_approx(blk.root), blk.multiplicity});
    }
    std::vector<ApproxComplex> simples;
    for (const auto& a : b.simples()) {
        simples.push_back(to_approx(a));
    }

    MinNormIntegral out;
    out.integral = ApproxBordered(DiagonalSpec<ApproxComplex>(std::move(blocks), std::move(simples)), border, border);
    out.integral.corner = to_approx(tau(b));

    Rational base(0);
    for (Eigen::Index i = 0; i < n; ++i) {
        base += abs2(b.diagonal()(i));
    }
    base += abs2(tau(b));
    double approx_sum = 0.0;
    std::optional<Rational> exact_sum = Rational(0);
    for (const auto& ti : t) {
        approx_sum += std::abs(to_approx(ti));
        if (exact_sum) {
            if (const auto r = exact_abs(ti)) {
                *exact_sum += *r;
            } else {
                exact_sum.reset();
            }
        }
    }
    out.frobenius_norm_sq = base.get_d() + 2.0 * approx_sum;
    if (exact_sum) {
        out.exact_frobenius_norm_sq = Rational(base + 2 * *exact_sum);
        out.frobenius_norm_sq = out.exact_frobenius_norm_sq->get_d();
    }

    const ApproxPoly target = to_approx(f * ExactComplex(n + 1));
    if (relative_coefficient_error(bordered_char_poly(out.integral), target) > 1e-9) {
        throw std::logic_error("integrate_min_norm: border does not reproduce (n + 1) F");
    }
    return out;
}

bool integral_is_diagonalizable(const ExactBordered& a) {
    const int n = a.base.size();
    const ExactPoly pa = bordered_char_poly(a);
    if (derivative(pa) != expand(a.base.characteristic_polynomial()) * ExactComplex(n + 1)) {
        throw NotAnIntegralError("integral_is_diagonalizable: p_A' != (n + 1) p_B");
    }
    for (int i = 0; i < a.base.block_extent(); ++i) {
        if (!a.u(i).is_zero() || !a.v(i).is_zero()) {
            return false;
        }
    }
    const auto& simples = a.base.simples();
    for (std::size_t j = 0; j < simples.size(); ++j) {
        const int d = a.base.simple_index(static_cast<int>(j));
        if (evaluate(pa, simples[j]).is_zero() && (!a.u(d).is_zero() || !a.v(d).is_zero())) {
            return false;
        }
    }
    return true;
}

ExactMatrix conjugate_transport(const ExactBordered& a, const ExactMatrix& x) {
    const int n = a.base.size();
    if (x.rows() != n || x.cols() != n) {
        throw std::invalid_argument("conjugate_transport: X must be n x n");
    }
    const auto inv = inverse_exact(x);
    if (!inv) {
        throw std::invalid_argument("conjugate_transport: X is singular");
    }
    ExactMatrix left = ExactMatrix::Identity(n + 1, n + 1);
    ExactMatrix right = ExactMatrix::Identity(n + 1, n + 1);
    left.topLeftCorner(n, n) = x;
    right.topLeftCorner(n, n) = *inv;
    return ExactMatrix(left * a.materialize() * right);
}

}  // namespace matintegra
