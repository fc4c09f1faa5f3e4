#include "matintegra/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace matintegra {
namespace {

void require_square(const ExactMatrix& a, const char* who) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
    }
}

// Gaussian integer re + im i.
struct GaussInt {
    mpz_class re;
    mpz_class im;

    bool is_zero() const { return re == 0 && im == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

GaussInt exact_quotient(const GaussInt& a, const GaussInt& b) {
    const mpz_class n = b.re * b.re + b.im * b.im;
    const mpz_class re = a.re * b.re + a.im * b.im;
    const mpz_class im = a.im * b.re - a.re * b.im;
    if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t())) {
        throw std::logic_error("rank_exact: fraction-free step produced a non-integral quotient");
    }
    return {re / n, im / n};
}

std::vector<std::vector<GaussInt>> integral_rows(const ExactMatrix& a) {
    std::vector<std::vector<GaussInt>> rows;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        mpz_class den = 1;
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a(i, j).real().get_den_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a(i, j).imag().get_den_mpz_t());
        }
        std::vector<GaussInt> row;
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            const Rational re = a(i, j).real() * den;
            const Rational im = a(i, j).imag() * den;
            row.push_back({re.get_num(), im.get_num()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix identity_like(const ExactMatrix& a) {
    return ExactMatrix::Identity(a.rows(), a.cols());
}

bool is_zero_matrix(const ExactMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

ExactPoly cofactor_det(const std::vector<std::vector<ExactPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return ExactPoly::constant(ExactComplex(1));
    }
    if (n == 1) {
        return m[0][0];
    }
    ExactPoly det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) {
            continue;
        }
        std::vector<std::vector<ExactPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<ExactPoly> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) {
                    row.push_back(m[i][c]);
                }
            }
            minor.push_back(std::move(row));
        }
        const ExactPoly term = m[0][j] * cofactor_det(minor);
        if (j % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

}  // namespace

ExactPoly char_poly_exact(const ExactMatrix& a) {
    require_square(a, "char_poly_exact");
    const Eigen::Index n = a.rows();
    std::vector<ExactComplex> c(static_cast<std::size_t>(n) + 1, ExactComplex(0));
    c[static_cast<std::size_t>(n)] = ExactComplex(1);
    // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    ExactMatrix m = ExactMatrix::Zero(n, n);
    const ExactMatrix id = identity_like(a);
    for (Eigen::Index k = 1; k <= n; ++k) {
        m = ExactMatrix(a * m + id * c[static_cast<std::size_t>(n - k + 1)]);
        const ExactMatrix am = a * m;
        c[static_cast<std::size_t>(n - k)] = -am.trace() / ExactComplex(static_cast<long>(k));
    }
    return ExactPoly(std::move(c));
}

ExactPoly char_poly_cofactor(const ExactMatrix& a) {
    require_square(a, "char_poly_cofactor");
    const auto n = static_cast<std::size_t>(a.rows());
    std::vector<std::vector<ExactPoly>> m(n, std::vector<ExactPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const ExactComplex e = -a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            m[i][j] = i == j ? ExactPoly({e, ExactComplex(1)}) : ExactPoly::constant(e);
        }
    }
    return cofactor_det(m);
}

int rank_exact(const ExactMatrix& a) {
    auto m = integral_rows(a);
    const std::size_t rows = m.size();
    const std::size_t cols = static_cast<std::size_t>(a.cols());
    GaussInt prev{1, 0};
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m[i][j] = exact_quotient(sub(mul(m[r][col], m[i][j]), mul(m[i][col], m[r][j])), prev);
            }
            m[i][col] = {0, 0};
        }
        prev = m[r][col];
        ++r;
    }
    return static_cast<int>(r);
}

int kernel_dimension_exact(const ExactMatrix& a) {
    require_square(a, "kernel_dimension_exact");
    return static_cast<int>(a.rows()) - rank_exact(a);
}

bool is_diagonalizable_exact(const ExactMatrix& a, std::span<const RootFactor<ExactComplex>> eigenvalues) {
    require_square(a, "is_diagonalizable_exact");
    ExactPoly rest = char_poly_exact(a);
    for (const auto& [lambda, mult] : eigenvalues) {
        if (mult < 1 || root_multiplicity(rest, lambda) != mult) {
            throw std::invalid_argument("is_diagonalizable_exact: eigenvalue list does not match the characteristic polynomial");
        }
        for (int i = 0; i < mult; ++i) {
            rest = divide_linear(rest, lambda).first;
        }
    }
    if (rest.degree() >= 1 && gcd(rest, derivative(rest)).degree() >= 1) {
        throw std::invalid_argument("is_diagonalizable_exact: a repeated eigenvalue is missing from the list");
    }
    const ExactMatrix id = identity_like(a);
    for (const auto& [lambda, mult] : eigenvalues) {
        if (kernel_dimension_exact(ExactMatrix(a - id * lambda)) != mult) {
            return false;
        }
    }
    return true;
}

bool is_diagonalizable_by_minimal_polynomial(const ExactMatrix& a) {
    require_square(a, "is_diagonalizable_by_minimal_polynomial");
    if (a.rows() == 0) {
        return true;
    }
    const ExactPoly r = squarefree_part(char_poly_exact(a));
    const ExactMatrix id = identity_like(a);
    ExactMatrix acc = ExactMatrix::Zero(a.rows(), a.cols());
    for (int i = r.degree(); i >= 0; --i) {
        acc = ExactMatrix(a * acc + id * r.coeff(i));
    }
    return is_zero_matrix(acc);
}

std::vector<RootFactor<ExactComplex>> known_eigenvalues(const ExactBordered& a) {
    const ExactPoly pa = bordered_char_poly(a);
    std::vector<RootFactor<ExactComplex>> out;
    const auto pb = a.base.characteristic_polynomial();
    for (const auto& rf : pb.factors()) {
        const int mult = root_multiplicity(pa, rf.root);
        if (mult > 0) {
            out.push_back({rf.root, mult});
        }
    }
    return out;
}

InstanceGenerator::InstanceGenerator(std::uint64_t seed, InstanceProfile profile)
    : profile_(profile), rng_(seed) {
    const int minimal = profile_.simple + 2 * profile_.multiple;
    if (profile_.simple < 0 || profile_.multiple < 0 || minimal < 1) {
        throw std::invalid_argument("InstanceGenerator: need at least one root and non-negative counts");
    }
    if (profile_.height < 1) {
        throw std::invalid_argument("InstanceGenerator: height must be >= 1");
    }
    if (profile_.min_degree < minimal) {
        profile_.min_degree = minimal;
    }
    if (profile_.max_degree == 0) {
        profile_.max_degree = profile_.min_degree;
    }
    if (profile_.max_degree < profile_.min_degree) {
        throw std::invalid_argument("InstanceGenerator: degree range cannot hold the requested (simple, multiple) type");
    }
    if (profile_.multiple == 0 && profile_.max_degree != profile_.simple) {
        throw std::invalid_argument("InstanceGenerator: without multiple roots the degree equals the number of simple roots");
    }
    if (profile_.force_integrable && (profile_.multiple > 2 || (profile_.multiple == 2 && profile_.simple < 1))) {
        throw std::invalid_argument("InstanceGenerator: forcing integrability needs multiple <= 2, and a simple root when multiple == 2");
    }
}

Rational InstanceGenerator::next_rational() {
    std::uniform_int_distribution<int> num(-profile_.height, profile_.height);
    std::uniform_int_distribution<int> den(1, profile_.height);
    Rational r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
}

ExactComplex InstanceGenerator::next_scalar() {
    Rational re = next_rational();
    if (!profile_.gaussian) {
        return ExactComplex(re);
    }
    Rational im = next_rational();
    return ExactComplex(re, im);
}

std::vector<ExactComplex> InstanceGenerator::distinct_scalars(std::size_t count) {
    std::vector<ExactComplex> out;
    while (out.size() < count) {
        ExactComplex z = next_scalar();
        if (std::find(out.begin(), out.end(), z) == out.end()) {
            out.push_back(std::move(z));
        }
    }
    return out;
}

std::vector<int> InstanceGenerator::block_multiplicities() {
    std::vector<int> mult(static_cast<std::size_t>(profile_.multiple), 2);
    if (mult.empty()) {
        return mult;
    }
    std::uniform_int_distribution<int> degree(profile_.min_degree, profile_.max_degree);
    int extra = degree(rng_) - profile_.simple - 2 * profile_.multiple;
    std::uniform_int_distribution<std::size_t> pick(0, mult.size() - 1);
    while (extra-- > 0) {
        ++mult[pick(rng_)];
    }
    return mult;
}

std::vector<RootFactor<ExactComplex>> InstanceGenerator::draw_factors() {
    const auto k = static_cast<std::size_t>(profile_.simple);
    const auto m = static_cast<std::size_t>(profile_.multiple);
    for (;;) {
        const auto mult = block_multiplicities();
        const auto roots = distinct_scalars(k + m);
        std::vector<RootFactor<ExactComplex>> factors;
        for (std::size_t i = 0; i < m; ++i) {
            factors.push_back({roots[i], mult[i]});
        }
        for (std::size_t i = 0; i < k; ++i) {
            factors.push_back({roots[m + i], 1});
        }
        if (!profile_.force_integrable || m < 2) {
            return factors;
        }
        // Replace the last simple root a so that P0(b_1) = P0(b_2), where
        // P0' = (x - a) g: a = [int x g] / [int g] over [b_2, b_1].
        factors.pop_back();
        const ExactPoly g = expand(ExactFactoredPoly(factors));
        const ExactPoly g0 = antiderivative(g);
        const ExactPoly g1 = antiderivative(ExactPoly::monomial(ExactComplex(1), 1) * g);
        const ExactComplex& b1 = factors[0].root;
        const ExactComplex& b2 = factors[1].root;
        const ExactComplex i0 = evaluate(g0, b1) - evaluate(g0, b2);
        if (i0.is_zero()) {
            continue;
        }
        const ExactComplex a = (evaluate(g1, b1) - evaluate(g1, b2)) / i0;
        const bool clash = std::any_of(factors.begin(), factors.end(), [&](const auto& f) { return f.root == a; });
        if (clash) {
            continue;
        }
        factors.push_back({a, 1});
        return factors;
    }
}

ExactFactoredPoly InstanceGenerator::next_polynomial() { return ExactFactoredPoly(draw_factors()); }

ExactDiagonalSpec InstanceGenerator::next_diagonal() {
    auto factors = draw_factors();
    std::vector<RootFactor<ExactComplex>> blocks;
    std::vector<ExactComplex> simples;
    for (auto& f : factors) {
        if (f.multiplicity >= 2) {
            blocks.push_back(std::move(f));
        } else {
            simples.push_back(std::move(f.root));
        }
    }
    return ExactDiagonalSpec(std::move(blocks), std::move(simples));
}

}  // namespace matintegra
