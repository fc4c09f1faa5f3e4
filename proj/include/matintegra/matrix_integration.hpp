#pragma once

// Integrals of diagonal(izable) matrices.
//
// An integral of an n x n matrix B is a bordered matrix
//
//     A = [ B    u^T ]
//         [ v    tau ]      tau = trace(B) / n
//
// whose characteristic polynomial satisfies p_A' = (n + 1) p_B. The pair
// (u, v) is the integrator. B is given by its eigenvalue layout
// (DiagonalSpec): repeated eigenvalues first, in blocks, then the simple ones.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "matintegra/full_integral.hpp"
#include "matintegra/polynomial.hpp"

namespace matintegra {

template <typename Scalar>
class DiagonalSpec {
public:
    DiagonalSpec() = default;

    /// Throws ValidationError if a block multiplicity is < 2 or two
    /// eigenvalues coincide.
    DiagonalSpec(std::vector<RootFactor<Scalar>> blocks, std::vector<Scalar> simples)
        : blocks_(std::move(blocks)), simples_(std::move(simples)) {
        std::vector<Scalar> all;
        for (const auto& b : blocks_) {
            if (b.multiplicity < 2) {
                throw ValidationError("DiagonalSpec: block multiplicities must be >= 2");
            }
            all.push_back(b.root);
        }
        all.insert(all.end(), simples_.begin(), simples_.end());
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (roots_coincide(all[j], all[i])) {
                    throw ValidationError("DiagonalSpec: eigenvalues of blocks and simples must be pairwise distinct");
                }
            }
        }
    }

    /// Groups an arbitrary diagonal into blocks (first-appearance order) and
    /// simple eigenvalues.
    static DiagonalSpec from_diagonal(std::span<const Scalar> entries) {
        std::vector<RootFactor<Scalar>> groups;
        for (const auto& e : entries) {
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [&](const auto& g) { return roots_coincide(g.root, e); });
            if (it == groups.end()) {
                groups.push_back({e, 1});
            } else {
                ++it->multiplicity;
            }
        }
        std::vector<RootFactor<Scalar>> blocks;
        std::vector<Scalar> simples;
        for (auto& g : groups) {
            if (g.multiplicity >= 2) {
                blocks.push_back(std::move(g));
            } else {
                simples.push_back(std::move(g.root));
            }
        }
        return DiagonalSpec(std::move(blocks), std::move(simples));
    }

    const std::vector<RootFactor<Scalar>>& blocks() const { return blocks_; }
    const std::vector<Scalar>& simples() const { return simples_; }

    /// Number of coordinates occupied by the repeated-eigenvalue blocks.
    int block_extent() const {
        int c = 0;
        for (const auto& b : blocks_) {
            c += b.multiplicity;
        }
        return c;
    }

    /// Matrix order n.
    int size() const { return block_extent() + static_cast<int>(simples_.size()); }

    /// 0-based coordinate of the j-th simple eigenvalue.
    int simple_index(int j) const { return block_extent() + j; }

    PolyType type() const { return {static_cast<int>(simples_.size()), static_cast<int>(blocks_.size())}; }

    Vector<Scalar> diagonal() const {
        Vector<Scalar> d(size());
        Eigen::Index k = 0;
        for (const auto& b : blocks_) {
            for (int i = 0; i < b.multiplicity; ++i) {
                d(k++) = b.root;
            }
        }
        for (const auto& a : simples_) {
            d(k++) = a;
        }
        return d;
    }

    /// Monic characteristic polynomial in factored form.
    FactoredPoly<Scalar> characteristic_polynomial() const {
        std::vector<RootFactor<Scalar>> f = blocks_;
        for (const auto& a : simples_) {
            f.push_back({a, 1});
        }
        return FactoredPoly<Scalar>(Scalar(1), std::move(f));
    }

    Matrix<Scalar> to_dense() const { return diagonal().asDiagonal(); }

private:
    std::vector<RootFactor<Scalar>> blocks_;
    std::vector<Scalar> simples_;
};

using ExactDiagonalSpec = DiagonalSpec<ExactComplex>;

/// trace(B) / n. Requires n >= 1.
template <typename Scalar>
Scalar tau(const DiagonalSpec<Scalar>& b) {
    if (b.size() < 1) {
        throw std::invalid_argument("tau: empty matrix");
    }
    return b.diagonal().sum() / Scalar(b.size());
}

template <typename Scalar>
struct BorderedMatrix {
    DiagonalSpec<Scalar> base;
    Vector<Scalar> u;
    Vector<Scalar> v;
    Scalar corner;

    BorderedMatrix() = default;
    BorderedMatrix(DiagonalSpec<Scalar> b, Vector<Scalar> u_, Vector<Scalar> v_)
        : base(std::move(b)), u(std::move(u_)), v(std::move(v_)), corner(tau(base)) {
        if (u.size() != base.size() || v.size() != base.size()) {
            throw std::invalid_argument("BorderedMatrix: border length must equal the matrix order");
        }
    }

    int order() const { return base.size() + 1; }

    Matrix<Scalar> materialize() const {
        const int n = base.size();
        Matrix<Scalar> a = Matrix<Scalar>::Zero(n + 1, n + 1);
        a.topLeftCorner(n, n) = base.to_dense();
        a.topRightCorner(n, 1) = u;
        a.bottomLeftCorner(1, n) = v.transpose();
        a(n, n) = corner;
        return a;
    }
};

using ExactBordered = BorderedMatrix<ExactComplex>;
using ApproxBordered = BorderedMatrix<ApproxComplex>;

/// p_A(x) = (x - tau) p_B(x) - sum_i u_i v_i p_B(x) / (x - lambda_i).
template <typename Scalar>
DensePoly<Scalar> bordered_char_poly(const BorderedMatrix<Scalar>& a) {
    const DensePoly<Scalar> pb = expand(a.base.characteristic_polynomial());
    DensePoly<Scalar> out = DensePoly<Scalar>::linear_factor(a.corner) * pb;
    const auto diag = a.base.diagonal();
    for (Eigen::Index i = 0; i < diag.size(); ++i) {
        const Scalar w = a.u(i) * a.v(i);
        if (is_zero(w)) {
            continue;
        }
        auto [cofactor, rem] = divide_linear(pb, diag(i));
        out -= cofactor * w;
    }
    return out;
}

enum class IntegrabilityClass { FreelyIntegrable, UniquelyIntegrable, NonIntegrable };

std::string to_string(IntegrabilityClass c);

/// Raised when an integral is requested for a non-integrable matrix. The
/// witness lists the distinct values of the zero-constant antiderivative of
/// p_B at its multiple roots.
class NotIntegrableError : public std::runtime_error {
public:
    explicit NotIntegrableError(std::vector<ExactComplex> witness);
    const std::vector<ExactComplex>& witness() const { return witness_; }

private:
    std::vector<ExactComplex> witness_;
};

class NotAnIntegralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// All eigenvalues distinct.
bool is_non_derogatory(const ExactDiagonalSpec& b);

IntegrabilityClass classify_integrability(const ExactDiagonalSpec& b);

/// rho_i = (p_B / (x - a_i))(a_i) for each simple eigenvalue a_i.
std::vector<ExactComplex> simple_cofactor_values(const ExactDiagonalSpec& b);

/// t_i = -(n + 1) F(a_i) / rho_i: the products u_{d_i} v_{d_i} every integral
/// with p_A = (n + 1) F must carry on the simple coordinates.
std::vector<ExactComplex> border_products(const ExactDiagonalSpec& b, const ExactPoly& full_integral);

/// Canonical integral: u = (1, ..., 1), v = 0 on the block coordinates and
/// v_{d_i} = t_i. p_A = (n + 1) F where F is the full integral of p_B (zero
/// constant term for freely integrable B). Throws NotIntegrableError.
ExactBordered integrate(const ExactDiagonalSpec& b);

/// Canonical integral with det(A) = determinant. B must be freely integrable
/// (std::invalid_argument otherwise).
ExactBordered integrate_with_determinant(const ExactDiagonalSpec& b, const ExactComplex& determinant);

/// Integrator with the least Frobenius norm: u_{d_i} = v_{d_i} = sqrt(t_i)
/// (principal branch), zero on the block coordinates.
struct MinNormIntegral {
    ApproxBordered integral;
    /// ||B||_F^2 + |tau|^2 + 2 sum |t_i|
    double frobenius_norm_sq = 0.0;
    /// The same quantity when every |t_i| is rational.
    std::optional<Rational> exact_frobenius_norm_sq;
};

MinNormIntegral integrate_min_norm(const ExactDiagonalSpec& b);

/// Whether an integral of its base matrix is diagonalizable: the block
/// coordinates of u and v vanish, and so do u_{d_i}, v_{d_i} whenever
/// p_A(a_i) = 0. Throws NotAnIntegralError unless p_A' = (n + 1) p_B.
bool integral_is_diagonalizable(const ExactBordered& a);

/// (X + 1) A (X^{-1} + 1): an integral of X B X^{-1}. Throws
/// std::invalid_argument for a singular or mis-sized X.
ExactMatrix conjugate_transport(const ExactBordered& a, const ExactMatrix& x);

}  // namespace matintegra
