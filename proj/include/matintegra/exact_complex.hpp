#pragma once

// Scalar types shared by every module.
//
// ExactComplex is a Gaussian rational re + im*i with arbitrary-precision
// rational parts; ApproxComplex is std::complex<double>. Generic code in this
// library is templated on one of these two and uses the free functions below
// (is_zero, conj, abs2, to_approx) instead of member calls.

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>

#include <Eigen/Core>
#include <gmpxx.h>

namespace matintegra {

using Rational = mpq_class;
using ApproxComplex = std::complex<double>;

class ExactComplex {
public:
    ExactComplex() = default;
    ExactComplex(int re) : re_(re) {}
    ExactComplex(long re) : re_(re) {}
    ExactComplex(Rational re) : re_(std::move(re)) {}
    ExactComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactComplex i() { return {Rational(0), Rational(1)}; }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    ExactComplex conj() const { return {re_, -im_}; }
    /// |z|^2, always rational.
    Rational abs2() const { return re_ * re_ + im_ * im_; }

    ExactComplex& operator+=(const ExactComplex& o);
    ExactComplex& operator-=(const ExactComplex& o);
    ExactComplex& operator*=(const ExactComplex& o);
    /// Throws std::domain_error on division by zero.
    ExactComplex& operator/=(const ExactComplex& o);

    ExactComplex operator-() const { return {-re_, -im_}; }

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }

    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

    /// Total order (real part, then imaginary part). Used for canonical
    /// orderings only; it is not a field order.
    friend bool lexicographic_less(const ExactComplex& a, const ExactComplex& b) {
        return a.re_ < b.re_ || (a.re_ == b.re_ && a.im_ < b.im_);
    }

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

// Generic scalar interface.

inline bool is_zero(const ExactComplex& z) { return z.is_zero(); }
inline bool is_zero(const ApproxComplex& z) { return z == ApproxComplex(0.0, 0.0); }

inline ExactComplex conj(const ExactComplex& z) { return z.conj(); }

inline Rational abs2(const ExactComplex& z) { return z.abs2(); }
inline double abs2(const ApproxComplex& z) { return std::norm(z); }

ApproxComplex to_approx(const ExactComplex& z);
inline ApproxComplex to_approx(const ApproxComplex& z) { return z; }

/// |z| as a rational when re^2 + im^2 is the square of a rational.
std::optional<Rational> exact_abs(const ExactComplex& z);

/// Square root of a nonnegative rational when it is rational.
std::optional<Rational> exact_sqrt(const Rational& q);

/// Two roots are considered the same root. Exact mode: equality. Approx mode:
/// |a - b| <= 1e-6 * max(1, |a|).
inline bool roots_coincide(const ExactComplex& a, const ExactComplex& b) { return a == b; }
bool roots_coincide(const ApproxComplex& a, const ApproxComplex& b);

/// Relative tolerance used when clustering approximate roots.
inline constexpr double kRootClusterTolerance = 1e-6;

}  // namespace matintegra

namespace Eigen {

template <>
struct NumTraits<matintegra::ExactComplex> : GenericNumTraits<matintegra::ExactComplex> {
    using Real = matintegra::ExactComplex;
    using NonInteger = matintegra::ExactComplex;
    using Literal = matintegra::ExactComplex;
    using Nested = matintegra::ExactComplex;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 32,
        MulCost = 64
    };
    static Real epsilon() { return 0; }
    static Real dummy_precision() { return 0; }
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace matintegra {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ExactMatrix = Matrix<ExactComplex>;
using ApproxMatrix = Matrix<ApproxComplex>;

ApproxMatrix to_approx(const ExactMatrix& m);

}  // namespace matintegra
