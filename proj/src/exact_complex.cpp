#include "matintegra/exact_complex.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace matintegra {

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
    if (o.is_zero()) {
        throw std::domain_error("ExactComplex: division by zero");
    }
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    const Rational d = o.abs2();
    Rational re = (re_ * o.re_ + im_ * o.im_) / d;
    Rational im = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z) {
    if (z.is_real()) {
        return os << z.real().get_str();
    }
    if (sgn(z.real()) != 0) {
        os << z.real().get_str() << (sgn(z.imag()) > 0 ? "+" : "");
    }
    if (z.imag() == 1) {
        return os << "i";
    }
    if (z.imag() == -1) {
        return os << "-i";
    }
    return os << z.imag().get_str() << "i";
}

ApproxComplex to_approx(const ExactComplex& z) {
    return {z.real().get_d(), z.imag().get_d()};
}

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (sgn(q) < 0) {
        return std::nullopt;
    }
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    mpz_class rn = sqrt(num);
    mpz_class rd = sqrt(den);
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

std::optional<Rational> exact_abs(const ExactComplex& z) {
    if (z.is_real()) {
        return Rational(abs(z.real()));
    }
    if (sgn(z.real()) == 0) {
        return Rational(abs(z.imag()));
    }
    return exact_sqrt(z.abs2());
}

bool roots_coincide(const ApproxComplex& a, const ApproxComplex& b) {
    return std::abs(a - b) <= kRootClusterTolerance * std::max(1.0, std::abs(a));
}

ApproxMatrix to_approx(const ExactMatrix& m) {
    ApproxMatrix out(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out(r, c) = to_approx(m(r, c));
        }
    }
    return out;
}

}  // namespace matintegra
