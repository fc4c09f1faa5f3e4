#pragma once

// Dense (coefficient) and factored (root, multiplicity) polynomials over an
// ExactComplex or ApproxComplex scalar.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matintegra/exact_complex.hpp"

namespace matintegra {

class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Coefficients in ascending degree. The zero polynomial is the empty list and
/// reports degree() == -1; every other polynomial has a nonzero leading
/// coefficient.
template <typename Scalar>
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    DensePoly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

    static DensePoly constant(const Scalar& c) { return DensePoly(std::vector<Scalar>{c}); }

    /// x - root
    static DensePoly linear_factor(const Scalar& root) {
        return DensePoly(std::vector<Scalar>{-root, Scalar(1)});
    }

    static DensePoly monomial(const Scalar& c, int power) {
        std::vector<Scalar> v(static_cast<std::size_t>(power) + 1, Scalar(0));
        v.back() = c;
        return DensePoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }

    /// Coefficient of x^i, zero beyond the degree.
    Scalar coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Scalar(0);
    }
    const Scalar& leading() const {
        if (c_.empty()) {
            throw std::logic_error("DensePoly::leading on the zero polynomial");
        }
        return c_.back();
    }

    DensePoly& operator+=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), Scalar(0));
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        trim();
        return *this;
    }
    DensePoly& operator-=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), Scalar(0));
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        trim();
        return *this;
    }
    DensePoly& operator*=(const Scalar& s) {
        for (auto& x : c_) {
            x *= s;
        }
        trim();
        return *this;
    }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(DensePoly a, const Scalar& s) { return a *= s; }
    friend DensePoly operator*(const Scalar& s, DensePoly a) { return a *= s; }
    DensePoly operator-() const {
        DensePoly r = *this;
        for (auto& x : r.c_) {
            x = -x;
        }
        return r;
    }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (::matintegra::is_zero(a.c_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return DensePoly(std::move(out));
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && ::matintegra::is_zero(c_.back())) {
            c_.pop_back();
        }
    }

    std::vector<Scalar> c_;
};

using ExactPoly = DensePoly<ExactComplex>;
using ApproxPoly = DensePoly<ApproxComplex>;

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const DensePoly<Scalar>& p) {
    os << "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        os << (i ? ", " : "") << p.coeffs()[i];
    }
    return os << "]";
}

/// Horner evaluation.
template <typename Scalar>
Scalar evaluate(const DensePoly<Scalar>& p, const Scalar& x) {
    Scalar acc(0);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

template <typename Scalar>
DensePoly<Scalar> derivative(const DensePoly<Scalar>& p) {
    if (p.degree() < 1) {
        return {};
    }
    std::vector<Scalar> out(p.coeffs().begin() + 1, p.coeffs().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= Scalar(static_cast<int>(i + 1));
    }
    return DensePoly<Scalar>(std::move(out));
}

/// The antiderivative whose constant term is `constant`.
template <typename Scalar>
DensePoly<Scalar> antiderivative(const DensePoly<Scalar>& p, const Scalar& constant = Scalar(0)) {
    std::vector<Scalar> out(p.coeffs().size() + 1, Scalar(0));
    out[0] = constant;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        out[i + 1] = p.coeffs()[i] / Scalar(static_cast<int>(i + 1));
    }
    return DensePoly<Scalar>(std::move(out));
}

template <typename Scalar>
struct PolyDivision {
    DensePoly<Scalar> quotient;
    DensePoly<Scalar> remainder;
};

/// Euclidean division; throws std::domain_error for a zero divisor.
template <typename Scalar>
PolyDivision<Scalar> divide(const DensePoly<Scalar>& num, const DensePoly<Scalar>& den) {
    if (den.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (num.degree() < den.degree()) {
        return {{}, num};
    }
    std::vector<Scalar> rem = num.coeffs();
    const int dd = den.degree();
    std::vector<Scalar> quot(static_cast<std::size_t>(num.degree() - dd + 1), Scalar(0));
    const Scalar& lead = den.leading();
    for (int k = num.degree() - dd; k >= 0; --k) {
        Scalar q = rem[static_cast<std::size_t>(k + dd)] / lead;
        if (!is_zero(q)) {
            for (int j = 0; j <= dd; ++j) {
                rem[static_cast<std::size_t>(k + j)] -= q * den.coeffs()[static_cast<std::size_t>(j)];
            }
        }
        rem[static_cast<std::size_t>(k + dd)] = Scalar(0);
        quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {DensePoly<Scalar>(std::move(quot)), DensePoly<Scalar>(std::move(rem))};
}

/// Synthetic division by (x - root). The remainder equals p(root).
template <typename Scalar>
std::pair<DensePoly<Scalar>, Scalar> divide_linear(const DensePoly<Scalar>& p, const Scalar& root) {
    if (p.is_zero()) {
        return {{}, Scalar(0)};
    }
    const auto& c = p.coeffs();
    std::vector<Scalar> q(c.size() - 1, Scalar(0));
    Scalar acc(0);
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * root + c[i];
        if (i > 0) {
            q[i - 1] = acc;
        }
    }
    return {DensePoly<Scalar>(std::move(q)), acc};
}

template <typename Scalar>
DensePoly<Scalar> make_monic(const DensePoly<Scalar>& p) {
    if (p.is_zero()) {
        return p;
    }
    return p * (Scalar(1) / p.leading());
}

/// Monic greatest common divisor (exact scalars). gcd(0, 0) = 0.
template <typename Scalar>
DensePoly<Scalar> gcd(DensePoly<Scalar> a, DensePoly<Scalar> b) {
    while (!b.is_zero()) {
        auto r = divide(a, b).remainder;
        a = std::move(b);
        b = make_monic(r);
    }
    return make_monic(a);
}

/// Product of the distinct monic linear factors of p: p / gcd(p, p').
template <typename Scalar>
DensePoly<Scalar> squarefree_part(const DensePoly<Scalar>& p) {
    if (p.degree() < 1) {
        return DensePoly<Scalar>::constant(Scalar(1));
    }
    return make_monic(divide(p, gcd(p, derivative(p))).quotient);
}

/// Largest relative coefficient deviation max|a_i - b_i| / max|b_i|.
template <typename Scalar>
double relative_coefficient_error(const DensePoly<Scalar>& a, const DensePoly<Scalar>& b) {
    const int n = std::max(a.degree(), b.degree());
    double scale = 0.0;
    double diff = 0.0;
    for (int i = 0; i <= n; ++i) {
        const ApproxComplex bi = to_approx(b.coeff(i));
        scale = std::max(scale, std::abs(bi));
        diff = std::max(diff, std::abs(to_approx(a.coeff(i)) - bi));
    }
    return scale > 0.0 ? diff / scale : diff;
}

inline ApproxPoly to_approx(const ExactPoly& p) {
    std::vector<ApproxComplex> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        c.push_back(to_approx(x));
    }
    return ApproxPoly(std::move(c));
}

template <typename Scalar>
struct RootFactor {
    Scalar root;
    int multiplicity = 1;
};

/// Number of distinct simple roots and of distinct multiple roots.
struct PolyType {
    int simple = 0;
    int multiple = 0;
    friend bool operator==(const PolyType&, const PolyType&) = default;
};

/// leading * prod (x - root)^multiplicity with pairwise distinct roots.
template <typename Scalar>
class FactoredPoly {
public:
    FactoredPoly() = default;

    /// Throws ValidationError on duplicate roots or multiplicity < 1.
    FactoredPoly(Scalar leading, std::vector<RootFactor<Scalar>> factors)
        : leading_(std::move(leading)), factors_(std::move(factors)) {
        if (is_zero(leading_)) {
            throw ValidationError("FactoredPoly: leading coefficient must be nonzero");
        }
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i].multiplicity < 1) {
                throw ValidationError("FactoredPoly: multiplicities must be >= 1");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (roots_coincide(factors_[j].root, factors_[i].root)) {
                    throw ValidationError("FactoredPoly: duplicate root; roots must be pairwise distinct");
                }
            }
        }
    }

    explicit FactoredPoly(std::vector<RootFactor<Scalar>> factors)
        : FactoredPoly(Scalar(1), std::move(factors)) {}

    const Scalar& leading() const { return leading_; }
    const std::vector<RootFactor<Scalar>>& factors() const { return factors_; }

    int degree() const {
        int d = 0;
        for (const auto& f : factors_) {
            d += f.multiplicity;
        }
        return d;
    }

    std::vector<RootFactor<Scalar>> multiple_roots() const {
        std::vector<RootFactor<Scalar>> out;
        std::copy_if(factors_.begin(), factors_.end(), std::back_inserter(out),
                     [](const auto& f) { return f.multiplicity >= 2; });
        return out;
    }

    std::vector<Scalar> simple_roots() const {
        std::vector<Scalar> out;
        for (const auto& f : factors_) {
            if (f.multiplicity == 1) {
                out.push_back(f.root);
            }
        }
        return out;
    }

private:
    Scalar leading_{1};
    std::vector<RootFactor<Scalar>> factors_;
};

using ExactFactoredPoly = FactoredPoly<ExactComplex>;
using ApproxFactoredPoly = FactoredPoly<ApproxComplex>;

template <typename Scalar>
DensePoly<Scalar> expand(const FactoredPoly<Scalar>& f) {
    DensePoly<Scalar> p = DensePoly<Scalar>::constant(f.leading());
    for (const auto& [root, mult] : f.factors()) {
        const auto lin = DensePoly<Scalar>::linear_factor(root);
        for (int i = 0; i < mult; ++i) {
            p = p * lin;
        }
    }
    return p;
}

template <typename Scalar>
PolyType classify_type(const FactoredPoly<Scalar>& f) {
    PolyType t;
    for (const auto& rf : f.factors()) {
        (rf.multiplicity == 1 ? t.simple : t.multiple) += 1;
    }
    return t;
}

/// Evaluates f at x directly from its factors.
template <typename Scalar>
Scalar evaluate(const FactoredPoly<Scalar>& f, const Scalar& x) {
    Scalar acc = f.leading();
    for (const auto& [root, mult] : f.factors()) {
        const Scalar d = x - root;
        for (int i = 0; i < mult; ++i) {
            acc *= d;
        }
    }
    return acc;
}

/// Multiplicity of `root` in p (0 when p(root) != 0). p must be nonzero.
template <typename Scalar>
int root_multiplicity(DensePoly<Scalar> p, const Scalar& root) {
    int mult = 0;
    while (p.degree() >= 1) {
        auto [q, r] = divide_linear(p, root);
        if (!is_zero(r)) {
            break;
        }
        p = std::move(q);
        ++mult;
    }
    return mult;
}

}  // namespace matintegra
