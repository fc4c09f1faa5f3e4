#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matintegra/exact_complex.hpp"
#include "matintegra/polynomial.hpp"

namespace testing_support {

using namespace matintegra;

inline ExactComplex q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return ExactComplex(r);
}

inline ExactComplex gq(long re_num, long re_den, long im_num, long im_den) {
    Rational re(re_num, re_den);
    Rational im(im_num, im_den);
    re.canonicalize();
    im.canonicalize();
    return ExactComplex(re, im);
}

inline ExactPoly poly(std::initializer_list<ExactComplex> ascending) { return ExactPoly(ascending); }

/// Ascending integer coefficients.
inline ExactPoly ipoly(std::initializer_list<long> ascending) {
    std::vector<ExactComplex> c;
    for (long x : ascending) {
        c.push_back(q(x));
    }
    return ExactPoly(std::move(c));
}

inline std::string str(const ExactComplex& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

/// Small random rationals / Gaussian rationals for property tests.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    ExactComplex rational(int height = 20) {
        std::uniform_int_distribution<long> num(-height, height);
        std::uniform_int_distribution<long> den(1, height);
        return q(num(rng_), den(rng_));
    }

    ExactComplex gaussian(int height = 20) {
        std::uniform_int_distribution<long> num(-height, height);
        std::uniform_int_distribution<long> den(1, height);
        return gq(num(rng_), den(rng_), num(rng_), den(rng_));
    }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    ApproxComplex in_unit_disk() {
        for (;;) {
            const ApproxComplex z(uniform(-1, 1), uniform(-1, 1));
            if (std::abs(z) < 1.0) {
                return z;
            }
        }
    }

    ExactPoly poly(int degree, bool complex_coeffs) {
        std::vector<ExactComplex> c;
        for (int i = 0; i <= degree; ++i) {
            c.push_back(complex_coeffs ? gaussian() : rational());
        }
        if (c.back().is_zero()) {
            c.back() = q(1);
        }
        return ExactPoly(std::move(c));
    }

    std::vector<ExactComplex> distinct(std::size_t count, bool complex_values, int height = 20) {
        std::vector<ExactComplex> out;
        while (out.size() < count) {
            ExactComplex z = complex_values ? gaussian(height) : rational(height);
            if (std::find(out.begin(), out.end(), z) == out.end()) {
                out.push_back(z);
            }
        }
        return out;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing_support
