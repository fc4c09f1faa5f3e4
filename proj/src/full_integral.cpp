#include "matintegra/full_integral.hpp"

#include <stdexcept>

#include "matintegra/linear_algebra.hpp"

namespace matintegra {

const ExactPoly& integral_of(const FullIntegralOutcome& o) {
    if (const auto* u = std::get_if<UniqueFullIntegral>(&o)) {
        return u->integral;
    }
    if (const auto* f = std::get_if<FreeFullIntegral>(&o)) {
        return f->integral;
    }
    throw std::logic_error("integral_of: no full integral");
}

FullIntegralOutcome full_integral(const ExactFactoredPoly& f) {
    if (f.degree() < 1) {
        throw std::invalid_argument("full_integral: polynomial must be nonconstant");
    }
    ExactPoly p0 = antiderivative(expand(f));
    const auto multiple = f.multiple_roots();
    if (multiple.empty()) {
        return FreeFullIntegral{std::move(p0)};
    }
    std::vector<ExactComplex> values;
    values.reserve(multiple.size());
    for (const auto& rf : multiple) {
        values.push_back(evaluate(p0, rf.root));
    }
    for (const auto& v : values) {
        if (v != values.front()) {
            return NoFullIntegral{std::move(values)};
        }
    }
    ExactComplex constant = -values.front();
    p0 += ExactPoly::constant(constant);
    return UniqueFullIntegral{std::move(p0), std::move(constant)};
}

FullIntegralOutcome full_integral(const ExactPoly& f) {
    if (f.degree() < 1) {
        throw std::invalid_argument("full_integral: polynomial must be nonconstant");
    }
    ExactPoly p0 = antiderivative(f);
    const ExactPoly repeated = gcd(f, derivative(f));
    if (repeated.degree() < 1) {
        return FreeFullIntegral{std::move(p0)};
    }
    // Vanishing at every multiple root of f means divisibility by their
    // squarefree product.
    const ExactPoly radical = squarefree_part(repeated);
    const ExactPoly rem = divide(p0, radical).remainder;
    if (rem.degree() >= 1) {
        return NoFullIntegral{};
    }
    ExactComplex constant = -rem.coeff(0);
    p0 += ExactPoly::constant(constant);
    return UniqueFullIntegral{std::move(p0), std::move(constant)};
}

PolyType classify_type(const ExactPoly& f) {
    if (f.degree() < 1) {
        return {};
    }
    const int distinct = squarefree_part(f).degree();
    const ExactPoly repeated = gcd(f, derivative(f));
    const int multiple = repeated.degree() < 1 ? 0 : squarefree_part(repeated).degree();
    return {distinct - multiple, multiple};
}

FullIntegralExistence full_integral_alternative(int simple, int multiple) {
    if (simple < 0 || multiple < 0 || simple + multiple < 1) {
        throw std::invalid_argument("full_integral_alternative: need simple, multiple >= 0 and simple + multiple >= 1");
    }
    if (multiple <= 1) {
        return FullIntegralExistence::AlwaysExists;
    }
    if (multiple > simple + 1) {
        return FullIntegralExistence::NeverExists;
    }
    return FullIntegralExistence::DependsOnValues;
}

PhiMap phi_build(int degree_bound, std::span<const RootFactor<ExactComplex>> multiple_roots) {
    if (degree_bound < 0) {
        throw ValidationError("phi_build: degree bound must be >= 0");
    }
    if (multiple_roots.empty()) {
        throw ValidationError("phi_build: at least one multiple root is required");
    }
    for (std::size_t i = 0; i < multiple_roots.size(); ++i) {
        if (multiple_roots[i].multiplicity < 2) {
            throw ValidationError("phi_build: multiplicities must be >= 2");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (multiple_roots[i].root == multiple_roots[j].root) {
                throw ValidationError("phi_build: roots must be pairwise distinct");
            }
        }
    }

    PhiMap phi;
    phi.degree_bound = degree_bound;
    phi.multiple_count = static_cast<int>(multiple_roots.size());
    phi.q = ExactPoly::constant(1);
    ExactPoly simple_product = ExactPoly::constant(1);
    for (const auto& [root, mult] : multiple_roots) {
        const ExactPoly lin = ExactPoly::linear_factor(root);
        for (int i = 0; i < mult; ++i) {
            phi.q = phi.q * lin;
        }
        simple_product = simple_product * lin;
    }
    phi.big_q = phi.q * simple_product;

    const int rows = degree_bound + phi.multiple_count;
    phi.matrix = ExactMatrix::Zero(rows, degree_bound + 1);
    for (int j = 0; j <= degree_bound; ++j) {
        const auto [column, rem] = divide(derivative(phi.big_q * ExactPoly::monomial(1, j)), phi.q);
        if (!rem.is_zero() || column.degree() >= rows) {
            throw std::logic_error("phi_build: (Q x^j)' is not divisible by q");
        }
        for (int i = 0; i <= column.degree(); ++i) {
            phi.matrix(i, j) = column.coeff(i);
        }
    }
    return phi;
}

std::optional<ExactPoly> phi_image_membership(const PhiMap& phi, const ExactPoly& h) {
    const auto rows = phi.matrix.rows();
    if (h.degree() >= rows) {
        throw std::invalid_argument("phi_image_membership: degree of h exceeds the codomain");
    }
    Vector<ExactComplex> rhs(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        rhs(i) = h.coeff(static_cast<int>(i));
    }
    const auto g = solve_exact(phi.matrix, rhs);
    if (!g) {
        return std::nullopt;
    }
    return ExactPoly(std::vector<ExactComplex>(g->data(), g->data() + g->size()));
}

std::vector<ExactPoly> integral_sequence(const ExactFactoredPoly& f, int depth) {
    if (depth < 1) {
        throw std::invalid_argument("integral_sequence: depth must be >= 1");
    }
    std::vector<ExactPoly> out;
    FullIntegralOutcome step = full_integral(f);
    while (has_full_integral(step)) {
        out.push_back(integral_of(step));
        if (static_cast<int>(out.size()) == depth) {
            break;
        }
        step = full_integral(out.back());
    }
    return out;
}

std::optional<int> sequence_length_bound(int simple, int multiple) {
    if (simple < 0 || multiple < 0) {
        throw std::invalid_argument("sequence_length_bound: counts must be nonnegative");
    }
    if (multiple <= 1) {
        return std::nullopt;
    }
    return 1 + simple / (multiple - 1);
}

}  // namespace matintegra
