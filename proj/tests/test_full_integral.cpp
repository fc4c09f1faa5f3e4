#include <doctest.h>

#include "matintegra/full_integral.hpp"
#include "matintegra/oracle.hpp"
#include "support.hpp"

using namespace matintegra;
using namespace testing_support;

namespace {

ExactComplex power(const ExactComplex& x, int k) {
    ExactComplex r(1);
    for (int i = 0; i < k; ++i) {
        r *= x;
    }
    return r;
}

// Independent decision: antiderivative by the coefficient rule, evaluated by
// explicit powers; the only admissible constant is -P0(b_1).
std::optional<ExactPoly> brute_force_full_integral(const ExactFactoredPoly& f) {
    const ExactPoly p = expand(f);
    std::vector<ExactComplex> c{ExactComplex(0)};
    for (int i = 0; i <= p.degree(); ++i) {
        c.push_back(p.coeff(i) / ExactComplex(i + 1));
    }
    auto value = [&](const ExactComplex& x) {
        ExactComplex s(0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            s += c[i] * power(x, static_cast<int>(i));
        }
        return s;
    };
    const auto multiple = f.multiple_roots();
    if (!multiple.empty()) {
        c[0] = -value(multiple.front().root);
        for (const auto& b : multiple) {
            if (!value(b.root).is_zero()) {
                return std::nullopt;
            }
        }
    }
    return ExactPoly(c);
}

// (Q g)' / q = g * sum_i (alpha_i + 1) prod_{j != i} (x - b_j) + g' * prod_j (x - b_j)
ExactPoly phi_apply(std::span<const RootFactor<ExactComplex>> roots, const ExactPoly& g) {
    ExactPoly r = ExactPoly::constant(q(1));
    ExactPoly s;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        r = r * ExactPoly::linear_factor(roots[i].root);
        ExactPoly term = ExactPoly::constant(ExactComplex(roots[i].multiplicity + 1));
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j != i) {
                term = term * ExactPoly::linear_factor(roots[j].root);
            }
        }
        s += term;
    }
    return g * s + derivative(g) * r;
}

ExactPoly simple_part(const ExactFactoredPoly& f) {
    ExactPoly h = ExactPoly::constant(f.leading());
    for (const auto& a : f.simple_roots()) {
        h = h * ExactPoly::linear_factor(a);
    }
    return h;
}

}  // namespace

TEST_CASE("full integral examples") {
    {
        const auto out = full_integral(ExactFactoredPoly({{q(0), 2}, {q(3), 1}, {q(5), 1}}));
        REQUIRE(std::holds_alternative<UniqueFullIntegral>(out));
        CHECK(integral_of(out) == expand(ExactFactoredPoly(q(1, 5), {{q(0), 3}, {q(5), 2}})));
        CHECK(std::get<UniqueFullIntegral>(out).constant == q(0));
    }
    {
        const auto out = full_integral(ExactFactoredPoly({{q(0), 2}, {q(1), 2}}));
        REQUIRE(std::holds_alternative<NoFullIntegral>(out));
        const auto& w = std::get<NoFullIntegral>(out).antiderivative_values;
        REQUIRE(w.size() == 2);
        CHECK(w[0] == q(0));
        CHECK(w[1] == q(1, 30));
    }
    {
        const auto out = full_integral(ExactFactoredPoly({{q(1), 1}, {q(2), 1}}));
        REQUIRE(std::holds_alternative<FreeFullIntegral>(out));
        CHECK(integral_of(out) == poly({q(0), q(2), q(-3, 2), q(1, 3)}));
    }
    {
        const auto out = full_integral(ExactFactoredPoly({{q(0), 2}, {q(2), 2}, {q(1), 1}}));
        REQUIRE(std::holds_alternative<UniqueFullIntegral>(out));
        CHECK(integral_of(out) == expand(ExactFactoredPoly(q(1, 6), {{q(0), 3}, {q(2), 3}})));
    }
    // x^2: the full integral is x^3 / 3 (F' = f)
    CHECK(integral_of(full_integral(ExactFactoredPoly({{q(0), 2}}))) == poly({q(0), q(0), q(0), q(1, 3)}));
    CHECK_THROWS_AS(integral_of(full_integral(ExactFactoredPoly({{q(0), 2}, {q(1), 2}}))), std::logic_error);
}

TEST_CASE("dense route agrees with the factored route") {
    InstanceGenerator gen(17, {.simple = 2, .multiple = 2, .force_integrable = true});
    InstanceGenerator gen_free(18, {.simple = 3, .multiple = 0, .gaussian = true});
    InstanceGenerator gen_none(19, {.simple = 1, .multiple = 2});
    for (auto* g : {&gen, &gen_free, &gen_none}) {
        for (int t = 0; t < 15; ++t) {
            const auto f = g->next_polynomial();
            const auto a = full_integral(f);
            const auto b = full_integral(expand(f));
            CHECK(a.index() == b.index());
            CHECK(classify_type(expand(f)) == classify_type(f));
            if (has_full_integral(a)) {
                CHECK(integral_of(a) == integral_of(b));
            }
        }
    }
}

TEST_CASE("full integral satisfies its definition and matches the brute-force oracle") {
    int found = 0;
    int none = 0;
    for (int cell = 0; cell < 6; ++cell) {
        const std::array<InstanceProfile, 6> profiles{{
            {.simple = 3, .multiple = 0, .gaussian = true},
            {.simple = 2, .multiple = 1, .max_degree = 6},
            {.simple = 1, .multiple = 2, .height = 6},
            {.simple = 2, .multiple = 2, .height = 6, .gaussian = true, .force_integrable = true},
            {.simple = 0, .multiple = 2, .max_degree = 6},
            {.simple = 2, .multiple = 3, .max_degree = 8, .height = 4},
        }};
        InstanceGenerator gen(100 + static_cast<std::uint64_t>(cell), profiles[static_cast<std::size_t>(cell)]);
        for (int t = 0; t < 25; ++t) {
            const auto f = gen.next_polynomial();
            const auto out = full_integral(f);
            const auto oracle = brute_force_full_integral(f);
            REQUIRE(has_full_integral(out) == oracle.has_value());
            if (!oracle) {
                ++none;
                continue;
            }
            ++found;
            const auto& big_f = integral_of(out);
            CHECK(big_f == *oracle);
            CHECK(derivative(big_f) == expand(f));
            for (const auto& b : f.multiple_roots()) {
                CHECK(evaluate(big_f, b.root).is_zero());
            }
        }
    }
    CHECK(found > 0);
    CHECK(none > 0);
}

TEST_CASE("existence alternative") {
    CHECK(full_integral_alternative(5, 1) == FullIntegralExistence::AlwaysExists);
    CHECK(full_integral_alternative(0, 2) == FullIntegralExistence::NeverExists);
    CHECK(full_integral_alternative(1, 2) == FullIntegralExistence::DependsOnValues);
    CHECK(full_integral_alternative(3, 0) == FullIntegralExistence::AlwaysExists);
    CHECK(full_integral_alternative(2, 4) == FullIntegralExistence::NeverExists);
    CHECK_THROWS_AS(full_integral_alternative(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(full_integral_alternative(-1, 2), std::invalid_argument);
}

TEST_CASE("phi map examples") {
    {
        const std::vector<RootFactor<ExactComplex>> b{{q(0), 2}};
        const auto phi = phi_build(0, b);
        REQUIRE(phi.matrix.rows() == 1);
        REQUIRE(phi.matrix.cols() == 1);
        CHECK(phi.matrix(0, 0) == q(3));
        const auto g = phi_image_membership(phi, ExactPoly::constant(q(6)));
        REQUIRE(g.has_value());
        CHECK(*g == ExactPoly::constant(q(2)));
    }
    {
        const std::vector<RootFactor<ExactComplex>> b{{q(0), 2}, {q(1), 2}};
        const auto phi = phi_build(0, b);
        REQUIRE(phi.matrix.rows() == 2);
        CHECK(phi.matrix(0, 0) == q(-3));
        CHECK(phi.matrix(1, 0) == q(6));
        CHECK(phi.q == expand(ExactFactoredPoly(b)));
        const auto g = phi_image_membership(phi, poly({q(-1, 2), q(1)}));
        REQUIRE(g.has_value());
        CHECK(*g == ExactPoly::constant(q(1, 6)));
        CHECK_FALSE(phi_image_membership(phi, poly({q(-1, 3), q(1)})).has_value());
        CHECK_THROWS_AS(phi_image_membership(phi, ipoly({0, 0, 1})), std::invalid_argument);
    }
    const std::vector<RootFactor<ExactComplex>> bad{{q(0), 1}};
    CHECK_THROWS_AS(phi_build(0, bad), ValidationError);
    const std::vector<RootFactor<ExactComplex>> dup{{q(0), 2}, {q(0), 3}};
    CHECK_THROWS_AS(phi_build(1, dup), ValidationError);
    CHECK_THROWS_AS(phi_build(-1, std::vector<RootFactor<ExactComplex>>{{q(0), 2}}), ValidationError);
}

TEST_CASE("phi map columns, rank and invertibility") {
    Sampler s(21);
    for (int t = 0; t < 60; ++t) {
        const int m = s.integer(1, 3);
        const int l = s.integer(0, 4);
        const auto roots = s.distinct(static_cast<std::size_t>(m), t % 2 == 1, 9);
        std::vector<RootFactor<ExactComplex>> b;
        for (const auto& r : roots) {
            b.push_back({r, s.integer(2, 4)});
        }
        const auto phi = phi_build(l, b);
        REQUIRE(phi.matrix.rows() == l + m);
        REQUIRE(phi.matrix.cols() == l + 1);
        for (int j = 0; j <= l; ++j) {
            const ExactPoly column = phi_apply(b, ExactPoly::monomial(q(1), j));
            for (int i = 0; i < l + m; ++i) {
                CHECK(phi.matrix(i, j) == column.coeff(i));
            }
        }
        CHECK(rank_exact(phi.matrix) == l + 1);
        if (m == 1) {
            CHECK(phi.matrix.rows() == phi.matrix.cols());
        }
    }
}

TEST_CASE("image membership agrees with constant matching") {
    int agreeing_positive = 0;
    int agreeing_negative = 0;
    const std::array<InstanceProfile, 4> profiles{{
        {.simple = 1, .multiple = 2, .height = 5},
        {.simple = 2, .multiple = 2, .force_integrable = true},
        {.simple = 3, .multiple = 1, .max_degree = 7, .gaussian = true},
        {.simple = 3, .multiple = 3, .height = 4},
    }};
    for (std::size_t cell = 0; cell < profiles.size(); ++cell) {
        InstanceGenerator gen(300 + cell, profiles[cell]);
        for (int t = 0; t < 20; ++t) {
            const auto f = gen.next_polynomial();
            const auto t_ = classify_type(f);
            const auto blocks = f.multiple_roots();
            const auto phi = phi_build(t_.simple - t_.multiple + 1, blocks);
            const auto g = phi_image_membership(phi, simple_part(f));
            const auto out = full_integral(f);
            REQUIRE(g.has_value() == has_full_integral(out));
            if (g) {
                // The preimage times Q is the full integral.
                CHECK(phi.big_q * *g == integral_of(out));
                ++agreeing_positive;
            } else {
                ++agreeing_negative;
            }
        }
    }
    CHECK(agreeing_positive > 0);
    CHECK(agreeing_negative > 0);
}

TEST_CASE("integral sequences") {
    {
        const auto seq = integral_sequence(ExactFactoredPoly({{q(1), 1}, {q(0), 1}}), 1);
        REQUIRE(seq.size() == 1);
        CHECK(seq[0] == expand(ExactFactoredPoly(q(1, 3), {{q(3, 2), 1}, {q(0), 2}})));
    }
    {
        const ExactComplex lambda = q(2, 7);
        const int n = 3;
        const auto seq = integral_sequence(ExactFactoredPoly({{lambda, n}}), 3);
        REQUIRE(seq.size() == 3);
        Rational scale(1);
        for (int j = 1; j <= 3; ++j) {
            scale /= n + j;
            CHECK(seq[static_cast<std::size_t>(j - 1)] ==
                  expand(ExactFactoredPoly(ExactComplex(scale), {{lambda, n + j}})));
        }
    }
    {
        const auto seq = integral_sequence(ExactFactoredPoly({{q(0), 2}, {q(3), 1}, {q(5), 1}}), 2);
        REQUIRE(seq.size() == 1);
        CHECK(seq[0] == expand(ExactFactoredPoly(q(1, 5), {{q(0), 3}, {q(5), 2}})));
    }
    CHECK_THROWS_AS(integral_sequence(ExactFactoredPoly({{q(0), 1}}), 0), std::invalid_argument);
}

TEST_CASE("sequence elements integrate their predecessors") {
    InstanceGenerator gen(5, {.simple = 2, .multiple = 1, .max_degree = 5});
    for (int t = 0; t < 8; ++t) {
        const auto f = gen.next_polynomial();
        const auto seq = integral_sequence(f, 6);
        ExactPoly prev = expand(f);
        for (const auto& big_f : seq) {
            CHECK(derivative(big_f) == prev);
            const ExactPoly r = gcd(prev, derivative(prev));
            if (r.degree() >= 1) {
                CHECK(divide(big_f, squarefree_part(r)).remainder.is_zero());
            }
            prev = big_f;
        }
    }
}

TEST_CASE("sequence length bound") {
    CHECK_FALSE(sequence_length_bound(4, 0).has_value());
    CHECK_FALSE(sequence_length_bound(0, 1).has_value());
    CHECK(*sequence_length_bound(3, 2) == 4);
    CHECK(*sequence_length_bound(0, 2) == 1);
    CHECK(*sequence_length_bound(5, 3) == 3);
    CHECK_THROWS_AS(sequence_length_bound(-1, 2), std::invalid_argument);
}
