#include "matintegra/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>

namespace matintegra {
namespace {

// The iteration runs in extended precision; clustered and nearly collinear
// roots are resolved well below the double rounding floor.
using Real = long double;
using Wide = std::complex<Real>;
constexpr Real kEps = std::numeric_limits<Real>::epsilon();

// Escalating merge radii tried after the base clustering, and the backward
// error a merge must keep to be accepted.
constexpr double kMergeRadii[] = {1e-5, 1e-4, 1e-3, 1e-2};
constexpr double kMergeAcceptance = 1e-11;

struct Horner {
    Wide value;
    Wide slope;
    Real bound;  // sum |c_i| |z|^i
};

Horner horner(const std::vector<Wide>& c, Wide z) {
    Wide p = 0.0L;
    Wide dp = 0.0L;
    Real b = 0.0L;
    const Real az = std::abs(z);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
        b = b * az + std::abs(*it);
    }
    return {p, dp, b};
}

std::vector<ApproxComplex> aberth(const std::vector<ApproxComplex>& coeffs, int max_sweeps) {
    const std::vector<Wide> c(coeffs.begin(), coeffs.end());
    const int n = static_cast<int>(c.size()) - 1;
    Real radius = 0.0L;
    for (int i = 0; i < n; ++i) {
        radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)] / c.back()));
    }
    radius += 1.0L;

    // Angular offset: an irrational fraction of the circle.
    const Real offset = 2.0L * std::numbers::pi_v<Real> * (std::numbers::phi_v<Real> - 1.0L) / n;
    std::vector<Wide> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        z[static_cast<std::size_t>(k)] = std::polar(radius, 2.0L * std::numbers::pi_v<Real> * k / n + offset);
    }

    std::vector<char> done(static_cast<std::size_t>(n), 0);
    const Real stop = 4.0L * (n + 1) * kEps;
    const auto result = [&] {
        std::vector<ApproxComplex> out;
        out.reserve(z.size());
        for (const auto& w : z) {
            out.emplace_back(static_cast<double>(w.real()), static_cast<double>(w.imag()));
        }
        return out;
    };
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool all_done = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (done[i]) {
                continue;
            }
            const Horner h = horner(c, z[i]);
            if (std::abs(h.value) <= stop * h.bound) {
                done[i] = 1;
                continue;
            }
            all_done = false;
            Wide repulsion = 0.0L;
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j != i) {
                    repulsion += 1.0L / (z[i] - z[j]);
                }
            }
            Wide step;
            if (h.slope == Wide(0.0L)) {
                step = std::polar(kEps * std::max(1.0L, std::abs(z[i])) * 16.0L, 1.0L + static_cast<Real>(i));
            } else {
                const Wide newton = h.value / h.slope;
                step = newton / (1.0L - newton * repulsion);
            }
            z[i] -= step;
            if (std::abs(step) <= kEps * std::abs(z[i])) {
                done[i] = 1;
            }
        }
        if (all_done) {
            return result();
        }
    }
    if (std::all_of(done.begin(), done.end(), [](char d) { return d != 0; })) {
        return result();
    }
    throw RootFindingError("Aberth iteration did not converge within " + std::to_string(max_sweeps) + " sweeps");
}

struct Cluster {
    std::vector<ApproxComplex> members;
    ApproxComplex centre() const {
        return std::accumulate(members.begin(), members.end(), ApproxComplex(0.0)) /
               static_cast<double>(members.size());
    }
};

// A root of multiplicity m is a simple root of the (m - 1)-th derivative;
// Newton there sharpens the cluster mean, which is only accurate to about
// eps^(1/m). Evaluation runs in extended precision so that clustered simple
// roots also come out below the double rounding floor.
ApproxComplex polish(const std::vector<ApproxComplex>& c, ApproxComplex z, int multiplicity, double spread) {
    std::vector<Wide> d(c.begin(), c.end());
    for (int k = 1; k < multiplicity; ++k) {
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            d[i] = d[i + 1] * static_cast<Real>(i + 1);
        }
        d.pop_back();
    }
    Wide w(z.real(), z.imag());
    Real last = std::numeric_limits<Real>::infinity();
    for (int it = 0; it < 20; ++it) {
        Wide p = 0.0L;
        Wide dp = 0.0L;
        for (auto k = d.rbegin(); k != d.rend(); ++k) {
            dp = dp * w + p;
            p = p * w + *k;
        }
        if (dp == Wide(0.0L)) {
            break;
        }
        const Wide step = p / dp;
        // stop once steps no longer shrink: rounding noise
        if (std::abs(step) >= last) {
            break;
        }
        last = std::abs(step);
        w -= step;
        if (last <= kEps * std::abs(w)) {
            break;
        }
    }
    const ApproxComplex out(static_cast<double>(w.real()), static_cast<double>(w.imag()));
    const double limit = spread + 1e-6 * std::max(1.0, std::abs(z));
    return std::isfinite(out.real()) && std::isfinite(out.imag()) && std::abs(out - z) <= limit ? out : z;
}

std::vector<ApproxRoot> to_roots(const std::vector<Cluster>& clusters, const std::vector<ApproxComplex>& c) {
    std::vector<ApproxRoot> out;
    out.reserve(clusters.size());
    for (const auto& cl : clusters) {
        const ApproxComplex centre = cl.centre();
        const int m = static_cast<int>(cl.members.size());
        double spread = 0.0;
        for (const auto& z : cl.members) {
            spread = std::max(spread, std::abs(z - centre));
        }
        out.push_back({polish(c, centre, m, spread), m});
    }
    return out;
}

// Connected components of `clusters` under |a - b| <= radius * max(1, |a|, |b|).
std::vector<std::vector<std::size_t>> components(const std::vector<Cluster>& clusters, double radius) {
    const std::size_t n = clusters.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    std::vector<ApproxComplex> centres;
    for (const auto& c : clusters) {
        centres.push_back(c.centre());
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double scale = std::max({1.0, std::abs(centres[i]), std::abs(centres[j])});
            if (std::abs(centres[i] - centres[j]) <= radius * scale) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) {
        groups[find(i)].push_back(i);
    }
    std::erase_if(groups, [](const auto& g) { return g.empty(); });
    return groups;
}

std::vector<Cluster> merge(const std::vector<Cluster>& clusters, const std::vector<std::vector<std::size_t>>& groups) {
    std::vector<Cluster> out;
    for (const auto& g : groups) {
        Cluster c;
        for (auto idx : g) {
            c.members.insert(c.members.end(), clusters[idx].members.begin(), clusters[idx].members.end());
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

ApproxPoly rebuild(const ApproxComplex& leading, const std::vector<ApproxRoot>& roots) {
    std::vector<ApproxComplex> c{leading};
    for (const auto& r : roots) {
        for (int k = 0; k < r.multiplicity; ++k) {
            c.push_back(0.0);
            for (std::size_t i = c.size() - 1; i > 0; --i) {
                c[i] = c[i - 1] - r.value * c[i];
            }
            c[0] = -r.value * c[0];
        }
    }
    return ApproxPoly(std::move(c));
}

std::vector<ApproxComplex> flatten(const std::vector<ApproxRoot>& roots) {
    std::vector<ApproxComplex> out;
    for (const auto& r : roots) {
        out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
    }
    return out;
}

std::vector<ApproxRoot> find_roots(const ApproxPoly& p, const RootFinderOptions& options) {
    if (p.degree() < 1) {
        throw std::invalid_argument("find_roots: polynomial must be nonconstant");
    }
    for (const auto& c : p.coeffs()) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("find_roots: non-finite coefficient");
        }
    }
    if (std::abs(p.leading()) <= 1e-300) {
        throw std::invalid_argument("find_roots: leading coefficient too small");
    }

    const auto& all = p.coeffs();
    std::size_t zeros = 0;
    while (all[zeros] == ApproxComplex(0.0)) {
        ++zeros;
    }
    const std::vector<ApproxComplex> c(all.begin() + static_cast<std::ptrdiff_t>(zeros), all.end());

    std::vector<ApproxRoot> roots;
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 1) {
        roots.push_back({-c[0] / c[1], 1});
    } else if (n > 1) {
        std::vector<Cluster> clusters;
        for (const auto& z : aberth(c, options.max_sweeps)) {
            clusters.push_back({{z}});
        }
        clusters = merge(clusters, components(clusters, options.cluster_tolerance));

        const ApproxPoly target(c);
        for (double radius : kMergeRadii) {
            bool merged = true;
            while (merged) {
                merged = false;
                for (const auto& group : components(clusters, radius)) {
                    if (group.size() < 2) {
                        continue;
                    }
                    std::vector<std::vector<std::size_t>> trial_groups{group};
                    for (std::size_t i = 0; i < clusters.size(); ++i) {
                        if (std::find(group.begin(), group.end(), i) == group.end()) {
                            trial_groups.push_back({i});
                        }
                    }
                    auto trial = merge(clusters, trial_groups);
                    if (relative_coefficient_error(rebuild(c.back(), to_roots(trial, c)), target) <= kMergeAcceptance) {
                        clusters = std::move(trial);
                        merged = true;
                        break;
                    }
                }
            }
        }
        roots = to_roots(clusters, c);
    }
    if (zeros > 0) {
        roots.push_back({ApproxComplex(0.0), static_cast<int>(zeros)});
    }
    const bool real_coefficients =
        std::all_of(all.begin(), all.end(), [](const ApproxComplex& x) { return x.imag() == 0.0; });
    if (real_coefficients) {
        for (auto& r : roots) {
            if (std::abs(r.value.imag()) <= 1e-14 * std::max(1.0, std::abs(r.value.real()))) {
                r.value.imag(0.0);
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const ApproxRoot& a, const ApproxRoot& b) {
        return a.value.real() < b.value.real() || (a.value.real() == b.value.real() && a.value.imag() < b.value.imag());
    });

    const double err = relative_coefficient_error(rebuild(p.leading(), roots), p);
    if (!(err <= options.reconstruction_tolerance)) {
        throw RootFindingError("root reconstruction error " + std::to_string(err) + " exceeds tolerance");
    }
    return roots;
}

}  // namespace matintegra
