#include "matintegra/linear_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace matintegra {
namespace {

// Reduces [a | rhs] to reduced row echelon form in place; returns the pivot
// column of each pivot row.
std::vector<Eigen::Index> reduce(ExactMatrix& a, ExactMatrix& rhs) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Eigen::Index p = row;
        while (p < a.rows() && a(p, col).is_zero()) {
            ++p;
        }
        if (p == a.rows()) {
            continue;
        }
        a.row(p).swap(a.row(row));
        rhs.row(p).swap(rhs.row(row));
        const ExactComplex inv = ExactComplex(1) / a(row, col);
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            a(row, c) *= inv;
        }
        for (Eigen::Index c = 0; c < rhs.cols(); ++c) {
            rhs(row, c) *= inv;
        }
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) {
                continue;
            }
            const ExactComplex factor = a(r, col);
            for (Eigen::Index c = 0; c < a.cols(); ++c) {
                a(r, c) -= factor * a(row, c);
            }
            for (Eigen::Index c = 0; c < rhs.cols(); ++c) {
                rhs(r, c) -= factor * rhs(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<Vector<ExactComplex>> solve_exact(const ExactMatrix& a, const Vector<ExactComplex>& b) {
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("solve_exact: dimension mismatch");
    }
    ExactMatrix work = a;
    ExactMatrix rhs = b;
    const auto pivots = reduce(work, rhs);
    for (auto r = static_cast<Eigen::Index>(pivots.size()); r < rhs.rows(); ++r) {
        if (!rhs(r, 0).is_zero()) {
            return std::nullopt;
        }
    }
    Vector<ExactComplex> x = Vector<ExactComplex>::Zero(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        x(pivots[r]) = rhs(static_cast<Eigen::Index>(r), 0);
    }
    return x;
}

std::optional<ExactMatrix> inverse_exact(const ExactMatrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("inverse_exact: matrix must be square");
    }
    ExactMatrix work = a;
    ExactMatrix rhs = ExactMatrix::Identity(a.rows(), a.cols());
    if (static_cast<Eigen::Index>(reduce(work, rhs).size()) != a.rows()) {
        return std::nullopt;
    }
    return rhs;
}

}  // namespace matintegra
