#include "insplan/snap.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "insplan/errors.hpp"

namespace insplan {

namespace {

// ∫₀¹ B_{i,m}(s) B_{j,m}(s) ds = C(m,i)C(m,j) / ((2m+1) C(2m,i+j))
Eigen::MatrixXd bernstein_gram(int m) {
    Eigen::MatrixXd g(m + 1, m + 1);
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
            g(i, j) = binomial(m, i) * binomial(m, j) /
                      ((2.0 * m + 1.0) * binomial(2 * m, i + j));
        }
    }
    return g;
}

// Quadratic form of one segment's snap integral on its own controls:
// snap(s) = d!/(d-4)! · Δ⁴c, a degree d-4 Bézier; time scaling adds T^-7.
Eigen::MatrixXd segment_snap_form(int degree, double duration) {
    const int d = degree;
    Eigen::MatrixXd form = Eigen::MatrixXd::Zero(d + 1, d + 1);
    if (d < 4) return form;
    const int m = d - 4;
    Eigen::MatrixXd diff = Eigen::MatrixXd::Zero(m + 1, d + 1);
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= 4; ++j) {
            diff(i, i + j) = ((4 - j) % 2 == 0 ? 1.0 : -1.0) * binomial(4, j);
        }
    }
    double fact = 1.0;
    for (int k = d; k > d - 4; --k) fact *= k;
    const double scale = fact * fact / std::pow(duration, 7);
    form = scale * diff.transpose() * bernstein_gram(m) * diff;
    return form;
}

}  // namespace

double snap_integral(const CompositeBezier& curve) {
    double total = 0.0;
    for (const auto& seg : curve.segments) {
        const Eigen::MatrixXd form = segment_snap_form(seg.degree(), seg.duration);
        for (int axis = 0; axis < 3; ++axis) {
            Eigen::VectorXd c(seg.controls.size());
            for (std::size_t i = 0; i < seg.controls.size(); ++i) c[i] = seg.controls[i][axis];
            total += c.dot(form * c);
        }
    }
    return total;
}

double snap_objective(const CompositeBezier& curve, const CompositeBezier& anchor,
                      double lambda) {
    double penalty = 0.0;
    for (std::size_t k = 0; k < curve.segments.size(); ++k) {
        for (std::size_t i = 0; i < curve.segments[k].controls.size(); ++i) {
            penalty +=
                (curve.segments[k].controls[i] - anchor.segments[k].controls[i]).squaredNorm();
        }
    }
    return snap_integral(curve) + lambda * penalty;
}

CompositeBezier minimize_snap(const CompositeBezier& curve, const std::vector<Vec3>& nodes,
                              double lambda) {
    const int nseg = static_cast<int>(curve.segments.size());
    if (nseg == 0) throw InputError("empty curve");
    if (static_cast<int>(nodes.size()) != nseg + 1) {
        throw InputError("node count must be segment count + 1");
    }
    if (lambda < 0.0) throw InputError("lambda must be non-negative");

    // Flatten control points; all axes share the structure.
    std::vector<int> offset(nseg + 1, 0);
    for (int k = 0; k < nseg; ++k) {
        offset[k + 1] = offset[k] + static_cast<int>(curve.segments[k].controls.size());
    }
    const int n = offset[nseg];

    Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < nseg; ++k) {
        const auto& seg = curve.segments[k];
        hess.block(offset[k], offset[k], seg.degree() + 1, seg.degree() + 1) =
            segment_snap_form(seg.degree(), seg.duration);
    }
    hess += lambda * Eigen::MatrixXd::Identity(n, n);

    // Hard constraints: endpoints, then C0/C1/C2 at each joint in time domain.
    int m_rows = 2;
    for (int k = 0; k + 1 < nseg; ++k) {
        m_rows += 2;  // C0 + C1
        if (curve.segments[k].degree() >= 2 && curve.segments[k + 1].degree() >= 2) ++m_rows;
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m_rows, n);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m_rows, 3);

    int row = 0;
    a(row, offset[0]) = 1.0;
    for (int axis = 0; axis < 3; ++axis) b(row, axis) = nodes.front()[axis];
    ++row;
    a(row, offset[nseg] - 1) = 1.0;
    for (int axis = 0; axis < 3; ++axis) b(row, axis) = nodes.back()[axis];
    ++row;

    for (int k = 0; k + 1 < nseg; ++k) {
        const int dl = curve.segments[k].degree();
        const int dr = curve.segments[k + 1].degree();
        const double tl = curve.segments[k].duration;
        const double tr = curve.segments[k + 1].duration;
        const int el = offset[k + 1] - 1;  // last control of left segment
        const int fr = offset[k + 1];      // first control of right segment

        a(row, el) = 1.0;
        a(row, fr) = -1.0;
        ++row;

        a(row, el) = dl / tl;
        a(row, el - 1) = -dl / tl;
        a(row, fr + 1) = -dr / tr;
        a(row, fr) = dr / tr;
        ++row;

        if (dl >= 2 && dr >= 2) {
            const double cl = dl * (dl - 1) / (tl * tl);
            const double cr = dr * (dr - 1) / (tr * tr);
            a(row, el) = cl;
            a(row, el - 1) = -2.0 * cl;
            a(row, el - 2) = cl;
            a(row, fr + 2) = -cr;
            a(row, fr + 1) = 2.0 * cr;
            a(row, fr) = -cr;
            ++row;
        }
    }

    // KKT system of min xᵀSx + λ‖x − anchor‖² s.t. Ax = b, shared across axes.
    // The constraint block is raised to the Hessian's magnitude (solving for
    // μ/s instead of μ, which leaves x untouched); without this a large λ or
    // a short duration makes the pivot spread measure the unit mismatch
    // between the blocks instead of genuine singularity.
    const double h_max = hess.diagonal().maxCoeff();
    const double s = h_max > 0.0 ? 2.0 * h_max : 1.0;
    const int dim = n + m_rows;
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(dim, dim);
    kkt.topLeftCorner(n, n) = 2.0 * hess;
    kkt.topRightCorner(n, m_rows) = s * a.transpose();
    kkt.bottomLeftCorner(m_rows, n) = s * a;

    Eigen::MatrixXd rhs(dim, 3);
    for (int axis = 0; axis < 3; ++axis) {
        Eigen::VectorXd anchor(n);
        for (int k = 0; k < nseg; ++k) {
            for (std::size_t i = 0; i < curve.segments[k].controls.size(); ++i) {
                anchor[offset[k] + static_cast<int>(i)] = curve.segments[k].controls[i][axis];
            }
        }
        rhs.col(axis).head(n) = 2.0 * lambda * anchor;
        rhs.col(axis).tail(m_rows) = s * b.col(axis);
    }

    Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
    const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
    const double pivot_min = pivots.minCoeff();
    const double pivot_max = pivots.maxCoeff();
    if (!(pivot_min > pivot_max * 1e-14)) {
        throw ConditioningError("snap KKT system is singular", pivot_min);
    }
    Eigen::MatrixXd sol = lu.solve(rhs);
    // Iterative refinement: the snap scale (∝ T⁻⁷) can leave the first solve
    // with an optimality residual well above machine level.
    for (int it = 0; it < 2; ++it) {
        sol += lu.solve(rhs - kkt * sol);
    }

    CompositeBezier out = curve;
    for (int k = 0; k < nseg; ++k) {
        for (std::size_t i = 0; i < out.segments[k].controls.size(); ++i) {
            for (int axis = 0; axis < 3; ++axis) {
                out.segments[k].controls[i][axis] =
                    sol(offset[k] + static_cast<int>(i), axis);
            }
        }
    }
    return out;
}

}  // namespace insplan
