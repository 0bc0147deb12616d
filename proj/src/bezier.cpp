#include "insplan/bezier.hpp"

#include <cmath>

#include "insplan/errors.hpp"

namespace insplan {

double CompositeBezier::total_duration() const {
    double t = 0.0;
    for (const auto& s : segments) t += s.duration;
    return t;
}

std::pair<int, double> CompositeBezier::locate(double t) const {
    const double T = total_duration();
    if (!(t >= 0.0 && t <= T)) {
        throw DomainError("time " + std::to_string(t) + " outside trajectory span [0, " +
                          std::to_string(T) + "]");
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < segments.size(); ++k) {
        const double end = acc + segments[k].duration;
        if (t <= end || k + 1 == segments.size()) {
            return {static_cast<int>(k), (t - acc) / segments[k].duration};
        }
        acc = end;
    }
    return {static_cast<int>(segments.size()) - 1, 1.0};
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

Vec3 bernstein_eval(const std::vector<Vec3>& controls, double s) {
    const int d = static_cast<int>(controls.size()) - 1;
    const double u = 1.0 - s;
    // Powers accumulated incrementally; exact at the endpoints.
    Vec3 acc = Vec3::Zero();
    double sp = 1.0;
    for (int j = 0; j <= d; ++j) {
        acc += binomial(d, j) * sp * std::pow(u, d - j) * controls[j];
        sp *= s;
    }
    return acc;
}

Vec3 de_casteljau(const std::vector<Vec3>& controls, double s) {
    std::vector<Vec3> w = controls;
    for (std::size_t level = w.size() - 1; level > 0; --level) {
        for (std::size_t i = 0; i < level; ++i) {
            w[i] = (1.0 - s) * w[i] + s * w[i + 1];
        }
    }
    return w[0];
}

std::vector<Vec3> derivative_controls(const std::vector<Vec3>& controls) {
    const int d = static_cast<int>(controls.size()) - 1;
    std::vector<Vec3> out;
    if (d < 1) {
        out.push_back(Vec3::Zero());
        return out;
    }
    out.reserve(d);
    for (int i = 0; i < d; ++i) out.push_back(d * (controls[i + 1] - controls[i]));
    return out;
}

Vec3 eval_position(const CompositeBezier& curve, double t) {
    const auto [k, s] = curve.locate(t);
    return bernstein_eval(curve.segments[k].controls, s);
}

Vec3 eval_derivative(const CompositeBezier& curve, double t, int k) {
    const auto [seg, s] = curve.locate(t);
    std::vector<Vec3> ctrl = curve.segments[seg].controls;
    for (int i = 0; i < k && ctrl.size() > 1; ++i) ctrl = derivative_controls(ctrl);
    if (static_cast<int>(curve.segments[seg].controls.size()) - 1 < k) {
        return Vec3::Zero();
    }
    return bernstein_eval(ctrl, s) / std::pow(curve.segments[seg].duration, k);
}

CompositeBezier interpolate_composite(const std::vector<Vec3>& nodes, int degree,
                                      double speed) {
    if (nodes.size() < 2) throw InputError("need at least 2 nodes to interpolate");
    if (degree < 1) throw InputError("degree must be at least 1");
    if (!(speed > 0.0)) throw InputError("speed must be positive");

    CompositeBezier curve;
    curve.segments.reserve(nodes.size() - 1);
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
        BezierSegment seg;
        seg.controls.reserve(degree + 1);
        for (int j = 0; j <= degree; ++j) {
            const double s = static_cast<double>(j) / degree;
            seg.controls.push_back((1.0 - s) * nodes[k] + s * nodes[k + 1]);
        }
        const double chord = (nodes[k + 1] - nodes[k]).norm();
        if (!(chord > 0.0)) {
            throw InputError("coincident consecutive nodes at index " + std::to_string(k));
        }
        seg.duration = chord / speed;
        curve.segments.push_back(std::move(seg));
    }
    return curve;
}

}  // namespace insplan
