#include "resonest/synthesis.hpp"

#include "resonest/error.hpp"

#include "log.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace resonest {

void validate(const FilterPrototype& proto)
{
    detail::require(proto.g.size() >= 4, "FilterPrototype: need g0..g_{n+1} with n >= 2");
    for (double g : proto.g)
        detail::require(std::isfinite(g) && g > 0.0, "FilterPrototype: all g values must be positive");
    detail::require(std::isfinite(proto.fc) && proto.fc > 0.0, "FilterPrototype: fc must be positive");
    detail::require(std::isfinite(proto.bandwidth) && proto.bandwidth > 0.0,
                    "FilterPrototype: bandwidth must be positive");
    if (proto.fractional_bandwidth() >= 0.3)
        detail::log_warn("FilterPrototype: fractional bandwidth " + std::to_string(proto.fractional_bandwidth()) +
                         " is outside the narrowband range of the coupling formulas");
}

CouplingTargets coupling_targets(const FilterPrototype& proto)
{
    validate(proto);
    const double delta = proto.fractional_bandwidth();
    const auto& g = proto.g;
    const std::size_t n = g.size() - 2;

    CouplingTargets out;
    out.q_e_in = g[0] * g[1] / delta;
    out.q_e_out = g[n] * g[n + 1] / delta;
    out.k.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i)
        out.k.push_back(delta / std::sqrt(g[i] * g[i + 1]));
    return out;
}

MonotoneCurve::MonotoneCurve(std::vector<std::pair<double, double>> samples) : samples_(std::move(samples))
{
    const std::size_t n = samples_.size();
    detail::require(n >= 3, "MonotoneCurve: at least 3 samples are required");
    for (const auto& [x, y] : samples_)
        detail::require(std::isfinite(x) && std::isfinite(y), "MonotoneCurve: samples must be finite");
    for (std::size_t i = 1; i < n; ++i)
        detail::require(samples_[i].first > samples_[i - 1].first, "MonotoneCurve: x must be strictly increasing");

    increasing_ = samples_[1].second > samples_[0].second;
    for (std::size_t i = 1; i < n; ++i) {
        const double dy = samples_[i].second - samples_[i - 1].second;
        detail::require(increasing_ ? dy > 0.0 : dy < 0.0, "MonotoneCurve: y must be strictly monotone");
    }

    std::vector<double> h(n - 1), secant(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = samples_[i + 1].first - samples_[i].first;
        secant[i] = (samples_[i + 1].second - samples_[i].second) / h[i];
    }

    // Interior slopes: weighted harmonic mean of neighbouring secants.
    slopes_.assign(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double w1 = 2.0 * h[i] + h[i - 1];
        const double w2 = h[i] + 2.0 * h[i - 1];
        slopes_[i] = (w1 + w2) / (w1 / secant[i - 1] + w2 / secant[i]);
    }
    // End slopes: one-sided three-point estimate, limited to keep shape.
    auto end_slope = [](double h0, double h1, double s0, double s1) {
        double d = ((2.0 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
        if (d * s0 <= 0.0)
            d = 0.0;
        else if (s0 * s1 <= 0.0 && std::abs(d) > std::abs(3.0 * s0))
            d = 3.0 * s0;
        return d;
    };
    slopes_[0] = end_slope(h[0], h[1], secant[0], secant[1]);
    slopes_[n - 1] = end_slope(h[n - 2], h[n - 3], secant[n - 2], secant[n - 3]);
}

double MonotoneCurve::y_min() const noexcept
{
    return increasing_ ? samples_.front().second : samples_.back().second;
}

double MonotoneCurve::y_max() const noexcept
{
    return increasing_ ? samples_.back().second : samples_.front().second;
}

double MonotoneCurve::segment_value(std::size_t i, double x) const
{
    const auto [x0, y0] = samples_[i];
    const auto [x1, y1] = samples_[i + 1];
    const double h = x1 - x0;
    const double t = (x - x0) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return (2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + t) * h * slopes_[i] + (-2.0 * t3 + 3.0 * t2) * y1 +
           (t3 - t2) * h * slopes_[i + 1];
}

double MonotoneCurve::operator()(double x) const
{
    if (x < x_min() || x > x_max()) {
        const bool low = x < x_min();
        const auto& end = low ? samples_.front() : samples_.back();
        std::ostringstream msg;
        msg << "MonotoneCurve: x = " << x << " outside sampled range [" << x_min() << ", " << x_max() << "]";
        throw OutOfRange(msg.str(), end.first, end.second);
    }
    const auto it = std::upper_bound(samples_.begin(), samples_.end(), x,
                                     [](double v, const auto& s) { return v < s.first; });
    std::size_t i = static_cast<std::size_t>(std::distance(samples_.begin(), it));
    i = std::clamp<std::size_t>(i, 1, samples_.size() - 1) - 1;
    return segment_value(i, x);
}

double invert_curve(const MonotoneCurve& curve, double target_y)
{
    const auto& s = curve.samples();
    if (!(target_y >= curve.y_min() && target_y <= curve.y_max())) {
        const bool below = target_y < curve.y_min();
        const auto& end = (below == curve.increasing()) ? s.front() : s.back();
        std::ostringstream msg;
        msg << "invert_curve: target " << target_y << " outside sampled range [" << curve.y_min() << ", "
            << curve.y_max() << "]";
        throw OutOfRange(msg.str(), end.first, end.second);
    }

    // Locate the bracketing segment; exact sample hits return the sample.
    std::size_t seg = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].second == target_y)
            return s[i].first;
        if (i + 1 < s.size()) {
            const double lo = std::min(s[i].second, s[i + 1].second);
            const double hi = std::max(s[i].second, s[i + 1].second);
            if (target_y > lo && target_y < hi) {
                seg = i;
                break;
            }
        }
    }

    const double tolerance = 1e-9 * (curve.y_max() - curve.y_min());
    const double sign = curve.increasing() ? 1.0 : -1.0;
    double a = s[seg].first;
    double b = s[seg + 1].first;
    double mid = 0.5 * (a + b);
    for (int iter = 0; iter < 200; ++iter) {
        const double residual = sign * (curve(mid) - target_y);
        if (residual == 0.0 || (std::abs(residual) <= tolerance && (b - a) <= 1e-12 * (curve.x_max() - curve.x_min())))
            break;
        if (residual < 0.0)
            a = mid;
        else
            b = mid;
        const double next = 0.5 * (a + b);
        if (next == a || next == b)
            break;
        mid = next;
    }
    return mid;
}

void validate(const DebyeModel& model)
{
    detail::require(std::isfinite(model.eps_inf) && model.eps_inf >= 1.0, "DebyeModel: eps_inf must be >= 1");
    for (const auto& [delta, tau] : model.terms) {
        detail::require(std::isfinite(delta) && delta >= 0.0, "DebyeModel: delta_eps must be non-negative");
        detail::require(std::isfinite(tau) && tau > 0.0, "DebyeModel: tau must be positive");
    }
}

std::complex<double> debye_permittivity(const DebyeModel& model, double f)
{
    validate(model);
    detail::require(f >= 0.0, "debye_permittivity: frequency must be non-negative");
    const double omega = 2.0 * std::numbers::pi * f;
    std::complex<double> eps(model.eps_inf, 0.0);
    for (const auto& [delta, tau] : model.terms)
        eps += delta / std::complex<double>(1.0, omega * tau);
    return eps;
}

double debye_real_permittivity(const DebyeModel& model, double f)
{
    return debye_permittivity(model, f).real();
}

double debye_loss_tangent(const DebyeModel& model, double f)
{
    const auto eps = debye_permittivity(model, f);
    return -eps.imag() / eps.real();
}

} // namespace resonest
