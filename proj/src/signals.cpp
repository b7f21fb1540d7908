#include "resonest/signals.hpp"

#include "resonest/error.hpp"

#include <Eigen/LU>

#include <cmath>
#include <numbers>
#include <string>

namespace resonest {

using std::numbers::pi;

UniformSignal::UniformSignal(Eigen::VectorXd samples, double dt, double t0)
    : samples_(std::move(samples)), dt_(dt), t0_(t0)
{
    detail::require(samples_.size() > 0, "UniformSignal: samples must be non-empty");
    detail::require(std::isfinite(dt_) && dt_ > 0.0, "UniformSignal: dt must be positive and finite");
    detail::require(std::isfinite(1.0 / dt_), "UniformSignal: sample rate must be finite");
    detail::require(std::isfinite(t0_), "UniformSignal: t0 must be finite");
}

double CoupledPairSpec::f_minus() const
{
    return f0 / std::sqrt(1.0 + k);
}

double CoupledPairSpec::f_plus() const
{
    return f0 / std::sqrt(1.0 - k);
}

void validate(const PulseSpec& spec)
{
    detail::require(std::isfinite(spec.fp) && spec.fp > 0.0, "PulseSpec: fp must be positive");
}

void validate(const CoupledPairSpec& spec)
{
    detail::require(std::isfinite(spec.f0) && spec.f0 > 0.0, "CoupledPairSpec: f0 must be positive");
    detail::require(spec.k >= 0.0 && spec.k < 1.0, "CoupledPairSpec: k must lie in [0, 1)");
    detail::require(std::isfinite(spec.damping) && spec.damping >= 0.0,
                    "CoupledPairSpec: damping must be non-negative");
}

UniformSignal gaussian_pulse(const PulseSpec& spec, double dt, Eigen::Index n)
{
    validate(spec);
    detail::require(std::isfinite(dt) && dt > 0.0, "gaussian_pulse: dt must be positive");
    detail::require(n >= 1, "gaussian_pulse: n must be at least 1");

    constexpr double kTruncation = 1e-12;
    const double centre = 1.0 / spec.fp;
    const double rate = 2.0 * pi * spec.fp * spec.fp;

    Eigen::VectorXd samples(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * dt - centre;
        const double v = std::exp(-rate * t * t);
        samples[i] = (t > 0.0 && v < kTruncation) ? 0.0 : v;
    }
    return UniformSignal(std::move(samples), dt);
}

double pulse_attenuation_db(double f, const PulseSpec& spec)
{
    validate(spec);
    const double ratio = f / spec.fp;
    return -10.0 * std::log10(std::numbers::e) * ratio * ratio;
}

UniformSignal oracle_two_tone(const CoupledPairSpec& spec, double dt, Eigen::Index n)
{
    validate(spec);
    detail::require(std::isfinite(dt) && dt > 0.0, "oracle_two_tone: dt must be positive");
    detail::require(n >= 1, "oracle_two_tone: n must be at least 1");
    const double fm = spec.f_minus();
    const double fpl = spec.f_plus();
    if (fpl >= 0.5 / dt)
        detail::throw_invalid("oracle_two_tone: upper split frequency " + std::to_string(fpl) +
                              " Hz is at or above Nyquist " + std::to_string(0.5 / dt) + " Hz");

    Eigen::VectorXd samples(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * dt;
        const double envelope = std::exp(-spec.damping * t);
        samples[i] = envelope * (spec.amplitudes[0] * std::cos(2.0 * pi * fm * t + spec.phases[0]) +
                                 spec.amplitudes[1] * std::cos(2.0 * pi * fpl * t + spec.phases[1]));
    }
    return UniformSignal(std::move(samples), dt);
}

CoupledLcIntegrator::CoupledLcIntegrator(const CoupledPairSpec& spec, double step) : step_(step)
{
    validate(spec);
    detail::require(std::isfinite(step) && step > 0.0, "CoupledLcIntegrator: step must be positive");
    if (step > 1.0 / (10.0 * spec.f_plus()))
        detail::throw_invalid("CoupledLcIntegrator: step " + std::to_string(step) +
                              " s exceeds 1/(10 f+) = " + std::to_string(1.0 / (10.0 * spec.f_plus())) +
                              " s");

    const double w0 = 2.0 * pi * spec.f0;
    const double inductance = 1.0 / (w0 * w0);
    Eigen::Matrix2d l;
    l << 1.0, spec.k, spec.k, 1.0;
    inverse_inductance_ = (inductance * l).inverse();
    resistance_ = 2.0 * spec.damping * inductance;
}

CoupledLcIntegrator::State CoupledLcIntegrator::derivative(const State& s, double drive) const
{
    const Eigen::Vector2d current = inverse_inductance_ * s.head<2>();
    State d;
    d[0] = drive - s[2] - resistance_ * current[0];
    d[1] = -s[3] - resistance_ * current[1];
    d.tail<2>() = current;
    return d;
}

void CoupledLcIntegrator::advance(double drive_begin, double drive_end)
{
    const double mid = 0.5 * (drive_begin + drive_end);
    const double h = step_;
    const State k1 = derivative(state_, drive_begin);
    const State k2 = derivative(state_ + 0.5 * h * k1, mid);
    const State k3 = derivative(state_ + 0.5 * h * k2, mid);
    const State k4 = derivative(state_ + h * k3, drive_end);
    state_ += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double CoupledLcIntegrator::energy() const
{
    const Eigen::Vector2d flux = state_.head<2>();
    const Eigen::Vector2d charge = state_.tail<2>();
    return 0.5 * flux.dot(inverse_inductance_ * flux) + 0.5 * charge.squaredNorm();
}

UniformSignal oracle_ode(const CoupledPairSpec& spec, double dt, Eigen::Index n,
                         const UniformSignal& excitation, int substeps)
{
    detail::require(std::isfinite(dt) && dt > 0.0, "oracle_ode: dt must be positive");
    detail::require(n >= 1, "oracle_ode: n must be at least 1");
    detail::require(substeps >= 1, "oracle_ode: substeps must be at least 1");
    detail::require(std::abs(excitation.dt() - dt) <= 1e-6 * dt,
                    "oracle_ode: excitation must share the output grid");

    CoupledLcIntegrator integrator(spec, dt / substeps);
    const Eigen::VectorXd& drive = excitation.samples();
    auto drive_at = [&](Eigen::Index i) { return i < drive.size() ? drive[i] : 0.0; };

    Eigen::VectorXd out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out[i] = integrator.probe();
        const double a = drive_at(i);
        const double b = drive_at(i + 1);
        for (int s = 0; s < substeps; ++s) {
            const double u0 = static_cast<double>(s) / substeps;
            const double u1 = static_cast<double>(s + 1) / substeps;
            integrator.advance(a + (b - a) * u0, a + (b - a) * u1);
        }
    }
    return UniformSignal(std::move(out), dt);
}

} // namespace resonest
