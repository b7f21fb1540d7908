#ifndef RESONEST_SIGNALS_HPP
#define RESONEST_SIGNALS_HPP

#include <Eigen/Core>

#include <array>
#include <cstddef>

namespace resonest {

///
/// Real-valued time series on a uniform grid.
///
/// Sample `i` sits at time `t0 + i*dt`. The grid spacing is positive and
/// finite and there is at least one sample; both are checked on
/// construction.
///
class UniformSignal
{
public:
    UniformSignal(Eigen::VectorXd samples, double dt, double t0 = 0.0);

    const Eigen::VectorXd& samples() const noexcept { return samples_; }
    double dt() const noexcept { return dt_; }
    double t0() const noexcept { return t0_; }
    Eigen::Index size() const noexcept { return samples_.size(); }

    double sample_rate() const noexcept { return 1.0 / dt_; }
    double nyquist() const noexcept { return 0.5 / dt_; }
    /// Time spanned by the record, size()*dt.
    double duration() const noexcept { return static_cast<double>(samples_.size()) * dt_; }
    double time(Eigen::Index i) const noexcept { return t0_ + static_cast<double>(i) * dt_; }

    double operator[](Eigen::Index i) const { return samples_[i]; }

private:
    Eigen::VectorXd samples_;
    double dt_;
    double t0_;
};

/// Gaussian excitation pulse parameter (controls duration and bandwidth).
struct PulseSpec
{
    double fp = 0.0; // Hz
};

///
/// Two identical lossless (or uniformly damped) resonators with coupling
/// coefficient `k`. The split frequencies are f0/sqrt(1+k) and
/// f0/sqrt(1-k), which makes the coupling formula exact on this pair.
///
/// Index 0 of `amplitudes`/`phases` refers to the lower (f-) mode.
///
struct CoupledPairSpec
{
    double f0 = 0.0;
    double k = 0.0;
    double damping = 0.0; // decay rate per mode, 1/s, >= 0
    std::array<double, 2> amplitudes{1.0, 1.0};
    std::array<double, 2> phases{0.0, 0.0}; // radians

    double f_minus() const;
    double f_plus() const;
};

void validate(const PulseSpec& spec);
void validate(const CoupledPairSpec& spec);

/// Samples of exp(-2*pi*fp^2*(t - 1/fp)^2) at t = i*dt, i < n. The tail
/// after the peak is zeroed once it drops below 1e-12.
UniformSignal gaussian_pulse(const PulseSpec& spec, double dt, Eigen::Index n);

/// Pulse magnitude relative to DC, in dB: -10*log10(e)*(f/fp)^2.
double pulse_attenuation_db(double f, const PulseSpec& spec);

/// Sum of two cosines at the split frequencies, each with the spec's
/// amplitude, phase and exp(-damping*t) envelope.
UniformSignal oracle_two_tone(const CoupledPairSpec& spec, double dt, Eigen::Index n);

///
/// Fixed-step RK4 integrator for two magnetically coupled LC tanks.
///
/// Tank 1 is driven by a series voltage source, tank 2 is probed across
/// its capacitor. The state is (flux1, flux2, charge1, charge2) with
/// C = 1 and L = 1/(2*pi*f0)^2, so the normal modes are f0/sqrt(1 +- k).
/// A series resistance R = 2*damping*L gives mode decay rates of roughly
/// damping/(1 +- k).
///
class CoupledLcIntegrator
{
public:
    using State = Eigen::Vector4d;

    CoupledLcIntegrator(const CoupledPairSpec& spec, double step);

    double step() const noexcept { return step_; }
    const State& state() const noexcept { return state_; }
    void set_state(const State& s) { state_ = s; }

    /// Advance one step with the drive voltage linear between the two ends.
    void advance(double drive_begin, double drive_end);

    /// Voltage across the second capacitor.
    double probe() const noexcept { return state_[3]; }

    /// Stored magnetic plus electric energy.
    double energy() const;

private:
    State derivative(const State& s, double drive) const;

    Eigen::Matrix2d inverse_inductance_;
    double resistance_;
    double step_;
    State state_ = State::Zero();
};

/// Drives tank 1 with `excitation` (same grid as the output) and returns
/// the tank-2 voltage. `substeps` RK4 steps are taken per sample.
UniformSignal oracle_ode(const CoupledPairSpec& spec, double dt, Eigen::Index n,
                         const UniformSignal& excitation, int substeps = 1);

} // namespace resonest

#endif // RESONEST_SIGNALS_HPP
