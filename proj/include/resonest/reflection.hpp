#ifndef RESONEST_REFLECTION_HPP
#define RESONEST_REFLECTION_HPP

#include "resonest/signals.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace resonest {

///
/// Complex reflection coefficient on a uniform, increasing frequency grid.
///
/// `group_delay` is empty until group_delay() fills it (seconds, one
/// value per grid point). Non-fatal findings, such as |S11| above 1.05 or a
/// grid too coarse to unwrap phase reliably, are collected in `warnings`.
///
struct ReflectionSpectrum
{
    Eigen::VectorXd frequencies;
    Eigen::VectorXcd s11;
    Eigen::VectorXd group_delay;
    std::vector<std::string> warnings;
};

/// Checks the grid is strictly increasing and uniform and sizes agree.
void validate(const ReflectionSpectrum& spectrum);

struct ExternalQ
{
    double q_e = 0.0;
    double f0 = 0.0;               // Hz
    double group_delay_peak = 0.0; // seconds
};

///
/// S11(f) = F(v_tot - v_inc) / F(v_inc) on the bins of an nfft-point
/// transform that fall inside [fmin, fmax]. The shorter record is
/// zero-padded. With `taper`, both records are faded out with a raised
/// cosine over their final 10% before the transform.
///
/// Throws InsufficientExcitation if |F(v_inc)| drops below 1e-9 of its
/// peak anywhere in the band.
///
ReflectionSpectrum s11_from_voltages(const UniformSignal& v_inc, const UniformSignal& v_tot, double fmin,
                                     double fmax, Eigen::Index nfft, bool taper = false);

/// Fills group_delay = -(1/2pi) d(unwrapped phase)/df.
ReflectionSpectrum group_delay(ReflectionSpectrum spectrum);

/// Q_e = omega0 * tau_g(omega0) / 4 at the parabolically refined
/// group-delay maximum.
ExternalQ external_q(const ReflectionSpectrum& spectrum);

} // namespace resonest

#endif // RESONEST_REFLECTION_HPP
