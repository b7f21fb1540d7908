#ifndef RESONEST_DSP_HPP
#define RESONEST_DSP_HPP

#include "resonest/signals.hpp"

#include <Eigen/Core>

#include <complex>
#include <numbers>

namespace resonest {

///
/// Linear-phase FIR filter designed for a given sample rate.
///
/// Every filter produced by this module has an odd number of exactly
/// symmetric taps, so the group delay (len-1)/2 is a whole number of
/// samples.
///
struct FirFilter
{
    Eigen::VectorXd taps;
    double fs = 0.0;
    double passband_edge = 0.0; // low-pass designs only, Hz

    Eigen::Index size() const noexcept { return taps.size(); }
    double group_delay_samples() const noexcept { return 0.5 * static_cast<double>(taps.size() - 1); }
};

///
/// Two-stage integer decimation plan.
///
/// Stage 1 drops samples without filtering to land near 10*fp, stage 2
/// low-pass filters and decimates to land near 4*f0.
///
struct DecimationPlan
{
    double input_fs = 0.0;
    double stage1_target = 0.0;
    double stage2_target = 0.0;
    int stage1_factor = 1;
    int stage2_factor = 1;

    double stage1_rate() const noexcept { return input_fs / stage1_factor; }
    double stage2_rate() const noexcept { return stage1_rate() / stage2_factor; }
};

/// Stop-band attenuation used for the stage-2 anti-aliasing filter.
inline constexpr double kAntiAliasStopDb = 80.0;
/// Anti-aliasing pass-band edge as a fraction of the decimated rate.
inline constexpr double kAntiAliasCutoffFraction = 0.45;

DecimationPlan plan_decimation(double input_fs, double fp, double f0);

/// Keeps every `factor`-th sample starting at index 0.
UniformSignal decimate_raw(const UniformSignal& signal, int factor);

///
/// Kaiser-windowed sinc low-pass with pass-band edge `cutoff` and at least
/// `stop_attenuation_db` of rejection from 1.25*cutoff up to fs/2. The taps
/// sum to exactly one up to rounding (unit DC gain).
///
FirFilter design_lowpass(double fs, double cutoff, double stop_attenuation_db);

/// Anti-aliasing filter for decimating a signal at `fs` by `factor`
/// (cutoff 0.45 of the output rate, 80 dB).
FirFilter design_antialias(double fs, int factor);

/// Filters with `aaf` then keeps every `factor`-th sample of the valid
/// region. The output time axis is compensated for the filter delay.
UniformSignal decimate_filtered(const UniformSignal& signal, int factor, const FirFilter& aaf);

///
/// Gaussian-windowed cosine centred on `f0`:
///
///   h(t) = cos(2 pi f0 tau) exp(-2 pi f_tilde^2 tau^2),
///
/// sampled at `fs` symmetrically around tau = 0 and truncated where the
/// envelope drops below 1e-12. Scaled so that |H(f0)| = 1.
///
FirFilter gaussian_bandpass(double f0, double f_tilde, double fs);

/// Valid-region convolution: output length is size - (taps - 1), time axis
/// shifted by the filter delay.
UniformSignal apply_fir(const UniformSignal& signal, const FirFilter& filter);

/// Frequency response at `f` by direct evaluation of the DTFT sum.
std::complex<double> frequency_response(const FirFilter& filter, double f);

/// Frequency response on the grid k*fs/nfft, k = 0..nfft/2, via a
/// zero-padded FFT. nfft must be at least the tap count.
Eigen::VectorXcd frequency_response_fft(const FirFilter& filter, Eigen::Index nfft);

namespace kernels {

/// Valid part of the linear convolution of `x` with `h`, evaluated at
/// output indices 0, stride, 2*stride, ...
template <typename DerivedX, typename DerivedH>
Eigen::Matrix<typename DerivedX::Scalar, Eigen::Dynamic, 1>
valid_convolution(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedH>& h,
                  Eigen::Index stride = 1)
{
    using Scalar = typename DerivedX::Scalar;
    const Eigen::Index taps = h.size();
    const Eigen::Index valid = x.size() - taps + 1;
    if (valid <= 0)
        return {};
    const Eigen::Index count = (valid + stride - 1) / stride;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> y(count);
    const auto reversed = h.reverse().eval();
    for (Eigen::Index n = 0; n < count; ++n)
        y[n] = x.segment(n * stride, taps).dot(reversed);
    return y;
}

/// DTFT of `h` at normalized frequency `nu` (cycles per sample), with
/// the phase referenced to the centre tap.
template <typename Derived>
std::complex<typename Derived::Scalar> centred_dtft(const Eigen::MatrixBase<Derived>& h,
                                                    typename Derived::Scalar nu)
{
    using Scalar = typename Derived::Scalar;
    const Scalar centre = Scalar(0.5) * static_cast<Scalar>(h.size() - 1);
    std::complex<Scalar> acc(0, 0);
    for (Eigen::Index i = 0; i < h.size(); ++i) {
        const Scalar phase = -Scalar(2) * std::numbers::pi_v<Scalar> * nu * (static_cast<Scalar>(i) - centre);
        acc += h[i] * std::polar(Scalar(1), phase);
    }
    return acc;
}

} // namespace kernels
} // namespace resonest

#endif // RESONEST_DSP_HPP
