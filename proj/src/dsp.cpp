#include "resonest/dsp.hpp"

#include "resonest/error.hpp"

#include "log.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace resonest {

using std::numbers::pi;

namespace {

void require_matching_rate(double filter_fs, const UniformSignal& signal, const char* who)
{
    if (std::abs(filter_fs - signal.sample_rate()) > 1e-6 * signal.sample_rate())
        detail::throw_invalid(std::string(who) + ": filter designed at " + std::to_string(filter_fs) +
                              " Hz but signal is sampled at " + std::to_string(signal.sample_rate()) +
                              " Hz");
}

double kaiser_beta(double attenuation_db)
{
    if (attenuation_db > 50.0)
        return 0.1102 * (attenuation_db - 8.7);
    if (attenuation_db > 21.0)
        return 0.5842 * std::pow(attenuation_db - 21.0, 0.4) + 0.07886 * (attenuation_db - 21.0);
    return 0.0;
}

// Odd-length Kaiser-windowed sinc; `nu_c` is the ideal cutoff in cycles/sample.
Eigen::VectorXd kaiser_sinc(Eigen::Index half, double nu_c, double beta)
{
    const Eigen::Index len = 2 * half + 1;
    Eigen::VectorXd taps(len);
    const double norm = std::cyl_bessel_i(0.0, beta);
    for (Eigen::Index i = 0; i <= half; ++i) {
        const double offset = static_cast<double>(half - i);
        const double x = 2.0 * nu_c * offset;
        const double sinc = offset == 0.0 ? 1.0 : std::sin(pi * x) / (pi * x);
        const double r = half == 0 ? 0.0 : offset / static_cast<double>(half);
        const double window = std::cyl_bessel_i(0.0, beta * std::sqrt(std::max(0.0, 1.0 - r * r))) / norm;
        taps[i] = 2.0 * nu_c * sinc * window;
        taps[len - 1 - i] = taps[i];
    }
    const double sum = taps.sum();
    taps /= sum;
    return taps;
}

// Worst-case magnitude over [nu_lo, 0.5] on a fine FFT grid.
double stopband_peak(const Eigen::VectorXd& taps, double nu_lo)
{
    Eigen::Index nfft = 1;
    while (nfft < 16 * taps.size() || nfft < 8192)
        nfft <<= 1;
    FirFilter probe{taps, 1.0, 0.0};
    const Eigen::VectorXcd response = frequency_response_fft(probe, nfft);
    double peak = 0.0;
    for (Eigen::Index k = 0; k < response.size(); ++k) {
        const double nu = static_cast<double>(k) / static_cast<double>(nfft);
        if (nu >= nu_lo)
            peak = std::max(peak, std::abs(response[k]));
    }
    return peak;
}

} // namespace

DecimationPlan plan_decimation(double input_fs, double fp, double f0)
{
    detail::require(std::isfinite(input_fs) && input_fs > 0.0, "plan_decimation: input_fs must be positive");
    detail::require(std::isfinite(fp) && fp > 0.0, "plan_decimation: fp must be positive");
    detail::require(std::isfinite(f0) && f0 > 0.0, "plan_decimation: f0 must be positive");
    if (input_fs < 20.0 * fp)
        detail::throw_invalid("plan_decimation: input rate " + std::to_string(input_fs) +
                              " Hz is below 20*fp; raw decimation would alias the excitation band");
    if (fp < 2.0 * f0)
        detail::throw_invalid("plan_decimation: fp must be at least 2*f0 to excite the resonance");
    if (fp < 5.0 * f0)
        detail::log_warn("plan_decimation: fp is below 5*f0; the excitation is not flat around f0");

    DecimationPlan plan;
    plan.input_fs = input_fs;
    plan.stage1_target = 10.0 * fp;
    plan.stage2_target = 4.0 * f0;
    plan.stage1_factor = std::max(1, static_cast<int>(std::floor(input_fs / plan.stage1_target)));
    plan.stage2_factor = std::max(1, static_cast<int>(std::floor(plan.stage1_rate() / plan.stage2_target)));
    return plan;
}

UniformSignal decimate_raw(const UniformSignal& signal, int factor)
{
    detail::require(factor >= 1, "decimate_raw: factor must be at least 1");
    const Eigen::Index count = (signal.size() + factor - 1) / factor;
    Eigen::VectorXd out(count);
    for (Eigen::Index i = 0; i < count; ++i)
        out[i] = signal[i * factor];
    return UniformSignal(std::move(out), signal.dt() * factor, signal.t0());
}

FirFilter design_lowpass(double fs, double cutoff, double stop_attenuation_db)
{
    detail::require(std::isfinite(fs) && fs > 0.0, "design_lowpass: fs must be positive");
    detail::require(cutoff > 0.0 && cutoff < 0.5 * fs, "design_lowpass: cutoff must lie in (0, fs/2)");
    detail::require(stop_attenuation_db > 0.0, "design_lowpass: stop attenuation must be positive");

    const double nu_pass = cutoff / fs;
    const double nu_stop = std::min(1.25 * nu_pass, 0.5);
    const double nu_c = 0.5 * (nu_pass + nu_stop);
    const double transition = 2.0 * pi * (nu_stop - nu_pass);
    const double beta = kaiser_beta(stop_attenuation_db);
    const double limit = std::pow(10.0, -stop_attenuation_db / 20.0);

    constexpr Eigen::Index kMaxTaps = 1'000'000;
    const double estimate = (stop_attenuation_db - 7.95) / (2.285 * transition) + 1.0;
    if (!std::isfinite(estimate) || estimate > static_cast<double>(kMaxTaps))
        detail::throw_invalid("design_lowpass: specification needs more than 1e6 taps");

    Eigen::Index half = std::max<Eigen::Index>(1, static_cast<Eigen::Index>(std::ceil(0.5 * (estimate - 1.0))));
    for (;;) {
        Eigen::VectorXd taps = kaiser_sinc(half, nu_c, beta);
        if (nu_stop >= 0.5 || stopband_peak(taps, nu_stop) <= limit)
            return FirFilter{std::move(taps), fs, cutoff};
        half += 1 + half / 50;
        if (2 * half + 1 > kMaxTaps)
            detail::throw_invalid("design_lowpass: specification needs more than 1e6 taps");
    }
}

FirFilter design_antialias(double fs, int factor)
{
    detail::require(factor >= 1, "design_antialias: factor must be at least 1");
    return design_lowpass(fs, kAntiAliasCutoffFraction * fs / factor, kAntiAliasStopDb);
}

UniformSignal decimate_filtered(const UniformSignal& signal, int factor, const FirFilter& aaf)
{
    detail::require(factor >= 1, "decimate_filtered: factor must be at least 1");
    detail::require(aaf.size() > 0, "decimate_filtered: empty filter");
    require_matching_rate(aaf.fs, signal, "decimate_filtered");
    const double new_nyquist = 0.5 * signal.sample_rate() / factor;
    if (aaf.passband_edge > new_nyquist)
        detail::throw_invalid("decimate_filtered: filter cutoff " + std::to_string(aaf.passband_edge) +
                              " Hz is above the decimated Nyquist " + std::to_string(new_nyquist) + " Hz");
    if (signal.size() < aaf.size())
        detail::throw_invalid("decimate_filtered: signal (" + std::to_string(signal.size()) +
                              " samples) is shorter than the filter (" + std::to_string(aaf.size()) + " taps)");

    Eigen::VectorXd out = kernels::valid_convolution(signal.samples(), aaf.taps, factor);
    const double t0 = signal.t0() + aaf.group_delay_samples() * signal.dt();
    return UniformSignal(std::move(out), signal.dt() * factor, t0);
}

FirFilter gaussian_bandpass(double f0, double f_tilde, double fs)
{
    detail::require(std::isfinite(f0) && f0 > 0.0, "gaussian_bandpass: f0 must be positive");
    detail::require(std::isfinite(f_tilde) && f_tilde > 0.0, "gaussian_bandpass: f_tilde must be positive");
    detail::require(std::isfinite(fs) && fs > 0.0, "gaussian_bandpass: fs must be positive");
    if (f0 + 3.0 * f_tilde >= 0.5 * fs)
        detail::throw_invalid("gaussian_bandpass: f0 + 3*f_tilde = " + std::to_string(f0 + 3.0 * f_tilde) +
                              " Hz reaches the Nyquist frequency " + std::to_string(0.5 * fs) + " Hz");

    constexpr double kTruncation = 1e-12;
    const double rate = 2.0 * pi * f_tilde * f_tilde;
    const double tau_max = std::sqrt(-std::log(kTruncation) / rate);
    const Eigen::Index half = static_cast<Eigen::Index>(std::floor(tau_max * fs));
    const Eigen::Index len = 2 * half + 1;

    Eigen::VectorXd taps(len);
    for (Eigen::Index i = 0; i <= half; ++i) {
        const double tau = static_cast<double>(half - i) / fs;
        taps[i] = std::cos(2.0 * pi * f0 * tau) * std::exp(-rate * tau * tau);
        taps[len - 1 - i] = taps[i];
    }
    const double gain = std::abs(kernels::centred_dtft(taps, f0 / fs));
    taps /= gain;
    return FirFilter{std::move(taps), fs, 0.0};
}

UniformSignal apply_fir(const UniformSignal& signal, const FirFilter& filter)
{
    detail::require(filter.size() > 0, "apply_fir: empty filter");
    require_matching_rate(filter.fs, signal, "apply_fir");
    if (signal.size() < filter.size())
        detail::throw_invalid("apply_fir: signal (" + std::to_string(signal.size()) +
                              " samples) is shorter than the filter (" + std::to_string(filter.size()) +
                              " taps)");
    Eigen::VectorXd out = kernels::valid_convolution(signal.samples(), filter.taps);
    const double t0 = signal.t0() + filter.group_delay_samples() * signal.dt();
    return UniformSignal(std::move(out), signal.dt(), t0);
}

std::complex<double> frequency_response(const FirFilter& filter, double f)
{
    const double nu = f / filter.fs;
    const double centre = filter.group_delay_samples();
    return kernels::centred_dtft(filter.taps, nu) * std::polar(1.0, -2.0 * pi * nu * centre);
}

Eigen::VectorXcd frequency_response_fft(const FirFilter& filter, Eigen::Index nfft)
{
    detail::require(nfft >= filter.size(), "frequency_response_fft: nfft must cover the filter");
    std::vector<double> padded(static_cast<std::size_t>(nfft), 0.0);
    for (Eigen::Index i = 0; i < filter.size(); ++i)
        padded[static_cast<std::size_t>(i)] = filter.taps[i];
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spectrum;
    fft.fwd(spectrum, padded);
    Eigen::VectorXcd out(nfft / 2 + 1);
    for (Eigen::Index k = 0; k < out.size(); ++k)
        out[k] = spectrum[static_cast<std::size_t>(k)];
    return out;
}

} // namespace resonest
