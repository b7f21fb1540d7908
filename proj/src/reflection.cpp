#include "resonest/reflection.hpp"

#include "resonest/error.hpp"

#include "log.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <sstream>

namespace resonest {

using std::numbers::pi;

namespace {

std::vector<std::complex<double>> padded_transform(const UniformSignal& signal, Eigen::Index length,
                                                   Eigen::Index nfft, bool taper)
{
    std::vector<double> buffer(static_cast<std::size_t>(nfft), 0.0);
    const Eigen::Index fade = taper ? std::max<Eigen::Index>(1, length / 10) : 0;
    for (Eigen::Index i = 0; i < signal.size(); ++i) {
        double w = 1.0;
        const Eigen::Index from_end = length - 1 - i;
        if (from_end < fade)
            w = 0.5 * (1.0 - std::cos(pi * static_cast<double>(from_end) / static_cast<double>(fade)));
        buffer[static_cast<std::size_t>(i)] = signal[i] * w;
    }
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spectrum;
    fft.fwd(spectrum, buffer);
    return spectrum;
}

} // namespace

void validate(const ReflectionSpectrum& spectrum)
{
    const Eigen::Index n = spectrum.frequencies.size();
    detail::require(spectrum.s11.size() == n, "ReflectionSpectrum: frequency and S11 sizes differ");
    detail::require(spectrum.group_delay.size() == 0 || spectrum.group_delay.size() == n,
                    "ReflectionSpectrum: group delay size differs from the grid");
    if (n < 2)
        return;
    const double step = spectrum.frequencies[1] - spectrum.frequencies[0];
    detail::require(step > 0.0, "ReflectionSpectrum: frequency grid must be strictly increasing");
    for (Eigen::Index i = 1; i < n; ++i) {
        const double d = spectrum.frequencies[i] - spectrum.frequencies[i - 1];
        if (!(d > 0.0) || std::abs(d - step) > 1e-6 * step)
            detail::throw_invalid("ReflectionSpectrum: frequency grid must be uniform");
    }
}

ReflectionSpectrum s11_from_voltages(const UniformSignal& v_inc, const UniformSignal& v_tot, double fmin,
                                     double fmax, Eigen::Index nfft, bool taper)
{
    if (std::abs(v_inc.dt() - v_tot.dt()) > 1e-6 * v_inc.dt())
        detail::throw_invalid("s11_from_voltages: incident and total records use different time steps");
    const Eigen::Index length = std::max(v_inc.size(), v_tot.size());
    detail::require(nfft >= length, "s11_from_voltages: nfft must be at least the record length");
    detail::require(fmin >= 0.0 && fmax > fmin, "s11_from_voltages: need 0 <= fmin < fmax");
    detail::require(fmax <= v_inc.nyquist(), "s11_from_voltages: fmax is above the Nyquist frequency");

    const auto inc = padded_transform(v_inc, length, nfft, taper);
    const auto tot = padded_transform(v_tot, length, nfft, taper);

    const double bin = v_inc.sample_rate() / static_cast<double>(nfft);
    const auto first = static_cast<Eigen::Index>(std::ceil(fmin / bin));
    const auto last = std::min<Eigen::Index>(nfft / 2, static_cast<Eigen::Index>(std::floor(fmax / bin)));
    detail::require(last >= first, "s11_from_voltages: no transform bins inside [fmin, fmax]");

    double peak = 0.0;
    for (Eigen::Index k = 0; k <= nfft / 2; ++k)
        peak = std::max(peak, std::abs(inc[static_cast<std::size_t>(k)]));

    ReflectionSpectrum out;
    const Eigen::Index count = last - first + 1;
    out.frequencies.resize(count);
    out.s11.resize(count);
    std::vector<double> weak;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(first + i);
        out.frequencies[i] = static_cast<double>(first + i) * bin;
        if (!(std::abs(inc[k]) >= 1e-9 * peak)) {
            weak.push_back(out.frequencies[i]);
            continue;
        }
        out.s11[i] = (tot[k] - inc[k]) / inc[k];
        worst = std::max(worst, std::abs(out.s11[i]));
    }
    if (!weak.empty()) {
        std::ostringstream msg;
        msg << "s11_from_voltages: incident spectrum is below 1e-9 of its peak at " << weak.size()
            << " frequencies in band (from " << weak.front() << " Hz to " << weak.back()
            << " Hz); the excitation bandwidth is insufficient";
        throw InsufficientExcitation(msg.str(), std::move(weak));
    }
    if (worst > 1.05) {
        std::ostringstream msg;
        msg << "|S11| reaches " << worst << ", above 1 for passive data";
        out.warnings.push_back(msg.str());
        detail::log_warn(msg.str());
    }
    return out;
}

ReflectionSpectrum group_delay(ReflectionSpectrum spectrum)
{
    validate(spectrum);
    const Eigen::Index n = spectrum.frequencies.size();
    detail::require(n >= 3, "group_delay: at least 3 grid points are required");

    Eigen::VectorXd phase(n);
    phase[0] = std::arg(spectrum.s11[0]);
    Eigen::Index large_steps = 0;
    for (Eigen::Index i = 1; i < n; ++i) {
        double step = std::arg(spectrum.s11[i]) - std::arg(spectrum.s11[i - 1]);
        step -= 2.0 * pi * std::round(step / (2.0 * pi));
        if (std::abs(step) > 0.5 * pi)
            ++large_steps;
        phase[i] = phase[i - 1] + step;
    }
    if (static_cast<double>(large_steps) > 0.1 * static_cast<double>(n - 1)) {
        std::ostringstream msg;
        msg << "group_delay: " << large_steps << " of " << n - 1
            << " phase steps exceed pi/2; the grid may be too coarse to unwrap";
        spectrum.warnings.push_back(msg.str());
        detail::log_warn(msg.str());
    }

    const Eigen::VectorXd& f = spectrum.frequencies;
    spectrum.group_delay.resize(n);
    const double scale = -1.0 / (2.0 * pi);
    spectrum.group_delay[0] = scale * (phase[1] - phase[0]) / (f[1] - f[0]);
    for (Eigen::Index i = 1; i + 1 < n; ++i)
        spectrum.group_delay[i] = scale * (phase[i + 1] - phase[i - 1]) / (f[i + 1] - f[i - 1]);
    spectrum.group_delay[n - 1] = scale * (phase[n - 1] - phase[n - 2]) / (f[n - 1] - f[n - 2]);
    return spectrum;
}

ExternalQ external_q(const ReflectionSpectrum& spectrum)
{
    validate(spectrum);
    const Eigen::Index n = spectrum.group_delay.size();
    detail::require(n >= 3, "external_q: group delay must be computed on at least 3 points");

    Eigen::Index k = 0;
    spectrum.group_delay.maxCoeff(&k);
    if (k == 0 || k == n - 1)
        detail::throw_invalid("external_q: group-delay maximum lies on the band edge; widen the band");

    const double a = spectrum.group_delay[k - 1];
    const double b = spectrum.group_delay[k];
    const double c = spectrum.group_delay[k + 1];
    const double curvature = a - 2.0 * b + c;
    const double offset = curvature < 0.0 ? 0.5 * (a - c) / curvature : 0.0;
    const double step = spectrum.frequencies[1] - spectrum.frequencies[0];

    ExternalQ out;
    out.f0 = spectrum.frequencies[k] + offset * step;
    out.group_delay_peak = b - 0.25 * (a - c) * offset;
    out.q_e = 2.0 * pi * out.f0 * out.group_delay_peak / 4.0;
    return out;
}

} // namespace resonest
