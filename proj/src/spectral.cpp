#include "resonest/spectral.hpp"

#include "resonest/error.hpp"
#include "resonest/esprit_kernel.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace resonest {

using std::numbers::pi;

namespace {

std::vector<ModeSummary> summarize(const std::vector<RealMode>& modes)
{
    std::vector<ModeSummary> out;
    out.reserve(modes.size());
    for (const auto& m : modes)
        out.push_back({m.frequency, m.damping});
    return out;
}

std::vector<ModeSummary> summarize(const std::vector<ComplexFrequencyEstimate>& estimates)
{
    std::vector<ModeSummary> out;
    out.reserve(estimates.size());
    for (const auto& e : estimates)
        out.push_back({e.frequency, e.damping});
    return out;
}

std::complex<double> exponent(const ComplexFrequencyEstimate& e)
{
    return {e.damping, 2.0 * pi * e.frequency};
}

Eigen::VectorXd window_samples(Eigen::Index n, SpectralWindow window)
{
    Eigen::VectorXd w = Eigen::VectorXd::Ones(n);
    if (window == SpectralWindow::rectangular || n == 1)
        return w;
    constexpr double a0 = 0.35875, a1 = 0.48829, a2 = 0.14128, a3 = 0.01168;
    const double denom = static_cast<double>(n - 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = 2.0 * pi * static_cast<double>(i) / denom;
        w[i] = a0 - a1 * std::cos(x) + a2 * std::cos(2.0 * x) - a3 * std::cos(3.0 * x);
    }
    return w;
}

} // namespace

void validate(const EspritConfig& config)
{
    detail::require(config.n_complex_modes >= 2, "EspritConfig: at least 2 complex modes are required");
    detail::require(config.n_complex_modes < config.correlation_order,
                    "EspritConfig: n_complex_modes must be below the correlation order");
    detail::require(config.pairing_tolerance > 0.0, "EspritConfig: pairing tolerance must be positive");
}

Eigen::MatrixXd forward_backward_correlation(const UniformSignal& signal, Eigen::Index m)
{
    detail::require(m >= 2, "forward_backward_correlation: order must be at least 2");
    if (signal.size() < 2 * m)
        detail::throw_invalid("forward_backward_correlation: " + std::to_string(signal.size()) +
                              " samples is fewer than 2m = " + std::to_string(2 * m));
    return kernels::forward_backward_correlation(signal.samples(), m);
}

std::vector<ComplexFrequencyEstimate> esprit(const UniformSignal& signal, const EspritConfig& config)
{
    validate(config);
    const Eigen::Index m = config.correlation_order;
    const Eigen::Index n = config.n_complex_modes;
    if (signal.size() < 2 * m)
        detail::throw_invalid("esprit: " + std::to_string(signal.size()) + " samples is fewer than 2m = " +
                              std::to_string(2 * m));

    // Subspaces do not depend on scale; normalizing keeps the gap test and
    // the estimates independent of the signal's units.
    const double peak = signal.samples().cwiseAbs().maxCoeff();
    const Eigen::VectorXd x = peak > 0.0 ? Eigen::VectorXd(signal.samples() / peak) : signal.samples();

    const auto result = kernels::esprit_poles(x, m, n);
    if (!(result.relative_gap > 1e-12)) {
        std::vector<double> spectrum(result.eigenvalues.data(), result.eigenvalues.data() + result.eigenvalues.size());
        std::ostringstream msg;
        msg << "esprit: signal subspace of dimension " << n
            << " is not separated from the noise subspace (relative eigenvalue gap " << result.relative_gap << ")";
        throw IllConditioned(msg.str(), std::move(spectrum));
    }

    const double dt = signal.dt();
    const Eigen::Index count = result.poles.size();

    // Complex amplitudes by least squares against the Vandermonde basis.
    Eigen::MatrixXcd basis(signal.size(), count);
    for (Eigen::Index j = 0; j < count; ++j) {
        std::complex<double> z(1.0, 0.0);
        for (Eigen::Index t = 0; t < signal.size(); ++t) {
            basis(t, j) = z;
            z *= result.poles[j];
        }
    }
    const Eigen::VectorXcd coefficients =
        basis.colPivHouseholderQr().solve(signal.samples().cast<std::complex<double>>());

    std::vector<ComplexFrequencyEstimate> estimates;
    estimates.reserve(static_cast<std::size_t>(count));
    for (Eigen::Index j = 0; j < count; ++j) {
        const std::complex<double> z = result.poles[j];
        ComplexFrequencyEstimate e;
        e.frequency = std::arg(z) / (2.0 * pi * dt);
        e.damping = std::log(std::abs(z)) / dt;
        if (std::isfinite(coefficients[j].real()) && std::isfinite(coefficients[j].imag()))
            e.amplitude = std::abs(coefficients[j]);
        estimates.push_back(e);
    }
    std::sort(estimates.begin(), estimates.end(), [](const auto& a, const auto& b) {
        return a.frequency < b.frequency || (a.frequency == b.frequency && a.damping < b.damping);
    });
    return estimates;
}

PairingResult pair_to_real_modes(const std::vector<ComplexFrequencyEstimate>& estimates, double tolerance)
{
    detail::require(tolerance > 0.0, "pair_to_real_modes: tolerance must be positive");

    PairingResult out;
    std::vector<bool> used(estimates.size(), false);
    for (std::size_t i = 0; i < estimates.size(); ++i) {
        if (used[i] || !(estimates[i].frequency > 0.0))
            continue;
        const std::complex<double> s = exponent(estimates[i]);
        std::size_t best = estimates.size();
        double best_distance = tolerance * std::abs(s);
        for (std::size_t j = 0; j < estimates.size(); ++j) {
            if (used[j] || j == i || !(estimates[j].frequency < 0.0))
                continue;
            const double distance = std::abs(s - std::conj(exponent(estimates[j])));
            if (distance <= best_distance) {
                best_distance = distance;
                best = j;
            }
        }
        if (best == estimates.size())
            continue;
        used[i] = used[best] = true;
        RealMode mode;
        mode.frequency = 0.5 * (estimates[i].frequency - estimates[best].frequency);
        mode.damping = 0.5 * (estimates[i].damping + estimates[best].damping);
        if (estimates[i].amplitude && estimates[best].amplitude)
            mode.amplitude = *estimates[i].amplitude + *estimates[best].amplitude;
        out.modes.push_back(mode);
    }
    for (std::size_t i = 0; i < estimates.size(); ++i)
        if (!used[i])
            out.orphans.push_back(estimates[i]);

    if (out.modes.empty())
        throw EstimationFailure("pair_to_real_modes: no conjugate pairs among " +
                                    std::to_string(estimates.size()) + " estimates",
                                summarize(estimates));
    std::sort(out.modes.begin(), out.modes.end(),
              [](const RealMode& a, const RealMode& b) { return a.frequency < b.frequency; });
    return out;
}

SplitPair select_split_pair(const std::vector<RealMode>& modes, double f0, double band)
{
    std::vector<RealMode> in_band;
    for (const auto& m : modes)
        if (m.frequency >= f0 - band && m.frequency <= f0 + band)
            in_band.push_back(m);
    if (in_band.size() < 2) {
        std::ostringstream msg;
        msg << "select_split_pair: " << in_band.size() << " mode(s) within " << band << " Hz of " << f0
            << " Hz; need two";
        throw EstimationFailure(msg.str(), summarize(modes));
    }
    std::stable_sort(in_band.begin(), in_band.end(), [f0](const RealMode& a, const RealMode& b) {
        return std::abs(a.frequency - f0) < std::abs(b.frequency - f0);
    });
    const double a = in_band[0].frequency;
    const double b = in_band[1].frequency;
    return {std::min(a, b), std::max(a, b)};
}

std::vector<SpectralPeak> periodogram_peaks(const UniformSignal& signal, Eigen::Index nfft, SpectralWindow window)
{
    detail::require(nfft >= signal.size(), "periodogram_peaks: nfft must be at least the signal length");

    const Eigen::VectorXd w = window_samples(signal.size(), window);
    std::vector<double> padded(static_cast<std::size_t>(nfft), 0.0);
    for (Eigen::Index i = 0; i < signal.size(); ++i)
        padded[static_cast<std::size_t>(i)] = signal[i] * w[i];

    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spectrum;
    fft.fwd(spectrum, padded);

    const Eigen::Index bins = nfft / 2 + 1;
    // Scaled so a tone of amplitude A away from DC peaks at about A.
    const double scale = 2.0 / w.sum();
    Eigen::VectorXd mag(bins);
    for (Eigen::Index k = 0; k < bins; ++k)
        mag[k] = std::abs(spectrum[static_cast<std::size_t>(k)]) * scale;

    const double global = mag.maxCoeff();
    std::vector<SpectralPeak> peaks;
    if (!(global > 0.0))
        return peaks;
    const double threshold = global * 1e-3;
    const double bin_width = signal.sample_rate() / static_cast<double>(nfft);

    auto neighbour = [&](Eigen::Index k) {
        // Mirror across DC and Nyquist; the spectrum of a real signal is even.
        if (k < 0)
            return mag[-k];
        if (k >= bins)
            return mag[2 * (bins - 1) - k];
        return mag[k];
    };
    for (Eigen::Index k = 0; k < bins; ++k) {
        const double centre = mag[k];
        const double left = neighbour(k - 1);
        const double right = neighbour(k + 1);
        if (centre < threshold || !(centre > left) || centre < right)
            continue;
        // Neighbours at round-off level (an on-bin tone under a rectangular
        // window) carry no shape information, so the bin centre is kept.
        const bool refine = std::min(left, right) > 1e-8 * centre;
        const double a = refine ? std::log(left) : 0.0;
        const double b = std::log(centre);
        const double c = refine ? std::log(right) : 0.0;
        const double curvature = a - 2.0 * b + c;
        double offset = refine && curvature < 0.0 ? 0.5 * (a - c) / curvature : 0.0;
        offset = std::clamp(offset, -0.5, 0.5);
        const double freq = std::max(0.0, (static_cast<double>(k) + offset) * bin_width);
        peaks.push_back({freq, refine ? std::exp(b - 0.25 * (a - c) * offset) : centre});
    }
    return peaks;
}

double rayleigh_limit(const UniformSignal& signal)
{
    return 1.0 / signal.duration();
}

} // namespace resonest
