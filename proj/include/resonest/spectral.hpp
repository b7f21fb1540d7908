#ifndef RESONEST_SPECTRAL_HPP
#define RESONEST_SPECTRAL_HPP

#include "resonest/signals.hpp"

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace resonest {

/// One complex exponential exp((damping + j*2*pi*frequency) * t).
struct ComplexFrequencyEstimate
{
    double frequency = 0.0; // Hz, signed
    double damping = 0.0;   // 1/s, negative = decaying
    std::optional<double> amplitude;
};

struct EspritConfig
{
    Eigen::Index correlation_order = 24;
    Eigen::Index n_complex_modes = 4;
    double pairing_tolerance = 1e-3;
};

void validate(const EspritConfig& config);

/// A real oscillation assembled from a conjugate pair of estimates.
struct RealMode
{
    double frequency = 0.0; // Hz, > 0
    double damping = 0.0;
    std::optional<double> amplitude;
};

struct PairingResult
{
    std::vector<RealMode> modes; // ascending frequency
    std::vector<ComplexFrequencyEstimate> orphans;
};

struct SplitPair
{
    double f_minus = 0.0;
    double f_plus = 0.0;
};

struct SpectralPeak
{
    double frequency = 0.0;
    double magnitude = 0.0;
};

enum class SpectralWindow
{
    rectangular,
    blackman_harris,
};

/// m x m forward-backward correlation matrix of the signal.
Eigen::MatrixXd forward_backward_correlation(const UniformSignal& signal, Eigen::Index m);

///
/// Least-squares ESPRIT on the forward-backward correlation matrix.
///
/// Throws IllConditioned when the gap between the n-th and (n+1)-th
/// eigenvalue is below 1e-12 of the largest. Results are sorted by
/// frequency; amplitudes come from a least-squares fit of the estimated
/// exponentials to the samples, referenced to the first sample.
///
std::vector<ComplexFrequencyEstimate> esprit(const UniformSignal& signal, const EspritConfig& config);

/// Merges conjugate pairs (matching complex exponent within the relative
/// tolerance). Unmatched estimates are returned as orphans. Throws
/// EstimationFailure when no pair is found.
PairingResult pair_to_real_modes(const std::vector<ComplexFrequencyEstimate>& estimates, double tolerance);

/// The two modes in [f0 - band, f0 + band] nearest to f0, ordered.
SplitPair select_split_pair(const std::vector<RealMode>& modes, double f0, double band);

///
/// Peaks of the zero-padded magnitude spectrum on [0, fs/2].
///
/// A peak is a local maximum within 60 dB of the global maximum; its
/// location is refined by a parabola through the log magnitudes of the
/// bin and its neighbours. The default window keeps side lobes below the
/// 60 dB threshold so each tone yields one peak.
///
std::vector<SpectralPeak> periodogram_peaks(const UniformSignal& signal, Eigen::Index nfft,
                                            SpectralWindow window = SpectralWindow::blackman_harris);

/// 1/(N*dt): the two-tone resolution limit of a periodogram over the record.
double rayleigh_limit(const UniformSignal& signal);

} // namespace resonest

#endif // RESONEST_SPECTRAL_HPP
