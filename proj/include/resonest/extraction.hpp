#ifndef RESONEST_EXTRACTION_HPP
#define RESONEST_EXTRACTION_HPP

#include "resonest/dsp.hpp"
#include "resonest/signals.hpp"
#include "resonest/spectral.hpp"

#include <optional>
#include <vector>

namespace resonest {

struct KPipelineConfig
{
    double f0 = 0.0;        // uncoupled resonance, Hz
    double fp = 0.0;        // excitation pulse parameter, Hz
    double bandwidth = 0.0; // design bandwidth B, Hz
    double alpha = 5.0;     // bandpass width f_tilde = alpha * B
    EspritConfig esprit;
    std::optional<double> band_for_selection; // defaults to 3 * alpha * B

    double f_tilde() const noexcept { return alpha * bandwidth; }
    double selection_band() const noexcept { return band_for_selection.value_or(3.0 * alpha * bandwidth); }
};

void validate(const KPipelineConfig& config);

/// Signal after each conditioning stage, with the filters used.
struct ConditionedSignal
{
    DecimationPlan plan;
    UniformSignal raw_decimated;
    FirFilter antialias;
    UniformSignal aaf_decimated;
    FirFilter bandpass;
    UniformSignal bandpassed;
};

struct StageDiagnostics
{
    DecimationPlan plan;
    Eigen::Index input_samples = 0;
    Eigen::Index raw_decimated_samples = 0;
    Eigen::Index aaf_decimated_samples = 0;
    Eigen::Index bandpassed_samples = 0;
    Eigen::Index antialias_taps = 0;
    Eigen::Index bandpass_taps = 0;
    double f_tilde = 0.0;
    double selection_band = 0.0;
    std::vector<ComplexFrequencyEstimate> esprit_estimates;
    std::vector<RealMode> real_modes;
    std::vector<ComplexFrequencyEstimate> orphans;
};

struct CouplingResult
{
    double f_minus = 0.0;
    double f_plus = 0.0;
    double k = 0.0;
    StageDiagnostics stages;
};

/// (f+^2 - f-^2) / (f+^2 + f-^2).
double coupling_coefficient(double f_minus, double f_plus);

/// Decimation and filtering front end: raw decimation towards 10*fp,
/// anti-aliased decimation towards 4*f0, Gaussian bandpass around f0.
ConditionedSignal condition_signal(const UniformSignal& signal, const KPipelineConfig& config);

/// Full coupling extraction: conditioning, ESPRIT, conjugate pairing,
/// split-pair selection and the coupling formula.
CouplingResult extract_coupling(const UniformSignal& signal, const KPipelineConfig& config);

/// Estimation stages only, on an already conditioned signal.
CouplingResult estimate_coupling(const ConditionedSignal& conditioned, const KPipelineConfig& config,
                                 Eigen::Index input_samples);

} // namespace resonest

#endif // RESONEST_EXTRACTION_HPP
