#include "resonest/extraction.hpp"

#include "resonest/error.hpp"

#include "log.hpp"

#include <cmath>
#include <string>

namespace resonest {

void validate(const KPipelineConfig& config)
{
    detail::require(std::isfinite(config.f0) && config.f0 > 0.0, "KPipelineConfig: f0 must be positive");
    detail::require(std::isfinite(config.fp) && config.fp > 0.0, "KPipelineConfig: fp must be positive");
    detail::require(std::isfinite(config.bandwidth) && config.bandwidth > 0.0,
                    "KPipelineConfig: bandwidth must be positive");
    detail::require(std::isfinite(config.alpha) && config.alpha > 0.0, "KPipelineConfig: alpha must be positive");
    if (config.band_for_selection)
        detail::require(*config.band_for_selection > 0.0, "KPipelineConfig: selection band must be positive");
    if (config.alpha < 2.0 || config.alpha > 5.0)
        detail::log_warn("KPipelineConfig: alpha = " + std::to_string(config.alpha) +
                         " is outside the usual range [2, 5]");
    validate(config.esprit);
}

double coupling_coefficient(double f_minus, double f_plus)
{
    detail::require(std::isfinite(f_minus) && f_minus > 0.0, "coupling_coefficient: f_minus must be positive");
    detail::require(std::isfinite(f_plus) && f_plus >= f_minus,
                    "coupling_coefficient: f_plus must be at least f_minus");
    const double lo = f_minus * f_minus;
    const double hi = f_plus * f_plus;
    return (hi - lo) / (hi + lo);
}

ConditionedSignal condition_signal(const UniformSignal& signal, const KPipelineConfig& config)
{
    validate(config);
    const DecimationPlan plan = plan_decimation(signal.sample_rate(), config.fp, config.f0);

    const Eigen::Index factor = static_cast<Eigen::Index>(plan.stage1_factor) * plan.stage2_factor;
    const Eigen::Index nominal = signal.size() / factor;
    const Eigen::Index needed = 4 * config.esprit.correlation_order;
    if (nominal < needed)
        detail::throw_invalid("extract_coupling: record gives " + std::to_string(nominal) +
                              " samples after decimation; at least 4m = " + std::to_string(needed) +
                              " are needed (lengthen the record)");

    UniformSignal raw = decimate_raw(signal, plan.stage1_factor);
    FirFilter aaf = design_antialias(raw.sample_rate(), plan.stage2_factor);
    UniformSignal decimated = decimate_filtered(raw, plan.stage2_factor, aaf);
    FirFilter bandpass = gaussian_bandpass(config.f0, config.f_tilde(), decimated.sample_rate());
    UniformSignal filtered = apply_fir(decimated, bandpass);

    return ConditionedSignal{plan,
                             std::move(raw),
                             std::move(aaf),
                             std::move(decimated),
                             std::move(bandpass),
                             std::move(filtered)};
}

CouplingResult estimate_coupling(const ConditionedSignal& conditioned, const KPipelineConfig& config,
                                 Eigen::Index input_samples)
{
    CouplingResult result;
    StageDiagnostics& d = result.stages;
    d.plan = conditioned.plan;
    d.input_samples = input_samples;
    d.raw_decimated_samples = conditioned.raw_decimated.size();
    d.aaf_decimated_samples = conditioned.aaf_decimated.size();
    d.bandpassed_samples = conditioned.bandpassed.size();
    d.antialias_taps = conditioned.antialias.size();
    d.bandpass_taps = conditioned.bandpass.size();
    d.f_tilde = config.f_tilde();
    d.selection_band = config.selection_band();

    d.esprit_estimates = esprit(conditioned.bandpassed, config.esprit);
    PairingResult paired = pair_to_real_modes(d.esprit_estimates, config.esprit.pairing_tolerance);
    d.real_modes = paired.modes;
    d.orphans = paired.orphans;

    const SplitPair split = select_split_pair(d.real_modes, config.f0, d.selection_band);
    if (!(split.f_plus > split.f_minus)) {
        std::vector<ModeSummary> modes;
        for (const auto& m : d.real_modes)
            modes.push_back({m.frequency, m.damping});
        throw EstimationFailure("extract_coupling: split modes coincide", std::move(modes));
    }
    result.f_minus = split.f_minus;
    result.f_plus = split.f_plus;
    result.k = coupling_coefficient(split.f_minus, split.f_plus);
    return result;
}

CouplingResult extract_coupling(const UniformSignal& signal, const KPipelineConfig& config)
{
    const ConditionedSignal conditioned = condition_signal(signal, config);
    return estimate_coupling(conditioned, config, signal.size());
}

} // namespace resonest
