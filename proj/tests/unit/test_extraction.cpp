#include "resonest/error.hpp"
#include "resonest/extraction.hpp"
#include "resonest/signals.hpp"
#include "resonest/spectral.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace resonest;

namespace {

constexpr double kRate = 400e9;
constexpr double kDt = 1.0 / kRate;

Eigen::Index samples_for(double seconds)
{
    return static_cast<Eigen::Index>(std::llround(seconds * kRate));
}

// 10 GHz pulse with a 350 MHz design band around f0 (alpha 4); the
// settings leave enough samples after conditioning a 10 ns record.
KPipelineConfig microwave(double f0)
{
    KPipelineConfig cfg;
    cfg.f0 = f0;
    cfg.fp = 10e9;
    cfg.bandwidth = 350e6;
    cfg.alpha = 4.0;
    return cfg;
}

KPipelineConfig uhf()
{
    KPipelineConfig cfg;
    cfg.f0 = 0.965e9;
    cfg.fp = 5e9;
    cfg.bandwidth = 20e6;
    cfg.alpha = 5.0;
    return cfg;
}

UniformSignal oracle_signal(double f0, double k, double seconds)
{
    return oracle_two_tone(CoupledPairSpec{f0, k}, kDt, samples_for(seconds));
}

const double kSweep[] = {0.005, 0.01, 0.02, 0.05, 0.1, 0.15};

} // namespace

TEST(CouplingCoefficient, EqualFrequencies)
{
    EXPECT_EQ(coupling_coefficient(3e9, 3e9), 0.0);
}

TEST(CouplingCoefficient, WideSplitExample)
{
    EXPECT_NEAR(coupling_coefficient(3.32e9, 4.06e9), 0.1985, 1e-4);
    const double lo = 3.32e9 * 3.32e9, hi = 4.06e9 * 4.06e9;
    EXPECT_DOUBLE_EQ(coupling_coefficient(3.32e9, 4.06e9), (hi - lo) / (hi + lo));
}

TEST(CouplingCoefficient, OracleIdentity)
{
    for (double f0 : {0.5e9, 3.65e9, 12e9})
        EXPECT_NEAR(coupling_coefficient(oracle::split_minus(f0, 0.07), oracle::split_plus(f0, 0.07)), 0.07, 1e-15);
}

TEST(CouplingCoefficient, ScaleInvariant)
{
    for (double s : {1e-3, 0.37, 2.0, 1e4}) {
        const double a = coupling_coefficient(3.32e9, 4.06e9);
        const double b = coupling_coefficient(s * 3.32e9, s * 4.06e9);
        EXPECT_NEAR(b, a, 1e-15);
    }
}

TEST(CouplingCoefficient, RejectsBadInputs)
{
    EXPECT_THROW(coupling_coefficient(0.0, 1e9), InvalidArgument);
    EXPECT_THROW(coupling_coefficient(-1e9, 1e9), InvalidArgument);
    EXPECT_THROW(coupling_coefficient(2e9, 1e9), InvalidArgument);
}

TEST(KPipelineConfig, Validation)
{
    KPipelineConfig cfg = microwave(3.65e9);
    EXPECT_NO_THROW(validate(cfg));
    EXPECT_DOUBLE_EQ(cfg.f_tilde(), 1.4e9);
    EXPECT_DOUBLE_EQ(cfg.selection_band(), 4.2e9);
    cfg.alpha = 7.0; // warns only
    EXPECT_NO_THROW(validate(cfg));
    cfg.bandwidth = 0.0;
    EXPECT_THROW(validate(cfg), InvalidArgument);
    cfg = microwave(3.65e9);
    cfg.esprit.n_complex_modes = 30;
    EXPECT_THROW(validate(cfg), InvalidArgument);
}

TEST(ExtractCoupling, UhfHundredNanoseconds)
{
    const CouplingResult r = extract_coupling(oracle_signal(0.965e9, 0.02, 100e-9), uhf());
    EXPECT_LT(oracle::rel(r.k, 0.02), 0.01);
    EXPECT_NEAR(r.k, coupling_coefficient(r.f_minus, r.f_plus), 1e-12);
    EXPECT_EQ(r.stages.plan.stage1_factor, 8);
    EXPECT_EQ(r.stages.plan.stage2_factor, 12);
    EXPECT_EQ(r.stages.input_samples, 40000);
    EXPECT_EQ(r.stages.real_modes.size(), 2u);
    EXPECT_EQ(r.stages.esprit_estimates.size(), 4u);
    EXPECT_GT(r.stages.antialias_taps, 1);
    EXPECT_GT(r.stages.bandpass_taps, 1);
    EXPECT_EQ(r.stages.bandpassed_samples,
              r.stages.aaf_decimated_samples - (r.stages.bandpass_taps - 1));
}

TEST(ExtractCoupling, NarrowFilterTenNanoseconds)
{
    KPipelineConfig cfg = microwave(3.75e9);
    cfg.alpha = 2.0;
    cfg.bandwidth = 700e6;
    const CouplingResult r = extract_coupling(oracle_signal(3.75e9, 0.1, 10e-9), cfg);
    EXPECT_LT(oracle::rel(r.k, 0.1), 0.02);
}

// With alpha = 2 and the 350 MHz design band the bandpass is too long for
// a 10 ns record: the pipeline reports it instead of guessing.
TEST(ExtractCoupling, NarrowFilterTooLongForRecord)
{
    KPipelineConfig cfg = microwave(3.75e9);
    cfg.alpha = 2.0;
    EXPECT_THROW(extract_coupling(oracle_signal(3.75e9, 0.1, 10e-9), cfg), InvalidArgument);
}

TEST(ExtractCoupling, InterferingDoubleFrequencyTone)
{
    const double f0 = 3.65e9, k = 0.05;
    for (double seconds : {10e-9, 100e-9}) {
        const UniformSignal clean = oracle_signal(f0, k, seconds);
        const Eigen::VectorXd spur = oracle::tone(2.0 * f0, kDt, clean.size(), 1.0, 0.4);
        const UniformSignal dirty(clean.samples() + spur, kDt);
        const CouplingResult r = extract_coupling(dirty, microwave(f0));
        EXPECT_LT(oracle::rel(r.k, k), 0.02) << seconds;
    }
    const UniformSignal clean = oracle_signal(0.965e9, 0.02, 100e-9);
    const UniformSignal dirty(clean.samples() + oracle::tone(2.0 * 0.965e9, kDt, clean.size(), 1.0, 0.4), kDt);
    EXPECT_LT(oracle::rel(extract_coupling(dirty, uhf()).k, 0.02), 0.02);
}

TEST(ExtractCoupling, UncoupledFails)
{
    EXPECT_THROW(extract_coupling(oracle_signal(3.65e9, 0.0, 100e-9), microwave(3.65e9)), Error);
}

TEST(ExtractCoupling, TooFewSamplesAfterDecimation)
{
    EXPECT_THROW(extract_coupling(oracle_signal(0.965e9, 0.02, 10e-9), uhf()), InvalidArgument);
}

TEST(ExtractCoupling, RejectsSlowInput)
{
    const UniformSignal s = oracle_two_tone(CoupledPairSpec{3.65e9, 0.05}, 1.0 / 150e9, 15000);
    EXPECT_THROW(extract_coupling(s, microwave(3.65e9)), InvalidArgument);
}

TEST(ExtractCoupling, SweepTenNanoseconds)
{
    for (double f0 : {3.65e9, 3.75e9})
        for (double k : kSweep) {
            const CouplingResult r = extract_coupling(oracle_signal(f0, k, 10e-9), microwave(f0));
            EXPECT_LE(oracle::rel(r.k, k), 0.02) << "f0=" << f0 << " k=" << k;
        }
}

// At 0.965 GHz the design band is 20 MHz; the bandpass alone spans more
// than 10 ns, so only the 100 ns record is usable there.
TEST(ExtractCoupling, SweepTenNanosecondsUhfRejected)
{
    EXPECT_THROW(extract_coupling(oracle_signal(0.965e9, 0.05, 10e-9), uhf()), InvalidArgument);
}

TEST(ExtractCoupling, SweepHundredNanoseconds)
{
    for (double f0 : {0.965e9, 3.65e9, 3.75e9})
        for (double k : kSweep) {
            const KPipelineConfig cfg = f0 < 1e9 ? uhf() : microwave(f0);
            const CouplingResult r = extract_coupling(oracle_signal(f0, k, 100e-9), cfg);
            EXPECT_LE(oracle::rel(r.k, k), 1e-3) << "f0=" << f0 << " k=" << k;
        }
}

TEST(ExtractCoupling, MonotoneInCoupling)
{
    for (double seconds : {10e-9, 100e-9}) {
        double previous = 0.0;
        for (double k : kSweep) {
            const double est = extract_coupling(oracle_signal(3.65e9, k, seconds), microwave(3.65e9)).k;
            EXPECT_GT(est, previous) << k;
            previous = est;
        }
    }
}

TEST(ExtractCoupling, ResultInvariants)
{
    for (double k : kSweep) {
        const CouplingResult r = extract_coupling(oracle_signal(3.65e9, k, 10e-9), microwave(3.65e9));
        EXPECT_GT(r.f_minus, 0.0);
        EXPECT_LT(r.f_minus, r.f_plus);
        EXPECT_GT(r.k, 0.0);
        EXPECT_LT(r.k, 1.0);
        EXPECT_NEAR(r.k, coupling_coefficient(r.f_minus, r.f_plus), 1e-12);
    }
}

TEST(ExtractCoupling, ResolutionGap)
{
    const double f0 = 3.65e9, k = 0.005;
    const KPipelineConfig cfg = microwave(f0);
    const UniformSignal signal = oracle_signal(f0, k, 10e-9);
    const ConditionedSignal c = condition_signal(signal, cfg);
    const auto& s = c.bandpassed;

    const auto peaks = periodogram_peaks(s, 16 * s.size());
    int in_band = 0;
    for (const auto& p : peaks)
        if (std::abs(p.frequency - f0) <= cfg.selection_band())
            ++in_band;
    EXPECT_EQ(in_band, 1);

    const CouplingResult r = estimate_coupling(c, cfg, signal.size());
    EXPECT_LT(oracle::rel(r.f_minus, oracle::split_minus(f0, k)), 1e-3);
    EXPECT_LT(oracle::rel(r.f_plus, oracle::split_plus(f0, k)), 1e-3);
    EXPECT_GT(rayleigh_limit(signal), 5.0 * (r.f_plus - r.f_minus));
}

TEST(ConditionSignal, StagesAreConsistent)
{
    const UniformSignal signal = oracle_signal(3.65e9, 0.05, 10e-9);
    const ConditionedSignal c = condition_signal(signal, microwave(3.65e9));
    EXPECT_DOUBLE_EQ(c.raw_decimated.sample_rate(), c.plan.stage1_rate());
    EXPECT_NEAR(c.aaf_decimated.sample_rate(), c.plan.stage2_rate(), 1e-6 * c.plan.stage2_rate());
    EXPECT_NEAR(c.bandpassed.sample_rate(), c.plan.stage2_rate(), 1e-6 * c.plan.stage2_rate());
    EXPECT_GE(c.bandpassed.size(), 2 * 24);
    EXPECT_GT(c.aaf_decimated.t0(), 0.0);
    EXPECT_GT(c.bandpassed.t0(), c.aaf_decimated.t0());
}
