#include "resonest/error.hpp"
#include "resonest/extraction.hpp"
#include "resonest/signals.hpp"
#include "resonest/spectral.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace resonest;

TEST(UniformSignal, RejectsEmptyAndBadStep)
{
    EXPECT_THROW(UniformSignal(Eigen::VectorXd(), 1.0), InvalidArgument);
    EXPECT_THROW(UniformSignal(Eigen::VectorXd::Ones(3), 0.0), InvalidArgument);
    EXPECT_THROW(UniformSignal(Eigen::VectorXd::Ones(3), -1e-12), InvalidArgument);
    EXPECT_THROW(UniformSignal(Eigen::VectorXd::Ones(3), std::nan("")), InvalidArgument);
    EXPECT_THROW(UniformSignal(Eigen::VectorXd::Ones(3), 1e-320), InvalidArgument);
}

TEST(UniformSignal, DerivedQuantities)
{
    const UniformSignal s(Eigen::VectorXd::Ones(8), 0.25, 1.0);
    EXPECT_EQ(s.size(), 8);
    EXPECT_DOUBLE_EQ(s.sample_rate(), 4.0);
    EXPECT_DOUBLE_EQ(s.nyquist(), 2.0);
    EXPECT_DOUBLE_EQ(s.duration(), 2.0);
    EXPECT_DOUBLE_EQ(s.time(3), 1.75);
}

TEST(GaussianPulse, PeakSampleIsOne)
{
    const PulseSpec spec{5e9};
    const UniformSignal p = gaussian_pulse(spec, 2e-12, 400);
    EXPECT_DOUBLE_EQ(p[100], 1.0);
    Eigen::Index arg = 0;
    p.samples().maxCoeff(&arg);
    EXPECT_EQ(arg, 100);
}

TEST(GaussianPulse, ValueAtOrigin)
{
    const UniformSignal p = gaussian_pulse(PulseSpec{5e9}, 2e-12, 10);
    EXPECT_NEAR(p[0], 1.867e-3, 1e-6);
    EXPECT_NEAR(p[0], std::exp(-2.0 * oracle::pi), 1e-14 * std::exp(-2.0 * oracle::pi));
}

TEST(GaussianPulse, TimeScaling)
{
    const UniformSignal slow = gaussian_pulse(PulseSpec{5e9}, 1e-12, 2000);
    const UniformSignal fast = gaussian_pulse(PulseSpec{10e9}, 1e-12, 1000);
    for (Eigen::Index i = 0; i < fast.size(); ++i)
        EXPECT_NEAR(fast[i], slow[2 * i], 1e-12) << i;
}

TEST(GaussianPulse, NonNegativeUnimodalAndTruncated)
{
    const UniformSignal p = gaussian_pulse(PulseSpec{5e9}, 1e-12, 2000);
    Eigen::Index peak = 0;
    p.samples().maxCoeff(&peak);
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        EXPECT_GE(p[i], 0.0);
        if (i > 0 && i <= peak) {
            EXPECT_GE(p[i], p[i - 1]);
        }
        if (i > peak) {
            EXPECT_LE(p[i], p[i - 1]);
        }
        if (i > peak && p[i] > 0.0) {
            EXPECT_GE(p[i], 1e-12);
        }
    }
    EXPECT_EQ(p[p.size() - 1], 0.0);
}

TEST(GaussianPulse, RejectsBadArguments)
{
    EXPECT_THROW(gaussian_pulse(PulseSpec{5e9}, 0.0, 10), InvalidArgument);
    EXPECT_THROW(gaussian_pulse(PulseSpec{5e9}, 1e-12, 0), InvalidArgument);
    EXPECT_THROW(gaussian_pulse(PulseSpec{0.0}, 1e-12, 10), InvalidArgument);
}

// The sampled pulse spectrum follows the transform of the Gaussian over the
// band where it stands above the floor left by the t > 0 gate.
TEST(GaussianPulse, SpectrumMatchesGaussianTransform)
{
    const double fp = 5e9;
    const double dt = 2.5e-12;
    const UniformSignal p = gaussian_pulse(PulseSpec{fp}, dt, 4000);
    const double dc = std::abs(oracle::dtft(p.samples(), dt, 0.0));
    for (int j = 1; j <= 30; ++j) {
        const double f = 0.05 * j * fp;
        const double measured = oracle::db(std::abs(oracle::dtft(p.samples(), dt, f)) / dc);
        const double expected = oracle::db(oracle::gaussian_pulse_spectrum(f, fp));
        EXPECT_NEAR(measured, expected, 0.5) << "f/fp = " << f / fp;
    }
}

TEST(GaussianPulse, AttenuationFormulaBoundsGaussianTransform)
{
    const PulseSpec spec{5e9};
    for (int j = 0; j <= 50; ++j) {
        const double f = 0.1 * j * spec.fp;
        EXPECT_LE(oracle::db(oracle::gaussian_pulse_spectrum(f, spec.fp)), pulse_attenuation_db(f, spec) + 1e-12);
    }
}

TEST(PulseAttenuation, Examples)
{
    const PulseSpec spec{5e9};
    EXPECT_EQ(pulse_attenuation_db(0.0, spec), 0.0);
    EXPECT_NEAR(pulse_attenuation_db(5.0 * spec.fp, spec), -108.57, 0.01);
    EXPECT_LE(pulse_attenuation_db(5.0 * spec.fp, spec), -108.0);
    EXPECT_NEAR(pulse_attenuation_db(spec.fp, spec), -10.0 * std::log10(std::exp(1.0)), 1e-12);
    EXPECT_NEAR(pulse_attenuation_db(spec.fp, spec), -4.34, 0.005);
}

TEST(CoupledPairSpec, SplitFrequencies)
{
    const CoupledPairSpec spec{3.65e9, 0.1985};
    EXPECT_NEAR(spec.f_minus(), 3.3341e9, 0.5e5);
    EXPECT_NEAR(spec.f_plus(), 4.0770e9, 0.5e5);
    EXPECT_DOUBLE_EQ(spec.f_minus(), oracle::split_minus(3.65e9, 0.1985));
    EXPECT_DOUBLE_EQ(spec.f_plus(), oracle::split_plus(3.65e9, 0.1985));
}

TEST(CoupledPairSpec, SmallCouplingSpacing)
{
    const CoupledPairSpec spec{3.65e9, 0.01};
    const double spacing = spec.f_plus() - spec.f_minus();
    EXPECT_NEAR(spacing, 36.5e6, 0.01 * 36.5e6);
    EXPECT_NEAR(spacing, 0.01 * 3.65e9, 1e-4 * 3.65e9);
}

TEST(CoupledPairSpec, Validation)
{
    EXPECT_THROW(validate(CoupledPairSpec{0.0, 0.1}), InvalidArgument);
    EXPECT_THROW(validate(CoupledPairSpec{1e9, 1.0}), InvalidArgument);
    EXPECT_THROW(validate(CoupledPairSpec{1e9, -0.1}), InvalidArgument);
    CoupledPairSpec lossy{1e9, 0.1};
    lossy.damping = -1.0;
    EXPECT_THROW(validate(lossy), InvalidArgument);
    EXPECT_NO_THROW(validate(CoupledPairSpec{1e9, 0.0}));
}

TEST(OracleIdentity, CouplingFormulaIsExactOnSplit)
{
    for (double f0 : {1e6, 0.965e9, 3.65e9, 77e9}) {
        for (int i = 1; i < 100; ++i) {
            const double k = 0.01 * i;
            const CoupledPairSpec spec{f0, k};
            EXPECT_NEAR(coupling_coefficient(spec.f_minus(), spec.f_plus()), k, 4.0 * std::numeric_limits<double>::epsilon())
                << "f0=" << f0 << " k=" << k;
        }
    }
}

TEST(OracleTwoTone, MatchesClosedForm)
{
    CoupledPairSpec spec{3.65e9, 0.05};
    spec.amplitudes = {0.7, 1.3};
    spec.phases = {0.2, -1.1};
    spec.damping = 2e7;
    const double dt = 2.5e-12;
    const UniformSignal s = oracle_two_tone(spec, dt, 500);
    const Eigen::VectorXd expected =
        oracle::tone(oracle::split_minus(3.65e9, 0.05), dt, 500, 0.7, 0.2, -2e7) +
        oracle::tone(oracle::split_plus(3.65e9, 0.05), dt, 500, 1.3, -1.1, -2e7);
    EXPECT_LT((s.samples() - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(s.t0(), 0.0);
}

TEST(OracleTwoTone, RejectsNyquistViolation)
{
    const CoupledPairSpec spec{3.65e9, 0.1};
    EXPECT_THROW(oracle_two_tone(spec, 1.0 / (2.0 * spec.f_plus()), 100), InvalidArgument);
    EXPECT_NO_THROW(oracle_two_tone(spec, 0.99 / (2.0 * spec.f_plus()), 100));
}

TEST(OracleTwoTone, UncoupledIsSingleTone)
{
    const UniformSignal s = oracle_two_tone(CoupledPairSpec{1e9, 0.0}, 1e-10, 200);
    EspritConfig cfg;
    cfg.n_complex_modes = 2;
    const auto est = esprit(s, cfg);
    const auto paired = pair_to_real_modes(est, cfg.pairing_tolerance);
    ASSERT_EQ(paired.modes.size(), 1u);
    EXPECT_NEAR(paired.modes[0].frequency, 1e9, 1e-3);
    EXPECT_TRUE(paired.orphans.empty());
}

TEST(OracleOde, UncoupledProbeStaysZero)
{
    const double dt = 2.5e-12;
    Eigen::VectorXd impulse = Eigen::VectorXd::Zero(4000);
    impulse[0] = 1.0;
    const UniformSignal out = oracle_ode(CoupledPairSpec{1e9, 0.0}, dt, 4000, UniformSignal(impulse, dt));
    EXPECT_EQ(out.samples().cwiseAbs().maxCoeff(), 0.0);
}

TEST(OracleOde, RejectsUnstableStep)
{
    const CoupledPairSpec spec{1e9, 0.05};
    const double limit = 1.0 / (10.0 * spec.f_plus());
    EXPECT_THROW(CoupledLcIntegrator(spec, 1.01 * limit), InvalidArgument);
    EXPECT_NO_THROW(CoupledLcIntegrator(spec, limit));
    const UniformSignal drive(Eigen::VectorXd::Zero(10), 2.0 * limit);
    EXPECT_THROW(oracle_ode(spec, 2.0 * limit, 10, drive), InvalidArgument);
    EXPECT_NO_THROW(oracle_ode(spec, 2.0 * limit, 10, drive, 2));
}

TEST(OracleOde, EnergyConservedWhenLossless)
{
    const CoupledPairSpec spec{1e9, 0.05};
    CoupledLcIntegrator lc(spec, 2.5e-12);
    CoupledLcIntegrator::State s;
    s << 0.0, 0.0, 1.0, 0.0;
    lc.set_state(s);
    const double e0 = lc.energy();
    for (int i = 0; i < 10000; ++i)
        lc.advance(0.0, 0.0);
    EXPECT_NEAR(lc.energy(), e0, 1e-6 * e0);
}

// An impulse into tank 1 excites both normal modes; the probe on tank 2
// carries them with equal weight.
TEST(OracleOde, NormalModesMatchClosedForm)
{
    const double f0 = 1e9;
    const double k = 0.05;
    const double dt = 2.5e-12;
    const Eigen::Index n = 40000;
    Eigen::VectorXd impulse = Eigen::VectorXd::Zero(n);
    impulse[0] = 1.0;
    const UniformSignal probe = oracle_ode(CoupledPairSpec{f0, k}, dt, n, UniformSignal(impulse, dt));

    KPipelineConfig cfg;
    cfg.f0 = f0;
    cfg.fp = 5e9;
    cfg.bandwidth = 20e6;
    cfg.alpha = 5.0;
    const CouplingResult r = extract_coupling(probe, cfg);
    EXPECT_LT(oracle::rel(r.f_minus, oracle::split_minus(f0, k)), 1e-3);
    EXPECT_LT(oracle::rel(r.f_plus, oracle::split_plus(f0, k)), 1e-3);
}

TEST(OracleOde, AgreesWithTwoToneModes)
{
    const CoupledPairSpec spec{1e9, 0.08};
    const double dt = 2.5e-12;
    const Eigen::Index n = 40000;
    const UniformSignal drive = gaussian_pulse(PulseSpec{5e9}, dt, n);
    const UniformSignal ode = oracle_ode(spec, dt, n, drive);
    const UniformSignal closed = oracle_two_tone(spec, dt, n);

    KPipelineConfig cfg;
    cfg.f0 = spec.f0;
    cfg.fp = 5e9;
    cfg.bandwidth = 20e6;
    const CouplingResult a = extract_coupling(ode, cfg);
    const CouplingResult b = extract_coupling(closed, cfg);
    EXPECT_LT(oracle::rel(a.f_minus, b.f_minus), 1e-3);
    EXPECT_LT(oracle::rel(a.f_plus, b.f_plus), 1e-3);
}

TEST(OracleOde, RejectsMismatchedExcitationGrid)
{
    const UniformSignal drive(Eigen::VectorXd::Zero(10), 1e-12);
    EXPECT_THROW(oracle_ode(CoupledPairSpec{1e9, 0.05}, 2e-12, 10, drive), InvalidArgument);
}
