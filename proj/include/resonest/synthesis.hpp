#ifndef RESONEST_SYNTHESIS_HPP
#define RESONEST_SYNTHESIS_HPP

#include <Eigen/Core>

#include <complex>
#include <utility>
#include <vector>

namespace resonest {

/// Low-pass prototype g0..g_{n+1} with the band it is mapped to.
struct FilterPrototype
{
    std::vector<double> g;
    double fc = 0.0;        // centre frequency, Hz
    double bandwidth = 0.0; // Hz

    int order() const noexcept { return static_cast<int>(g.size()) - 2; }
    double fractional_bandwidth() const noexcept { return bandwidth / fc; }
};

void validate(const FilterPrototype& proto);

struct CouplingTargets
{
    double q_e_in = 0.0;
    double q_e_out = 0.0;
    std::vector<double> k; // K_{i,i+1}, i = 1..n-1
};

/// Q_e,in = g0 g1 / D, Q_e,out = g_n g_{n+1} / D,
/// K_{i,i+1} = D / sqrt(g_i g_{i+1}), with D = B / fc.
CouplingTargets coupling_targets(const FilterPrototype& proto);

///
/// Sampled strictly monotone relation y(x), x increasing.
///
/// Interpolated with a shape-preserving piecewise cubic (Fritsch-Carlson
/// slopes), so the curve stays within the sample range between samples
/// and keeps the samples' monotonicity.
///
class MonotoneCurve
{
public:
    explicit MonotoneCurve(std::vector<std::pair<double, double>> samples);

    const std::vector<std::pair<double, double>>& samples() const noexcept { return samples_; }
    bool increasing() const noexcept { return increasing_; }
    double x_min() const noexcept { return samples_.front().first; }
    double x_max() const noexcept { return samples_.back().first; }
    double y_min() const noexcept;
    double y_max() const noexcept;

    /// Interpolated y at x inside [x_min, x_max]; throws OutOfRange outside.
    double operator()(double x) const;

private:
    double segment_value(std::size_t i, double x) const;

    std::vector<std::pair<double, double>> samples_;
    std::vector<double> slopes_;
    bool increasing_ = true;
};

/// x with curve(x) = target_y, to |dy| <= 1e-9 of the y range. Throws
/// OutOfRange (carrying the nearest endpoint) when the target is outside
/// the sampled y range.
double invert_curve(const MonotoneCurve& curve, double target_y);

/// eps(w) = eps_inf + sum_m d_eps_m / (1 + j w tau_m).
struct DebyeModel
{
    double eps_inf = 1.0;
    std::vector<std::pair<double, double>> terms; // (delta_eps, tau seconds)
};

void validate(const DebyeModel& model);

std::complex<double> debye_permittivity(const DebyeModel& model, double f);

/// Re eps(f).
double debye_real_permittivity(const DebyeModel& model, double f);
/// -Im eps / Re eps.
double debye_loss_tangent(const DebyeModel& model, double f);

} // namespace resonest

#endif // RESONEST_SYNTHESIS_HPP
