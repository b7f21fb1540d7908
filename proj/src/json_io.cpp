#include "resonest/json_io.hpp"

#include "resonest/error.hpp"
#include "resonest/signal_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

namespace resonest {

using nlohmann::json;

json to_json(const ComplexFrequencyEstimate& e)
{
    json j{{"frequency_hz", e.frequency}, {"damping_per_s", e.damping}};
    if (e.amplitude)
        j["amplitude"] = *e.amplitude;
    return j;
}

json to_json(const RealMode& m)
{
    json j{{"frequency_hz", m.frequency}, {"damping_per_s", m.damping}};
    if (m.amplitude)
        j["amplitude"] = *m.amplitude;
    return j;
}

json to_json(const StageDiagnostics& s)
{
    json estimates = json::array();
    for (const auto& e : s.esprit_estimates)
        estimates.push_back(to_json(e));
    json modes = json::array();
    for (const auto& m : s.real_modes)
        modes.push_back(to_json(m));
    json orphans = json::array();
    for (const auto& e : s.orphans)
        orphans.push_back(to_json(e));

    return json{
        {"input_rate_hz", s.plan.input_fs},
        {"stage1_factor", s.plan.stage1_factor},
        {"stage1_rate_hz", s.plan.stage1_rate()},
        {"stage2_factor", s.plan.stage2_factor},
        {"stage2_rate_hz", s.plan.stage2_rate()},
        {"input_samples", s.input_samples},
        {"raw_decimated_samples", s.raw_decimated_samples},
        {"aaf_decimated_samples", s.aaf_decimated_samples},
        {"bandpassed_samples", s.bandpassed_samples},
        {"antialias_taps", s.antialias_taps},
        {"bandpass_taps", s.bandpass_taps},
        {"f_tilde_hz", s.f_tilde},
        {"selection_band_hz", s.selection_band},
        {"esprit_estimates", std::move(estimates)},
        {"real_modes", std::move(modes)},
        {"orphans", std::move(orphans)},
    };
}

json to_json(const CouplingResult& r)
{
    return json{{"schema", kSchemaVersion},
                {"f_minus_hz", r.f_minus},
                {"f_plus_hz", r.f_plus},
                {"k", r.k},
                {"diagnostics", to_json(r.stages)}};
}

json to_json(const ExternalQ& q, const ReflectionSpectrum& spectrum)
{
    return json{{"schema", kSchemaVersion},
                {"q_e", q.q_e},
                {"f0_hz", q.f0},
                {"diagnostics",
                 {{"group_delay_peak_s", q.group_delay_peak},
                  {"grid_points", spectrum.frequencies.size()},
                  {"warnings", spectrum.warnings}}}};
}

json to_json(const CouplingTargets& t, const FilterPrototype& proto)
{
    return json{{"schema", kSchemaVersion},
                {"q_e_in", t.q_e_in},
                {"q_e_out", t.q_e_out},
                {"k", t.k},
                {"fractional_bandwidth", proto.fractional_bandwidth()},
                {"order", proto.order()}};
}

void write_spectrum_csv(std::ostream& out, const ReflectionSpectrum& spectrum)
{
    const bool has_delay = spectrum.group_delay.size() == spectrum.frequencies.size();
    char buf[160];
    out << "f_hz,re,im,group_delay_s\n";
    for (Eigen::Index i = 0; i < spectrum.frequencies.size(); ++i) {
        char* p = buf;
        char* end = buf + sizeof buf;
        p = std::to_chars(p, end, spectrum.frequencies[i]).ptr;
        *p++ = ',';
        p = std::to_chars(p, end, spectrum.s11[i].real()).ptr;
        *p++ = ',';
        p = std::to_chars(p, end, spectrum.s11[i].imag()).ptr;
        *p++ = ',';
        p = std::to_chars(p, end, has_delay ? spectrum.group_delay[i] : 0.0).ptr;
        *p++ = '\n';
        out.write(buf, p - buf);
    }
}

void write_spectrum_csv(const std::filesystem::path& path, const ReflectionSpectrum& spectrum)
{
    std::ofstream out(path);
    if (!out)
        detail::throw_invalid("cannot open '" + path.string() + "' for writing");
    write_spectrum_csv(out, spectrum);
}

ReflectionSpectrum read_spectrum_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line.rfind("f_hz,re,im,group_delay_s", 0) != 0)
        detail::throw_invalid("spectrum CSV: expected header 'f_hz,re,im,group_delay_s'");
    std::vector<double> f, re, im, gd;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r")
            continue;
        std::istringstream row(line);
        std::string cell;
        double v[4];
        for (double& x : v) {
            if (!std::getline(row, cell, ','))
                detail::throw_invalid("spectrum CSV: expected four columns");
            const char* first = cell.data();
            const char* last = first + cell.size();
            while (last != first && (last[-1] == '\r' || last[-1] == ' '))
                --last;
            const auto [ptr, ec] = std::from_chars(first, last, x);
            if (ec != std::errc() || ptr != last)
                detail::throw_invalid("spectrum CSV: cannot parse number '" + cell + "'");
        }
        f.push_back(v[0]);
        re.push_back(v[1]);
        im.push_back(v[2]);
        gd.push_back(v[3]);
    }
    ReflectionSpectrum s;
    const auto n = static_cast<Eigen::Index>(f.size());
    s.frequencies = Eigen::Map<Eigen::VectorXd>(f.data(), n);
    s.s11.resize(n);
    s.group_delay = Eigen::Map<Eigen::VectorXd>(gd.data(), n);
    for (Eigen::Index i = 0; i < n; ++i)
        s.s11[i] = {re[static_cast<std::size_t>(i)], im[static_cast<std::size_t>(i)]};
    validate(s);
    return s;
}

MonotoneCurve read_curve_csv(const std::filesystem::path& path)
{
    return MonotoneCurve(read_xy_csv(path, "x,y"));
}

} // namespace resonest
