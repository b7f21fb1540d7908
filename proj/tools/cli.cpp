#include "cli.hpp"

#include "config_json.hpp"

#include "resonest/error.hpp"
#include "resonest/extraction.hpp"
#include "resonest/json_io.hpp"
#include "resonest/reflection.hpp"
#include "resonest/signal_io.hpp"
#include "resonest/signals.hpp"
#include "resonest/spectral.hpp"
#include "resonest/synthesis.hpp"

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace resonest::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

void configure_logging(std::ostream& err)
{
    static std::once_flag once;
    std::call_once(once, [] {
        auto logger = std::make_shared<spdlog::logger>("resonest", std::make_shared<spdlog::sinks::stderr_sink_mt>());
        logger->set_pattern("[%l] %v");
        spdlog::set_default_logger(std::move(logger));
    });
    spdlog::level::level_enum level = spdlog::level::warn;
    if (const char* env = std::getenv("RESONEST_LOG")) {
        const std::string name(env);
        if (name == "error")
            level = spdlog::level::err;
        else if (name == "warn")
            level = spdlog::level::warn;
        else if (name == "info")
            level = spdlog::level::info;
        else if (name == "debug")
            level = spdlog::level::debug;
        else
            err << "ignoring RESONEST_LOG=" << name << " (expected error, warn, info or debug)\n";
    }
    spdlog::set_level(level);
}

// Outputs must be creatable before any computation starts.
void check_output(const std::string& path)
{
    if (path.empty() || path == "-")
        return;
    const fs::path parent = fs::path(path).parent_path();
    if (!parent.empty() && !fs::is_directory(parent))
        throw InvalidArgument("output directory does not exist: " + parent.string());
}

void write_json(const json& j, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw InvalidArgument("cannot write " + path);
    file << j.dump(2) << '\n';
}

json modes_json(const std::vector<ModeSummary>& modes)
{
    json out = json::array();
    for (const auto& m : modes)
        out.push_back({{"frequency_hz", m.frequency}, {"damping_per_s", m.damping}});
    return out;
}

// Describes a library error as JSON and prints its diagnostics. Returns
// the exit code it maps to.
int describe_error(const std::exception& e, const std::string& context, std::ostream& err, json& record)
{
    record["error"] = e.what();
    const std::string prefix = context.empty() ? "" : context + ": ";
    err << prefix << "error: " << e.what() << '\n';
    if (const auto* ill = dynamic_cast<const IllConditioned*>(&e)) {
        record["eigenvalues"] = ill->eigenvalues();
        err << prefix << "correlation eigenvalues:";
        for (double v : ill->eigenvalues())
            err << ' ' << v;
        err << '\n';
        return kExitEstimation;
    }
    if (const auto* fail = dynamic_cast<const EstimationFailure*>(&e)) {
        record["modes"] = modes_json(fail->modes());
        err << prefix << "modes found:\n";
        for (const auto& m : fail->modes())
            err << "  " << m.frequency << " Hz, damping " << m.damping << " 1/s\n";
        return kExitEstimation;
    }
    if (const auto* weak = dynamic_cast<const InsufficientExcitation*>(&e)) {
        record["frequencies_hz"] = weak->frequencies();
        const auto& f = weak->frequencies();
        err << prefix << f.size() << " in-band frequencies without excitation";
        if (!f.empty())
            err << ", from " << f.front() << " Hz to " << f.back() << " Hz";
        err << '\n';
        return kExitEstimation;
    }
    if (const auto* range = dynamic_cast<const OutOfRange*>(&e)) {
        record["nearest"] = {{"x", range->nearest_x()}, {"y", range->nearest_y()}};
        err << prefix << "nearest sample: x = " << range->nearest_x() << ", y = " << range->nearest_y() << '\n';
        return kExitEstimation;
    }
    return kExitUsage;
}

struct PipelineOptions
{
    double f0 = 0.0;
    double fp = 0.0;
    double bandwidth = 0.0;
    double alpha = 5.0;
    int m = 24;
    int modes = 4;
    double pairing_tol = 1e-3;
    double band = 0.0;

    void add_to(CLI::App& app)
    {
        app.add_option("--f0", f0, "Uncoupled resonance frequency, Hz")->required();
        app.add_option("--fp", fp, "Excitation pulse parameter, Hz")->required();
        app.add_option("--bandwidth", bandwidth, "Design bandwidth B, Hz")->required();
        app.add_option("--alpha", alpha, "Bandpass width factor, f_tilde = alpha * B")->capture_default_str();
        app.add_option("--m", m, "Correlation matrix order")->capture_default_str();
        app.add_option("--modes", modes, "Number of complex modes to estimate")->capture_default_str();
        app.add_option("--pairing-tol", pairing_tol, "Relative tolerance for conjugate pairing")
            ->capture_default_str();
        app.add_option("--band", band, "Half-width of the mode selection band, Hz (default 3 * alpha * B)");
    }

    KPipelineConfig config() const
    {
        KPipelineConfig cfg;
        cfg.f0 = f0;
        cfg.fp = fp;
        cfg.bandwidth = bandwidth;
        cfg.alpha = alpha;
        cfg.esprit.correlation_order = m;
        cfg.esprit.n_complex_modes = modes;
        cfg.esprit.pairing_tolerance = pairing_tol;
        if (band > 0.0)
            cfg.band_for_selection = band;
        validate(cfg);
        return cfg;
    }
};

// gen

struct GenOptions
{
    double fp = 0.0;
    double f0 = 0.0;
    double k = 0.0;
    double dt = 0.0;
    long n = 0;
    double damping = 0.0;
    std::vector<double> amplitudes{1.0, 1.0};
    std::vector<double> phases{0.0, 0.0};
    std::string drive = "impulse";
    double drive_fp = 0.0;
    int substeps = 1;
    std::string output;
    std::string truth;
};

CoupledPairSpec pair_spec(const GenOptions& o)
{
    CoupledPairSpec spec{o.f0, o.k};
    spec.damping = o.damping;
    if (o.amplitudes.size() != 2 || o.phases.size() != 2)
        throw InvalidArgument("gen: --amplitudes and --phases take two values (f- mode first)");
    spec.amplitudes = {o.amplitudes[0], o.amplitudes[1]};
    spec.phases = {o.phases[0], o.phases[1]};
    validate(spec);
    return spec;
}

void write_signal(const UniformSignal& s, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-")
        write_signal_csv(out, s);
    else
        write_signal_csv(fs::path(path), s);
}

// Sidecar next to the CSV unless given explicitly; none when writing to stdout.
std::string truth_path(const GenOptions& o)
{
    if (!o.truth.empty())
        return o.truth;
    if (o.output.empty() || o.output == "-")
        return {};
    return fs::path(o.output).replace_extension(".truth.json").string();
}

void write_truth(const CoupledPairSpec& spec, const GenOptions& o, const char* generator)
{
    const std::string path = truth_path(o);
    if (path.empty())
        return;
    const json j{{"schema", kSchemaVersion}, {"generator", generator},  {"f0", spec.f0},
                 {"k", spec.k},              {"f_minus", spec.f_minus()}, {"f_plus", spec.f_plus()},
                 {"damping", spec.damping},  {"dt", o.dt},                {"n", o.n}};
    std::ofstream file(path);
    if (!file)
        throw InvalidArgument("cannot write " + path);
    file << j.dump(2) << '\n';
}

int cmd_gen_pulse(const GenOptions& o, std::ostream& out)
{
    check_output(o.output);
    write_signal(gaussian_pulse(PulseSpec{o.fp}, o.dt, o.n), o.output, out);
    return kExitOk;
}

int cmd_gen_two_tone(const GenOptions& o, std::ostream& out)
{
    const CoupledPairSpec spec = pair_spec(o);
    check_output(o.output);
    check_output(o.truth);
    write_signal(oracle_two_tone(spec, o.dt, o.n), o.output, out);
    write_truth(spec, o, "two-tone");
    return kExitOk;
}

int cmd_gen_ode(const GenOptions& o, std::ostream& out)
{
    const CoupledPairSpec spec = pair_spec(o);
    check_output(o.output);
    check_output(o.truth);
    Eigen::VectorXd drive = Eigen::VectorXd::Zero(o.n);
    if (o.drive == "impulse") {
        if (o.n > 0)
            drive[0] = 1.0;
    } else {
        drive = gaussian_pulse(PulseSpec{o.drive_fp}, o.dt, o.n).samples();
    }
    write_signal(oracle_ode(spec, o.dt, o.n, UniformSignal(drive, o.dt), o.substeps), o.output, out);
    write_truth(spec, o, "ode");
    return kExitOk;
}

// extract-k

struct ExtractKOptions
{
    PipelineOptions pipeline;
    std::vector<std::string> inputs;
    int jobs = 1;
    std::string stages_dir;
    std::string output;
};

json extract_one(const std::string& input, const KPipelineConfig& cfg, const std::string& stages_dir)
{
    const UniformSignal signal = read_signal_csv(fs::path(input));
    const ConditionedSignal conditioned = condition_signal(signal, cfg);
    if (!stages_dir.empty()) {
        const fs::path dir(stages_dir);
        const std::string stem = fs::path(input).stem().string();
        write_signal_csv(dir / (stem + ".raw_decimated.csv"), conditioned.raw_decimated);
        write_signal_csv(dir / (stem + ".aaf_decimated.csv"), conditioned.aaf_decimated);
        write_signal_csv(dir / (stem + ".bandpassed.csv"), conditioned.bandpassed);
    }
    json j = to_json(estimate_coupling(conditioned, cfg, signal.size()));
    j["diagnostics"]["input"] = input;
    return j;
}

int cmd_extract_k(const ExtractKOptions& o, std::ostream& out, std::ostream& err)
{
    const KPipelineConfig cfg = o.pipeline.config();
    if (o.jobs < 1)
        throw InvalidArgument("extract-k: --jobs must be at least 1");
    check_output(o.output);
    if (!o.stages_dir.empty())
        fs::create_directories(o.stages_dir);

    const std::size_t count = o.inputs.size();
    std::vector<json> records(count);
    std::vector<int> codes(count, kExitOk);
    std::vector<std::string> messages(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                records[i] = extract_one(o.inputs[i], cfg, o.stages_dir);
            } catch (const std::exception& e) {
                std::ostringstream diag;
                json record{{"schema", kSchemaVersion}, {"input", o.inputs[i]}};
                codes[i] = describe_error(e, o.inputs[i], diag, record);
                records[i] = std::move(record);
                messages[i] = diag.str();
            }
        }
    };
    const int threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(o.jobs), count));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    for (const auto& m : messages)
        err << m;
    const int code = *std::max_element(codes.begin(), codes.end());
    if (count == 1) {
        if (code == kExitOk)
            write_json(records[0], o.output, out);
        return code;
    }
    write_json(json(records), o.output, out);
    return code;
}

// extract-qe

struct ExtractQeOptions
{
    std::string inc;
    std::string tot;
    double fmin = 0.0;
    double fmax = 0.0;
    long nfft = 0;
    bool taper = false;
    std::string spectrum;
    std::string output;
};

int cmd_extract_qe(const ExtractQeOptions& o, std::ostream& out)
{
    check_output(o.output);
    std::string spectrum_path = o.spectrum;
    if (spectrum_path.empty() && !o.output.empty() && o.output != "-")
        spectrum_path = fs::path(o.output).replace_extension(".spectrum.csv").string();
    check_output(spectrum_path);

    const UniformSignal v_inc = read_signal_csv(fs::path(o.inc));
    const UniformSignal v_tot = read_signal_csv(fs::path(o.tot));
    Eigen::Index nfft = o.nfft;
    if (nfft == 0) {
        nfft = 1;
        while (nfft < 8 * std::max(v_inc.size(), v_tot.size()))
            nfft *= 2;
    }
    const ReflectionSpectrum spectrum = group_delay(s11_from_voltages(v_inc, v_tot, o.fmin, o.fmax, nfft, o.taper));
    const ExternalQ q = external_q(spectrum);
    if (!spectrum_path.empty())
        write_spectrum_csv(fs::path(spectrum_path), spectrum);
    json j = to_json(q, spectrum);
    j["diagnostics"]["nfft"] = nfft;
    write_json(j, o.output, out);
    return kExitOk;
}

// synth

struct SynthOptions
{
    std::vector<double> g;
    double fc = 0.0;
    double bandwidth = 0.0;
    std::string output;
};

int cmd_synth(const SynthOptions& o, std::ostream& out)
{
    const FilterPrototype proto{o.g, o.fc, o.bandwidth};
    validate(proto);
    check_output(o.output);
    write_json(to_json(coupling_targets(proto), proto), o.output, out);
    return kExitOk;
}

// invert

struct InvertOptions
{
    std::string curve;
    double target = 0.0;
    std::string output;
};

int cmd_invert(const InvertOptions& o, std::ostream& out)
{
    check_output(o.output);
    const MonotoneCurve curve = read_curve_csv(fs::path(o.curve));
    const double x = invert_curve(curve, o.target);
    write_json(json{{"schema", kSchemaVersion}, {"target", o.target}, {"x", x}}, o.output, out);
    return kExitOk;
}

// compare

struct CompareOptions
{
    PipelineOptions pipeline;
    std::string input;
    std::string truth;
    int nfft_factor = 16;
    std::string window = "blackman-harris";
    std::string output;
};

struct Truth
{
    double f_minus = 0.0;
    double f_plus = 0.0;
};

Truth read_truth(const std::string& path)
{
    std::ifstream file(path);
    if (!file)
        throw InvalidArgument("cannot read " + path);
    try {
        const json j = json::parse(file);
        return {j.at("f_minus").get<double>(), j.at("f_plus").get<double>()};
    } catch (const json::exception& e) {
        throw InvalidArgument("truth file " + path + ": " + e.what());
    }
}

// Both estimators are scored the same way: the in-band frequencies nearest
// f0, two of them when the truth is a split pair, one for a single tone.
json score(std::vector<double> in_band, double f0, const std::optional<Truth>& truth)
{
    json s{{"resolved", in_band.size() >= 2}, {"error_rel", nullptr}, {"k", nullptr}};
    std::sort(in_band.begin(), in_band.end(),
              [f0](double a, double b) { return std::abs(a - f0) < std::abs(b - f0); });
    if (in_band.size() >= 2) {
        const double lo = std::min(in_band[0], in_band[1]);
        const double hi = std::max(in_band[0], in_band[1]);
        s["pair_hz"] = {lo, hi};
        s["k"] = coupling_coefficient(lo, hi);
    }
    if (!truth || in_band.empty())
        return s;
    if (truth->f_minus == truth->f_plus) {
        s["error_rel"] = std::abs(in_band[0] - truth->f_minus) / truth->f_minus;
    } else if (in_band.size() >= 2) {
        const double lo = std::min(in_band[0], in_band[1]);
        const double hi = std::max(in_band[0], in_band[1]);
        s["error_rel"] =
            std::max(std::abs(lo - truth->f_minus) / truth->f_minus, std::abs(hi - truth->f_plus) / truth->f_plus);
    }
    return s;
}

int cmd_compare(const CompareOptions& o, std::ostream& out)
{
    const KPipelineConfig cfg = o.pipeline.config();
    if (o.nfft_factor < 1)
        throw InvalidArgument("compare: --nfft-factor must be at least 1");
    const SpectralWindow window =
        o.window == "rectangular" ? SpectralWindow::rectangular : SpectralWindow::blackman_harris;
    check_output(o.output);
    std::optional<Truth> truth;
    if (!o.truth.empty())
        truth = read_truth(o.truth);

    const UniformSignal signal = read_signal_csv(fs::path(o.input));
    const ConditionedSignal conditioned = condition_signal(signal, cfg);
    const UniformSignal& s = conditioned.bandpassed;
    const double lo = cfg.f0 - cfg.selection_band();
    const double hi = cfg.f0 + cfg.selection_band();
    auto in_band = [&](double f) { return f >= lo && f <= hi; };

    const PairingResult pairing = pair_to_real_modes(esprit(s, cfg.esprit), cfg.esprit.pairing_tolerance);
    json esprit_modes = json::array();
    std::vector<double> esprit_freqs;
    for (const auto& m : pairing.modes) {
        if (!in_band(m.frequency))
            continue;
        esprit_modes.push_back(to_json(m));
        esprit_freqs.push_back(m.frequency);
    }

    const Eigen::Index nfft = o.nfft_factor * s.size();
    json peaks = json::array();
    std::vector<double> peak_freqs;
    for (const auto& p : periodogram_peaks(s, nfft, window)) {
        if (!in_band(p.frequency))
            continue;
        peaks.push_back({{"frequency_hz", p.frequency}, {"magnitude", p.magnitude}});
        peak_freqs.push_back(p.frequency);
    }

    json es = score(esprit_freqs, cfg.f0, truth);
    es["modes"] = std::move(esprit_modes);
    json pg = score(peak_freqs, cfg.f0, truth);
    pg["peaks"] = std::move(peaks);
    pg["nfft"] = nfft;
    pg["window"] = window == SpectralWindow::rectangular ? "rectangular" : "blackman-harris";

    json report{{"schema", kSchemaVersion},
                {"input", o.input},
                {"window_samples", s.size()},
                {"window_s", s.duration()},
                {"dt_s", s.dt()},
                {"rayleigh_limit_hz", rayleigh_limit(s)},
                {"selection_band_hz", {lo, hi}},
                {"esprit_resolved", es["resolved"]},
                {"periodogram_resolved", pg["resolved"]},
                {"esprit_error_rel", es["error_rel"]},
                {"periodogram_error_rel", pg["error_rel"]},
                {"esprit", std::move(es)},
                {"periodogram", std::move(pg)}};
    if (truth)
        report["truth"] = {{"f_minus", truth->f_minus}, {"f_plus", truth->f_plus}};
    write_json(report, o.output, out);
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    configure_logging(err);

    CLI::App app{"Coupling and external Q extraction from time-domain resonator signals", "resonest"};
    app.config_formatter(std::make_shared<ConfigJson>());
    app.set_config("--config", "", "JSON configuration; command-line flags take precedence");
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate oracle and excitation signals");
    gen_cmd->require_subcommand(1);
    auto add_grid = [&gen](CLI::App* c) {
        c->add_option("--dt", gen.dt, "Sample interval, s")->required();
        c->add_option("--n", gen.n, "Number of samples")->required();
        c->add_option("-o,--output", gen.output, "Signal CSV (default stdout)");
    };
    auto add_pair = [&gen](CLI::App* c) {
        c->add_option("--f0", gen.f0, "Uncoupled resonance frequency, Hz")->required();
        c->add_option("--k", gen.k, "Coupling coefficient")->required();
        c->add_option("--damping", gen.damping, "Decay rate per mode, 1/s")->capture_default_str();
        c->add_option("--truth", gen.truth, "Sidecar JSON (default <output>.truth.json)");
    };
    CLI::App* pulse_cmd = gen_cmd->add_subcommand("pulse", "Gaussian excitation pulse");
    pulse_cmd->add_option("--fp", gen.fp, "Pulse parameter, Hz")->required();
    add_grid(pulse_cmd);
    CLI::App* two_tone_cmd = gen_cmd->add_subcommand("two-tone", "Closed-form coupled pair response");
    add_pair(two_tone_cmd);
    add_grid(two_tone_cmd);
    two_tone_cmd->add_option("--amplitudes", gen.amplitudes, "Amplitudes of the f- and f+ modes")->expected(2);
    two_tone_cmd->add_option("--phases", gen.phases, "Phases of the f- and f+ modes, rad")->expected(2);
    CLI::App* ode_cmd = gen_cmd->add_subcommand("ode", "Integrated coupled LC pair, probed on tank 2");
    add_pair(ode_cmd);
    add_grid(ode_cmd);
    ode_cmd->add_option("--drive", gen.drive, "Excitation of tank 1")
        ->check(CLI::IsMember({"impulse", "pulse"}))
        ->capture_default_str();
    ode_cmd->add_option("--drive-fp", gen.drive_fp, "Pulse parameter of the pulse drive, Hz");
    ode_cmd->add_option("--substeps", gen.substeps, "Integrator steps per sample")->capture_default_str();

    ExtractKOptions ek;
    CLI::App* ek_cmd = app.add_subcommand("extract-k", "Extract the coupling coefficient from probe signals");
    ek_cmd->add_option("inputs", ek.inputs, "Signal CSV files")->required()->check(CLI::ExistingFile);
    ek.pipeline.add_to(*ek_cmd);
    ek_cmd->add_option("--jobs", ek.jobs, "Inputs processed in parallel")->capture_default_str();
    ek_cmd->add_option("--emit-stages", ek.stages_dir, "Directory for intermediate signal CSVs");
    ek_cmd->add_option("-o,--output", ek.output, "Result JSON (default stdout)");

    ExtractQeOptions eq;
    CLI::App* eq_cmd = app.add_subcommand("extract-qe", "External Q from incident and total port voltages");
    eq_cmd->add_option("--inc", eq.inc, "Incident voltage CSV")->required()->check(CLI::ExistingFile);
    eq_cmd->add_option("--tot", eq.tot, "Total port voltage CSV")->required()->check(CLI::ExistingFile);
    eq_cmd->add_option("--fmin", eq.fmin, "Lower band edge, Hz")->required();
    eq_cmd->add_option("--fmax", eq.fmax, "Upper band edge, Hz")->required();
    eq_cmd->add_option("--nfft", eq.nfft, "Transform length (default: power of two >= 8x record)");
    eq_cmd->add_flag("--taper", eq.taper, "Fade both records out over their final 10%");
    eq_cmd->add_option("--spectrum", eq.spectrum, "Spectrum CSV (default <output>.spectrum.csv)");
    eq_cmd->add_option("-o,--output", eq.output, "Result JSON (default stdout)");

    SynthOptions sy;
    CLI::App* sy_cmd = app.add_subcommand("synth", "Coupling targets from a low-pass prototype");
    sy_cmd->add_option("--g", sy.g, "Prototype values g0 .. g(n+1)")->required();
    sy_cmd->add_option("--fc", sy.fc, "Centre frequency, Hz")->required();
    sy_cmd->add_option("--bandwidth", sy.bandwidth, "Bandwidth, Hz")->required();
    sy_cmd->add_option("-o,--output", sy.output, "Result JSON (default stdout)");

    InvertOptions iv;
    CLI::App* iv_cmd = app.add_subcommand("invert", "Dimension giving a target value on a sampled curve");
    iv_cmd->add_option("curve", iv.curve, "Curve CSV with header x,y")->required()->check(CLI::ExistingFile);
    iv_cmd->add_option("--target", iv.target, "Target y value")->required();
    iv_cmd->add_option("-o,--output", iv.output, "Result JSON (default stdout)");

    CompareOptions cm;
    CLI::App* cm_cmd = app.add_subcommand("compare", "ESPRIT against the periodogram on one signal");
    cm_cmd->add_option("input", cm.input, "Signal CSV")->required()->check(CLI::ExistingFile);
    cm.pipeline.add_to(*cm_cmd);
    cm_cmd->add_option("--truth", cm.truth, "Sidecar JSON with f_minus and f_plus")->check(CLI::ExistingFile);
    cm_cmd->add_option("--nfft-factor", cm.nfft_factor, "Periodogram zero padding factor")->capture_default_str();
    cm_cmd->add_option("--window", cm.window, "Periodogram window")
        ->check(CLI::IsMember({"blackman-harris", "rectangular"}))
        ->capture_default_str();
    cm_cmd->add_option("-o,--output", cm.output, "Report JSON (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (pulse_cmd->parsed())
            return cmd_gen_pulse(gen, out);
        if (two_tone_cmd->parsed())
            return cmd_gen_two_tone(gen, out);
        if (ode_cmd->parsed())
            return cmd_gen_ode(gen, out);
        if (ek_cmd->parsed())
            return cmd_extract_k(ek, out, err);
        if (eq_cmd->parsed())
            return cmd_extract_qe(eq, out);
        if (sy_cmd->parsed())
            return cmd_synth(sy, out);
        if (iv_cmd->parsed())
            return cmd_invert(iv, out);
        if (cm_cmd->parsed())
            return cmd_compare(cm, out);
    } catch (const std::exception& e) {
        json ignored;
        return describe_error(e, "", err, ignored);
    }
    return kExitUsage;
}

} // namespace resonest::cli
