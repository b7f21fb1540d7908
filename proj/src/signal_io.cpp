#include "resonest/signal_io.hpp"

#include "resonest/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace resonest {
namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view s, std::size_t line)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        detail::throw_invalid("CSV line " + std::to_string(line) + ": cannot parse number '" +
                              std::string(s) + "'");
    return v;
}

std::ifstream open_in(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        detail::throw_invalid("cannot open '" + path.string() + "' for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        detail::throw_invalid("cannot open '" + path.string() + "' for writing");
    return out;
}

} // namespace

std::vector<std::pair<double, double>> read_xy_csv(std::istream& in, const char* header)
{
    std::string line;
    if (!std::getline(in, line) || trim(line) != header)
        detail::throw_invalid(std::string("CSV: expected header '") + header + "'");

    std::vector<std::pair<double, double>> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = trim(line);
        if (view.empty())
            continue;
        const auto comma = view.find(',');
        if (comma == std::string_view::npos)
            detail::throw_invalid("CSV line " + std::to_string(lineno) + ": expected two columns");
        rows.emplace_back(parse_double(view.substr(0, comma), lineno),
                          parse_double(view.substr(comma + 1), lineno));
    }
    return rows;
}

std::vector<std::pair<double, double>> read_xy_csv(const std::filesystem::path& path,
                                                   const char* header)
{
    auto in = open_in(path);
    return read_xy_csv(in, header);
}

UniformSignal read_signal_csv(std::istream& in)
{
    const auto rows = read_xy_csv(in, "t,v");
    if (rows.empty())
        detail::throw_invalid("signal CSV has no samples");
    if (rows.size() == 1)
        detail::throw_invalid("signal CSV needs at least two rows to infer dt");

    const double t0 = rows[0].first;
    const double dt = rows[1].first - t0;
    if (!(dt > 0.0))
        detail::throw_invalid("signal CSV: time column must be strictly increasing");

    Eigen::VectorXd samples(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double expected = t0 + static_cast<double>(i) * dt;
        if (std::abs(rows[i].first - expected) > 1e-6 * dt)
            detail::throw_invalid("signal CSV: row " + std::to_string(i + 2) +
                                  " is off the uniform grid by more than 1 ppm of dt");
        samples[static_cast<Eigen::Index>(i)] = rows[i].second;
    }
    return UniformSignal(std::move(samples), dt, t0);
}

UniformSignal read_signal_csv(const std::filesystem::path& path)
{
    auto in = open_in(path);
    return read_signal_csv(in);
}

void write_signal_csv(std::ostream& out, const UniformSignal& signal)
{
    char buf[64];
    out << "t,v\n";
    for (Eigen::Index i = 0; i < signal.size(); ++i) {
        auto* p = std::to_chars(buf, buf + sizeof buf, signal.time(i)).ptr;
        *p++ = ',';
        p = std::to_chars(p, buf + sizeof buf, signal[i]).ptr;
        *p++ = '\n';
        out.write(buf, p - buf);
    }
}

void write_signal_csv(const std::filesystem::path& path, const UniformSignal& signal)
{
    auto out = open_out(path);
    write_signal_csv(out, signal);
}

} // namespace resonest
