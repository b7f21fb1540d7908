#ifndef RESONEST_SIGNAL_IO_HPP
#define RESONEST_SIGNAL_IO_HPP

#include "resonest/signals.hpp"

#include <filesystem>
#include <iosfwd>
#include <utility>
#include <vector>

namespace resonest {

// Signal CSV: header "t,v", one "time,value" row per sample. dt is taken
// from the first two rows and every row must sit on that grid within 1 ppm
// of dt.
UniformSignal read_signal_csv(std::istream& in);
UniformSignal read_signal_csv(const std::filesystem::path& path);
void write_signal_csv(std::ostream& out, const UniformSignal& signal);
void write_signal_csv(const std::filesystem::path& path, const UniformSignal& signal);

/// Reads a two-column CSV with the given header (e.g. "x,y").
std::vector<std::pair<double, double>> read_xy_csv(std::istream& in, const char* header);
std::vector<std::pair<double, double>> read_xy_csv(const std::filesystem::path& path,
                                                   const char* header);

} // namespace resonest

#endif
