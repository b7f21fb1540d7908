#ifndef RESONEST_JSON_IO_HPP
#define RESONEST_JSON_IO_HPP

#include "resonest/extraction.hpp"
#include "resonest/reflection.hpp"
#include "resonest/synthesis.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>

namespace resonest {

/// Version stamped into every JSON record as "schema".
inline constexpr int kSchemaVersion = 1;

// Coupling record: {"schema", "f_minus_hz", "f_plus_hz", "k", "diagnostics"}.
nlohmann::json to_json(const CouplingResult& result);
nlohmann::json to_json(const StageDiagnostics& stages);
nlohmann::json to_json(const ExternalQ& q, const ReflectionSpectrum& spectrum);
nlohmann::json to_json(const CouplingTargets& targets, const FilterPrototype& proto);
nlohmann::json to_json(const ComplexFrequencyEstimate& e);
nlohmann::json to_json(const RealMode& m);

// Spectrum CSV: header "f_hz,re,im,group_delay_s"; group delay is written
// as 0 when it has not been computed.
void write_spectrum_csv(std::ostream& out, const ReflectionSpectrum& spectrum);
void write_spectrum_csv(const std::filesystem::path& path, const ReflectionSpectrum& spectrum);
ReflectionSpectrum read_spectrum_csv(std::istream& in);

MonotoneCurve read_curve_csv(const std::filesystem::path& path);

} // namespace resonest

#endif
