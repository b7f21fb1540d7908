#ifndef RESONEST_SRC_LOG_HPP
#define RESONEST_SRC_LOG_HPP

#include <string>

namespace resonest::detail {

// Routed through spdlog; verbosity is set by the caller (the CLI reads
// RESONEST_LOG).
void log_warn(const std::string& message);
void log_debug(const std::string& message);

} // namespace resonest::detail

#endif
