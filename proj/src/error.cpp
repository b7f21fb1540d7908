#include "resonest/error.hpp"

#include "log.hpp"

#include <spdlog/spdlog.h>

namespace resonest {
namespace detail {

void throw_invalid(const std::string& what)
{
    throw InvalidArgument(what);
}

void log_warn(const std::string& message)
{
    spdlog::warn("{}", message);
}

void log_debug(const std::string& message)
{
    spdlog::debug("{}", message);
}

} // namespace detail
} // namespace resonest
