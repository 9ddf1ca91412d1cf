#pragma once

#include <stdexcept>
#include <string>
#include <functional>

namespace hermlab {

// Precondition and numeric failures are reported through exceptions.
// Non-fatal conditions (e.g. boundary mass above threshold in analyze)
// go through the warning sink, which defaults to stderr.

[[noreturn]] inline void fail(const std::string& msg) {
    throw std::runtime_error(msg);
}

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

using WarnSink = std::function<void(const std::string&)>;

void set_warning_sink(WarnSink sink);  // pass nullptr to restore the default
void warn(const std::string& msg);

} // namespace hermlab
