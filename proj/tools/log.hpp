#pragma once

#include <cstdlib>
#include <iostream>
#include <string_view>

namespace pucli {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Level comes from PUCORRECT_LOG (error|warn|info|debug); default warn.
inline LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("PUCORRECT_LOG");
        if (!env)
            return LogLevel::Warn;
        const std::string_view v(env);
        if (v == "error")
            return LogLevel::Error;
        if (v == "info")
            return LogLevel::Info;
        if (v == "debug")
            return LogLevel::Debug;
        return LogLevel::Warn;
    }();
    return level;
}

inline void log(LogLevel level, std::string_view tag, std::string_view msg) {
    if (level <= log_level())
        std::cerr << "[" << tag << "] " << msg << "\n";
}

inline void log_error(std::string_view msg) { log(LogLevel::Error, "error", msg); }
inline void log_warn(std::string_view msg) { log(LogLevel::Warn, "warn", msg); }
inline void log_info(std::string_view msg) { log(LogLevel::Info, "info", msg); }
inline void log_debug(std::string_view msg) { log(LogLevel::Debug, "debug", msg); }

} // namespace pucli
