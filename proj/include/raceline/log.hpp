#ifndef RACELINE_LOG_HPP
#define RACELINE_LOG_HPP

#include <string>

namespace raceline::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

// Level comes from the RACELINE_LOG environment variable; defaults to warn.
Level level();
bool enabled(Level lvl);
void write(Level lvl, const std::string& msg);

inline void error(const std::string& msg) { write(Level::error, msg); }
inline void warn(const std::string& msg) { write(Level::warn, msg); }
inline void info(const std::string& msg) { write(Level::info, msg); }
inline void debug(const std::string& msg) { write(Level::debug, msg); }

}  // namespace raceline::log

#endif  // RACELINE_LOG_HPP
