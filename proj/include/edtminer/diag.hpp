#pragma once

#include <string_view>

namespace edtminer::diag {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Current threshold, read once from EDT_MINER_LOG_LEVEL
/// (error|warn|info|debug; default warn).
Level level();

void log(Level level, std::string_view message);

inline void error(std::string_view m) { log(Level::Error, m); }
inline void warn(std::string_view m) { log(Level::Warn, m); }
inline void info(std::string_view m) { log(Level::Info, m); }
inline void debug(std::string_view m) { log(Level::Debug, m); }

}  // namespace edtminer::diag
