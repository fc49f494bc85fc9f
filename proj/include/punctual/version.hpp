#ifndef PUNCTUAL_VERSION_HPP
#define PUNCTUAL_VERSION_HPP

namespace punctual {

inline constexpr const char* kVersion = "0.1.0";

// Cache entries are keyed by this string; bump it whenever a change can
// alter any computed value, so stale entries die with the code that made them.
inline constexpr const char* kCodeVersion = "punctual-core-0.1.0";

}  // namespace punctual

#endif
