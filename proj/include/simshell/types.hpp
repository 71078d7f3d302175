#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace simshell {

using StateId = std::uint32_t;
using BlockId = std::uint32_t;
using AtomId = std::uint32_t;

inline constexpr BlockId kNoBlock = 0xffffffffu;
inline constexpr std::uint32_t kNoSlot = 0xffffffffu;

/// Input file could not be understood. `line` is 1-based, 0 if not applicable.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// An oracle-scale operation was asked to run above its size guard.
class GuardError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A runtime-checked invariant failed (only thrown when checking is enabled).
class InvariantError : public std::logic_error {
    using std::logic_error::logic_error;
};

/// True if `SIMSHELL_GUARD_OVERRIDE` is set in the environment.
bool guard_override_active();

/// Throws GuardError when `size` exceeds `limit` and the override is not set.
void enforce_guard(const char* what, std::size_t size, std::size_t limit);

} // namespace simshell
