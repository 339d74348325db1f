#pragma once

#include <stdexcept>
#include <string>

namespace enh {

enum class ErrorKind {
    usage,       // bad flags, unknown scenario, parse errors
    window,      // window too small / touches truncated cells
    budget,      // explosion guard tripped
    invalid,     // invalid presentation or input data
    internal,    // consistency check failed (must be unreachable)
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_usage(const std::string& m) { throw Error(ErrorKind::usage, m); }
[[noreturn]] inline void fail_window(const std::string& m) { throw Error(ErrorKind::window, m); }
[[noreturn]] inline void fail_budget(const std::string& m) { throw Error(ErrorKind::budget, m); }
[[noreturn]] inline void fail_invalid(const std::string& m) { throw Error(ErrorKind::invalid, m); }
[[noreturn]] inline void fail_internal(const std::string& m) { throw Error(ErrorKind::internal, m); }

}  // namespace enh
