#pragma once

#include <stdexcept>
#include <string>

namespace qcent {

// Process exit codes used by the CLI and carried by the exception types below.
enum class ExitCode : int {
    ok = 0,
    validation = 1,
    integrity = 2,
    io = 3,
};

class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& what, ExitCode exit_code)
        : std::runtime_error(what), code_(std::move(code)), exit_code_(exit_code) {}

    // Machine-readable identifier, stable across releases (e.g. "grid.extent").
    const std::string& code() const noexcept { return code_; }
    int exit_code() const noexcept { return static_cast<int>(exit_code_); }

  private:
    std::string code_;
    ExitCode exit_code_;
};

// Bad configuration or arguments; nothing was computed.
class ValidationError : public Error {
  public:
    ValidationError(std::string code, const std::string& what)
        : Error(std::move(code), what, ExitCode::validation) {}
};

// A numerical invariant failed mid-run (norm loss, NaN, inconsistent purity...).
class IntegrityError : public Error {
  public:
    IntegrityError(std::string code, const std::string& what)
        : Error(std::move(code), what, ExitCode::integrity) {}
};

class IoError : public Error {
  public:
    IoError(std::string code, const std::string& what)
        : Error(std::move(code), what, ExitCode::io) {}
};

}  // namespace qcent
