#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace pcf {

enum class errc {
  parse,
  validity,
  non_planar_embedding,
  precondition,
  too_large,
  incomplete_coloring,
  not_a_forest,
  brooks_precondition,
  extension_failed,
  stuck,
  hypothesis,
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::parse: return "parse";
    case errc::validity: return "validity";
    case errc::non_planar_embedding: return "non-planar-embedding";
    case errc::precondition: return "precondition";
    case errc::too_large: return "too-large";
    case errc::incomplete_coloring: return "incomplete";
    case errc::not_a_forest: return "not-a-forest";
    case errc::brooks_precondition: return "brooks-precondition";
    case errc::extension_failed: return "extension-failed";
    case errc::stuck: return "stuck";
    case errc::hypothesis: return "hypothesis";
  }
  return "unknown";
}

/// Base class of every domain error raised by the library. The CLI maps all
/// of these to exit code 1.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : error(errc::parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when an extension procedure reaches a step with no admissible color,
/// or its output fails re-verification. `step()` names the procedure step.
class extension_failed : public error {
 public:
  explicit extension_failed(std::string step, const std::string& detail = {})
      : error(errc::extension_failed, step + (detail.empty() ? "" : " (" + detail + ")")),
        step_(std::move(step)) {}

  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

}  // namespace pcf
