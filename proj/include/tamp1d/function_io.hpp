#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tamp1d/step_function.hpp"
#include "tamp1d/tamping.hpp"

namespace tamp1d {

/// Input error with a 1-based location; field is 0 when the whole line is at fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t field = 0);

  std::size_t line() const { return line_; }
  std::size_t field() const { return field_; }

 private:
  std::size_t line_;
  std::size_t field_;
};

/// One piece per line: "lo hi value". Blank lines and '#' comments are skipped.
StepFunction parse_function_text(std::string_view text);

/// {"pieces":[{"lo":..,"hi":..,"value":..}, ...]}; numbers may be JSON numbers
/// or strings holding rationals. Line numbers in errors are piece indices (1-based).
StepFunction parse_function_json(std::string_view text);

/// JSON if the first non-blank character is '{', text otherwise.
StepFunction parse_function(std::string_view text);

StepFunction load_function(const std::filesystem::path& path);

/// Non-zero pieces, one "lo hi value" line each.
std::string format_function_text(const StepFunction& fn);

nlohmann::json function_to_json(const StepFunction& fn);
std::string format_function_json(const StepFunction& fn);

/// [{"pivot":..,"eta":..,"heights":[..]}, ...]
nlohmann::json trace_to_json(const TampingTrace& trace);

}  // namespace tamp1d
