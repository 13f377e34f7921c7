#include "tamp1d/function_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <vector>

namespace tamp1d {

namespace {

std::string located(const std::string& message, std::size_t line, std::size_t field) {
  std::string out = message + " at line " + std::to_string(line);
  if (field != 0) out += ", field " + std::to_string(field);
  return out;
}

struct LocatedPiece {
  Piece piece;
  std::size_t line;
};

Rational parse_field(std::string_view token, std::size_t line, std::size_t field) {
  try {
    return parse_rational(token);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + std::string(token) + "'", line, field);
  }
}

void check_piece(const Piece& p, std::size_t line) {
  if (p.lo < 0) throw ParseError("negative coordinate", line, 1);
  if (p.hi < 0) throw ParseError("negative coordinate", line, 2);
  if (p.value < 0) throw ParseError("negative value", line, 3);
  if (p.lo > p.hi) throw ParseError("reversed piece", line);
}

StepFunction assemble(std::vector<LocatedPiece> pieces) {
  std::erase_if(pieces, [](const LocatedPiece& p) { return p.piece.lo == p.piece.hi; });
  std::vector<const LocatedPiece*> order;
  for (const auto& p : pieces) order.push_back(&p);
  std::sort(order.begin(), order.end(),
            [](const LocatedPiece* a, const LocatedPiece* b) { return a->piece.lo < b->piece.lo; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (order[i]->piece.lo < order[i - 1]->piece.hi) {
      const auto [first, second] = std::minmax(order[i - 1]->line, order[i]->line);
      throw ParseError("piece overlaps the piece at line " + std::to_string(first), second);
    }
  }
  std::vector<Piece> plain;
  plain.reserve(pieces.size());
  for (auto& p : pieces) plain.push_back(std::move(p.piece));
  return StepFunction::from_pieces(std::move(plain));
}

std::string rational_text(const nlohmann::json& value, std::size_t index, std::size_t field) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number()) return value.dump();
  throw ParseError("expected a number or a rational string", index, field);
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t field)
    : std::runtime_error(located(message, line, field)), line_(line), field_(field) {}

StepFunction parse_function_text(std::string_view text) {
  std::vector<LocatedPiece> pieces;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string token; fields >> token;) tokens.push_back(token);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw ParseError("expected 3 fields 'lo hi value', found " + std::to_string(tokens.size()),
                       line);
    }
    Piece p{parse_field(tokens[0], line, 1), parse_field(tokens[1], line, 2),
            parse_field(tokens[2], line, 3)};
    check_piece(p, line);
    pieces.push_back({std::move(p), line});
  }
  return assemble(std::move(pieces));
}

StepFunction parse_function_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1);
  }
  if (!doc.is_object() || !doc.contains("pieces") || !doc["pieces"].is_array()) {
    throw ParseError("expected an object with a \"pieces\" array", 1);
  }
  std::vector<LocatedPiece> pieces;
  std::size_t index = 0;
  for (const auto& entry : doc["pieces"]) {
    ++index;
    if (!entry.is_object()) throw ParseError("piece is not an object", index);
    std::array<Rational, 3> fields;
    const char* names[] = {"lo", "hi", "value"};
    for (std::size_t f = 0; f < 3; ++f) {
      if (!entry.contains(names[f])) {
        throw ParseError(std::string("missing \"") + names[f] + "\"", index, f + 1);
      }
      fields[f] = parse_field(rational_text(entry[names[f]], index, f + 1), index, f + 1);
    }
    Piece p{fields[0], fields[1], fields[2]};
    check_piece(p, index);
    pieces.push_back({std::move(p), index});
  }
  return assemble(std::move(pieces));
}

StepFunction parse_function(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_function_json(text);
  return parse_function_text(text);
}

StepFunction load_function(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_function(buffer.str());
}

std::string format_function_text(const StepFunction& fn) {
  std::string out;
  for (const auto& p : fn.support_pieces()) {
    out += to_string(p.lo) + " " + to_string(p.hi) + " " + to_string(p.value) + "\n";
  }
  return out;
}

nlohmann::json function_to_json(const StepFunction& fn) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& p : fn.support_pieces()) {
    pieces.push_back({{"lo", to_string(p.lo)}, {"hi", to_string(p.hi)}, {"value", to_string(p.value)}});
  }
  return {{"pieces", pieces}};
}

std::string format_function_json(const StepFunction& fn) { return function_to_json(fn).dump(2); }

nlohmann::json trace_to_json(const TampingTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : trace.steps) {
    steps.push_back({{"pivot", step.pivot}, {"eta", step.eta}, {"heights", step.heights}});
  }
  return steps;
}

}  // namespace tamp1d
