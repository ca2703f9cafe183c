#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bezout/multielim.hpp"
#include "bezout/polyring.hpp"

namespace bezout {

// A parsed .psys file. Directives: vars, keep, eliminate, method, seed.
struct SystemDocument {
  VarTablePtr vars;
  std::vector<MultiPoly> equations;
  std::vector<int> equation_lines;
  std::optional<std::string> keep;
  std::vector<std::string> eliminate;
  std::optional<std::string> method;
  std::optional<unsigned long> seed;
  std::vector<std::string> comments;
};

SystemDocument parse_document(const std::string& text);
// Requires a keep directive.
PolySystem parse_system(const std::string& text);
PolySystem to_system(const SystemDocument& doc);

// A single polynomial over known variables; "lhs = rhs" is read as lhs - rhs.
MultiPoly parse_polynomial(const std::string& text, const VarTablePtr& vars);

enum class Format { Text, Json };
Format parse_format(const std::string& name);

std::string render_polynomial(const MultiPoly& p);
std::string render_document(const SystemDocument& doc);
std::string render_report(const EliminationReport& r, Format format, bool trace = false);

}  // namespace bezout
