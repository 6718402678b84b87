// Text, LaTeX and JSON renderings of Euler sums and combos.
#pragma once

#include "sozeta/euler_terms.hpp"

#include <json.hpp>
#include <string>
#include <string_view>

namespace sozeta {

enum class Format { text, latex, json };

Format parse_format(std::string_view name);

std::string to_latex(const EulerTerm& t);

/// "3/2*z(b1,2) + 1/16*z(3)"; "0" for the empty combo.
std::string to_text(const Combo& c);
std::string to_latex(const Combo& c);

/// [{"term": "z(3)", "num": "1", "den": "16"}, ...]
nlohmann::json to_json(const Combo& c);

/// Parses a key such as "z(b1,2)".
EulerTerm parse_term(std::string_view key);

/// Inverse of to_text; tolerant of whitespace and of "1*" prefixes.
Combo parse_combo(std::string_view text);
Combo combo_from_json(const nlohmann::json& j);

}  // namespace sozeta
