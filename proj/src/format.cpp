#include "sozeta/format.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace sozeta {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "latex") return Format::latex;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected text, latex or json)");
}

std::string to_latex(const EulerTerm& t) {
  std::string s = "\\zeta(";
  for (int i = 0; i < t.depth(); ++i) {
    if (i) s += ',';
    auto e = std::to_string(t[i].exponent);
    s += t[i].sign < 0 ? "\\overline{" + e + "}" : e;
  }
  return s + ')';
}

std::string to_text(const Combo& c) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, q] : c.terms()) {
    BigRational mag = abs(q);
    if (first) {
      if (q < 0) out += '-';
    } else {
      out += q < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += t.key();
    first = false;
  }
  return out;
}

std::string to_latex(const Combo& c) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, q] : c.terms()) {
    BigRational mag = abs(q);
    if (first) {
      if (q < 0) out += '-';
    } else {
      out += q < 0 ? " - " : " + ";
    }
    if (mag.get_den() != 1)
      out += "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    else if (mag != 1)
      out += mag.get_num().get_str();
    out += to_latex(t);
    first = false;
  }
  return out;
}

nlohmann::json to_json(const Combo& c) {
  auto arr = nlohmann::json::array();
  for (const auto& [t, q] : c.terms())
    arr.push_back({{"term", t.key()}, {"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}});
  return arr;
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse '" + std::string(s_) + "' at offset " + std::to_string(pos_) +
                                ": " + what);
  }

  EulerTerm term() {
    expect('z');
    expect('(');
    std::vector<SignedArg> args;
    do {
      int sign = accept('b') ? -1 : 1;
      args.push_back({std::stoi(digits()), sign});
    } while (accept(','));
    expect(')');
    return EulerTerm::make(args);
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

EulerTerm parse_term(std::string_view key) {
  Lexer lx(key);
  EulerTerm t = lx.term();
  if (!lx.done()) lx.fail("trailing characters");
  return t;
}

Combo parse_combo(std::string_view text) {
  Lexer lx(text);
  Combo c;
  if (lx.peek() == '0') {
    lx.digits();
    if (!lx.done()) lx.fail("trailing characters");
    return c;
  }
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    if (lx.accept('-'))
      sign = -1;
    else if (!lx.accept('+') && !first)
      lx.fail("expected '+' or '-'");
    BigRational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      BigInteger num(lx.digits()), den(1);
      if (lx.accept('/')) den = BigInteger(lx.digits());
      if (den == 0) lx.fail("zero denominator");
      coeff = make_rational(num, den);
      lx.expect('*');
    }
    c.add(lx.term(), sign * coeff);
    first = false;
  }
  return c;
}

Combo combo_from_json(const nlohmann::json& j) {
  Combo c;
  for (const auto& e : j) {
    BigInteger num(e.at("num").get<std::string>()), den(e.at("den").get<std::string>());
    if (den == 0) throw std::invalid_argument("zero denominator in JSON combo");
    c.add(parse_term(e.at("term").get<std::string>()), make_rational(num, den));
  }
  return c;
}

}  // namespace sozeta
