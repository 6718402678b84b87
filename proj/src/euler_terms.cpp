#include "sozeta/euler_terms.hpp"

#include <algorithm>

namespace sozeta {

EulerTerm EulerTerm::make(std::span<const SignedArg> args) {
  if (args.empty() || args.size() > 2)
    throw BadDepth("Euler sum depth must be 1 or 2, got " + std::to_string(args.size()));
  for (const auto& a : args) {
    if (a.exponent < 1) throw std::invalid_argument("Euler sum exponents must be >= 1");
    if (a.sign != 1 && a.sign != -1) throw std::invalid_argument("Euler sum signs must be +1 or -1");
  }
  if (args[0].exponent == 1 && args[0].sign == 1)
    throw DivergentTerm("leading argument (1, +1) diverges");
  EulerTerm t;
  std::copy(args.begin(), args.end(), t.args_.begin());
  t.depth_ = static_cast<int>(args.size());
  return t;
}

int EulerTerm::weight() const {
  int w = 0;
  for (const auto& a : args()) w += a.exponent;
  return w;
}

std::string EulerTerm::key() const {
  std::string s = "z(";
  for (int i = 0; i < depth_; ++i) {
    if (i) s += ',';
    if (args_[i].sign < 0) s += 'b';
    s += std::to_string(args_[i].exponent);
  }
  return s + ')';
}

std::strong_ordering operator<=>(const EulerTerm& a, const EulerTerm& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  if (auto c = a.depth_ <=> b.depth_; c != 0) return c;
  for (int i = 0; i < a.depth_; ++i) {
    if (auto c = a.args_[i].exponent <=> b.args_[i].exponent; c != 0) return c;
    // unbarred before barred
    if (auto c = b.args_[i].sign <=> a.args_[i].sign; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void Combo::add(const EulerTerm& t, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Combo::add(const Combo& other, const BigRational& scale) {
  if (scale == 0) return;
  for (const auto& [t, c] : other.terms_) add(t, scale * c);
}

BigRational Combo::coefficient(const EulerTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? BigRational(0) : it->second;
}

std::set<int> Combo::weights() const {
  std::set<int> w;
  for (const auto& [t, c] : terms_) w.insert(t.weight());
  return w;
}

int Combo::max_depth() const {
  int d = 0;
  for (const auto& [t, c] : terms_) d = std::max(d, t.depth());
  return d;
}

Combo combo_add(const Combo& a, const Combo& b) {
  Combo r = a;
  r.add(b);
  return r;
}

Combo combo_scale(const BigRational& c, const Combo& a) {
  Combo r;
  r.add(a, c);
  return r;
}

Combo stuffle_product(SignedArg a, SignedArg b) {
  Combo r;
  r.add(EulerTerm::make({a, b}), 1);
  r.add(EulerTerm::make({b, a}), 1);
  r.add(EulerTerm::make({SignedArg{a.exponent + b.exponent, a.sign * b.sign}}), 1);
  return r;
}

}  // namespace sozeta
