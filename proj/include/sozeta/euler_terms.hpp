// Alternating Euler sums of depth one and two, and rational linear
// combinations of them.
//
//   z(s1, ..., sd; x1, ..., xd) = sum_{m1 > ... > md >= 1} x1^m1 ... xd^md / (m1^s1 ... md^sd)
//
// Arguments are stored outermost first, so args()[0] carries the largest
// summation index. A sign of -1 is written with a bar, "z(b1,2)" in text.
#pragma once

#include "sozeta/exact.hpp"

#include <array>
#include <compare>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>

namespace sozeta {

struct DivergentTerm : std::domain_error {
  using std::domain_error::domain_error;
};

struct BadDepth : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SignedArg {
  int exponent = 1;  // >= 1
  int sign = 1;      // +1 or -1

  friend auto operator<=>(const SignedArg&, const SignedArg&) = default;
};

inline SignedArg pos(int s) { return {s, 1}; }
inline SignedArg neg(int s) { return {s, -1}; }

class EulerTerm {
 public:
  /// Throws BadDepth unless 1 <= args.size() <= 2, DivergentTerm when the
  /// leading argument is (1, +1), std::invalid_argument on bad exponents/signs.
  static EulerTerm make(std::span<const SignedArg> args);
  static EulerTerm make(std::initializer_list<SignedArg> args) {
    return make(std::span<const SignedArg>(args.begin(), args.size()));
  }

  int depth() const { return depth_; }
  int weight() const;
  std::span<const SignedArg> args() const { return {args_.data(), static_cast<size_t>(depth_)}; }
  const SignedArg& operator[](int i) const { return args_[i]; }

  /// Stable text key, e.g. "z(b1,2)". Also the constant-cache key.
  std::string key() const;

  /// Ordered by weight, then depth, then arguments.
  friend std::strong_ordering operator<=>(const EulerTerm& a, const EulerTerm& b);
  friend bool operator==(const EulerTerm& a, const EulerTerm& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  EulerTerm() = default;
  std::array<SignedArg, 2> args_{};
  int depth_ = 0;
};

/// Finite Q-linear combination of Euler sums; zero coefficients are never stored.
class Combo {
 public:
  using Map = std::map<EulerTerm, BigRational>;

  Combo() = default;
  Combo(const EulerTerm& t, const BigRational& c = BigRational(1)) { add(t, c); }

  void add(const EulerTerm& t, const BigRational& c);
  void add(const Combo& other, const BigRational& scale = BigRational(1));

  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  BigRational coefficient(const EulerTerm& t) const;

  /// Distinct weights of the stored terms.
  std::set<int> weights() const;
  int max_depth() const;

  friend bool operator==(const Combo&, const Combo&) = default;

 private:
  Map terms_;
};

Combo combo_add(const Combo& a, const Combo& b);
Combo combo_scale(const BigRational& c, const Combo& a);
inline Combo operator+(const Combo& a, const Combo& b) { return combo_add(a, b); }
inline Combo operator*(const BigRational& c, const Combo& a) { return combo_scale(c, a); }

/// z(a) z(b) = z(a,b) + z(b,a) + z(a+b) with signs multiplied on the diagonal.
Combo stuffle_product(SignedArg a, SignedArg b);

inline int weight_of(const EulerTerm& t) { return t.weight(); }
inline std::set<int> weight_of(const Combo& c) { return c.weights(); }
inline int depth_of(const EulerTerm& t) { return t.depth(); }

}  // namespace sozeta
