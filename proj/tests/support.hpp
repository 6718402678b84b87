#pragma once

#include "sozeta/precision_real.hpp"

#include <mutex>

inline long double ld(const sozeta::Real& x) {
  std::lock_guard lock(sozeta::mpfr_mutex());
  return x.convert_to<long double>();
}

inline double dbl(const sozeta::Real& x) { return static_cast<double>(ld(x)); }
