// Persistent cache of evaluated Euler sums.
//
// File layout (JSON):
//   {"version": 1, "checksum": "<fnv1a-64 hex of entries dump>",
//    "entries": {"z(b1,2)@30": "-1.2345...e-01", ...}}
//
// A file that fails to parse, has another version, or whose checksum does
// not match is ignored entirely.
#pragma once

#include "sozeta/euler_terms.hpp"
#include "sozeta/precision_real.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace sozeta {

class ConstantCache {
 public:
  static constexpr int kVersion = 1;

  /// Memory-only cache.
  ConstantCache() = default;
  /// Loads `file` if it exists and is valid; save() writes back to it.
  explicit ConstantCache(std::filesystem::path file);

  std::optional<PrecisionReal> lookup(const EulerTerm& t, const EvalConfig& cfg) const;
  void store(const EulerTerm& t, const EvalConfig& cfg, const PrecisionReal& v);

  /// No-op for memory-only caches. Writes through a temporary file and rename.
  void save() const;

  size_t size() const;
  bool loaded_from_disk() const { return loaded_; }
  const std::filesystem::path& file() const { return file_; }

  /// $SOZETA_CACHE_DIR, else $XDG_CACHE_HOME/sozeta, else $HOME/.cache/sozeta.
  static std::filesystem::path default_directory();
  static constexpr const char* kFileName = "constants.json";

 private:
  static std::string entry_key(const EulerTerm& t, const EvalConfig& cfg);

  mutable std::mutex mutex_;
  std::map<std::string, std::string> entries_;
  std::filesystem::path file_;
  bool loaded_ = false;
};

}  // namespace sozeta
