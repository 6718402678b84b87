#include "sozeta/constant_cache.hpp"

#include "sozeta/format.hpp"

#include <json.hpp>
#include <mpfr.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace sozeta {

namespace {

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_scientific(const Real& x, int significant) {
  int n = mpfr_snprintf(nullptr, 0, "%.*RNe", significant, x.backend().data());
  std::vector<char> buf(static_cast<size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*RNe", significant, x.backend().data());
  return buf.data();
}

bool valid_entry(const std::string& key, const std::string& value) {
  auto at = key.rfind('@');
  if (at == std::string::npos) return false;
  try {
    parse_term(key.substr(0, at));
    if (std::stoi(key.substr(at + 1)) <= 0) return false;
  } catch (const std::exception&) {
    return false;
  }
  mpfr_t tmp;
  mpfr_init2(tmp, 64);
  bool ok = mpfr_set_str(tmp, value.c_str(), 10, MPFR_RNDN) == 0;
  mpfr_clear(tmp);
  return ok;
}

}  // namespace

ConstantCache::ConstantCache(std::filesystem::path file) : file_(std::move(file)) {
  std::ifstream in(file_);
  if (!in) return;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("version").get<int>() != kVersion) return;
    const auto& entries = j.at("entries");
    if (!entries.is_object() || fnv1a_hex(entries.dump()) != j.at("checksum").get<std::string>()) return;
    std::map<std::string, std::string> loaded;
    for (const auto& [k, v] : entries.items()) {
      if (!v.is_string() || !valid_entry(k, v.get<std::string>())) return;
      loaded.emplace(k, v.get<std::string>());
    }
    entries_ = std::move(loaded);
    loaded_ = true;
  } catch (const std::exception&) {
    entries_.clear();
  }
}

std::string ConstantCache::entry_key(const EulerTerm& t, const EvalConfig& cfg) {
  return t.key() + "@" + std::to_string(cfg.digits);
}

std::optional<PrecisionReal> ConstantCache::lookup(const EulerTerm& t, const EvalConfig& cfg) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(entry_key(t, cfg));
  if (it == entries_.end()) return std::nullopt;
  PrecisionScope scope(cfg.working_digits());
  return PrecisionReal{Real(it->second), cfg.reported_err()};
}

void ConstantCache::store(const EulerTerm& t, const EvalConfig& cfg, const PrecisionReal& v) {
  std::string text = to_scientific(v.value, cfg.working_digits());
  std::lock_guard lock(mutex_);
  entries_.insert_or_assign(entry_key(t, cfg), std::move(text));
}

void ConstantCache::save() const {
  if (file_.empty()) return;
  nlohmann::json entries(nlohmann::json::value_t::object);
  {
    std::lock_guard lock(mutex_);
    for (const auto& [k, v] : entries_) entries[k] = v;
  }
  nlohmann::json j{{"version", kVersion}, {"checksum", fnv1a_hex(entries.dump())}, {"entries", entries}};
  std::error_code ec;
  if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path(), ec);
  auto tmp = file_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, file_, ec);
}

size_t ConstantCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::filesystem::path ConstantCache::default_directory() {
  if (const char* d = std::getenv("SOZETA_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "sozeta";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "sozeta";
  return std::filesystem::path(".sozeta-cache");
}

}  // namespace sozeta
