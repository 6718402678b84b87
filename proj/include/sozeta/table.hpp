// Weight tables and the reduction-versus-direct verification sweep.
#pragma once

#include "sozeta/direct.hpp"
#include "sozeta/numeric.hpp"
#include "sozeta/reducer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sozeta {

/// All convergent tuples of weight w, lexicographic in (s1, s2, s3, s4).
std::vector<ZetaSoArgs> convergent_tuples(int weight, bool regular_only = false);

struct TableRow {
  ZetaSoArgs args;
  Combo combo;
  PrecisionReal numeric;
  bool exceptional = false;
};

TableRow make_row(const ZetaSoArgs& a, const EvalConfig& cfg, ConstantCache* cache = nullptr);
std::vector<TableRow> build_table(int weight, bool regular_only, const EvalConfig& cfg,
                                  ConstantCache* cache = nullptr);

struct VerifyRow {
  ZetaSoArgs args;
  bool exceptional = false;
  std::optional<PrecisionReal> reduced, direct;
  double discrepancy = 0;
  bool passed = false;
  std::optional<std::string> skipped;  // reason, when the direct sum gave up
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  double max_discrepancy = 0;
  int failures = 0;
  int skipped = 0;
  bool ok() const { return failures == 0; }
};

struct VerifyOptions {
  int max_weight = 6;
  double tol = 1e-8;
  int digits = 20;
  DirectOptions direct;
};

/// Every convergent tuple of weight 3..max_weight. A row passes when the two
/// values agree to tol beyond their combined error bounds.
VerifyReport run_verify(const VerifyOptions& opt, ConstantCache* cache = nullptr);

}  // namespace sozeta
