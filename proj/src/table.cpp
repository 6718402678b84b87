#include "sozeta/table.hpp"

#include <cmath>

namespace sozeta {

std::vector<ZetaSoArgs> convergent_tuples(int weight, bool regular_only) {
  std::vector<ZetaSoArgs> out;
  for (int s1 = 0; s1 <= weight; ++s1)
    for (int s2 = 0; s1 + s2 <= weight; ++s2)
      for (int s3 = 0; s1 + s2 + s3 <= weight; ++s3) {
        ZetaSoArgs a{s1, s2, s3, weight - s1 - s2 - s3};
        if (!converges_so(a)) continue;
        if (regular_only && a.exceptional()) continue;
        out.push_back(a);
      }
  return out;
}

TableRow make_row(const ZetaSoArgs& a, const EvalConfig& cfg, ConstantCache* cache) {
  TableRow row{a, reduce_so(a), {}, a.exceptional()};
  row.numeric = eval_combo(row.combo, cfg, cache);
  return row;
}

std::vector<TableRow> build_table(int weight, bool regular_only, const EvalConfig& cfg,
                                  ConstantCache* cache) {
  std::vector<TableRow> rows;
  for (const auto& a : convergent_tuples(weight, regular_only)) rows.push_back(make_row(a, cfg, cache));
  return rows;
}

VerifyReport run_verify(const VerifyOptions& opt, ConstantCache* cache) {
  VerifyReport report;
  EvalConfig cfg;
  cfg.digits = opt.digits;
  for (int w = 3; w <= opt.max_weight; ++w) {
    for (const auto& a : convergent_tuples(w)) {
      VerifyRow row;
      row.args = a;
      row.exceptional = a.exceptional();
      row.reduced = eval_combo(reduce_so(a), cfg, cache);
      try {
        row.direct = eval_so_direct(a, opt.tol / 4, opt.direct);
      } catch (const TargetUnreachable& e) {
        row.skipped = e.what();
        ++report.skipped;
        report.rows.push_back(std::move(row));
        continue;
      }
      {
        std::lock_guard lock(mpfr_mutex());
        PrecisionScope scope(cfg.working_digits());
        row.discrepancy = Real(abs(row.reduced->value - row.direct->value)).convert_to<double>();
      }
      row.passed = numeric_equal(*row.reduced, *row.direct, Real(opt.tol));
      if (!row.passed) ++report.failures;
      report.max_discrepancy = std::max(report.max_discrepancy, row.discrepancy);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace sozeta
