#pragma once

#include <iosfwd>
#include <string>

#include "kdecoreset/baselines.hpp"
#include "kdecoreset/coreset.hpp"
#include "kdecoreset/discrepancy.hpp"
#include "kdecoreset/herding.hpp"
#include "kdecoreset/kde.hpp"
#include "kdecoreset/point_set.hpp"

namespace kdecoreset {

// Points come in as CSV or TSV, one point per row, d numeric columns.  The
// delimiter is taken from the first data line (tab, else comma, else
// whitespace) and a single header row is auto-detected when any field of the
// first row fails to parse as a number.
PointSet read_points(const std::string& path);
PointSet parse_points(std::istream& in);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Coreset JSON: {"parent_size": n, "indices": [...], "weights": [...] | null}.
std::string coreset_to_json(const Coreset& q);
Coreset coreset_from_json(const PointSet& parent, const std::string& text);

// ErrorReport JSON with keys sup_error_estimate, witness_point, rkhs_gap,
// candidate_count.
std::string error_report_to_json(const ErrorReport& report);

// Halving report JSON: {"levels": [{"input_size", "discrepancy",
// "retained_size"}...], "total_bound": b}.
std::string halving_report_to_json(const HalvingReport& report);

// Snapped set JSON: {"points": [[...]...], "weights": [...], "cell_width": w}.
std::string snapped_to_json(const SnappedSet& s);

// Herding trace CSV with columns t, chosen_index, gap_sq.
std::string trace_to_csv(const HerdingTrace& trace);

// Lower-bound sweep report JSON; rows carry {k, l1, l2, gap, rhs, holds}.
struct LowerBoundRow {
  std::size_t k = 0;
  double l1 = 0.0;
  double l2 = 0.0;
  double gap = 0.0;
  double rhs = 0.0;
  bool holds = false;
};
struct LowerBoundReport {
  std::string kernel;
  std::size_t n = 0;
  double z_f = 0.0;
  double r_f = 0.0;
  double c_f = 0.0;
  std::size_t k_min = 0;
  std::size_t k_max = 0;
  bool range_empty = true;
  std::vector<LowerBoundRow> rows;
};
std::string lower_bound_report_to_json(const LowerBoundReport& report);

}  // namespace kdecoreset
