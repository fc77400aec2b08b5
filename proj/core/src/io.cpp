#include "kdecoreset/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kdecoreset {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split_fields(const std::string& line) {
  char delim = 0;
  if (line.find('\t') != std::string::npos)
    delim = '\t';
  else if (line.find(',') != std::string::npos)
    delim = ',';
  std::vector<std::string> fields;
  if (delim != 0) {
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, delim)) fields.push_back(field);
  } else {
    std::istringstream ss(line);
    std::string field;
    while (ss >> field) fields.push_back(field);
  }
  return fields;
}

bool parse_double(const std::string& text, double* out) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin) return false;
  while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
  if (*end != '\0') return false;
  *out = v;
  return true;
}

}  // namespace

PointSet parse_points(std::istream& in) {
  std::vector<double> coords;
  std::size_t dim = 0;
  std::string line;
  bool first_data_line = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    std::vector<double> row(fields.size());
    bool numeric = true;
    for (std::size_t j = 0; j < fields.size(); ++j)
      if (!parse_double(fields[j], &row[j])) {
        numeric = false;
        break;
      }

    if (!numeric) {
      if (first_data_line) {
        first_data_line = false;  // header row
        continue;
      }
      throw std::invalid_argument("non-numeric field at line " + std::to_string(line_no));
    }
    if (dim == 0)
      dim = row.size();
    else if (row.size() != dim)
      throw std::invalid_argument("inconsistent column count at line " + std::to_string(line_no));
    coords.insert(coords.end(), row.begin(), row.end());
    first_data_line = false;
  }
  if (coords.empty()) throw std::invalid_argument("no points in input");
  return PointSet(std::move(coords), dim);
}

PointSet read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  return parse_points(in);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << content;
}

std::string coreset_to_json(const Coreset& q) {
  ordered_json j;
  j["parent_size"] = q.parent().size();
  j["indices"] = std::vector<std::size_t>(q.indices().begin(), q.indices().end());
  if (q.weighted())
    j["weights"] = std::vector<double>(q.weights().begin(), q.weights().end());
  else
    j["weights"] = nullptr;
  return j.dump();
}

Coreset coreset_from_json(const PointSet& parent, const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (j.contains("parent_size") && j["parent_size"].get<std::size_t>() != parent.size())
    throw std::invalid_argument("coreset parent size does not match the point set");
  std::vector<std::size_t> indices = j.at("indices").get<std::vector<std::size_t>>();
  std::optional<std::vector<double>> weights;
  if (j.contains("weights") && !j["weights"].is_null())
    weights = j["weights"].get<std::vector<double>>();
  return Coreset(parent, std::move(indices), std::move(weights));
}

std::string error_report_to_json(const ErrorReport& report) {
  ordered_json j;
  j["sup_error_estimate"] = report.sup_error_estimate;
  j["witness_point"] = report.witness_point;
  j["rkhs_gap"] = report.rkhs_gap;
  j["candidate_count"] = report.candidate_count;
  return j.dump();
}

std::string halving_report_to_json(const HalvingReport& report) {
  ordered_json j;
  j["levels"] = ordered_json::array();
  for (const auto& level : report.levels) {
    ordered_json row;
    row["input_size"] = level.input_size;
    row["discrepancy"] = level.discrepancy;
    row["retained_size"] = level.retained_size;
    j["levels"].push_back(std::move(row));
  }
  j["total_bound"] = report.total_bound;
  return j.dump();
}

std::string snapped_to_json(const SnappedSet& s) {
  ordered_json j;
  j["points"] = ordered_json::array();
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const auto pt = s.points.point(i);
    j["points"].push_back(std::vector<double>(pt.begin(), pt.end()));
  }
  j["weights"] = s.weights;
  j["cell_width"] = s.cell_width;
  return j.dump();
}

std::string trace_to_csv(const HerdingTrace& trace) {
  std::ostringstream out;
  out << "t,chosen_index,gap_sq\n";
  out.precision(17);
  for (const auto& e : trace.entries)
    out << e.t << ',' << e.chosen_index << ',' << e.gap_sq << '\n';
  return out.str();
}

std::string lower_bound_report_to_json(const LowerBoundReport& report) {
  ordered_json j;
  j["kernel"] = report.kernel;
  j["n"] = report.n;
  j["z_f"] = report.z_f;
  j["r_f"] = report.r_f;
  j["c_f"] = report.c_f;
  if (report.range_empty) {
    j["k_min"] = nullptr;
    j["k_max"] = nullptr;
  } else {
    j["k_min"] = report.k_min;
    j["k_max"] = report.k_max;
  }
  j["rows"] = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["k"] = row.k;
    r["l1"] = row.l1;
    r["l2"] = row.l2;
    r["gap"] = row.gap;
    r["rhs"] = row.rhs;
    r["holds"] = row.holds;
    j["rows"].push_back(std::move(r));
  }
  return j.dump();
}

}  // namespace kdecoreset
