#include "sphbm/io.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "sphbm/vecmath.hpp"

namespace sphbm {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double: to_chars failed");
  return std::string(buf, res.ptr);
}

std::string format_17(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (res.ec != std::errc{}) throw std::runtime_error("format_17: to_chars failed");
  return std::string(buf, res.ptr);
}

void write_sphere_csv_header(std::ostream& os, int d, bool instrument) {
  os << "sample_id,t";
  for (int i = 1; i <= d; ++i) os << ",x" << i;
  if (instrument) os << ",X,cos_dist";
  os << '\n';
}

void write_sphere_csv_row(std::ostream& os, std::size_t sample_id, const IncrementDraw& draw,
                          double cos_dist, bool instrument) {
  os << sample_id << ',' << format_double(draw.time);
  for (const double x : draw.point.coords()) os << ',' << format_double(x);
  if (instrument) os << ',' << format_double(draw.radial) << ',' << format_double(cos_dist);
  os << '\n';
}

void write_sphere_jsonl_row(std::ostream& os, const IncrementDraw& draw, double cos_dist,
                            bool instrument) {
  nlohmann::json row;
  row["t"] = draw.time;
  row["point"] = draw.point.coords();
  if (instrument) {
    row["X"] = draw.radial;
    row["cos_dist"] = cos_dist;
  }
  os << row.dump() << '\n';
}

void write_projective_jsonl_row(std::ostream& os, const ProjectivePoint& p, double t) {
  nlohmann::json row;
  row["field"] = field_to_string(p.field());
  row["n"] = p.n();
  row["t"] = t;
  row["rep"] = p.rep();
  os << row.dump() << '\n';
}

void write_pmf_csv(std::ostream& os, const std::vector<double>& pmf) {
  os << "m,q\n";
  for (std::size_t m = 0; m < pmf.size(); ++m) os << m << ',' << format_17(pmf[m]) << '\n';
}

void write_stat_report_jsonl(std::ostream& os, const StatReport& report) {
  nlohmann::json row;
  row["test"] = report.test_name;
  row["statistic"] = report.statistic;
  row["p_value"] = report.p_value;
  row["sample_sizes"] = report.sample_sizes;
  row["alpha"] = report.alpha;
  row["pass"] = report.pass;
  os << row.dump() << '\n';
}

}  // namespace sphbm
