#ifndef SPHBM_IO_HPP
#define SPHBM_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "sphbm/projective.hpp"
#include "sphbm/sphere.hpp"
#include "sphbm/stats.hpp"

namespace sphbm {

/// Shortest round-trip decimal representation (std::to_chars).
std::string format_double(double v);

/// 17 significant digits, fixed style for table exports.
std::string format_17(double v);

/// CSV rows `sample_id,t,x1,...,xd[,X,cos_dist]`.
void write_sphere_csv_header(std::ostream& os, int d, bool instrument);
void write_sphere_csv_row(std::ostream& os, std::size_t sample_id, const IncrementDraw& draw,
                          double cos_dist, bool instrument);

/// JSONL rows `{"t":...,"point":[...]}` (+ "X", "cos_dist" when instrumented).
void write_sphere_jsonl_row(std::ostream& os, const IncrementDraw& draw, double cos_dist,
                            bool instrument);

/// JSONL rows `{"field":"R|C|H","n":...,"t":...,"rep":[...]}`.
void write_projective_jsonl_row(std::ostream& os, const ProjectivePoint& p, double t);

/// CSV `m,q` with 17-significant-digit values.
void write_pmf_csv(std::ostream& os, const std::vector<double>& pmf);

/// One StatReport as a JSONL row.
void write_stat_report_jsonl(std::ostream& os, const StatReport& report);

}  // namespace sphbm

#endif
