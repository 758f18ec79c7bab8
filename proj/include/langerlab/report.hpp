#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "langerlab/cone.hpp"
#include "langerlab/dpctl.hpp"
#include "langerlab/insep.hpp"
#include "langerlab/kmk.hpp"
#include "langerlab/lattice.hpp"
#include "langerlab/linsys.hpp"
#include "langerlab/positivity.hpp"

namespace langerlab {

using Json = nlohmann::ordered_json;

// One verified claim. `status` is fail only when an asserted mathematical
// fact is contradicted by the computation; module errors surface as skipped.
struct CheckReport {
  std::string check_id;
  std::string statement;
  enum class Status { pass, fail, inconclusive, skipped } status = Status::skipped;
  Json data;
  int64_t elapsed_ms = 0;
};

std::string status_str(CheckReport::Status s);

struct ReportOptions {
  uint64_t seed = 0;
  int threads = 1;
  bool with_timing = false;  // timing breaks byte-reproducibility; off by default
};

struct ReportDoc {
  int schema = 1;
  int64_t q = 0;
  uint64_t seed = 0;
  std::vector<CheckReport> checks;  // sorted by check_id
};

// the full verification pipeline for one q; deterministic given (q, seed)
ReportDoc run_report(int64_t q, const ReportOptions& opts);
bool report_has_fail(const ReportDoc& doc);
Json report_json(const ReportDoc& doc, bool with_timing);

// serialization used across the CLI
Json json_elem(const FieldElem& x);
Json json_point(const ProjPoint& p);
Json json_line(const ProjLine& l);
Json json_incidence(const Incidence& inc);
Json json_div(const DivClass& d);
Json json_cone(const ConeResult& cone);
Json json_census(const FiberCensus& census);
Json json_scan(const ScanReport& scan);
Json json_members(const Incidence& inc, int64_t q);
Json json_kmk(const Field& f);

}  // namespace langerlab
