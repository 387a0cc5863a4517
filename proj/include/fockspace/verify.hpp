#pragma once

// Verification suites: every identity of the library evaluated against an
// independent oracle, collected into a machine-readable report.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fockspace/types.hpp"

namespace fockspace {

struct CaseRecord {
  std::string id;
  std::string group;  // tolerance key
  nlohmann::json params;
  cplx lhs;
  cplx rhs;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string oracle;
};

/// A printed formula that disagrees with what the numerics support, or a
/// convention choice that changes a visible constant or phase.
struct Discrepancy {
  std::string id;
  std::string module;
  std::string printed;
  std::string adopted;
  std::string status;  // printed_fails | convention | resolved | out_of_scope
  nlohmann::json measured;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::map<std::string, double> tolerance_overrides;
  int nodes = 0;  // 0 keeps each consumer's default
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseRecord> cases;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::uint64_t seed = 42;
  double elapsed_ms = 0.0;
  std::map<std::string, double> tolerances;
  std::map<std::string, double> tolerance_overrides;
  std::vector<Discrepancy> discrepancies;

  bool ok() const { return failed == 0; }
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

const std::vector<std::string>& suite_names();

/// Tolerance per case group; keys are what --tol key=val overrides.
std::map<std::string, double> default_tolerances();

/// Throws DomainError for an unknown suite or tolerance key.
VerificationReport run_suite(const std::string& suite, const VerifyOptions& options = {});

/// Known disagreements between printed formulas and the numerics, each with
/// a live measurement.
std::vector<Discrepancy> collect_discrepancies(const VerifyOptions& options = {});

}  // namespace fockspace
