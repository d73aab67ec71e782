#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpcc/laurent.hpp"
#include "qpcc/repmod.hpp"

namespace qpcc {

struct CCValue {
  LaurentPoly value;
  std::vector<int> g;
  std::vector<GrassCount> table;  // every e with a nonempty Grassmannian
  Rational chi_total;
};

/// (sum_e chi(Gr_e(M))) x^{-g_M}.
CCValue cc_detail(const Representation& m, const JacobianModel& model, const GrassOptions& opt = {});
LaurentPoly cc(const Representation& m, const JacobianModel& model, const GrassOptions& opt = {});

struct ModuleReport {
  std::string name;
  DimVector dims;
  std::vector<int> g;
  std::optional<std::vector<int>> expected_g;
  bool tau_rigid = false;
  CCValue cc;
  std::optional<LaurentPoly> expected_cc;  // per-module value printed with the case
  std::string anchor;                      // where the expected value is printed
  bool asserted = true;                    // false: oracle value, compared but not required
  std::string status;                      // MATCH, MISMATCH, ORACLE
  std::vector<std::string> notes;
};

struct VariantReport {
  std::string variant;
  std::string potential;
  int algebra_dim = 0;
  std::vector<ModuleReport> modules;
  std::vector<std::string> discrepancies;
  bool pass = false;
};

struct CaseReport {
  std::string id;
  std::vector<LaurentPoly> generator_list;  // non-initial generators as listed with the case
  std::vector<VariantReport> variants;
  std::vector<std::string> matched_variants;
  bool pass = false;
};

/// Builds the model(s), the catalog modules, checks tau-rigidity, g-vectors
/// and CC values against the printed ones. Mismatches become report entries.
CaseReport verify_case(const std::string& id, const GrassOptions& opt = {});

}  // namespace qpcc
