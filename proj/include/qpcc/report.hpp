#pragma once

#include <string>

#include "json.hpp"
#include "qpcc/ccmap.hpp"
#include "qpcc/mutation.hpp"

namespace qpcc {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Wraps a payload as {"schemaVersion": 1, "kind": kind, ...payload}.
Json envelope(const std::string& kind, Json payload);

Json to_json(const LaurentPoly& p);
Json to_json(const JacobianModel& m, bool with_basis = false);
Json to_json(const RelationReport& r);
Json to_json(const FdCheck& c);
Json to_json(const InvolutionReport& r);
Json to_json(const SplitResult& s);
Json to_json(const QuiverWithPotential& qp);
Json to_json(const Representation& r);
Json to_json(const GrassCount& g);
Json to_json(const ModuleReport& m);
Json to_json(const CaseReport& r);

/// Human-readable table of a case report.
std::string to_text(const CaseReport& r);
std::string to_text(const RelationReport& r);

}  // namespace qpcc
