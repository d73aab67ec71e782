#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qpcc::testing {

struct PropertyResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && instances >= 100; }
};

inline constexpr unsigned kPropertySeed = 20240601;

PropertyResult euler_identity(unsigned seed);
PropertyResult mul_associativity(unsigned seed);
PropertyResult normal_form_idempotence(unsigned seed);
PropertyResult stabilization(unsigned seed);
PropertyResult g_vector_additivity(unsigned seed);
PropertyResult hom_from_projectives(unsigned seed);

std::vector<std::function<PropertyResult(unsigned)>> all_properties();

}  // namespace qpcc::testing
