#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qpcc/families.hpp"
#include "qpcc/jacobian.hpp"

namespace qpcc::testing {

// Quiver with named arrows "a", "b", ... in the given order.
inline QuiverWithPotential plain_qp(int n, const std::vector<std::pair<int, int>>& arrows, int cap = 12) {
  auto q = std::make_shared<Quiver>(n);
  int i = 0;
  for (auto [s, t] : arrows) q->add_arrow(std::string(1, static_cast<char>('a' + i++)), s, t);
  return QuiverWithPotential(q, cap);
}

inline Path word(const Quiver& q, const std::vector<std::string>& names) {
  std::vector<int> ids;
  for (const auto& n : names) ids.push_back(q.arrow_id(n));
  return Path::from(ids);
}

inline QuiverWithPotential with_terms(QuiverWithPotential qp,
                                      const std::vector<std::pair<Rational, std::vector<std::string>>>& terms) {
  for (const auto& [c, w] : terms) qp.potential.add_cycle(word(*qp.quiver, w), c);
  return qp;
}

inline JacobianModel model_of(const QuiverWithPotential& qp, int slack = 12) {
  ModelOptions o;
  o.ceiling = qp.cap() + slack;
  return truncated_model(qp, o);
}

// dim K<Q> / (I + m^{D+1}) by plain elimination over every path of length <= D.
// Shares nothing with the Groebner engine beyond the cyclic derivatives.
int dense_quotient_dim(const QuiverWithPotential& qp, int D);

}  // namespace qpcc::testing
