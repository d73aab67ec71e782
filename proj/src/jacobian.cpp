#include "qpcc/jacobian.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpcc {

std::vector<AlgebraElement> ideal_generators(const QuiverWithPotential& qp) {
  std::vector<AlgebraElement> out;
  for (int a = 0; a < qp.quiver->num_arrows(); ++a) out.push_back(cyclic_derivative(a, qp.potential));
  return out;
}

int JacobianModel::basis_index(const Path& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

VecQ JacobianModel::coords(const AlgebraElement& x) const {
  AlgebraElement r = normal_form(*this, x);
  VecQ v = VecQ::Zero(dim);
  for (const auto& [p, c] : r.terms()) {
    int i = basis_index(p);
    if (i < 0) throw std::logic_error("normal form left a non-basis path");
    v(i) = c;
  }
  return v;
}

AlgebraElement JacobianModel::from_coords(const VecQ& v) const {
  AlgebraElement x(qp.quiver, cap);
  for (int i = 0; i < dim; ++i)
    if (!v(i).is_zero()) x.add_term(basis[static_cast<std::size_t>(i)], v(i));
  return x;
}

std::vector<int> JacobianModel::basis_from(int v) const {
  std::vector<int> out;
  for (int i = 0; i < dim; ++i)
    if (basis[static_cast<std::size_t>(i)].source(*qp.quiver) == v) out.push_back(i);
  return out;
}

namespace {

bool natural_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.vertex < b.vertex;
}

}  // namespace

JacobianModel build_model_at(const QuiverWithPotential& qp, bool provenance) {
  JacobianModel m(qp);
  m.cap = qp.cap();
  m.generators = ideal_generators(qp);
  for (const auto& g : m.generators) m.max_generator_degree = std::max(m.max_generator_degree, g.degree());
  if (m.cap < 2 * m.max_generator_degree)
    throw std::invalid_argument("cap " + std::to_string(m.cap) + " is below twice the largest relation degree (" +
                                std::to_string(m.max_generator_degree) + ")");
  auto eng = std::make_shared<TruncatedGroebner>(qp.quiver, m.generators,
                                                 TruncatedGroebner::Options{m.cap, provenance});
  eng->run();
  m.engine = eng;

  const Quiver& q = *qp.quiver;
  std::vector<Path> layer, all;
  for (int v = 0; v < q.num_vertices(); ++v) layer.push_back(Path::trivial(v));
  all = layer;
  int len = 0;
  while (!layer.empty() && len < m.cap) {
    std::vector<Path> next;
    for (const auto& w : layer) {
      for (int a : q.arrows_from(w.target(q))) {
        Path x{w.arrows + static_cast<char16_t>(a), -1};
        if (eng->has_no_leading_suffix(x.arrows)) next.push_back(std::move(x));
      }
    }
    ++len;
    layer = std::move(next);
    all.insert(all.end(), layer.begin(), layer.end());
  }
  if (layer.empty() && len + m.max_generator_degree <= m.cap) {
    m.certificate = Certificate::Finite;
    m.d0 = len;
  }
  std::sort(all.begin(), all.end(), natural_less);
  m.basis = std::move(all);
  m.dim = static_cast<int>(m.basis.size());
  for (int i = 0; i < m.dim; ++i) m.index_.emplace(m.basis[static_cast<std::size_t>(i)], i);
  return m;
}

JacobianModel truncated_model(const QuiverWithPotential& qp, const ModelOptions& opt) {
  int ceiling = opt.ceiling.value_or(qp.cap());
  int cap = qp.cap();
  for (;;) {
    JacobianModel m = build_model_at(cap == qp.cap() ? qp : qp.with_cap(cap), opt.track_provenance);
    if (m.finite() || cap + 4 > ceiling) return m;
    cap += 4;
  }
}

AlgebraElement normal_form(const JacobianModel& model, const AlgebraElement& x) {
  Terms t;
  for (const auto& [p, c] : x.terms())
    if (p.length() <= model.cap) t.emplace(p, c);
  Terms r = model.engine->reduce(std::move(t));
  AlgebraElement out(model.qp.quiver, model.cap);
  for (const auto& [p, c] : r) out.add_term(p, c);
  return out;
}

AlgebraElement normal_form_traced(const JacobianModel& model, const AlgebraElement& x, std::vector<Cofactor>& cofactors) {
  Terms t;
  for (const auto& [p, c] : x.terms())
    if (p.length() <= model.cap) t.emplace(p, c);
  std::vector<Cofactor> trace;
  Terms r = model.engine->reduce(std::move(t), &trace);
  cofactors = model.engine->expand_trace(trace);
  AlgebraElement out(model.qp.quiver, model.cap);
  for (const auto& [p, c] : r) out.add_term(p, c);
  return out;
}

int max_basis_length(const JacobianModel& model) {
  if (!model.finite()) throw std::invalid_argument("max_basis_length: model is not certified finite");
  int best = 0;
  for (const auto& p : model.basis) best = std::max(best, p.length());
  return best;
}

bool in_ideal_plus_span(const JacobianModel& model, const AlgebraElement& x, const std::vector<AlgebraElement>& span) {
  VecQ target = model.coords(x);
  if (span.empty()) {
    for (Eigen::Index i = 0; i < target.size(); ++i)
      if (!target(i).is_zero()) return false;
    return true;
  }
  MatQ m(model.dim, static_cast<Eigen::Index>(span.size()));
  for (std::size_t j = 0; j < span.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = model.coords(span[j]);
  VecQ sol;
  return solve(m, target, sol);
}

}  // namespace qpcc
