#include "qpcc/repmod.hpp"

#include <sstream>
#include <stdexcept>

namespace qpcc {

namespace {

std::vector<int> offsets(const std::vector<int>& dims) {
  std::vector<int> off(dims.size() + 1, 0);
  for (std::size_t i = 0; i < dims.size(); ++i) off[i + 1] = off[i] + dims[i];
  return off;
}

bool all_zero(const MatQ& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

// Basis paths of the model grouped by (start, end): by_start[i][v] and by_end[i][v].
struct PathTable {
  std::vector<std::vector<std::vector<Path>>> from;  // from[i][v]: i -> v
  std::vector<std::vector<std::vector<Path>>> into;  // into[i][v]: v -> i
};

PathTable path_table(const JacobianModel& m) {
  const Quiver& q = *m.quiver();
  const auto n = static_cast<std::size_t>(q.num_vertices());
  PathTable t;
  t.from.assign(n, std::vector<std::vector<Path>>(n));
  t.into.assign(n, std::vector<std::vector<Path>>(n));
  for (const auto& p : m.basis) {
    auto s = static_cast<std::size_t>(p.source(q)), e = static_cast<std::size_t>(p.target(q));
    t.from[s][e].push_back(p);
    t.into[e][s].push_back(p);
  }
  return t;
}

Path join(const Quiver& q, const Path& a, const Path& b) {
  auto r = concat(q, a, b);
  if (!r) throw std::logic_error("paths do not compose");
  return *r;
}

void require_finite(const JacobianModel& m) {
  if (!m.finite()) throw std::domain_error("model is not certified finite");
}

// Unit vectors completing the column span of `base` to F^d, chosen greedily.
MatQ complement(const MatQ& base, int d) {
  MatQ cur = base;
  Eigen::Index r = rank(cur);
  std::vector<int> pick;
  for (int j = 0; j < d; ++j) {
    MatQ trial(d, cur.cols() + 1);
    trial << cur, MatQ::Identity(d, d).col(j);
    Eigen::Index r2 = rank(trial);
    if (r2 > r) {
      cur = trial;
      r = r2;
      pick.push_back(j);
    }
  }
  MatQ out = MatQ::Zero(d, static_cast<Eigen::Index>(pick.size()));
  for (std::size_t k = 0; k < pick.size(); ++k) out(pick[k], static_cast<Eigen::Index>(k)) = 1;
  return out;
}

// Span of the arrow images landing at each vertex.
std::vector<MatQ> radical(const Representation& r) {
  const Quiver& q = *r.quiver;
  std::vector<MatQ> rad;
  for (int v = 0; v < q.num_vertices(); ++v) {
    int cols = 0;
    for (int a : q.arrows_into(v)) cols += static_cast<int>(r.map(a).cols());
    MatQ m(r.dim(v), cols);
    int c = 0;
    for (int a : q.arrows_into(v)) {
      m.middleCols(c, r.map(a).cols()) = r.map(a);
      c += static_cast<int>(r.map(a).cols());
    }
    rad.push_back(m);
  }
  return rad;
}

Representation sum_of(const QuiverPtr& q, const std::vector<Representation>& parts) {
  Representation out = zero_module(q);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

// Injective D(A e_i): dual basis of the paths ending at i.
std::vector<Representation> injectives(const JacobianModel& model, const PathTable& t) {
  const QuiverPtr& qp = model.quiver();
  const Quiver& q = *qp;
  std::vector<Representation> out;
  for (int i = 0; i < q.num_vertices(); ++i) {
    Representation r = zero_module(qp);
    const auto& into = t.into[static_cast<std::size_t>(i)];
    for (int v = 0; v < q.num_vertices(); ++v) r.dims[static_cast<std::size_t>(v)] = static_cast<int>(into[static_cast<std::size_t>(v)].size());
    for (int a = 0; a < q.num_arrows(); ++a) {
      const int s = q.arrow(a).source, e = q.arrow(a).target;
      MatQ m = MatQ::Zero(r.dim(e), r.dim(s));
      const auto& xs = into[static_cast<std::size_t>(e)];
      const auto& qs = into[static_cast<std::size_t>(s)];
      for (std::size_t row = 0; row < xs.size(); ++row) {
        VecQ c = model.coords(AlgebraElement::path(qp, model.cap, join(q, Path::of({a}), xs[row])));
        for (std::size_t col = 0; col < qs.size(); ++col) m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = c(model.basis_index(qs[col]));
      }
      r.maps[static_cast<std::size_t>(a)] = m;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::string dims_to_string(const std::vector<int>& v) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << "]";
  return s.str();
}

Representation zero_module(const QuiverPtr& q) {
  Representation r{q, std::vector<int>(static_cast<std::size_t>(q->num_vertices()), 0), {}};
  for (int a = 0; a < q->num_arrows(); ++a) r.maps.push_back(MatQ(0, 0));
  return r;
}

Representation simple_module(const QuiverPtr& q, int v) {
  Representation r = zero_module(q);
  r.dims.at(static_cast<std::size_t>(v)) = 1;
  for (int a = 0; a < q->num_arrows(); ++a)
    r.maps[static_cast<std::size_t>(a)] = MatQ::Zero(r.dim(q->arrow(a).target), r.dim(q->arrow(a).source));
  return r;
}

Representation string_module(const QuiverPtr& q, const std::vector<int>& walk) {
  Representation r = zero_module(q);
  std::vector<int> slot;  // index of each walk entry inside its vertex space
  for (int v : walk) slot.push_back(r.dims.at(static_cast<std::size_t>(v))++);
  for (int a = 0; a < q->num_arrows(); ++a)
    r.maps[static_cast<std::size_t>(a)] = MatQ::Zero(r.dim(q->arrow(a).target), r.dim(q->arrow(a).source));
  for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
    int found = -1, count = 0;
    for (int a : q->arrows_from(walk[k]))
      if (q->arrow(a).target == walk[k + 1]) {
        found = a;
        ++count;
      }
    if (count != 1) throw std::invalid_argument("string module: no unique arrow between consecutive vertices");
    r.maps[static_cast<std::size_t>(found)](slot[k + 1], slot[k]) = 1;
  }
  return r;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.quiver != b.quiver && !(*a.quiver == *b.quiver)) throw std::invalid_argument("direct sum over different quivers");
  Representation r = zero_module(a.quiver);
  const Quiver& q = *a.quiver;
  for (int v = 0; v < q.num_vertices(); ++v) r.dims[static_cast<std::size_t>(v)] = a.dim(v) + b.dim(v);
  for (int x = 0; x < q.num_arrows(); ++x) {
    const auto& A = a.map(x);
    const auto& B = b.map(x);
    MatQ m = MatQ::Zero(A.rows() + B.rows(), A.cols() + B.cols());
    m.topLeftCorner(A.rows(), A.cols()) = A;
    m.bottomRightCorner(B.rows(), B.cols()) = B;
    r.maps[static_cast<std::size_t>(x)] = m;
  }
  return r;
}

RepresentationP reduce_mod(const Representation& r, std::uint32_t p) {
  RepresentationP out{r.quiver, r.dims, {}};
  for (const auto& m : r.maps) {
    MatP x(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) x(i, j) = reduce_mod(m(i, j), p);
    out.maps.push_back(std::move(x));
  }
  return out;
}

MatQ path_matrix(const Representation& r, const Path& p) {
  if (p.is_trivial()) return MatQ::Identity(r.dim(p.vertex), r.dim(p.vertex));
  MatQ m = r.map(p.at(0));
  for (int i = 1; i < p.length(); ++i) m = r.map(p.at(i)) * m;
  return m;
}

MatQ element_matrix(const Representation& r, const AlgebraElement& x) {
  const Quiver& q = *r.quiver;
  if (x.is_zero()) throw std::invalid_argument("element_matrix of zero needs endpoints");
  const Path& first = x.terms().begin()->first;
  const int s = first.source(q), t = first.target(q);
  MatQ m = MatQ::Zero(r.dim(t), r.dim(s));
  for (const auto& [p, c] : x.terms()) {
    if (p.source(q) != s || p.target(q) != t) throw std::invalid_argument("element_matrix: terms with different endpoints");
    m += path_matrix(r, p) * c;
  }
  return m;
}

Validation rep_validate(const Representation& r, const JacobianModel& model) {
  const Quiver& q = *model.quiver();
  auto fail = [](std::string s) { return Validation{false, std::move(s)}; };
  if (!r.quiver || !(*r.quiver == q)) return fail("representation over a different quiver");
  if (static_cast<int>(r.dims.size()) != q.num_vertices()) return fail("dimension vector has the wrong length");
  if (static_cast<int>(r.maps.size()) != q.num_arrows()) return fail("wrong number of arrow matrices");
  for (int d : r.dims)
    if (d < 0) return fail("negative dimension");
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& m = r.map(a);
    if (m.rows() != r.dim(q.arrow(a).target) || m.cols() != r.dim(q.arrow(a).source))
      return fail("matrix of " + q.arrow(a).name + " has the wrong shape");
  }
  const int n = r.total_dim();
  if (n > 0) {
    auto off = offsets(r.dims);
    MatQ big = MatQ::Zero(n, n);
    for (int a = 0; a < q.num_arrows(); ++a) {
      const auto& m = r.map(a);
      big.block(off[static_cast<std::size_t>(q.arrow(a).target)], off[static_cast<std::size_t>(q.arrow(a).source)], m.rows(), m.cols()) = m;
    }
    MatQ pw = big;
    for (int i = 1; i < n && !all_zero(pw); ++i) pw = pw * big;
    if (!all_zero(pw)) return fail("arrows do not act nilpotently");
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& g = model.generators.at(static_cast<std::size_t>(a));
    if (g.is_zero()) continue;
    if (!all_zero(element_matrix(r, g))) return fail("relation d(" + q.arrow(a).name + ")W = " + g.to_string() + " does not vanish");
  }
  return {};
}

std::vector<Representation> projectives(const JacobianModel& model) {
  require_finite(model);
  const QuiverPtr& qp = model.quiver();
  const Quiver& q = *qp;
  PathTable t = path_table(model);
  std::vector<Representation> out;
  for (int i = 0; i < q.num_vertices(); ++i) {
    const auto& from = t.from[static_cast<std::size_t>(i)];
    Representation r = zero_module(qp);
    for (int v = 0; v < q.num_vertices(); ++v) r.dims[static_cast<std::size_t>(v)] = static_cast<int>(from[static_cast<std::size_t>(v)].size());
    for (int a = 0; a < q.num_arrows(); ++a) {
      const int s = q.arrow(a).source, e = q.arrow(a).target;
      MatQ m = MatQ::Zero(r.dim(e), r.dim(s));
      const auto& src = from[static_cast<std::size_t>(s)];
      const auto& dst = from[static_cast<std::size_t>(e)];
      for (std::size_t col = 0; col < src.size(); ++col) {
        VecQ c = model.coords(AlgebraElement::path(qp, model.cap, join(q, src[col], Path::of({a}))));
        for (std::size_t row = 0; row < dst.size(); ++row)
          m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = c(model.basis_index(dst[row]));
      }
      r.maps[static_cast<std::size_t>(a)] = m;
    }
    out.push_back(std::move(r));
  }
  return out;
}

Representation submodule(const Representation& r, const std::vector<MatQ>& basis) {
  const Quiver& q = *r.quiver;
  Representation out = zero_module(r.quiver);
  for (int v = 0; v < q.num_vertices(); ++v) out.dims[static_cast<std::size_t>(v)] = static_cast<int>(basis.at(static_cast<std::size_t>(v)).cols());
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int s = q.arrow(a).source, e = q.arrow(a).target;
    const MatQ& bs = basis[static_cast<std::size_t>(s)];
    const MatQ& be = basis[static_cast<std::size_t>(e)];
    MatQ img = r.map(a) * bs;
    MatQ m(be.cols(), bs.cols());
    for (Eigen::Index j = 0; j < img.cols(); ++j) {
      VecQ x;
      if (!solve<Rational>(be, img.col(j), x)) throw std::logic_error("submodule: subspace not closed under " + q.arrow(a).name);
      m.col(j) = x;
    }
    out.maps[static_cast<std::size_t>(a)] = m;
  }
  return out;
}

Presentation min_presentation(const Representation& m, const JacobianModel& model) {
  require_finite(model);
  const QuiverPtr& qp = model.quiver();
  const Quiver& q = *qp;
  const int n = q.num_vertices();
  PathTable t = path_table(model);
  std::vector<Representation> proj = projectives(model);

  Presentation pr;
  pr.a.assign(static_cast<std::size_t>(n), 0);
  pr.b.assign(static_cast<std::size_t>(n), 0);
  auto rad = radical(m);
  for (int v = 0; v < n; ++v) {
    MatQ c = complement(column_basis(rad[static_cast<std::size_t>(v)]), m.dim(v));
    pr.a[static_cast<std::size_t>(v)] = static_cast<int>(c.cols());
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      pr.p0_vertices.push_back(v);
      pr.p0_generators.push_back(c.col(j));
    }
  }
  std::vector<Representation> parts;
  for (int v : pr.p0_vertices) parts.push_back(proj[static_cast<std::size_t>(v)]);
  pr.p0 = sum_of(qp, parts);

  // cover P0 -> M per vertex: summand s, basis path p |-> M(p) m_s
  std::vector<MatQ> pi;
  for (int v = 0; v < n; ++v) {
    MatQ x(m.dim(v), pr.p0.dim(v));
    int col = 0;
    for (std::size_t s = 0; s < pr.p0_vertices.size(); ++s) {
      for (const auto& p : t.from[static_cast<std::size_t>(pr.p0_vertices[s])][static_cast<std::size_t>(v)])
        x.col(col++) = path_matrix(m, p) * pr.p0_generators[s];
    }
    if (rank(x) != m.dim(v)) throw std::logic_error("projective cover is not surjective");
    pi.push_back(x);
  }
  auto moff = offsets(m.dims), poff = offsets(pr.p0.dims);
  pr.cover = MatQ::Zero(m.total_dim(), pr.p0.total_dim());
  for (int v = 0; v < n; ++v)
    pr.cover.block(moff[static_cast<std::size_t>(v)], poff[static_cast<std::size_t>(v)], m.dim(v), pr.p0.dim(v)) = pi[static_cast<std::size_t>(v)];

  std::vector<MatQ> kb;
  for (int v = 0; v < n; ++v) kb.push_back(nullspace(pi[static_cast<std::size_t>(v)]));
  Representation k = submodule(pr.p0, kb);
  auto krad = radical(k);
  for (int v = 0; v < n; ++v) {
    MatQ c = complement(column_basis(krad[static_cast<std::size_t>(v)]), k.dim(v));
    pr.b[static_cast<std::size_t>(v)] = static_cast<int>(c.cols());
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      pr.p1_vertices.push_back(v);
      pr.p1_generators.push_back(kb[static_cast<std::size_t>(v)] * c.col(j));
    }
  }
  return pr;
}

std::vector<int> g_vector(const Representation& m, const JacobianModel& model) {
  Presentation p = min_presentation(m, model);
  std::vector<int> g(p.a.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = p.a[i] - p.b[i];
  return g;
}

Representation tau(const Representation& m, const JacobianModel& model) {
  require_finite(model);
  const QuiverPtr& qp = model.quiver();
  const Quiver& q = *qp;
  const int n = q.num_vertices();
  Presentation pr = min_presentation(m, model);
  if (pr.p1_vertices.empty()) return zero_module(qp);
  PathTable t = path_table(model);
  auto inj = injectives(model, t);

  std::vector<Representation> p1parts;
  for (int v : pr.p1_vertices) p1parts.push_back(inj[static_cast<std::size_t>(v)]);
  Representation nu1 = sum_of(qp, p1parts);
  std::vector<Representation> p0parts;
  for (int v : pr.p0_vertices) p0parts.push_back(inj[static_cast<std::size_t>(v)]);
  Representation nu0 = sum_of(qp, p0parts);

  // r[s][l] in e_{i_s} A e_{j_l}: the P_{i_s} part of the l-th relation generator
  const std::size_t S = pr.p0_vertices.size(), L = pr.p1_vertices.size();
  std::vector<std::vector<AlgebraElement>> r(S);
  for (std::size_t l = 0; l < L; ++l) {
    const int j = pr.p1_vertices[l];
    int pos = 0;
    for (std::size_t s = 0; s < S; ++s) {
      AlgebraElement x(qp, model.cap);
      for (const auto& p : t.from[static_cast<std::size_t>(pr.p0_vertices[s])][static_cast<std::size_t>(j)]) {
        const Rational& c = pr.p1_generators[l](pos++);
        if (!c.is_zero()) x.add_term(p, c);
      }
      r[s].push_back(std::move(x));
    }
  }

  std::vector<MatQ> kernel;
  for (int v = 0; v < n; ++v) {
    MatQ f = MatQ::Zero(nu0.dim(v), nu1.dim(v));
    int col0 = 0;
    for (std::size_t l = 0; l < L; ++l) {
      const auto& qs = t.into[static_cast<std::size_t>(pr.p1_vertices[l])][static_cast<std::size_t>(v)];
      int row0 = 0;
      for (std::size_t s = 0; s < S; ++s) {
        const auto& ys = t.into[static_cast<std::size_t>(pr.p0_vertices[s])][static_cast<std::size_t>(v)];
        if (!r[s][l].is_zero()) {
          for (std::size_t yi = 0; yi < ys.size(); ++yi) {
            VecQ c = model.coords(nc_mul(AlgebraElement::path(qp, model.cap, ys[yi]), r[s][l]));
            for (std::size_t qi = 0; qi < qs.size(); ++qi)
              f(row0 + static_cast<int>(yi), col0 + static_cast<int>(qi)) = c(model.basis_index(qs[qi]));
          }
        }
        row0 += static_cast<int>(ys.size());
      }
      col0 += static_cast<int>(qs.size());
    }
    kernel.push_back(nullspace(f));
  }
  return submodule(nu1, kernel);
}

int hom_dim(const Representation& m, const Representation& n) {
  const Quiver& q = *m.quiver;
  std::vector<int> uoff(static_cast<std::size_t>(q.num_vertices()) + 1, 0);
  for (int v = 0; v < q.num_vertices(); ++v) uoff[static_cast<std::size_t>(v) + 1] = uoff[static_cast<std::size_t>(v)] + n.dim(v) * m.dim(v);
  const int unknowns = uoff.back();
  if (unknowns == 0) return 0;
  int rows = 0;
  for (int a = 0; a < q.num_arrows(); ++a) rows += n.dim(q.arrow(a).target) * m.dim(q.arrow(a).source);
  MatQ sys = MatQ::Zero(rows, unknowns);
  // F_v is dN_v x dM_v, stored column-major at uoff[v]
  auto var = [&](int v, int i, int j) { return uoff[static_cast<std::size_t>(v)] + j * n.dim(v) + i; };
  int row = 0;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int s = q.arrow(a).source, t = q.arrow(a).target;
    const MatQ& Na = n.map(a);
    const MatQ& Ma = m.map(a);
    for (int i = 0; i < n.dim(t); ++i)
      for (int j = 0; j < m.dim(s); ++j, ++row) {
        for (int k = 0; k < n.dim(s); ++k) sys(row, var(s, k, j)) += Na(i, k);
        for (int k = 0; k < m.dim(t); ++k) sys(row, var(t, i, k)) -= Ma(k, j);
      }
  }
  return unknowns - static_cast<int>(rank(sys));
}

bool is_tau_rigid(const Representation& m, const JacobianModel& model) {
  Representation t = tau(m, model);
  if (t.is_zero()) return true;
  return hom_dim(m, t) == 0;
}

}  // namespace qpcc
