#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>

#include "qpcc/repmod.hpp"

namespace qpcc {

namespace {

// Small dense linear algebra over F_p on plain integers; this is the hot loop
// of the point counts, so it avoids the generic scalar type.
using Row = std::vector<std::uint32_t>;

struct Fp {
  std::uint32_t p;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>(std::uint64_t{a} * b % p); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint32_t inv(std::uint32_t a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }

  // In-place RREF; zero rows removed.
  void rref(std::vector<Row>& rows, std::size_t ncols) const {
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
      std::size_t piv = r;
      while (piv < rows.size() && rows[piv][c] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[r]);
      const std::uint32_t iv = inv(rows[r][c]);
      for (auto& x : rows[r]) x = mul(x, iv);
      for (std::size_t o = 0; o < rows.size(); ++o) {
        if (o == r || rows[o][c] == 0) continue;
        const std::uint32_t f = rows[o][c];
        for (std::size_t j = c; j < ncols; ++j) rows[o][j] = sub(rows[o][j], mul(f, rows[r][j]));
      }
      ++r;
    }
    rows.resize(r);
  }

  // Basis of {x : rows . x = 0}.
  std::vector<Row> nullspace(std::vector<Row> rows, std::size_t ncols) const {
    rref(rows, ncols);
    std::vector<std::size_t> pivcol;
    for (const auto& r : rows) {
      std::size_t c = 0;
      while (r[c] == 0) ++c;
      pivcol.push_back(c);
    }
    std::vector<Row> out;
    for (std::size_t f = 0; f < ncols; ++f) {
      if (std::find(pivcol.begin(), pivcol.end(), f) != pivcol.end()) continue;
      Row x(ncols, 0);
      x[f] = 1;
      for (std::size_t i = 0; i < rows.size(); ++i) x[pivcol[i]] = sub(0, rows[i][f]);
      out.push_back(std::move(x));
    }
    return out;
  }

  // x reduced against RREF rows (pivot entries cleared).
  Row reduce(Row x, const std::vector<Row>& rref_rows) const {
    for (const auto& r : rref_rows) {
      std::size_t c = 0;
      while (r[c] == 0) ++c;
      if (x[c] == 0) continue;
      const std::uint32_t f = x[c];
      for (std::size_t j = c; j < x.size(); ++j) x[j] = sub(x[j], mul(f, r[j]));
    }
    return x;
  }
};

struct ModuleFp {
  int nv = 0;
  std::vector<int> dims;
  struct ArrowM {
    int s, t;
    std::vector<Row> m;  // d_t rows of length d_s
  };
  std::vector<ArrowM> arrows;
};

using Sub = std::vector<std::vector<Row>>;  // RREF basis per vertex

std::vector<std::uint32_t> key_of(const Sub& u) {
  std::vector<std::uint32_t> k;
  for (const auto& v : u) {
    k.push_back(static_cast<std::uint32_t>(v.size()));
    for (const auto& r : v) k.insert(k.end(), r.begin(), r.end());
  }
  return k;
}

std::map<DimVector, long long> count_fp(const ModuleFp& m, const Fp& f) {
  std::map<DimVector, long long> tally;
  std::vector<Sub> layer{Sub(static_cast<std::size_t>(m.nv))};
  const int total = [&] {
    int s = 0;
    for (int d : m.dims) s += d;
    return s;
  }();
  for (int level = 0; level <= total && !layer.empty(); ++level) {
    std::vector<Sub> next;
    std::set<std::vector<std::uint32_t>> next_keys;
    for (const auto& u : layer) {
      DimVector e;
      for (const auto& v : u) e.push_back(static_cast<int>(v.size()));
      ++tally[e];
      // annihilators of U_t, used to test A_a x in U_t
      std::vector<std::vector<Row>> ann(static_cast<std::size_t>(m.nv));
      for (int v = 0; v < m.nv; ++v)
        ann[static_cast<std::size_t>(v)] = f.nullspace(u[static_cast<std::size_t>(v)], static_cast<std::size_t>(m.dims[static_cast<std::size_t>(v)]));
      for (int v = 0; v < m.nv; ++v) {
        const auto dv = static_cast<std::size_t>(m.dims[static_cast<std::size_t>(v)]);
        if (u[static_cast<std::size_t>(v)].size() == dv) continue;
        // S_v = {x : C_t A_a x = 0 for every arrow a out of v}
        std::vector<Row> cond;
        for (const auto& a : m.arrows) {
          if (a.s != v) continue;
          for (const auto& c : ann[static_cast<std::size_t>(a.t)]) {
            Row r(dv, 0);
            for (std::size_t i = 0; i < c.size(); ++i) {
              if (c[i] == 0) continue;
              for (std::size_t j = 0; j < dv; ++j) r[j] = (r[j] + f.mul(c[i], a.m[i][j])) % f.p;
            }
            cond.push_back(std::move(r));
          }
        }
        std::vector<Row> sv = f.nullspace(cond, dv);
        // complement of U_v inside S_v
        std::vector<Row> basis = u[static_cast<std::size_t>(v)], extra;
        for (auto& x : sv) {
          Row y = f.reduce(x, basis);
          if (std::all_of(y.begin(), y.end(), [](std::uint32_t z) { return z == 0; })) continue;
          basis.push_back(y);
          f.rref(basis, dv);
          extra.push_back(std::move(y));
        }
        const std::size_t k = extra.size();
        if (k == 0) continue;
        // projective points of span(extra): first nonzero coefficient is 1
        std::vector<std::uint32_t> c(k, 0);
        for (std::size_t lead = 0; lead < k; ++lead) {
          std::fill(c.begin(), c.end(), 0);
          c[lead] = 1;
          for (;;) {
            Row x(dv, 0);
            for (std::size_t i = 0; i < k; ++i)
              if (c[i])
                for (std::size_t j = 0; j < dv; ++j) x[j] = (x[j] + f.mul(c[i], extra[i][j])) % f.p;
            Sub w = u;
            w[static_cast<std::size_t>(v)].push_back(std::move(x));
            f.rref(w[static_cast<std::size_t>(v)], dv);
            auto key = key_of(w);
            if (next_keys.insert(key).second) next.push_back(std::move(w));
            std::size_t i = lead + 1;
            for (; i < k; ++i) {
              if (++c[i] < f.p) break;
              c[i] = 0;
            }
            if (i == k) break;
          }
        }
      }
    }
    layer = std::move(next);
  }
  return tally;
}

ModuleFp to_fp(const RepresentationP& r) {
  ModuleFp m;
  const Quiver& q = *r.quiver;
  m.nv = q.num_vertices();
  m.dims = r.dims;
  for (int a = 0; a < q.num_arrows(); ++a) {
    ModuleFp::ArrowM x{q.arrow(a).source, q.arrow(a).target, {}};
    const auto& mat = r.map(a);
    for (Eigen::Index i = 0; i < mat.rows(); ++i) {
      Row row(static_cast<std::size_t>(mat.cols()));
      for (Eigen::Index j = 0; j < mat.cols(); ++j) row[static_cast<std::size_t>(j)] = mat(i, j).value();
      x.m.push_back(std::move(row));
    }
    m.arrows.push_back(std::move(x));
  }
  return m;
}

int local_bound(const DimVector& d, const DimVector& e) {
  int s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += e[i] * (d[i] - e[i]);
  return s;
}

}  // namespace

std::map<DimVector, long long> submodule_counts(const RepresentationP& r, std::uint32_t p, int max_dim) {
  int total = 0;
  for (int d : r.dims) total += d;
  if (total > max_dim)
    throw std::domain_error("submodule enumeration refused: total dimension " + std::to_string(total) +
                            " exceeds the bound " + std::to_string(max_dim));
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
  for (const auto& m : r.maps)
    for (Eigen::Index i = 0; i < m.size(); ++i)
      if (m.data()[i].modulus() != 0 && m.data()[i].modulus() != p)
        throw std::invalid_argument("matrix entries live in a different field");
  return count_fp(to_fp(r), Fp{p});
}

std::map<DimVector, long long> submodule_counts(const Representation& r, std::uint32_t p, int max_dim) {
  return submodule_counts(reduce_mod(r, p), p, max_dim);
}

int grass_degree_bound(const DimVector& d) {
  int s = 0;
  for (int x : d) s += (x / 2) * (x - x / 2);
  return s;
}

std::vector<std::uint32_t> sampling_primes(const Representation& r, int count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 5; static_cast<int>(out.size()) < count; ++p) {
    if (!is_prime(p)) continue;
    bool ok = true;
    for (const auto& m : r.maps)
      for (Eigen::Index i = 0; i < m.size() && ok; ++i)
        ok = mpz_class(m.data()[i].raw().get_den() % p) != 0;
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<GrassCount> grassmannian_table(const Representation& r, const GrassOptions& opt) {
  if (r.total_dim() > opt.max_dim)
    throw std::domain_error("submodule enumeration refused: total dimension " + std::to_string(r.total_dim()) +
                            " exceeds the bound " + std::to_string(opt.max_dim));
  const int bound = grass_degree_bound(r.dims);
  std::vector<std::uint32_t> primes = opt.primes;
  if (primes.empty()) primes = sampling_primes(r, bound + 1 + opt.check_primes);
  if (static_cast<int>(primes.size()) < bound + 1)
    throw std::invalid_argument("need at least " + std::to_string(bound + 1) + " primes for interpolation");

  std::vector<std::map<DimVector, long long>> counts(primes.size());
  auto job = [&](std::size_t i) { return submodule_counts(r, primes[i], opt.max_dim); };
  if (opt.parallel) {
    std::vector<std::future<std::map<DimVector, long long>>> fs;
    for (std::size_t i = 0; i < primes.size(); ++i) fs.push_back(std::async(std::launch::async, job, i));
    for (std::size_t i = 0; i < primes.size(); ++i) counts[i] = fs[i].get();
  } else {
    for (std::size_t i = 0; i < primes.size(); ++i) counts[i] = job(i);
  }

  std::set<DimVector> es;
  for (const auto& c : counts)
    for (const auto& [e, n] : c) es.insert(e);

  std::vector<GrassCount> out;
  for (const auto& e : es) {
    GrassCount g;
    g.e = e;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      auto it = counts[i].find(e);
      g.samples.emplace_back(primes[i], it == counts[i].end() ? 0 : it->second);
    }
    const int deg = local_bound(r.dims, e);
    const auto npts = static_cast<Eigen::Index>(deg + 1);
    MatQ v(npts, npts);
    VecQ y(npts);
    for (Eigen::Index i = 0; i < npts; ++i) {
      Rational x = static_cast<long>(g.samples[static_cast<std::size_t>(i)].first), pw = 1;
      for (Eigen::Index j = 0; j < npts; ++j) {
        v(i, j) = pw;
        pw *= x;
      }
      y(i) = Rational(static_cast<long>(g.samples[static_cast<std::size_t>(i)].second));
    }
    VecQ c;
    if (!solve<Rational>(v, y, c)) throw std::logic_error("interpolation system is singular");
    auto eval = [&](const Rational& x) {
      Rational s = 0, pw = 1;
      for (Eigen::Index j = 0; j < c.size(); ++j) {
        s += c(j) * pw;
        pw *= x;
      }
      return s;
    };
    for (std::size_t i = static_cast<std::size_t>(npts); i < g.samples.size(); ++i) {
      Rational pred = eval(Rational(static_cast<long>(g.samples[i].first)));
      if (pred != Rational(static_cast<long>(g.samples[i].second)))
        throw PolynomialityError("point counts for e=" + dims_to_string(e) + " are not polynomial: q=" +
                                 std::to_string(g.samples[i].first) + " gives " + std::to_string(g.samples[i].second) +
                                 ", interpolant predicts " + pred.to_string());
    }
    for (Eigen::Index j = 0; j < c.size(); ++j) g.poly.push_back(c(j));
    while (!g.poly.empty() && g.poly.back().is_zero()) g.poly.pop_back();
    g.chi = eval(1);
    out.push_back(std::move(g));
  }
  return out;
}

Rational gr_euler(const Representation& r, const DimVector& e, const GrassOptions& opt) {
  if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) return 1;
  for (const auto& g : grassmannian_table(r, opt))
    if (g.e == e) return g.chi;
  return 0;
}

}  // namespace qpcc
