#include "qpcc/quiver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qpcc {

int Quiver::add_arrow(std::string name, int source, int target) {
  arrows_.push_back(Arrow{std::move(name), source, target});
  return num_arrows() - 1;
}

std::optional<int> Quiver::find_arrow(const std::string& name) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows_[static_cast<std::size_t>(i)].name == name) return i;
  return std::nullopt;
}

int Quiver::arrow_id(const std::string& name) const {
  auto id = find_arrow(name);
  if (!id) throw std::invalid_argument("unknown arrow '" + name + "'");
  return *id;
}

std::vector<int> Quiver::arrows_from(int v) const {
  std::vector<int> out;
  for (int i = 0; i < num_arrows(); ++i)
    if (arrow(i).source == v) out.push_back(i);
  return out;
}

std::vector<int> Quiver::arrows_into(int v) const {
  std::vector<int> out;
  for (int i = 0; i < num_arrows(); ++i)
    if (arrow(i).target == v) out.push_back(i);
  return out;
}

bool Quiver::has_loop_at(int v) const {
  for (const auto& a : arrows_)
    if (a.source == v && a.target == v) return true;
  return false;
}

bool Quiver::has_two_cycle_through(int v) const {
  for (const auto& a : arrows_) {
    if (a.source != v || a.target == v) continue;
    for (const auto& b : arrows_)
      if (b.source == a.target && b.target == v) return true;
  }
  return false;
}

std::vector<std::string> Quiver::validate() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::vector<int> loops(static_cast<std::size_t>(std::max(n_, 0)), 0);
  for (const auto& a : arrows_) {
    if (a.name.empty()) out.push_back("arrow with empty name");
    if (!seen.insert(a.name).second) out.push_back("duplicate arrow id '" + a.name + "'");
    bool ok = true;
    if (a.source < 0 || a.source >= n_) { out.push_back("dangling source of '" + a.name + "'"); ok = false; }
    if (a.target < 0 || a.target >= n_) { out.push_back("dangling target of '" + a.name + "'"); ok = false; }
    if (ok && a.source == a.target) ++loops[static_cast<std::size_t>(a.source)];
  }
  for (int v = 0; v < n_; ++v)
    if (loops[static_cast<std::size_t>(v)] > 1)
      out.push_back("warning: multiple loops at vertex " + std::to_string(v + 1));
  return out;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.n_ != b.n_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto &x = a.arrows_[i], &y = b.arrows_[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

std::vector<std::string> validate_quiver(const Quiver& q) { return q.validate(); }

Quiver double_quiver(const Quiver& d) {
  Quiver out(d.num_vertices());
  for (const auto& a : d.arrows()) {
    if (a.source == a.target) throw std::invalid_argument("double_quiver: input has a loop '" + a.name + "'");
    out.add_arrow(a.name, a.source, a.target);
  }
  for (const auto& a : d.arrows()) out.add_arrow(a.name + "*", a.target, a.source);
  return out;
}

Path Path::of(std::initializer_list<int> ids) { return from(std::vector<int>(ids)); }

Path Path::from(const std::vector<int>& ids) {
  Path p;
  for (int i : ids) p.arrows.push_back(static_cast<char16_t>(i));
  return p;
}

int Path::source(const Quiver& q) const {
  return arrows.empty() ? vertex : q.arrow(at(0)).source;
}

int Path::target(const Quiver& q) const {
  return arrows.empty() ? vertex : q.arrow(at(length() - 1)).target;
}

bool Path::valid_in(const Quiver& q) const {
  if (arrows.empty()) return vertex >= 0 && vertex < q.num_vertices();
  for (int i = 0; i < length(); ++i)
    if (at(i) < 0 || at(i) >= q.num_arrows()) return false;
  for (int i = 0; i + 1 < length(); ++i)
    if (q.arrow(at(i)).target != q.arrow(at(i + 1)).source) return false;
  return true;
}

std::optional<Path> concat(const Quiver& q, const Path& a, const Path& b) {
  if (a.target(q) != b.source(q)) return std::nullopt;
  if (a.is_trivial()) return b;
  if (b.is_trivial()) return a;
  return Path{a.arrows + b.arrows, -1};
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e" + std::to_string(p.vertex + 1);
  std::string s;
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ' ';
    s += q.arrow(p.at(i)).name;
  }
  return s;
}

Path cyclic_canonical(const Quiver& q, const Path& cycle) {
  if (!cycle.valid_in(q) || !cycle.is_cycle(q))
    throw std::invalid_argument("cyclic_canonical: not a cycle");
  if (cycle.is_trivial()) return cycle;
  Word best = cycle.arrows;
  const std::size_t n = best.size();
  for (std::size_t r = 1; r < n; ++r) {
    Word rot = cycle.arrows.substr(r) + cycle.arrows.substr(0, r);
    if (rot < best) best = std::move(rot);
  }
  return Path{best, -1};
}

}  // namespace qpcc
