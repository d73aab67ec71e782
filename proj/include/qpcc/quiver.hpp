#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qpcc {

/// Vertices are 0-based internally and printed 1-based.
struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int vertices) : n_(vertices) {}

  int num_vertices() const { return n_; }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int id) const { return arrows_.at(static_cast<std::size_t>(id)); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// Appends an arrow; the arrow's rank in all path orders is its index.
  /// Does not check anything: use validate() for defects.
  int add_arrow(std::string name, int source, int target);

  std::optional<int> find_arrow(const std::string& name) const;
  int arrow_id(const std::string& name) const;  // throws std::invalid_argument

  std::vector<int> arrows_from(int v) const;
  std::vector<int> arrows_into(int v) const;
  bool has_loop_at(int v) const;
  bool has_two_cycle_through(int v) const;

  /// Human-readable defects; empty means well formed. Multiple loops at a
  /// vertex are reported as a warning entry prefixed "warning:".
  std::vector<std::string> validate() const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

std::vector<std::string> validate_quiver(const Quiver& q);

/// Adds a* : t(a) -> s(a) for every arrow, after all original arrows.
Quiver double_quiver(const Quiver& d);

/// A trivial path e_v or a nonempty composable arrow word.
/// Arrow ids are stored as char16_t so that words get std::basic_string's
/// small-buffer storage, substr and lexicographic compare for free.
using Word = std::u16string;

struct Path {
  Word arrows;
  int vertex = -1;  // only meaningful when arrows is empty

  static Path trivial(int v) { return Path{Word{}, v}; }
  static Path of(std::initializer_list<int> ids);
  static Path from(const std::vector<int>& ids);

  int length() const { return static_cast<int>(arrows.size()); }
  bool is_trivial() const { return arrows.empty(); }
  int at(int i) const { return static_cast<int>(arrows[static_cast<std::size_t>(i)]); }
  int source(const Quiver& q) const;
  int target(const Quiver& q) const;
  bool is_cycle(const Quiver& q) const { return source(q) == target(q); }
  bool valid_in(const Quiver& q) const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.arrows == b.arrows && (!a.arrows.empty() || a.vertex == b.vertex);
  }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
};

/// Concatenation pq (p first). Returns nullopt if t(p) != s(q).
std::optional<Path> concat(const Quiver& q, const Path& a, const Path& b);

/// Names joined by spaces; trivial paths print as e<v>.
std::string path_to_string(const Quiver& q, const Path& p);

/// Total order with the leading path first: shorter paths lead; among equal
/// lengths the lexicographically larger arrow word leads. Trivial paths tie
/// on length 0 and are ordered by vertex.
struct LeadFirst {
  bool operator()(const Path& a, const Path& b) const {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows > b.arrows;
    if (a.arrows.empty()) return a.vertex < b.vertex;
    return false;
  }
};

/// Minimal rotation of a cycle in the arrow order (a < b < E by creation).
Path cyclic_canonical(const Quiver& q, const Path& cycle);

}  // namespace qpcc
