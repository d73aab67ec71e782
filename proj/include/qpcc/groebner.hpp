#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qpcc/algebra.hpp"

namespace qpcc {

/// c * left * generator[gen] * right, with words as arrow sequences (either
/// side may be empty).
struct Cofactor {
  Rational c;
  Word left;
  int gen = 0;
  Word right;
};

/// Noncommutative Groebner basis of the two-sided ideal generated by a set of
/// elements of K<Q>/m^{D+1}, under the local order where shorter paths lead.
/// Overlaps longer than D are zero and never formed, so the computation is
/// finite. Elements are kept monic.
class TruncatedGroebner {
 public:
  struct Options {
    int cap = 0;
    bool track_provenance = false;
  };

  struct Element {
    Terms terms;                  // leading term first, coefficient 1
    std::vector<Cofactor> prov;   // in terms of the input generators
    bool active = true;
    const Path& lead() const { return terms.begin()->first; }
  };

  struct Stats {
    std::size_t overlaps = 0;
    std::size_t reductions_to_zero = 0;
    std::size_t elements_added = 0;
  };

  TruncatedGroebner(QuiverPtr q, std::vector<AlgebraElement> generators, Options opt);

  void run();

  int cap() const { return opt_.cap; }
  const QuiverPtr& quiver() const { return q_; }
  const std::vector<AlgebraElement>& generators() const { return gens_; }
  const std::vector<Element>& elements() const { return elems_; }
  std::vector<Path> leading_words() const;
  const Stats& stats() const { return stats_; }

  /// Full reduction of a linear combination of paths; `trace` receives the
  /// subtracted multiples of basis elements (indices into elements()).
  Terms reduce(Terms f, std::vector<Cofactor>* trace = nullptr) const;

  /// Rewrites a trace over basis elements as cofactors of the generators.
  std::vector<Cofactor> expand_trace(const std::vector<Cofactor>& trace) const;

  /// True iff no leading word is a factor of w.
  bool is_standard(const Word& w) const;
  /// True iff no leading word is a suffix of w (w's prefix assumed standard).
  bool has_no_leading_suffix(const Word& w) const;

 private:
  struct Match {
    std::size_t pos;
    std::size_t len;
    int elem;
  };
  std::optional<Match> find_factor(const Word& w) const;
  void trie_insert(const Word& w, int elem);
  void trie_erase(const Word& w);
  int add_element(Element e);

  QuiverPtr q_;
  std::vector<AlgebraElement> gens_;
  Options opt_;
  std::vector<Element> elems_;
  // trie over leading words: node -> child per arrow (-1 none), terminal element
  std::vector<std::vector<int>> child_;
  std::vector<int> terminal_;
  Stats stats_;
  bool done_ = false;
};

/// sum c * left * x * right, truncated at cap. Useful to re-expand cofactors.
AlgebraElement expand_cofactors(const std::vector<AlgebraElement>& gens, const std::vector<Cofactor>& cf);

}  // namespace qpcc
