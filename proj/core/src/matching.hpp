#ifndef FST_SRC_MATCHING_HPP
#define FST_SRC_MATCHING_HPP

#include <vector>

#include "fst/core.hpp"

namespace fst::detail {

/// Bipartite-matching view of a monomial's factor multiset under `precedes`.
/// Kuhn's algorithm over the comparability DAG gives the minimum chain cover
/// (Dilworth) and, via Koenig's construction, a maximum antichain. Vertices
/// are processed in increasing variable order so results are deterministic.
class ChainPoset {
 public:
  explicit ChainPoset(const Monomial& m);

  int size() const { return static_cast<int>(elems_.size()); }
  int min_chain_cover() const { return size() - matched_; }

  std::vector<Variable> max_antichain() const;
  /// Partition into min_chain_cover() chains; each chain ascending in
  /// `precedes` (equivalently in the variable order).
  std::vector<std::vector<Variable>> chains() const;

 private:
  bool augment(int u, std::vector<char>& used);

  std::vector<Variable> elems_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_, match_right_;
  int matched_ = 0;
};

}  // namespace fst::detail

#endif  // FST_SRC_MATCHING_HPP
