#ifndef CASC_CASCADE_HPP
#define CASC_CASCADE_HPP

#include <vector>

#include "casc/rootsys.hpp"

namespace casc {

struct CascadeNode {
  int root_index;  // into rs.roots, always a positive root
  int parent;      // node index, -1 for top-level components
  int depth;       // 0 at the top
};

/// Recursion tree of the cascade: each node carries the highest root of the
/// component it was extracted from; children come from the orthogonal
/// subsystem inside that component.
struct CascadeTree {
  std::vector<CascadeNode> nodes;  // construction order (depth-first)
  std::size_t m() const { return nodes.size(); }
};

/// The cascade as an ordered set of positive-root indices.
struct CascadeSet {
  std::vector<int> root_indices;
  std::size_t m() const { return root_indices.size(); }

  static CascadeSet from_tree(const CascadeTree& t);
};

/// True iff neither a+b nor a-b is a root. Throws on equal or opposite
/// inputs (strong orthogonality is only defined for a != +-b).
bool strongly_orthogonal(int a, int b, const RootSystem& rs);

/// Cascade recursion: per irreducible component adjoin its highest root and
/// recurse on the roots of the component orthogonal to it. Components are
/// processed depth-first, ordered by their lowest-index simple-root support;
/// `reverse_component_order` flips that order (the resulting set is the
/// same, used to test order independence).
CascadeTree compute_cascade(const RootSystem& rs,
                            bool reverse_component_order = false);

/// Exhaustive branch-and-bound maximum over sets of pairwise strongly
/// orthogonal positive roots. Throws std::invalid_argument when the rank
/// exceeds `rank_limit`.
std::size_t max_strongly_orthogonal_bruteforce(const RootSystem& rs,
                                               std::size_t rank_limit = 4);

/// Checks that the product of the cascade reflections equals the longest
/// element and that the reflections pairwise commute.
bool verify_w0_product(const RootSystem& rs, const CascadeSet& cs);

/// True iff the cascade roots are linearly independent.
bool cascade_independence(const RootSystem& rs, const CascadeSet& cs);

}  // namespace casc

#endif
