#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "ihopf/words.hpp"

namespace ihopf {

/// Child-index path from the root; the empty path addresses the root.
using VertexPath = std::vector<int>;

/// Rooted plane tree with vertex colors. The unary color rule — a vertex
/// with exactly one child shares its child's color — is enforced at
/// construction, so every reachable value is a valid colored tree.
class PlanarTree {
public:
  explicit PlanarTree(Color color, std::vector<PlanarTree> children = {});

  Color color() const { return color_; }
  const std::vector<PlanarTree>& children() const { return children_; }
  std::size_t arity() const { return children_.size(); }
  bool is_leaf() const { return children_.empty(); }
  bool is_unary() const { return children_.size() == 1; }
  bool is_nondegenerate() const { return children_.size() >= 2; }

  const PlanarTree& subtree(const VertexPath& path) const;

  /// Canonical order: color first, then children lexicographically.
  bool operator==(const PlanarTree& other) const;
  std::strong_ordering operator<=>(const PlanarTree& other) const;

private:
  Color color_;
  std::vector<PlanarTree> children_;
};

/// Ordered roots, left to right.
using PlanarForest = std::vector<PlanarTree>;

enum class DepthFirstVariant {
  left_up,     // ancestors last, siblings resolved leftward
  right_up,    // ancestors last, siblings resolved rightward
  left_down,   // reverse of left_up
  right_down,  // reverse of right_up
};

enum class VertexFilter { all, nondegenerate };

enum class TreeClass { layered, reduced, simple, ost };

struct TreeClassTag {
  bool layered = false;
  bool proper = false;
  bool simple = false;
  bool reduced = false;
  bool order_reduced = false;
};

// Basic shape data ----------------------------------------------------------

ColorWord leaf_word(const PlanarTree& tree);
ColorWord leaf_word(const PlanarForest& forest);
ColorWord root_word(const PlanarForest& forest);

int depth(const PlanarTree& tree);
int vertex_count(const PlanarTree& tree);
int nonleaf_count(const PlanarTree& tree);
int nondegenerate_count(const PlanarTree& tree);

/// Vertices grouped by level (level = distance from the root), left to
/// right within each level.
std::vector<std::vector<VertexPath>> levels(const PlanarTree& tree);

/// Number of layers of a layered tree: its leaf depth.
int layer_count(const PlanarTree& tree);

// Class predicates ----------------------------------------------------------

bool is_layered(const PlanarTree& tree);

/// Layered and every non-leaf level holds a non-degenerate vertex.
bool is_layered_proper(const PlanarTree& tree);

/// Exactly one non-degenerate vertex per non-leaf level; requires a
/// layered proper tree.
bool is_simple(const PlanarTree& tree);

bool is_reduced(const PlanarTree& tree);

/// No order-preserving contraction available; requires a layered tree.
bool is_order_reduced(const PlanarTree& tree);

/// Order-reduced simple layered proper tree.
bool is_ost(const PlanarTree& tree);

TreeClassTag classify(const PlanarTree& tree);

// Orderings -----------------------------------------------------------------

/// Vertices in the ascending breadth-first order: deeper level first, left
/// to right within a level.
std::vector<VertexPath> breadth_first_order(const PlanarTree& tree,
                                            VertexFilter filter);

/// Non-degenerate vertices in breadth-first order; requires a layered tree.
std::vector<VertexPath> breadth_first_nondegenerate(const PlanarTree& tree);

std::vector<VertexPath> depth_first_order(const PlanarTree& tree,
                                          DepthFirstVariant variant,
                                          VertexFilter filter);

// Structural operators ------------------------------------------------------

/// Reverses child order at every vertex.
PlanarTree reflect(const PlanarTree& tree);
VertexPath reflect_path(const PlanarTree& tree, const VertexPath& path);

/// G sits above F: G's leaves are identified, left to right, with F's
/// roots. Requires leaf_word(G) == root_word(F).
PlanarForest right_join(const PlanarForest& bottom, const PlanarForest& top);

/// One-layer forests whose right join reassembles the layered tree;
/// result[0] is the bottom (leaf) layer.
std::vector<PlanarForest> layers(const PlanarTree& tree);

/// Contracts every singular edge; the result is reduced, with the same
/// leaf word and root color. Idempotent.
PlanarTree contract_singular(const PlanarTree& tree);

/// Non-degenerate vertices at which an order-preserving contraction is
/// allowed: no siblings, no non-degenerate vertex to their right, none to
/// the left of their parent. In breadth-first order. Requires layered.
std::vector<VertexPath> order_contractible_vertices(const PlanarTree& tree);

/// The order contraction at x: x moves into its parent's slot, its
/// offspring hang from fresh unary vertices, and a level left all-unary is
/// spliced out. Requires x order-contractible.
PlanarTree order_contract(const PlanarTree& tree, const VertexPath& x);

/// Identity on simple trees; otherwise moves the breadth-first-first
/// non-simple non-degenerate vertex onto a fresh level of its own.
/// Requires layered proper. order_contract at that vertex undoes it.
PlanarTree canonical_expansion(const PlanarTree& tree);

/// Iterates canonical_expansion to its simple fixed point.
PlanarTree simple_closure(const PlanarTree& tree);

/// Splits the breadth-first sequence of non-degenerate vertices into
/// maximal runs of consecutive pairs related by the right-depth-first
/// order; the last vertex of each run is its right end. Requires layered
/// proper.
std::vector<std::vector<VertexPath>> irreducible_strings(const PlanarTree& tree);

/// The unique order-reduced simple layered tree contracting back to the
/// given reduced tree: the vertex with right-depth-first index i lands on
/// level n-i, leaves on level n, and each edge is bridged by singular
/// edges across the level gap.
PlanarTree expand_to_ost(const PlanarTree& tree);

/// All layered trees reachable from the simple tree E by contracting a
/// subset of its contractible right ends (applied topmost first); in
/// bijection with those subsets.
std::vector<PlanarTree> tree_class_of(const PlanarTree& simple_tree);

// Enumeration ---------------------------------------------------------------

/// Every tree of the class with leaf word u and root color i, exactly
/// once, sorted in the canonical tree order.
std::vector<PlanarTree> enumerate_trees(const ColorWord& u, Color root_color,
                                        int n_colors, TreeClass tree_class);

// Text / term syntax --------------------------------------------------------

/// `c` for a leaf, `c[T1,...,Tk]` for an internal vertex.
std::string tree_term(const PlanarTree& tree);
PlanarTree parse_tree_term(const std::string& text);

}  // namespace ihopf
