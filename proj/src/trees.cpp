#include "ihopf/trees.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace ihopf {

PlanarTree::PlanarTree(Color color, std::vector<PlanarTree> children)
    : color_(color), children_(std::move(children)) {
  if (color_ < 1) throw std::invalid_argument("vertex color must be >= 1");
  if (children_.size() == 1 && children_[0].color() != color_)
    throw std::invalid_argument("unary vertex must share its child's color");
}

bool PlanarTree::operator==(const PlanarTree& other) const {
  return color_ == other.color_ && children_ == other.children_;
}

std::strong_ordering PlanarTree::operator<=>(const PlanarTree& other) const {
  if (auto c = color_ <=> other.color_; c != 0) return c;
  for (std::size_t j = 0; j < std::min(children_.size(), other.children_.size()); ++j)
    if (auto c = children_[j] <=> other.children_[j]; c != 0) return c;
  return children_.size() <=> other.children_.size();
}

const PlanarTree& PlanarTree::subtree(const VertexPath& path) const {
  const PlanarTree* node = this;
  for (int step : path) {
    if (step < 0 || step >= static_cast<int>(node->children_.size()))
      throw std::out_of_range("vertex path leaves the tree");
    node = &node->children_[step];
  }
  return *node;
}

// Basic shape data ----------------------------------------------------------

namespace {

void collect_leaves(const PlanarTree& tree, std::vector<Color>& out) {
  if (tree.is_leaf()) {
    out.push_back(tree.color());
    return;
  }
  for (const auto& child : tree.children()) collect_leaves(child, out);
}

}  // namespace

ColorWord leaf_word(const PlanarTree& tree) {
  std::vector<Color> out;
  collect_leaves(tree, out);
  return ColorWord(std::move(out));
}

ColorWord leaf_word(const PlanarForest& forest) {
  std::vector<Color> out;
  for (const auto& tree : forest) collect_leaves(tree, out);
  return ColorWord(std::move(out));
}

ColorWord root_word(const PlanarForest& forest) {
  std::vector<Color> out;
  out.reserve(forest.size());
  for (const auto& tree : forest) out.push_back(tree.color());
  return ColorWord(std::move(out));
}

int depth(const PlanarTree& tree) {
  int d = 0;
  for (const auto& child : tree.children()) d = std::max(d, 1 + depth(child));
  return d;
}

int vertex_count(const PlanarTree& tree) {
  int n = 1;
  for (const auto& child : tree.children()) n += vertex_count(child);
  return n;
}

int nonleaf_count(const PlanarTree& tree) {
  if (tree.is_leaf()) return 0;
  int n = 1;
  for (const auto& child : tree.children()) n += nonleaf_count(child);
  return n;
}

int nondegenerate_count(const PlanarTree& tree) {
  int n = tree.is_nondegenerate() ? 1 : 0;
  for (const auto& child : tree.children()) n += nondegenerate_count(child);
  return n;
}

std::vector<std::vector<VertexPath>> levels(const PlanarTree& tree) {
  std::vector<std::vector<VertexPath>> out;
  std::vector<VertexPath> current{{}};
  while (!current.empty()) {
    out.push_back(current);
    std::vector<VertexPath> next;
    for (const auto& path : current) {
      const PlanarTree& node = tree.subtree(path);
      for (int j = 0; j < static_cast<int>(node.arity()); ++j) {
        VertexPath child = path;
        child.push_back(j);
        next.push_back(std::move(child));
      }
    }
    current = std::move(next);
  }
  return out;
}

int layer_count(const PlanarTree& tree) {
  if (!is_layered(tree)) throw std::invalid_argument("layer_count needs a layered tree");
  return depth(tree);
}

// Class predicates ----------------------------------------------------------

namespace {

void leaf_depths(const PlanarTree& tree, int here, int& lo, int& hi) {
  if (tree.is_leaf()) {
    lo = std::min(lo, here);
    hi = std::max(hi, here);
    return;
  }
  for (const auto& child : tree.children()) leaf_depths(child, here + 1, lo, hi);
}

bool has_unary(const PlanarTree& tree) {
  if (tree.is_unary()) return true;
  for (const auto& child : tree.children())
    if (has_unary(child)) return true;
  return false;
}

}  // namespace

bool is_layered(const PlanarTree& tree) {
  int lo = 1 << 30, hi = -1;
  leaf_depths(tree, 0, lo, hi);
  return lo == hi;
}

bool is_layered_proper(const PlanarTree& tree) {
  if (!is_layered(tree)) return false;
  auto lv = levels(tree);
  for (std::size_t j = 0; j + 1 < lv.size(); ++j) {
    bool found = false;
    for (const auto& path : lv[j])
      if (tree.subtree(path).is_nondegenerate()) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool is_simple(const PlanarTree& tree) {
  if (!is_layered_proper(tree))
    throw std::invalid_argument("is_simple needs a layered proper tree");
  auto lv = levels(tree);
  for (std::size_t j = 0; j + 1 < lv.size(); ++j) {
    int nd = 0;
    for (const auto& path : lv[j])
      if (tree.subtree(path).is_nondegenerate()) ++nd;
    if (nd != 1) return false;
  }
  return true;
}

bool is_reduced(const PlanarTree& tree) { return !has_unary(tree); }

bool is_order_reduced(const PlanarTree& tree) {
  return order_contractible_vertices(tree).empty();
}

bool is_ost(const PlanarTree& tree) {
  return is_layered_proper(tree) && is_simple(tree) && is_order_reduced(tree);
}

TreeClassTag classify(const PlanarTree& tree) {
  TreeClassTag tag;
  tag.layered = is_layered(tree);
  tag.proper = tag.layered && is_layered_proper(tree);
  tag.simple = tag.proper && is_simple(tree);
  tag.reduced = is_reduced(tree);
  tag.order_reduced = tag.simple && is_order_reduced(tree);
  return tag;
}

// Orderings -----------------------------------------------------------------

std::vector<VertexPath> breadth_first_order(const PlanarTree& tree,
                                            VertexFilter filter) {
  auto lv = levels(tree);
  std::vector<VertexPath> out;
  for (auto it = lv.rbegin(); it != lv.rend(); ++it)
    for (const auto& path : *it)
      if (filter == VertexFilter::all || tree.subtree(path).is_nondegenerate())
        out.push_back(path);
  return out;
}

std::vector<VertexPath> breadth_first_nondegenerate(const PlanarTree& tree) {
  if (!is_layered(tree))
    throw std::invalid_argument("breadth-first ordering needs a layered tree");
  return breadth_first_order(tree, VertexFilter::nondegenerate);
}

namespace {

void postorder(const PlanarTree& node, VertexPath& path, bool left_to_right,
               std::vector<VertexPath>& out) {
  int n = static_cast<int>(node.arity());
  for (int k = 0; k < n; ++k) {
    int j = left_to_right ? k : n - 1 - k;
    path.push_back(j);
    postorder(node.children()[j], path, left_to_right, out);
    path.pop_back();
  }
  out.push_back(path);
}

}  // namespace

std::vector<VertexPath> depth_first_order(const PlanarTree& tree,
                                          DepthFirstVariant variant,
                                          VertexFilter filter) {
  std::vector<VertexPath> out;
  VertexPath path;
  switch (variant) {
    case DepthFirstVariant::left_up:
      postorder(tree, path, true, out);
      break;
    case DepthFirstVariant::right_up:
      postorder(tree, path, false, out);
      break;
    case DepthFirstVariant::left_down:
      postorder(tree, path, true, out);
      std::reverse(out.begin(), out.end());
      break;
    case DepthFirstVariant::right_down:
      postorder(tree, path, false, out);
      std::reverse(out.begin(), out.end());
      break;
  }
  if (filter == VertexFilter::nondegenerate) {
    std::vector<VertexPath> kept;
    for (auto& p : out)
      if (tree.subtree(p).is_nondegenerate()) kept.push_back(std::move(p));
    out = std::move(kept);
  }
  return out;
}

// Structural operators ------------------------------------------------------

PlanarTree reflect(const PlanarTree& tree) {
  std::vector<PlanarTree> children;
  children.reserve(tree.arity());
  for (auto it = tree.children().rbegin(); it != tree.children().rend(); ++it)
    children.push_back(reflect(*it));
  return PlanarTree(tree.color(), std::move(children));
}

VertexPath reflect_path(const PlanarTree& tree, const VertexPath& path) {
  VertexPath out;
  const PlanarTree* node = &tree;
  for (int step : path) {
    int n = static_cast<int>(node->arity());
    out.push_back(n - 1 - step);
    node = &node->children()[step];
  }
  return out;
}

namespace {

PlanarTree graft_leaves(const PlanarTree& top, const PlanarForest& bottom,
                        std::size_t& cursor) {
  if (top.is_leaf()) return bottom[cursor++];
  std::vector<PlanarTree> children;
  children.reserve(top.arity());
  for (const auto& child : top.children())
    children.push_back(graft_leaves(child, bottom, cursor));
  return PlanarTree(top.color(), std::move(children));
}

}  // namespace

PlanarForest right_join(const PlanarForest& bottom, const PlanarForest& top) {
  if (bottom.empty() || top.empty())
    throw std::invalid_argument("right join needs nonempty forests");
  if (leaf_word(top) != root_word(bottom))
    throw std::invalid_argument("right join: leaf word of top must equal root word of bottom");
  PlanarForest out;
  out.reserve(top.size());
  std::size_t cursor = 0;
  for (const auto& tree : top) out.push_back(graft_leaves(tree, bottom, cursor));
  return out;
}

PlanarTree contract_singular(const PlanarTree& tree) {
  if (tree.is_unary()) return contract_singular(tree.children()[0]);
  std::vector<PlanarTree> children;
  children.reserve(tree.arity());
  for (const auto& child : tree.children())
    children.push_back(contract_singular(child));
  return PlanarTree(tree.color(), std::move(children));
}

// Layered trees as a stack of levels. words[0] is the root level, back()
// the leaf level; counts[j][v] is the arity of vertex v on level j.
namespace {

struct LayeredStack {
  std::vector<ColorWord> words;
  std::vector<std::vector<int>> counts;
};

int block_offset(const std::vector<int>& counts, int v) {
  int off = 0;
  for (int j = 0; j < v; ++j) off += counts[j];
  return off;
}

LayeredStack to_stack(const PlanarTree& tree) {
  if (!is_layered(tree)) throw std::invalid_argument("not a layered tree");
  LayeredStack stack;
  for (const auto& level : levels(tree)) {
    std::vector<Color> word;
    std::vector<int> counts;
    word.reserve(level.size());
    counts.reserve(level.size());
    for (const auto& path : level) {
      const PlanarTree& node = tree.subtree(path);
      word.push_back(node.color());
      counts.push_back(static_cast<int>(node.arity()));
    }
    stack.words.emplace_back(std::move(word));
    stack.counts.push_back(std::move(counts));
  }
  stack.counts.pop_back();  // the leaf level has no children
  return stack;
}

PlanarTree stack_vertex(const LayeredStack& stack, std::size_t level, int v) {
  if (level + 1 == stack.words.size())
    return PlanarTree(stack.words[level].at(v));
  int off = block_offset(stack.counts[level], v);
  std::vector<PlanarTree> children;
  children.reserve(stack.counts[level][v]);
  for (int j = 0; j < stack.counts[level][v]; ++j)
    children.push_back(stack_vertex(stack, level + 1, off + j));
  return PlanarTree(stack.words[level].at(v), std::move(children));
}

PlanarTree from_stack(const LayeredStack& stack) {
  if (stack.words.empty() || stack.words[0].size() != 1)
    throw std::invalid_argument("stack does not describe a single tree");
  return stack_vertex(stack, 0, 0);
}

int parent_index(const std::vector<int>& counts, int child) {
  int off = 0;
  for (int v = 0; v < static_cast<int>(counts.size()); ++v) {
    if (child < off + counts[v]) return v;
    off += counts[v];
  }
  throw std::out_of_range("child index beyond level");
}

bool stack_contractible(const LayeredStack& stack, int k, int p) {
  if (k < 1 || k >= static_cast<int>(stack.counts.size())) return false;
  if (stack.counts[k][p] < 2) return false;
  int parent = parent_index(stack.counts[k - 1], p);
  if (stack.counts[k - 1][parent] != 1) return false;  // (a) no siblings
  for (int j = p + 1; j < static_cast<int>(stack.counts[k].size()); ++j)
    if (stack.counts[k][j] >= 2) return false;  // (b) none to the right of x
  for (int j = 0; j < parent; ++j)
    if (stack.counts[k - 1][j] >= 2) return false;  // (c) none to the left of x'
  return true;
}

LayeredStack stack_contract(LayeredStack stack, int k, int p) {
  int parent = parent_index(stack.counts[k - 1], p);
  int arity = stack.counts[k][p];
  int child_off = block_offset(stack.counts[k], p);
  ColorWord child_colors = stack.words[k + 1].slice(child_off, arity);

  // x takes its parent's slot one level up.
  stack.counts[k - 1][parent] = arity;

  // Its offspring hang from fresh unary vertices in the vacated row.
  std::vector<Color> row = stack.words[k].letters();
  row.erase(row.begin() + p);
  row.insert(row.begin() + p, child_colors.letters().begin(),
             child_colors.letters().end());
  stack.words[k] = ColorWord(std::move(row));
  std::vector<int>& row_counts = stack.counts[k];
  row_counts.erase(row_counts.begin() + p);
  row_counts.insert(row_counts.begin() + p, arity, 1);

  bool all_unary = std::all_of(row_counts.begin(), row_counts.end(),
                               [](int c) { return c == 1; });
  if (all_unary) {
    stack.words.erase(stack.words.begin() + k);
    stack.counts.erase(stack.counts.begin() + k);
  }
  return stack;
}

// (level, index-in-level) address of a path.
std::pair<int, int> locate(const PlanarTree& tree, const VertexPath& path) {
  auto lv = levels(tree);
  int k = static_cast<int>(path.size());
  const auto& row = lv.at(k);
  auto it = std::find(row.begin(), row.end(), path);
  if (it == row.end()) throw std::out_of_range("path not in tree");
  return {k, static_cast<int>(it - row.begin())};
}

}  // namespace

std::vector<VertexPath> order_contractible_vertices(const PlanarTree& tree) {
  if (!is_layered(tree))
    throw std::invalid_argument("order contraction is defined on layered trees");
  LayeredStack stack = to_stack(tree);
  auto lv = levels(tree);
  std::vector<VertexPath> out;
  for (int k = static_cast<int>(stack.counts.size()) - 1; k >= 1; --k)
    for (int p = 0; p < static_cast<int>(stack.counts[k].size()); ++p)
      if (stack_contractible(stack, k, p)) out.push_back(lv[k][p]);
  return out;
}

PlanarTree order_contract(const PlanarTree& tree, const VertexPath& x) {
  if (!is_layered(tree))
    throw std::invalid_argument("order contraction is defined on layered trees");
  LayeredStack stack = to_stack(tree);
  auto [k, p] = locate(tree, x);
  if (!stack_contractible(stack, k, p))
    throw std::invalid_argument("vertex is not order-contractible");
  return from_stack(stack_contract(std::move(stack), k, p));
}

PlanarTree canonical_expansion(const PlanarTree& tree) {
  if (!is_layered_proper(tree))
    throw std::invalid_argument("canonical expansion needs a layered proper tree");
  LayeredStack stack = to_stack(tree);
  int m = static_cast<int>(stack.counts.size());

  // Breadth-first-first non-simple non-degenerate vertex.
  int k = -1, p = -1;
  for (int j = m - 1; j >= 0 && k < 0; --j) {
    int nd = 0, first = -1;
    for (int v = 0; v < static_cast<int>(stack.counts[j].size()); ++v)
      if (stack.counts[j][v] >= 2) {
        if (first < 0) first = v;
        ++nd;
      }
    if (nd >= 2) {
      k = j;
      p = first;
    }
  }
  if (k < 0) return tree;  // simple already

  int arity = stack.counts[k][p];
  std::vector<Color> new_word;
  std::vector<int> new_counts;
  int off = 0;
  for (int v = 0; v < static_cast<int>(stack.counts[k].size()); ++v) {
    if (v == p) {
      new_word.push_back(stack.words[k].at(v));
      new_counts.push_back(arity);
    } else {
      for (int j = 0; j < stack.counts[k][v]; ++j) {
        new_word.push_back(stack.words[k + 1].at(off + j));
        new_counts.push_back(1);
      }
    }
    off += stack.counts[k][v];
  }
  stack.counts[k][p] = 1;
  stack.words.insert(stack.words.begin() + k + 1, ColorWord(std::move(new_word)));
  stack.counts.insert(stack.counts.begin() + k + 1, std::move(new_counts));
  return from_stack(stack);
}

PlanarTree simple_closure(const PlanarTree& tree) {
  PlanarTree current = tree;
  while (true) {
    PlanarTree next = canonical_expansion(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<std::vector<VertexPath>> irreducible_strings(const PlanarTree& tree) {
  if (!is_layered_proper(tree))
    throw std::invalid_argument("irreducible strings need a layered proper tree");
  auto nd = breadth_first_nondegenerate(tree);
  auto rup = depth_first_order(tree, DepthFirstVariant::right_up, VertexFilter::all);
  std::map<VertexPath, int> rank;
  for (std::size_t j = 0; j < rup.size(); ++j) rank[rup[j]] = static_cast<int>(j);

  std::vector<std::vector<VertexPath>> out;
  std::vector<VertexPath> run;
  for (std::size_t j = 0; j < nd.size(); ++j) {
    run.push_back(nd[j]);
    bool linked = j + 1 < nd.size() && rank[nd[j]] < rank[nd[j + 1]];
    if (!linked) {
      out.push_back(std::move(run));
      run.clear();
    }
  }
  return out;
}

PlanarTree expand_to_ost(const PlanarTree& tree) {
  if (!is_reduced(tree))
    throw std::invalid_argument("expansion to an order-reduced tree needs a reduced tree");
  if (tree.is_leaf()) return tree;

  auto rup = depth_first_order(tree, DepthFirstVariant::right_up, VertexFilter::all);
  std::map<VertexPath, int> index;  // 1-based right-depth-first index of non-leaf vertices
  int n = 0;
  for (const auto& path : rup)
    if (!tree.subtree(path).is_leaf()) index[path] = ++n;

  // Vertex with index i lands on level n - i, leaves on level n; each edge
  // is bridged by unary vertices across the level gap.
  auto build = [&](auto&& self, const VertexPath& path, int level) -> PlanarTree {
    const PlanarTree& node = tree.subtree(path);
    std::vector<PlanarTree> children;
    children.reserve(node.arity());
    for (int j = 0; j < static_cast<int>(node.arity()); ++j) {
      VertexPath child_path = path;
      child_path.push_back(j);
      const PlanarTree& child = tree.subtree(child_path);
      int target = child.is_leaf() ? n : n - index.at(child_path);
      PlanarTree grown = child.is_leaf() ? PlanarTree(child.color())
                                         : self(self, child_path, target);
      for (int d = target - level - 1; d > 0; --d)
        grown = PlanarTree(grown.color(), {grown});
      children.push_back(std::move(grown));
    }
    return PlanarTree(node.color(), std::move(children));
  };
  return build(build, {}, 0);
}

std::vector<PlanarTree> tree_class_of(const PlanarTree& simple_tree) {
  if (!is_simple(simple_tree))
    throw std::invalid_argument("tree class is indexed by a simple tree");

  auto nd = breadth_first_nondegenerate(simple_tree);
  auto strings = irreducible_strings(simple_tree);
  std::vector<int> ends;  // breadth-first ranks of contractible right ends
  for (const auto& run : strings) {
    auto it = std::find(nd.begin(), nd.end(), run.back());
    int rank = static_cast<int>(it - nd.begin());
    if (rank + 1 < static_cast<int>(nd.size())) ends.push_back(rank);
  }
  std::sort(ends.begin(), ends.end());

  std::vector<PlanarTree> out;
  int q = static_cast<int>(ends.size());
  for (int mask = 0; mask < (1 << q); ++mask) {
    PlanarTree current = simple_tree;
    for (int j = q - 1; j >= 0; --j) {  // topmost chosen end first
      if (!(mask & (1 << j))) continue;
      auto live = breadth_first_nondegenerate(current);
      current = order_contract(current, live.at(ends[j]));
    }
    out.push_back(std::move(current));
  }
  return out;
}

// Enumeration ---------------------------------------------------------------

namespace {

void enumerate_layered_rec(const PlanarForest& forest, const ColorWord& word,
                           Color root_color, int n_colors,
                           std::vector<PlanarTree>& out) {
  int p = static_cast<int>(word.size());
  if (p == 1) {
    if (word.at(0) == root_color) out.push_back(forest[0]);
    return;
  }
  for (int q = 1; q <= p - 1; ++q) {
    for (const auto& sizes : compositions(p, q)) {
      std::vector<Color> colors(q);
      auto rec = [&](auto&& self, int k, int offset) -> void {
        if (k == q) {
          PlanarForest next;
          std::vector<Color> next_word;
          next.reserve(q);
          int off = 0;
          for (int b = 0; b < q; ++b) {
            std::vector<PlanarTree> children(forest.begin() + off,
                                             forest.begin() + off + sizes[b]);
            next.emplace_back(colors[b], std::move(children));
            next_word.push_back(colors[b]);
            off += sizes[b];
          }
          enumerate_layered_rec(next, ColorWord(std::move(next_word)), root_color,
                                n_colors, out);
          return;
        }
        if (sizes[k] == 1) {
          colors[k] = word.at(offset);  // unary vertex keeps its child's color
          self(self, k + 1, offset + 1);
          return;
        }
        for (Color c = 1; c <= n_colors; ++c) {
          colors[k] = c;
          self(self, k + 1, offset + sizes[k]);
        }
      };
      rec(rec, 0, 0);
    }
  }
}

using ReducedMemo = std::map<std::pair<ColorWord, Color>, std::vector<PlanarTree>>;

const std::vector<PlanarTree>& enumerate_reduced_rec(const ColorWord& u,
                                                     Color root_color,
                                                     int n_colors,
                                                     ReducedMemo& memo) {
  auto key = std::make_pair(u, root_color);
  auto found = memo.find(key);
  if (found != memo.end()) return found->second;

  std::vector<PlanarTree> out;
  int p = static_cast<int>(u.size());
  if (p == 1) {
    if (u.at(0) == root_color) out.emplace_back(root_color);
  } else {
    for (int q = 2; q <= p; ++q) {
      for (const auto& sizes : compositions(p, q)) {
        std::vector<Color> colors(q);
        auto rec = [&](auto&& self, int k, int offset,
                       std::vector<PlanarTree>& chosen) -> void {
          if (k == q) {
            out.emplace_back(root_color, chosen);
            return;
          }
          ColorWord block = u.slice(offset, sizes[k]);
          Color lo = 1, hi = n_colors;
          if (sizes[k] == 1) lo = hi = block.at(0);
          for (Color c = lo; c <= hi; ++c) {
            for (const auto& sub : enumerate_reduced_rec(block, c, n_colors, memo)) {
              chosen.push_back(sub);
              self(self, k + 1, offset + sizes[k], chosen);
              chosen.pop_back();
            }
          }
        };
        std::vector<PlanarTree> chosen;
        rec(rec, 0, 0, chosen);
      }
    }
  }
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

std::vector<PlanarTree> enumerate_trees(const ColorWord& u, Color root_color,
                                        int n_colors, TreeClass tree_class) {
  if (u.empty()) throw std::invalid_argument("leaf word must be nonempty");
  if (n_colors < 1 || !u.fits(n_colors) || root_color < 1 || root_color > n_colors)
    throw std::invalid_argument("colors must lie in 1..N");

  std::vector<PlanarTree> out;
  switch (tree_class) {
    case TreeClass::layered: {
      if (u.size() == 1) {
        if (u.at(0) == root_color) out.emplace_back(root_color);
        break;
      }
      PlanarForest leaves;
      for (Color c : u.letters()) leaves.emplace_back(c);
      enumerate_layered_rec(leaves, u, root_color, n_colors, out);
      break;
    }
    case TreeClass::reduced: {
      ReducedMemo memo;
      out = enumerate_reduced_rec(u, root_color, n_colors, memo);
      break;
    }
    case TreeClass::simple: {
      for (auto& tree : enumerate_trees(u, root_color, n_colors, TreeClass::layered))
        if (is_simple(tree)) out.push_back(std::move(tree));
      break;
    }
    case TreeClass::ost: {
      for (const auto& tree :
           enumerate_trees(u, root_color, n_colors, TreeClass::reduced))
        out.push_back(expand_to_ost(tree));
      break;
    }
  }
  std::sort(out.begin(), out.end());
  assert(std::adjacent_find(out.begin(), out.end()) == out.end());
  return out;
}

// Text / term syntax --------------------------------------------------------

std::string tree_term(const PlanarTree& tree) {
  std::string out = std::to_string(tree.color());
  if (!tree.is_leaf()) {
    out += '[';
    for (std::size_t j = 0; j < tree.arity(); ++j) {
      if (j) out += ',';
      out += tree_term(tree.children()[j]);
    }
    out += ']';
  }
  return out;
}

namespace {

PlanarTree parse_term_at(const std::string& text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == start) throw std::invalid_argument("expected a color in tree term");
  Color color = std::stoi(text.substr(start, pos - start));
  std::vector<PlanarTree> children;
  if (pos < text.size() && text[pos] == '[') {
    ++pos;
    while (true) {
      children.push_back(parse_term_at(text, pos));
      if (pos >= text.size())
        throw std::invalid_argument("unterminated '[' in tree term");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ']') {
        ++pos;
        break;
      }
      throw std::invalid_argument("expected ',' or ']' in tree term");
    }
  }
  return PlanarTree(color, std::move(children));
}

}  // namespace

PlanarTree parse_tree_term(const std::string& text) {
  std::size_t pos = 0;
  PlanarTree tree = parse_term_at(text, pos);
  if (pos != text.size())
    throw std::invalid_argument("trailing characters after tree term");
  return tree;
}

}  // namespace ihopf
