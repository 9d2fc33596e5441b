#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace ihopf {

/// A color is an integer in 1..N. N is not baked into the type; every
/// operation that depends on the number of colors takes it as an argument.
using Color = int;

/// Finite word over the color alphabet. Doubles as a colored ordered set:
/// position k carries color at(k).
class ColorWord {
public:
  ColorWord() = default;
  explicit ColorWord(std::vector<Color> letters);
  ColorWord(std::initializer_list<Color> letters);

  /// Parses "1223" (every color a single digit) or "1,12,3" (general).
  static ColorWord parse(const std::string& text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Color at(std::size_t k) const { return letters_.at(k); }
  const std::vector<Color>& letters() const { return letters_; }

  ColorWord reflected() const;
  ColorWord slice(std::size_t offset, std::size_t count) const;
  ColorWord concat(const ColorWord& other) const;
  bool fits(int n_colors) const;
  int max_color() const;

  /// Digit string when every letter is <= 9, else comma-separated.
  std::string str() const;

  auto operator<=>(const ColorWord&) const = default;

private:
  std::vector<Color> letters_;
};

/// u(p)...u(1).
ColorWord reflect_word(const ColorWord& u);

/// |u| - 1; throws std::invalid_argument on the empty word.
int grading(const ColorWord& u);

/// A composition of a colored word into consecutive blocks, each block
/// carrying its own color. Structural invariants (positive sizes summing to
/// the word length, one color per block) are enforced at construction.
/// The delta rule — a singleton block colored like its letter — is a
/// predicate, not an invariant: the unpruned enumeration legitimately
/// produces partitions that violate it.
class IntervalPartition {
public:
  IntervalPartition(ColorWord base_word, std::vector<int> block_sizes,
                    ColorWord block_colors);

  /// Parses the parenthetical literal, e.g. "(31)2(233)1(2)2(1223)3".
  static IntervalPartition parse(const std::string& text);

  const ColorWord& base_word() const { return base_word_; }
  const std::vector<int>& block_sizes() const { return block_sizes_; }
  const ColorWord& block_colors() const { return block_colors_; }
  std::size_t block_count() const { return block_sizes_.size(); }

  /// Contiguous subword covered by block k (0-based).
  ColorWord block(std::size_t k) const;
  std::size_t block_offset(std::size_t k) const;

  /// True when every singleton block has its letter's color.
  bool satisfies_delta_rule() const;

  std::string str() const;

  auto operator<=>(const IntervalPartition&) const = default;

private:
  ColorWord base_word_;
  std::vector<int> block_sizes_;
  ColorWord block_colors_;
};

/// Contiguous subword of u covered by block k (0-based) of the partition.
ColorWord restrict_block(const ColorWord& u, const IntervalPartition& partition,
                         std::size_t k);

/// All compositions of p into q positive parts, in lexicographic order.
std::vector<std::vector<int>> compositions(int p, int q);

/// All ways to cut u into q consecutive nonempty blocks crossed with all
/// block-color words over 1..n_colors. With prune_delta set, singleton
/// blocks are forced to their letter's color (the other choices vanish
/// under the Y_j^i = delta_ij convention). Compositions come in
/// lexicographic order of block sizes, colors in lexicographic order.
std::vector<IntervalPartition> enumerate_interval_partitions(
    const ColorWord& u, int q, int n_colors, bool prune_delta);

}  // namespace ihopf
