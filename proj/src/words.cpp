#include "ihopf/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ihopf {

namespace {

void check_letters(const std::vector<Color>& letters) {
  for (Color c : letters)
    if (c < 1) throw std::invalid_argument("color must be >= 1");
}

}  // namespace

ColorWord::ColorWord(std::vector<Color> letters) : letters_(std::move(letters)) {
  check_letters(letters_);
}

ColorWord::ColorWord(std::initializer_list<Color> letters) : letters_(letters) {
  check_letters(letters_);
}

ColorWord ColorWord::parse(const std::string& text) {
  std::vector<Color> letters;
  if (text.find(',') != std::string::npos) {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty letter in word literal");
      std::size_t pos = 0;
      int value = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument("bad letter: " + item);
      letters.push_back(value);
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument(std::string("bad digit in word literal: ") + ch);
      letters.push_back(ch - '0');
    }
  }
  return ColorWord(std::move(letters));
}

ColorWord ColorWord::reflected() const {
  std::vector<Color> out(letters_.rbegin(), letters_.rend());
  return ColorWord(std::move(out));
}

ColorWord ColorWord::slice(std::size_t offset, std::size_t count) const {
  if (offset + count > letters_.size())
    throw std::out_of_range("word slice out of range");
  std::vector<Color> out(letters_.begin() + offset, letters_.begin() + offset + count);
  return ColorWord(std::move(out));
}

ColorWord ColorWord::concat(const ColorWord& other) const {
  std::vector<Color> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return ColorWord(std::move(out));
}

bool ColorWord::fits(int n_colors) const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [n_colors](Color c) { return c >= 1 && c <= n_colors; });
}

int ColorWord::max_color() const {
  int m = 0;
  for (Color c : letters_) m = std::max(m, c);
  return m;
}

std::string ColorWord::str() const {
  bool digits = std::all_of(letters_.begin(), letters_.end(),
                            [](Color c) { return c <= 9; });
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (!digits && k > 0) out += ',';
    out += std::to_string(letters_[k]);
  }
  return out;
}

ColorWord reflect_word(const ColorWord& u) { return u.reflected(); }

int grading(const ColorWord& u) {
  if (u.empty()) throw std::invalid_argument("grading of the empty word");
  return static_cast<int>(u.size()) - 1;
}

IntervalPartition::IntervalPartition(ColorWord base_word,
                                     std::vector<int> block_sizes,
                                     ColorWord block_colors)
    : base_word_(std::move(base_word)),
      block_sizes_(std::move(block_sizes)),
      block_colors_(std::move(block_colors)) {
  if (block_sizes_.size() != block_colors_.size())
    throw std::invalid_argument("one color per block required");
  int total = 0;
  for (int s : block_sizes_) {
    if (s < 1) throw std::invalid_argument("block sizes must be positive");
    total += s;
  }
  if (total != static_cast<int>(base_word_.size()))
    throw std::invalid_argument("block sizes must sum to the word length");
}

IntervalPartition IntervalPartition::parse(const std::string& text) {
  std::vector<int> sizes;
  std::vector<Color> colors;
  std::vector<Color> base;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in partition literal");
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos)
      throw std::invalid_argument("unbalanced '(' in partition literal");
    ColorWord blk = ColorWord::parse(text.substr(pos + 1, close - pos - 1));
    if (blk.empty()) throw std::invalid_argument("empty block in partition literal");
    std::size_t next = text.find('(', close + 1);
    std::size_t color_len = (next == std::string::npos ? text.size() : next) - close - 1;
    if (color_len == 0) throw std::invalid_argument("block without color");
    colors.push_back(std::stoi(text.substr(close + 1, color_len)));
    sizes.push_back(static_cast<int>(blk.size()));
    base.insert(base.end(), blk.letters().begin(), blk.letters().end());
    pos = (next == std::string::npos) ? text.size() : next;
  }
  return IntervalPartition(ColorWord(std::move(base)), std::move(sizes),
                           ColorWord(std::move(colors)));
}

ColorWord IntervalPartition::block(std::size_t k) const {
  if (k >= block_sizes_.size()) throw std::out_of_range("block index out of range");
  return base_word_.slice(block_offset(k), block_sizes_[k]);
}

std::size_t IntervalPartition::block_offset(std::size_t k) const {
  std::size_t off = 0;
  for (std::size_t j = 0; j < k; ++j) off += block_sizes_[j];
  return off;
}

bool IntervalPartition::satisfies_delta_rule() const {
  for (std::size_t k = 0; k < block_sizes_.size(); ++k)
    if (block_sizes_[k] == 1 && block_colors_.at(k) != base_word_.at(block_offset(k)))
      return false;
  return true;
}

std::string IntervalPartition::str() const {
  std::string out;
  for (std::size_t k = 0; k < block_sizes_.size(); ++k) {
    out += '(';
    out += block(k).str();
    out += ')';
    out += std::to_string(block_colors_.at(k));
  }
  return out;
}

ColorWord restrict_block(const ColorWord& u, const IntervalPartition& partition,
                         std::size_t k) {
  if (partition.base_word() != u)
    throw std::invalid_argument("partition does not cover the given word");
  return partition.block(k);
}

std::vector<std::vector<int>> compositions(int p, int q) {
  std::vector<std::vector<int>> out;
  if (q < 1 || q > p) return out;
  std::vector<int> current(q, 1);
  // Lexicographic generation: fill position k with 1..remaining budget.
  auto rec = [&](auto&& self, int k, int remaining) -> void {
    if (k == q - 1) {
      current[k] = remaining;
      out.push_back(current);
      return;
    }
    for (int s = 1; s <= remaining - (q - k - 1); ++s) {
      current[k] = s;
      self(self, k + 1, remaining - s);
    }
  };
  rec(rec, 0, p);
  return out;
}

std::vector<IntervalPartition> enumerate_interval_partitions(
    const ColorWord& u, int q, int n_colors, bool prune_delta) {
  int p = static_cast<int>(u.size());
  if (q < 1 || q > p) throw std::invalid_argument("block count out of range");
  if (n_colors < 1) throw std::invalid_argument("need at least one color");
  if (!u.fits(n_colors)) throw std::invalid_argument("word uses colors beyond N");

  std::vector<IntervalPartition> out;
  for (const auto& sizes : compositions(p, q)) {
    std::vector<Color> colors(q, 1);
    auto rec = [&](auto&& self, int k, int offset) -> void {
      if (k == q) {
        out.emplace_back(u, sizes, ColorWord(colors));
        return;
      }
      if (prune_delta && sizes[k] == 1) {
        colors[k] = u.at(offset);
        self(self, k + 1, offset + sizes[k]);
        return;
      }
      for (Color c = 1; c <= n_colors; ++c) {
        colors[k] = c;
        self(self, k + 1, offset + sizes[k]);
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

}  // namespace ihopf
