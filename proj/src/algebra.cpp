#include "ihopf/algebra.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace ihopf {

Generator::Generator(Color upper, ColorWord lower)
    : upper_(upper), lower_(std::move(lower)) {
  if (upper_ < 1) throw std::invalid_argument("generator upper color must be >= 1");
  if (lower_.size() < 2)
    throw std::invalid_argument("generator lower word must have length >= 2");
}

Monomial::Monomial(std::vector<Generator> factors) : factors_(std::move(factors)) {}

int Monomial::grade() const {
  int total = 0;
  for (const auto& g : factors_) total += g.grade();
  return total;
}

Monomial Monomial::concat(const Monomial& other) const {
  std::vector<Generator> out = factors_;
  out.insert(out.end(), other.factors_.begin(), other.factors_.end());
  return Monomial(std::move(out));
}

Monomial Monomial::reversed() const {
  std::vector<Generator> out(factors_.rbegin(), factors_.rend());
  return Monomial(std::move(out));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = grade() <=> other.grade(); c != 0) return c;
  if (auto c = factors_.size() <=> other.factors_.size(); c != 0) return c;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    if (auto c = factors_[j] <=> other.factors_[j]; c != 0) return c;
  return std::strong_ordering::equal;
}

AlgebraElement::AlgebraElement(int n_colors) : n_colors_(n_colors) {
  if (n_colors_ < 1) throw std::invalid_argument("need at least one color");
}

AlgebraElement AlgebraElement::zero(int n_colors) { return AlgebraElement(n_colors); }

AlgebraElement AlgebraElement::unit(int n_colors) {
  AlgebraElement out(n_colors);
  out.terms_[Monomial()] = 1;
  return out;
}

AlgebraElement AlgebraElement::from_monomial(int n_colors, Monomial m, Int coeff) {
  AlgebraElement out(n_colors);
  if (coeff != 0) out.terms_[std::move(m)] = std::move(coeff);
  return out;
}

AlgebraElement AlgebraElement::generator(int n_colors, Color upper,
                                         const ColorWord& lower) {
  if (lower.empty()) throw std::invalid_argument("generator needs a nonempty word");
  if (upper < 1 || upper > n_colors || !lower.fits(n_colors))
    throw std::invalid_argument("generator colors must lie in 1..N");
  if (lower.size() == 1)
    return lower.at(0) == upper ? unit(n_colors) : zero(n_colors);
  return from_monomial(n_colors, Monomial({Generator(upper, lower)}));
}

Int AlgebraElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

AlgebraElement& AlgebraElement::add(const Monomial& m, const Int& coeff) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(m, coeff);
    return *this;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
  return *this;
}

namespace {

void check_context(int a, int b) {
  if (a != b) throw std::invalid_argument("mismatched color counts");
}

}  // namespace

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  check_context(n_colors_, other.n_colors_);
  AlgebraElement out = *this;
  for (const auto& [m, c] : other.terms_) out.add(m, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
  check_context(n_colors_, other.n_colors_);
  AlgebraElement out = *this;
  for (const auto& [m, c] : other.terms_) out.add(m, -c);
  return out;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(n_colors_);
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& other) const {
  check_context(n_colors_, other.n_colors_);
  AlgebraElement out(n_colors_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) out.add(m1.concat(m2), c1 * c2);
  return out;
}

AlgebraElement AlgebraElement::scaled(const Int& factor) const {
  AlgebraElement out(n_colors_);
  if (factor == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_[m] = c * factor;
  return out;
}

TensorElement::TensorElement(int n_colors) : n_colors_(n_colors) {
  if (n_colors_ < 1) throw std::invalid_argument("need at least one color");
}

TensorElement TensorElement::zero(int n_colors) { return TensorElement(n_colors); }

TensorElement TensorElement::unit(int n_colors) {
  TensorElement out(n_colors);
  out.terms_[{Monomial(), Monomial()}] = 1;
  return out;
}

TensorElement TensorElement::pure(const AlgebraElement& left,
                                  const AlgebraElement& right) {
  check_context(left.n_colors(), right.n_colors());
  TensorElement out(left.n_colors());
  for (const auto& [m1, c1] : left.terms())
    for (const auto& [m2, c2] : right.terms()) out.add(m1, m2, c1 * c2);
  return out;
}

TensorElement& TensorElement::add(const Monomial& left, const Monomial& right,
                                  const Int& coeff) {
  auto key = std::make_pair(left, right);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(std::move(key), coeff);
    return *this;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
  return *this;
}

TensorElement TensorElement::operator+(const TensorElement& other) const {
  check_context(n_colors_, other.n_colors_);
  TensorElement out = *this;
  for (const auto& [k, c] : other.terms_) out.add(k.first, k.second, c);
  return out;
}

TensorElement TensorElement::operator-(const TensorElement& other) const {
  check_context(n_colors_, other.n_colors_);
  TensorElement out = *this;
  for (const auto& [k, c] : other.terms_) out.add(k.first, k.second, -c);
  return out;
}

TensorElement TensorElement::operator*(const TensorElement& other) const {
  check_context(n_colors_, other.n_colors_);
  TensorElement out(n_colors_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : other.terms_)
      out.add(k1.first.concat(k2.first), k1.second.concat(k2.second), c1 * c2);
  return out;
}

TensorElement TensorElement::flipped() const {
  TensorElement out(n_colors_);
  for (const auto& [k, c] : terms_) out.add(k.second, k.first, c);
  return out;
}

// Structure maps --------------------------------------------------------------

namespace {

TensorElement coproduct_of_generator(const Generator& g, int n) {
  const ColorWord& u = g.lower();
  int p = static_cast<int>(u.size());
  TensorElement out(n);
  for (int q = 1; q <= p; ++q) {
    for (const auto& pi : enumerate_interval_partitions(u, q, n, true)) {
      AlgebraElement left = AlgebraElement::unit(n);
      for (std::size_t k = 0; k < pi.block_count(); ++k)
        left = left * AlgebraElement::generator(n, pi.block_colors().at(k), pi.block(k));
      AlgebraElement right = AlgebraElement::generator(n, g.upper(), pi.block_colors());
      out = out + TensorElement::pure(left, right);
    }
  }
  return out;
}

TensorElement coproduct_of_monomial(const Monomial& m, int n) {
  TensorElement out = TensorElement::unit(n);
  for (const auto& g : m.factors()) out = out * coproduct_of_generator(g, n);
  return out;
}

}  // namespace

TensorElement coproduct(const AlgebraElement& a) {
  TensorElement out(a.n_colors());
  for (const auto& [m, c] : a.terms()) {
    TensorElement dm = coproduct_of_monomial(m, a.n_colors());
    for (const auto& [k, c2] : dm.terms()) out.add(k.first, k.second, c * c2);
  }
  return out;
}

TensorElement coproduct_op(const AlgebraElement& a) { return coproduct(a).flipped(); }

Int counit(const AlgebraElement& a) { return a.coeff(Monomial()); }

namespace {

AlgebraElement map_monomials(const AlgebraElement& a,
                             const std::function<Monomial(const Monomial&)>& fn) {
  AlgebraElement out(a.n_colors());
  for (const auto& [m, c] : a.terms()) out.add(fn(m), c);
  return out;
}

}  // namespace

AlgebraElement map_s(const AlgebraElement& a) {
  return map_monomials(a, [](const Monomial& m) {
    std::vector<Generator> out;
    out.reserve(m.length());
    for (auto it = m.factors().rbegin(); it != m.factors().rend(); ++it)
      out.emplace_back(it->upper(), it->lower().reflected());
    return Monomial(std::move(out));
  });
}

AlgebraElement map_t(const AlgebraElement& a) {
  return map_monomials(a, [](const Monomial& m) { return m.reversed(); });
}

AlgebraElement map_alpha(const AlgebraElement& a) {
  return map_monomials(a, [](const Monomial& m) {
    std::vector<Generator> out;
    out.reserve(m.length());
    for (const auto& g : m.factors())
      out.emplace_back(g.upper(), g.lower().reflected());
    return Monomial(std::move(out));
  });
}

AlgebraElement convolution(const Endomorphism& f, const Endomorphism& g,
                           const AlgebraElement& a) {
  int n = a.n_colors();
  AlgebraElement out(n);
  TensorElement da = coproduct(a);
  for (const auto& [k, c] : da.terms()) {
    AlgebraElement piece = f(AlgebraElement::from_monomial(n, k.first)) *
                           g(AlgebraElement::from_monomial(n, k.second));
    out = out + piece.scaled(c);
  }
  return out;
}

// Antipodes -------------------------------------------------------------------

namespace {

using GeneratorKey = std::tuple<int, Color, ColorWord>;

std::mutex antipode_cache_mutex;
std::map<GeneratorKey, AlgebraElement>& s_h_cache() {
  static std::map<GeneratorKey, AlgebraElement> cache;
  return cache;
}
std::map<GeneratorKey, AlgebraElement>& s_l_cache() {
  static std::map<GeneratorKey, AlgebraElement> cache;
  return cache;
}

/// Middle terms of Delta(Y_u^i): everything except Y (x) 1 and 1 (x) Y.
TensorElement middle_coproduct(const Generator& g, int n) {
  AlgebraElement e = AlgebraElement::generator(n, g.upper(), g.lower());
  TensorElement middle = coproduct(e) - TensorElement::pure(e, AlgebraElement::unit(n)) -
                         TensorElement::pure(AlgebraElement::unit(n), e);
  return middle;
}

AlgebraElement antipode_monomial(const Monomial& m, int n,
                                 AlgebraElement (*on_generator)(const Generator&, int)) {
  AlgebraElement out = AlgebraElement::unit(n);
  for (auto it = m.factors().rbegin(); it != m.factors().rend(); ++it)
    out = out * on_generator(*it, n);
  return out;
}

AlgebraElement extend_antimultiplicative(
    const AlgebraElement& a, AlgebraElement (*on_generator)(const Generator&, int)) {
  AlgebraElement out(a.n_colors());
  for (const auto& [m, c] : a.terms())
    out = out + antipode_monomial(m, a.n_colors(), on_generator).scaled(c);
  return out;
}

}  // namespace

AlgebraElement antipode_recursive(const Generator& g, int n_colors) {
  GeneratorKey key{n_colors, g.upper(), g.lower()};
  {
    std::lock_guard<std::mutex> lock(antipode_cache_mutex);
    auto it = s_h_cache().find(key);
    if (it != s_h_cache().end()) return it->second;
  }
  AlgebraElement value =
      -AlgebraElement::generator(n_colors, g.upper(), g.lower());
  TensorElement middle = middle_coproduct(g, n_colors);
  for (const auto& [k, c] : middle.terms()) {
    AlgebraElement piece = antipode_monomial(k.first, n_colors, &antipode_recursive) *
                           AlgebraElement::from_monomial(n_colors, k.second);
    value = value - piece.scaled(c);
  }
  std::lock_guard<std::mutex> lock(antipode_cache_mutex);
  return s_h_cache().emplace(std::move(key), std::move(value)).first->second;
}

AlgebraElement antipode_inverse_recursive(const Generator& g, int n_colors) {
  GeneratorKey key{n_colors, g.upper(), g.lower()};
  {
    std::lock_guard<std::mutex> lock(antipode_cache_mutex);
    auto it = s_l_cache().find(key);
    if (it != s_l_cache().end()) return it->second;
  }
  AlgebraElement value =
      -AlgebraElement::generator(n_colors, g.upper(), g.lower());
  TensorElement middle = middle_coproduct(g, n_colors);
  for (const auto& [k, c] : middle.terms()) {
    AlgebraElement piece =
        AlgebraElement::from_monomial(n_colors, k.second) *
        antipode_monomial(k.first, n_colors, &antipode_inverse_recursive);
    value = value - piece.scaled(c);
  }
  std::lock_guard<std::mutex> lock(antipode_cache_mutex);
  return s_l_cache().emplace(std::move(key), std::move(value)).first->second;
}

AlgebraElement antipode_geometric(const Generator& g, int n_colors) {
  // Sum of (u - I)^{*k} on the generator; terms vanish beyond the grade.
  AlgebraElement a = AlgebraElement::generator(n_colors, g.upper(), g.lower());
  std::map<std::pair<int, Monomial>, AlgebraElement> memo;
  auto power = [&](auto&& self, int k, const Monomial& m) -> AlgebraElement {
    if (k == 0)
      return m.is_unit() ? AlgebraElement::unit(n_colors)
                         : AlgebraElement::zero(n_colors);
    auto key = std::make_pair(k, m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    AlgebraElement out(n_colors);
    TensorElement dm = coproduct_of_monomial(m, n_colors);
    for (const auto& [pair, c] : dm.terms()) {
      AlgebraElement left =
          pair.first.is_unit()
              ? AlgebraElement::zero(n_colors)  // eps(1)*1 - 1 = 0
              : -AlgebraElement::from_monomial(n_colors, pair.first);
      if (left.is_zero()) continue;
      out = out + (left * self(self, k - 1, pair.second)).scaled(c);
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
  };
  AlgebraElement total(n_colors);
  Monomial m({g});
  for (int k = 0; k <= g.grade() + 1; ++k) total = total + power(power, k, m);
  return total;
}

Monomial omega(const PlanarTree& tree) {
  if (!is_layered_proper(tree))
    throw std::invalid_argument("omega needs a layered proper tree");
  std::vector<Generator> factors;
  for (const auto& path : breadth_first_nondegenerate(tree)) {
    const PlanarTree& node = tree.subtree(path);
    factors.emplace_back(node.color(), root_word(node.children()));
  }
  return Monomial(std::move(factors));
}

Monomial lambda_monomial(const PlanarTree& tree, DepthFirstVariant variant) {
  if (!is_reduced(tree))
    throw std::invalid_argument("lambda needs a reduced tree");
  std::vector<Generator> factors;
  for (const auto& path : depth_first_order(tree, variant, VertexFilter::all)) {
    const PlanarTree& node = tree.subtree(path);
    if (node.is_leaf()) continue;
    factors.emplace_back(node.color(), root_word(node.children()));
  }
  return Monomial(std::move(factors));
}

AlgebraElement antipode_breadth(const Generator& g, int n_colors) {
  AlgebraElement out(n_colors);
  for (const auto& tree :
       enumerate_trees(g.lower(), g.upper(), n_colors, TreeClass::layered)) {
    Int sign = layer_count(tree) % 2 == 0 ? 1 : -1;
    out.add(omega(tree), sign);
  }
  return out;
}

AlgebraElement antipode_ost(const Generator& g, int n_colors) {
  AlgebraElement out(n_colors);
  for (const auto& tree :
       enumerate_trees(g.lower(), g.upper(), n_colors, TreeClass::ost)) {
    Int sign = layer_count(tree) % 2 == 0 ? 1 : -1;
    out.add(omega(tree), sign);
  }
  return out;
}

AlgebraElement antipode_reduced(const Generator& g, int n_colors, AntipodeKind which) {
  DepthFirstVariant variant = DepthFirstVariant::right_up;
  if (which == AntipodeKind::L) variant = DepthFirstVariant::left_down;
  if (which == AntipodeKind::R) variant = DepthFirstVariant::right_down;
  AlgebraElement out(n_colors);
  for (const auto& tree :
       enumerate_trees(g.lower(), g.upper(), n_colors, TreeClass::reduced)) {
    Int sign = nonleaf_count(tree) % 2 == 0 ? 1 : -1;
    out.add(lambda_monomial(tree, variant), sign);
  }
  return out;
}

AlgebraElement antipode_generator(const Generator& g, int n_colors,
                                  AntipodeAlgorithm algorithm) {
  switch (algorithm) {
    case AntipodeAlgorithm::geometric: return antipode_geometric(g, n_colors);
    case AntipodeAlgorithm::recursive: return antipode_recursive(g, n_colors);
    case AntipodeAlgorithm::breadth: return antipode_breadth(g, n_colors);
    case AntipodeAlgorithm::ost: return antipode_ost(g, n_colors);
    case AntipodeAlgorithm::reduced_h: return antipode_reduced(g, n_colors, AntipodeKind::H);
    case AntipodeAlgorithm::reduced_l: return antipode_reduced(g, n_colors, AntipodeKind::L);
    case AntipodeAlgorithm::reduced_r: return antipode_reduced(g, n_colors, AntipodeKind::R);
  }
  throw std::invalid_argument("unknown antipode algorithm");
}

AlgebraElement antipode_h(const AlgebraElement& a) {
  return extend_antimultiplicative(a, &antipode_recursive);
}

AlgebraElement antipode_l(const AlgebraElement& a) {
  return extend_antimultiplicative(a, &antipode_inverse_recursive);
}

AlgebraElement antipode_r(const AlgebraElement& a) {
  return map_t(antipode_h(map_t(a)));
}

bool verify_antipode_axiom(const Generator& g, int n_colors, AntipodeKind which) {
  AlgebraElement e = AlgebraElement::generator(n_colors, g.upper(), g.lower());
  AlgebraElement expected = AlgebraElement::unit(n_colors).scaled(counit(e));
  int n = n_colors;
  auto from = [n](const Monomial& m) { return AlgebraElement::from_monomial(n, m); };

  switch (which) {
    case AntipodeKind::H: {
      AlgebraElement lhs(n), rhs(n);
      TensorElement de = coproduct(e);
      for (const auto& [k, c] : de.terms()) {
        lhs = lhs + (antipode_h(from(k.first)) * from(k.second)).scaled(c);
        rhs = rhs + (from(k.first) * antipode_h(from(k.second))).scaled(c);
      }
      return lhs == expected && rhs == expected;
    }
    case AntipodeKind::L: {
      AlgebraElement lhs(n), rhs(n);
      TensorElement de = coproduct(e);
      for (const auto& [k, c] : de.terms()) {
        lhs = lhs + (antipode_l(from(k.second)) * from(k.first)).scaled(c);
        rhs = rhs + (from(k.second) * antipode_l(from(k.first))).scaled(c);
      }
      return lhs == expected && rhs == expected;
    }
    case AntipodeKind::R: {
      // Axiom inside the t-transformed Hopf algebra: the transformed
      // coproduct is (t (x) t) o Delta o t and the product is opposite.
      AlgebraElement lhs(n), rhs(n);
      TensorElement de = coproduct(map_t(e));
      for (const auto& [k, c] : de.terms()) {
        AlgebraElement x = map_t(from(k.first));
        AlgebraElement y = map_t(from(k.second));
        lhs = lhs + (y * antipode_r(x)).scaled(c);
        rhs = rhs + (antipode_r(y) * x).scaled(c);
      }
      return lhs == expected && rhs == expected;
    }
  }
  throw std::invalid_argument("unknown antipode kind");
}

}  // namespace ihopf
