#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "ihopf/trees.hpp"
#include "ihopf/words.hpp"

namespace ihopf {

using Int = boost::multiprecision::cpp_int;

/// Basis symbol Y_u^i with |u| >= 2. Words of length one never become
/// generators: AlgebraElement::generator applies the Y_j^i = delta_ij * 1
/// convention at construction, so downstream code never sees them.
class Generator {
public:
  Generator(Color upper, ColorWord lower);

  Color upper() const { return upper_; }
  const ColorWord& lower() const { return lower_; }
  int grade() const { return static_cast<int>(lower_.size()) - 1; }

  auto operator<=>(const Generator&) const = default;

private:
  Color upper_;
  ColorWord lower_;
};

/// Noncommutative word in generators; the empty word is the unit.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<Generator> factors);

  const std::vector<Generator>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  std::size_t length() const { return factors_.size(); }
  int grade() const;

  Monomial concat(const Monomial& other) const;
  Monomial reversed() const;

  bool operator==(const Monomial&) const = default;
  /// Canonical term order: total grade, then length, then the (i, u) pairs.
  std::strong_ordering operator<=>(const Monomial& other) const;

private:
  std::vector<Generator> factors_;
};

/// Integer-linear combination of monomials over a fixed color count N.
/// Zero coefficients are never stored; the map order is the canonical
/// serialization order.
class AlgebraElement {
public:
  explicit AlgebraElement(int n_colors);

  static AlgebraElement zero(int n_colors);
  static AlgebraElement unit(int n_colors);
  static AlgebraElement from_monomial(int n_colors, Monomial m, Int coeff = 1);
  /// Y_u^i with the delta convention: |u| = 1 yields the unit when i = u(1)
  /// and zero otherwise. Throws when u is empty or a color exceeds N.
  static AlgebraElement generator(int n_colors, Color upper, const ColorWord& lower);

  int n_colors() const { return n_colors_; }
  const std::map<Monomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const Monomial& m) const;

  AlgebraElement& add(const Monomial& m, const Int& coeff);
  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-(const AlgebraElement& other) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const AlgebraElement& other) const;
  AlgebraElement scaled(const Int& factor) const;

  bool operator==(const AlgebraElement&) const = default;

private:
  int n_colors_;
  std::map<Monomial, Int> terms_;
};

/// Element of H (x) H with the componentwise product.
class TensorElement {
public:
  explicit TensorElement(int n_colors);

  static TensorElement zero(int n_colors);
  static TensorElement unit(int n_colors);
  static TensorElement pure(const AlgebraElement& left, const AlgebraElement& right);

  int n_colors() const { return n_colors_; }
  const std::map<std::pair<Monomial, Monomial>, Int>& terms() const { return terms_; }

  TensorElement& add(const Monomial& left, const Monomial& right, const Int& coeff);
  TensorElement operator+(const TensorElement& other) const;
  TensorElement operator-(const TensorElement& other) const;
  TensorElement operator*(const TensorElement& other) const;
  TensorElement flipped() const;

  bool operator==(const TensorElement&) const = default;

private:
  int n_colors_;
  std::map<std::pair<Monomial, Monomial>, Int> terms_;
};

// Structure maps --------------------------------------------------------------

TensorElement coproduct(const AlgebraElement& a);
TensorElement coproduct_op(const AlgebraElement& a);
Int counit(const AlgebraElement& a);

/// Anti-automorphism s: reverses factors and reflects each lower word.
AlgebraElement map_s(const AlgebraElement& a);
/// Anti-automorphism t: reverses factors, fixes each generator.
AlgebraElement map_t(const AlgebraElement& a);
/// Automorphism alpha: reflects each lower word in place.
AlgebraElement map_alpha(const AlgebraElement& a);

using Endomorphism = std::function<AlgebraElement(const AlgebraElement&)>;

/// m o (f (x) g) o Delta applied to a.
AlgebraElement convolution(const Endomorphism& f, const Endomorphism& g,
                           const AlgebraElement& a);

// Antipodes -------------------------------------------------------------------

enum class AntipodeAlgorithm {
  geometric,  // convolution powers of (u - I); unmemoized oracle
  recursive,  // memoized Milnor-Moore style recursion on generators
  breadth,    // signed sum of Omega over layered trees
  ost,        // signed sum of Omega over order-reduced simple trees
  reduced_h,  // signed sum of Lambda over reduced trees, right-up order
  reduced_l,  // same, left-down order: the inverse antipode S_L
  reduced_r,  // same, right-down order: the right Lagrange antipode S_R
};

AlgebraElement antipode_generator(const Generator& g, int n_colors,
                                  AntipodeAlgorithm algorithm);

AlgebraElement antipode_geometric(const Generator& g, int n_colors);
AlgebraElement antipode_recursive(const Generator& g, int n_colors);
AlgebraElement antipode_inverse_recursive(const Generator& g, int n_colors);
AlgebraElement antipode_breadth(const Generator& g, int n_colors);
AlgebraElement antipode_ost(const Generator& g, int n_colors);

enum class AntipodeKind { H, L, R };

AlgebraElement antipode_reduced(const Generator& g, int n_colors, AntipodeKind which);

/// Antimultiplicative extensions of the memoized recursions to arbitrary
/// elements: S(gh) = S(h)S(g), S(1) = 1.
AlgebraElement antipode_h(const AlgebraElement& a);
AlgebraElement antipode_l(const AlgebraElement& a);
/// t o S_H o t on elements.
AlgebraElement antipode_r(const AlgebraElement& a);

/// Product of Y(x) over non-degenerate vertices in breadth-first order.
Monomial omega(const PlanarTree& tree);
/// Product of Y(x) over non-leaf vertices of a reduced tree in the chosen
/// depth-first order.
Monomial lambda_monomial(const PlanarTree& tree, DepthFirstVariant variant);

/// Evaluates both antipode axiom sides exactly for the chosen Hopf algebra
/// (H with Delta, L with the co-opposite pairing, R in the t-transform).
bool verify_antipode_axiom(const Generator& g, int n_colors, AntipodeKind which);

}  // namespace ihopf
