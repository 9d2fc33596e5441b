#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ihopf/algebra.hpp"
#include "ihopf/words.hpp"

namespace ihopf {

using Rational = boost::multiprecision::cpp_rational;

/// Word in named symbolic constants; constants do not commute with each
/// other but commute with the series variables.
using SymbolWord = std::vector<std::string>;

/// Element of the free associative algebra over Q on named symbols.
class FreeCoefficient {
public:
  FreeCoefficient() = default;

  static FreeCoefficient zero();
  static FreeCoefficient one();
  static FreeCoefficient scalar(Rational value);
  static FreeCoefficient symbol(std::string name);

  const std::map<SymbolWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FreeCoefficient& add(const SymbolWord& word, const Rational& coeff);
  FreeCoefficient operator+(const FreeCoefficient& other) const;
  FreeCoefficient operator-(const FreeCoefficient& other) const;
  FreeCoefficient operator-() const;
  FreeCoefficient operator*(const FreeCoefficient& other) const;

  /// True when every term is a rational multiple of the empty word.
  bool is_scalar() const;

  bool operator==(const FreeCoefficient&) const = default;

private:
  std::map<SymbolWord, Rational> terms_;
};

/// N-tuple of noncommutative power series, tangent to the identity:
/// F^j(z) = z_j + sum over |u| >= 2 of f_u^j z_u, truncated at order D.
/// First-order coefficients are implied, never stored.
class NCSeries {
public:
  NCSeries(int n_components, int truncation_order);

  static NCSeries identity(int n_components, int truncation_order);

  int n_components() const { return n_; }
  int truncation_order() const { return order_; }
  const std::map<std::pair<int, ColorWord>, FreeCoefficient>& stored() const {
    return coeffs_;
  }

  /// delta_ij for |w| = 1; stored value (default zero) for 2 <= |w| <= D.
  FreeCoefficient coeff(int component, const ColorWord& w) const;
  void set_coeff(int component, const ColorWord& w, FreeCoefficient value);

  bool operator==(const NCSeries&) const = default;

private:
  int n_;
  int order_;
  std::map<std::pair<int, ColorWord>, FreeCoefficient> coeffs_;
};

/// (F o G): substitutes G into F, truncated at the common order.
NCSeries substitute(const NCSeries& outer, const NCSeries& inner);

/// theta: <Y_{u_1}^{i_1} ... Y_{u_q}^{i_q}, F> = f_{u_1}^{i_1} ... f_{u_q}^{i_q},
/// extended linearly. Throws when a generator exceeds the truncation order.
FreeCoefficient pairing(const AlgebraElement& a, const NCSeries& series);

/// G with g_v^j = <S_L(Y_v^j), F>; satisfies substitute(G, F) = identity.
NCSeries left_inverse(const NCSeries& series);

/// H with h_v^j = <S_R(Y_v^j), F>; satisfies substitute(F, H) = identity.
NCSeries right_inverse(const NCSeries& series);

enum class InverseSide { left, right };

/// left: candidate o series == identity; right: series o candidate == identity.
bool verify_inverse(const NCSeries& candidate, const NCSeries& series,
                    InverseSide side);

/// Single power series with a constant term allowed; exists to express
/// general substitution, in particular the non-associativity witness.
class GeneralSeries {
public:
  GeneralSeries(int n_variables, int truncation_order);

  int n_variables() const { return n_; }
  int truncation_order() const { return order_; }
  const std::map<ColorWord, FreeCoefficient>& terms() const { return terms_; }

  FreeCoefficient coeff(const ColorWord& w) const;
  void set_coeff(const ColorWord& w, FreeCoefficient value);
  bool has_constant_term() const;

  GeneralSeries operator+(const GeneralSeries& other) const;
  GeneralSeries operator*(const GeneralSeries& other) const;

  bool operator==(const GeneralSeries&) const = default;

private:
  int n_;
  int order_;
  std::map<ColorWord, FreeCoefficient> terms_;
};

/// Substitutes inner[j] for variable j in the outer series. Every inner
/// series must lack a constant term.
GeneralSeries substitute_general(const GeneralSeries& outer,
                                 const std::vector<GeneralSeries>& inner);

}  // namespace ihopf
