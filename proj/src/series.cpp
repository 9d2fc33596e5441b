#include "ihopf/series.hpp"

#include <stdexcept>

namespace ihopf {

FreeCoefficient FreeCoefficient::zero() { return FreeCoefficient(); }

FreeCoefficient FreeCoefficient::one() { return scalar(1); }

FreeCoefficient FreeCoefficient::scalar(Rational value) {
  FreeCoefficient out;
  if (value != 0) out.terms_[SymbolWord{}] = std::move(value);
  return out;
}

FreeCoefficient FreeCoefficient::symbol(std::string name) {
  FreeCoefficient out;
  out.terms_[SymbolWord{std::move(name)}] = 1;
  return out;
}

FreeCoefficient& FreeCoefficient::add(const SymbolWord& word, const Rational& coeff) {
  auto it = terms_.find(word);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(word, coeff);
    return *this;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
  return *this;
}

FreeCoefficient FreeCoefficient::operator+(const FreeCoefficient& other) const {
  FreeCoefficient out = *this;
  for (const auto& [w, c] : other.terms_) out.add(w, c);
  return out;
}

FreeCoefficient FreeCoefficient::operator-(const FreeCoefficient& other) const {
  FreeCoefficient out = *this;
  for (const auto& [w, c] : other.terms_) out.add(w, -c);
  return out;
}

FreeCoefficient FreeCoefficient::operator-() const {
  FreeCoefficient out;
  for (const auto& [w, c] : terms_) out.terms_[w] = -c;
  return out;
}

FreeCoefficient FreeCoefficient::operator*(const FreeCoefficient& other) const {
  FreeCoefficient out;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : other.terms_) {
      SymbolWord joined = w1;
      joined.insert(joined.end(), w2.begin(), w2.end());
      out.add(joined, c1 * c2);
    }
  return out;
}

bool FreeCoefficient::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

NCSeries::NCSeries(int n_components, int truncation_order)
    : n_(n_components), order_(truncation_order) {
  if (n_ < 1) throw std::invalid_argument("series needs at least one component");
  if (order_ < 1) throw std::invalid_argument("truncation order must be >= 1");
}

NCSeries NCSeries::identity(int n_components, int truncation_order) {
  return NCSeries(n_components, truncation_order);
}

FreeCoefficient NCSeries::coeff(int component, const ColorWord& w) const {
  if (component < 1 || component > n_)
    throw std::out_of_range("series component out of range");
  if (w.empty() || static_cast<int>(w.size()) > order_)
    throw std::out_of_range("word length outside 1..D");
  if (w.size() == 1)
    return w.at(0) == component ? FreeCoefficient::one() : FreeCoefficient::zero();
  auto it = coeffs_.find({component, w});
  return it == coeffs_.end() ? FreeCoefficient::zero() : it->second;
}

void NCSeries::set_coeff(int component, const ColorWord& w, FreeCoefficient value) {
  if (component < 1 || component > n_)
    throw std::out_of_range("series component out of range");
  if (static_cast<int>(w.size()) < 2 || static_cast<int>(w.size()) > order_)
    throw std::invalid_argument("stored coefficients need 2 <= |w| <= D");
  if (!w.fits(n_)) throw std::invalid_argument("word uses colors beyond N");
  if (value.is_zero())
    coeffs_.erase({component, w});
  else
    coeffs_[{component, w}] = std::move(value);
}

namespace {

void enumerate_words(int n, int length, std::vector<Color>& current,
                     const std::function<void(const ColorWord&)>& visit) {
  if (static_cast<int>(current.size()) == length) {
    visit(ColorWord(current));
    return;
  }
  for (Color c = 1; c <= n; ++c) {
    current.push_back(c);
    enumerate_words(n, length, current, visit);
    current.pop_back();
  }
}

void for_each_word(int n, int length, const std::function<void(const ColorWord&)>& visit) {
  std::vector<Color> current;
  enumerate_words(n, length, current, visit);
}

}  // namespace

NCSeries substitute(const NCSeries& outer, const NCSeries& inner) {
  if (outer.n_components() != inner.n_components() ||
      outer.truncation_order() != inner.truncation_order())
    throw std::invalid_argument("substitution needs matching N and order");
  int n = outer.n_components();
  int order = outer.truncation_order();
  NCSeries out(n, order);
  for (int i = 1; i <= n; ++i) {
    for (int p = 2; p <= order; ++p) {
      for_each_word(n, p, [&](const ColorWord& u) {
        FreeCoefficient h = FreeCoefficient::zero();
        for (int q = 1; q <= p; ++q) {
          for (const auto& pi : enumerate_interval_partitions(u, q, n, true)) {
            FreeCoefficient term = outer.coeff(i, pi.block_colors());
            if (term.is_zero()) continue;
            for (std::size_t k = 0; k < pi.block_count() && !term.is_zero(); ++k) {
              if (pi.block_sizes()[k] == 1) continue;  // inner first order is delta
              term = term * inner.coeff(pi.block_colors().at(k), pi.block(k));
            }
            h = h + term;
          }
        }
        if (!h.is_zero()) out.set_coeff(i, u, std::move(h));
      });
    }
  }
  return out;
}

FreeCoefficient pairing(const AlgebraElement& a, const NCSeries& series) {
  FreeCoefficient out = FreeCoefficient::zero();
  for (const auto& [m, c] : a.terms()) {
    FreeCoefficient product = FreeCoefficient::scalar(Rational(c));
    for (const auto& g : m.factors()) {
      if (g.grade() + 1 > series.truncation_order())
        throw std::invalid_argument("generator word exceeds the truncation order");
      product = product * series.coeff(g.upper(), g.lower());
      if (product.is_zero()) break;
    }
    out = out + product;
  }
  return out;
}

namespace {

NCSeries inverse_by_antipode(const NCSeries& series, AntipodeKind kind) {
  int n = series.n_components();
  int order = series.truncation_order();
  NCSeries out(n, order);
  for (int j = 1; j <= n; ++j) {
    for (int p = 2; p <= order; ++p) {
      for_each_word(n, p, [&](const ColorWord& v) {
        Generator y(j, v);
        AlgebraElement s = kind == AntipodeKind::L
                               ? antipode_inverse_recursive(y, n)
                               : map_t(antipode_recursive(y, n));
        FreeCoefficient value = pairing(s, series);
        if (!value.is_zero()) out.set_coeff(j, v, std::move(value));
      });
    }
  }
  return out;
}

}  // namespace

NCSeries left_inverse(const NCSeries& series) {
  return inverse_by_antipode(series, AntipodeKind::L);
}

NCSeries right_inverse(const NCSeries& series) {
  return inverse_by_antipode(series, AntipodeKind::R);
}

bool verify_inverse(const NCSeries& candidate, const NCSeries& series,
                    InverseSide side) {
  NCSeries composed = side == InverseSide::left ? substitute(candidate, series)
                                                : substitute(series, candidate);
  return composed == NCSeries::identity(series.n_components(),
                                        series.truncation_order());
}

GeneralSeries::GeneralSeries(int n_variables, int truncation_order)
    : n_(n_variables), order_(truncation_order) {
  if (n_ < 1) throw std::invalid_argument("series needs at least one variable");
  if (order_ < 0) throw std::invalid_argument("truncation order must be >= 0");
}

FreeCoefficient GeneralSeries::coeff(const ColorWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? FreeCoefficient::zero() : it->second;
}

void GeneralSeries::set_coeff(const ColorWord& w, FreeCoefficient value) {
  if (static_cast<int>(w.size()) > order_)
    throw std::invalid_argument("word length beyond the truncation order");
  if (!w.fits(n_)) throw std::invalid_argument("word uses variables beyond N");
  if (value.is_zero())
    terms_.erase(w);
  else
    terms_[w] = std::move(value);
}

bool GeneralSeries::has_constant_term() const {
  return terms_.count(ColorWord()) > 0;
}

GeneralSeries GeneralSeries::operator+(const GeneralSeries& other) const {
  if (n_ != other.n_ || order_ != other.order_)
    throw std::invalid_argument("series shapes differ");
  GeneralSeries out = *this;
  for (const auto& [w, c] : other.terms_) out.set_coeff(w, out.coeff(w) + c);
  return out;
}

GeneralSeries GeneralSeries::operator*(const GeneralSeries& other) const {
  if (n_ != other.n_ || order_ != other.order_)
    throw std::invalid_argument("series shapes differ");
  GeneralSeries out(n_, order_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : other.terms_) {
      if (static_cast<int>(w1.size() + w2.size()) > order_) continue;
      ColorWord joined = w1.concat(w2);
      out.set_coeff(joined, out.coeff(joined) + c1 * c2);
    }
  return out;
}

GeneralSeries substitute_general(const GeneralSeries& outer,
                                 const std::vector<GeneralSeries>& inner) {
  if (static_cast<int>(inner.size()) != outer.n_variables())
    throw std::invalid_argument("need one inner series per outer variable");
  for (const auto& g : inner)
    if (g.has_constant_term())
      throw std::invalid_argument("inner series must have no constant term");
  int n = inner.front().n_variables();
  int order = inner.front().truncation_order();
  for (const auto& g : inner)
    if (g.n_variables() != n || g.truncation_order() != order)
      throw std::invalid_argument("inner series shapes differ");

  GeneralSeries out(n, order);
  for (const auto& [w, f] : outer.terms()) {
    GeneralSeries product(n, order);
    product.set_coeff(ColorWord(), FreeCoefficient::one());
    for (Color letter : w.letters()) product = product * inner[letter - 1];
    for (const auto& [v, c] : product.terms())
      out.set_coeff(v, out.coeff(v) + f * c);
  }
  return out;
}

}  // namespace ihopf
