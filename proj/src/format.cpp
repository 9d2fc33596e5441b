#include "ihopf/format.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ihopf {

using nlohmann::json;

std::pair<Color, ColorWord> parse_generator_literal(const std::string& text) {
  if (text.size() < 4 || text[0] != 'Y' || text[1] != '^')
    throw std::invalid_argument("generator literal must look like Y^i_u");
  std::size_t underscore = text.find('_', 2);
  if (underscore == std::string::npos || underscore == 2 ||
      underscore + 1 == text.size())
    throw std::invalid_argument("generator literal must look like Y^i_u");
  std::size_t pos = 0;
  std::string upper_part = text.substr(2, underscore - 2);
  int upper = std::stoi(upper_part, &pos);
  if (pos != upper_part.size())
    throw std::invalid_argument("bad upper color in generator literal");
  ColorWord lower = ColorWord::parse(text.substr(underscore + 1));
  return {upper, lower};
}

std::string generator_literal(const Generator& g) {
  return "Y^" + std::to_string(g.upper()) + "_" + g.lower().str();
}

namespace {

std::string monomial_text(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (std::size_t j = 0; j < m.length(); ++j) {
    if (j) out += ' ';
    out += generator_literal(m.factors()[j]);
  }
  return out;
}

std::string monomial_latex(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& g : m.factors())
    out += "Y_{" + g.lower().str() + "}^{" + std::to_string(g.upper()) + "}";
  return out;
}

}  // namespace

std::string element_text(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out += '-';
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.str() + "\xc2\xb7";  // middle dot
    out += monomial_text(m);
  }
  return out;
}

std::string element_latex(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out += '-';
      first = false;
    } else {
      out += c < 0 ? '-' : '+';
    }
    if (mag != 1) out += mag.str();
    out += monomial_latex(m);
  }
  return out;
}

json element_json(const AlgebraElement& a) {
  json terms = json::array();
  for (const auto& [m, c] : a.terms()) {
    json factors = json::array();
    for (const auto& g : m.factors())
      factors.push_back({{"upper", g.upper()}, {"lower", g.lower().str()}});
    terms.push_back({{"coeff", c.str()}, {"factors", factors}});
  }
  return terms;
}

AlgebraElement element_from_json(int n_colors, const json& data) {
  AlgebraElement out(n_colors);
  for (const auto& term : data) {
    std::vector<Generator> factors;
    for (const auto& f : term.at("factors"))
      factors.emplace_back(f.at("upper").get<int>(),
                           ColorWord::parse(f.at("lower").get<std::string>()));
    out.add(Monomial(std::move(factors)), Int(term.at("coeff").get<std::string>()));
  }
  return out;
}

json tree_json(const PlanarTree& tree) {
  json children = json::array();
  for (const auto& child : tree.children()) children.push_back(tree_json(child));
  return {{"color", tree.color()}, {"children", children}};
}

PlanarTree tree_from_json(const json& data) {
  std::vector<PlanarTree> children;
  for (const auto& child : data.at("children"))
    children.push_back(tree_from_json(child));
  return PlanarTree(data.at("color").get<int>(), std::move(children));
}

std::string rational_text(const Rational& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) out << '/' << denominator(value);
  return out.str();
}

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(Int(text));
  Int num(text.substr(0, slash));
  Int den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

std::string coefficient_text(const FreeCoefficient& value) {
  if (value.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, c] : value.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += '-';
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || word.empty()) out += rational_text(mag);
    if (mag != 1 && !word.empty()) out += "\xc2\xb7";
    for (std::size_t j = 0; j < word.size(); ++j) {
      if (j) out += ' ';
      out += word[j];
    }
  }
  return out;
}

json coefficient_json(const FreeCoefficient& value) {
  json out = json::array();
  for (const auto& [word, c] : value.terms())
    out.push_back({{"c", rational_text(c)}, {"word", word}});
  return out;
}

FreeCoefficient coefficient_from_json(const json& data) {
  FreeCoefficient out;
  for (const auto& term : data) {
    SymbolWord word;
    for (const auto& sym : term.at("word")) word.push_back(sym.get<std::string>());
    out.add(word, parse_rational(term.at("c").get<std::string>()));
  }
  return out;
}

std::string series_text(const NCSeries& series) {
  std::ostringstream out;
  out << "series n=" << series.n_components() << " order=" << series.truncation_order()
      << "\n";
  for (int i = 1; i <= series.n_components(); ++i)
    out << "F^" << i << " = z_" << i << " + ...\n";
  for (const auto& [key, value] : series.stored())
    out << "f^" << key.first << "_" << key.second.str() << " = "
        << coefficient_text(value) << "\n";
  return out.str();
}

json series_json(const NCSeries& series) {
  json coeffs = json::array();
  for (const auto& [key, value] : series.stored())
    coeffs.push_back({{"i", key.first},
                      {"w", key.second.str()},
                      {"value", coefficient_json(value)}});
  return {{"n", series.n_components()},
          {"order", series.truncation_order()},
          {"coeffs", coeffs}};
}

NCSeries series_from_json(const json& data) {
  NCSeries out(data.at("n").get<int>(), data.at("order").get<int>());
  for (const auto& entry : data.at("coeffs"))
    out.set_coeff(entry.at("i").get<int>(),
                  ColorWord::parse(entry.at("w").get<std::string>()),
                  coefficient_from_json(entry.at("value")));
  return out;
}

}  // namespace ihopf
