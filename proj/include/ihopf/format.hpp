#pragma once

#include <string>
#include <utility>

#include <nlohmann/json_fwd.hpp>

#include "ihopf/algebra.hpp"
#include "ihopf/series.hpp"
#include "ihopf/trees.hpp"
#include "ihopf/words.hpp"

namespace ihopf {

// Generators ------------------------------------------------------------------

/// Parses "Y^1_1234" (digit word) or "Y^12_1,3,12" (comma word).
std::pair<Color, ColorWord> parse_generator_literal(const std::string& text);
std::string generator_literal(const Generator& g);

// Algebra elements -------------------------------------------------------------

/// "-Y^1_1234 + 2·Y^1_11 Y^1_11"; the zero element prints as "0".
std::string element_text(const AlgebraElement& a);
/// "-Y_{1234}^{1}+2Y_{11}^{1}Y_{11}^{1}", mirroring the Y_u^i notation.
std::string element_latex(const AlgebraElement& a);
nlohmann::json element_json(const AlgebraElement& a);
AlgebraElement element_from_json(int n_colors, const nlohmann::json& data);

// Trees -------------------------------------------------------------------------

nlohmann::json tree_json(const PlanarTree& tree);
PlanarTree tree_from_json(const nlohmann::json& data);

// Rationals and coefficients ----------------------------------------------------

std::string rational_text(const Rational& value);
Rational parse_rational(const std::string& text);

std::string coefficient_text(const FreeCoefficient& value);
nlohmann::json coefficient_json(const FreeCoefficient& value);
FreeCoefficient coefficient_from_json(const nlohmann::json& data);

// Series ------------------------------------------------------------------------

std::string series_text(const NCSeries& series);
nlohmann::json series_json(const NCSeries& series);
NCSeries series_from_json(const nlohmann::json& data);

}  // namespace ihopf
