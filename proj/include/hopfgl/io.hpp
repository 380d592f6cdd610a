#ifndef HOPFGL_IO_HPP
#define HOPFGL_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "hopfgl/fgl.hpp"
#include "hopfgl/hopf.hpp"
#include "hopfgl/hopfext.hpp"

namespace hopfgl
{

using Json = nlohmann::ordered_json;

// Polynomial: [{"monomial": {"b1": 2}, "coefficient": "3/1"}, ...] in
// canonical term order.
Json to_json(const PolyElement &p);
PolyElement poly_from_json(const Ring &ring, const Json &j);

// Series: [{"exponents": [i, j], "coefficient": <polynomial>}, ...] over the
// nonzero coefficients in graded-lex order.
Json to_json(const Series1 &s);
Json to_json(const Series2 &s);
Series1 series1_from_json(const Ring &ring, unsigned order, const Json &j);
Series2 series2_from_json(const Ring &ring, unsigned order, const Json &j);

// Formal group law selector: "additive", "multiplicative",
// "mishchenko-model", or a path to a JSON document
//   {"name": ..., "base_generators": [{"name": "a1", "weight": 1}, ...],
//    "logarithm": ["1", "a1", ...]}            coefficients of x, x^2, ...
// or, instead of "logarithm",
//   "law": [{"u": 1, "v": 0, "coefficient": "1"}, ...].
FormalGroupLaw load_law(std::string_view selector, unsigned order);
FormalGroupLaw law_from_json(const Json &doc, unsigned order);

// Hopf selector: "beta", "trivial", or a path to a JSON document
//   {"name": ..., "generators": [{"name": "b1", "weight": 1}, ...],
//    "diagonal": {"b1": "b1.L + b1.R", ...}, "cocommutative": true}
// Diagonal expressions may use base generators and "<g>.L"/"<g>.R".
Hopf load_hopf(std::string_view selector, const Ring &base, unsigned order);
Hopf hopf_from_json(const Json &doc, const Ring &base);

// Twist series document {"coefficients": ["1", "b1", "b2", ...]}, the
// coefficients of x, x^2, ... as expressions over the carrier.
CoveringSeries load_twist_series(const std::string &path, const Hopf &hopf, unsigned order);
CoveringSeries twist_series_from_json(const Json &doc, const Hopf &hopf, unsigned order);

Json read_json_file(const std::string &path);

} // namespace hopfgl

#endif
