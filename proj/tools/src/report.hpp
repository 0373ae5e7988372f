#pragma once

#include <span>
#include <string>

#include "json.hpp"
#include "ringstar/ideal.hpp"
#include "ringstar/matrix.hpp"

namespace ringstar::cli {

using Json = nlohmann::ordered_json;

/// Integers for Z/n, canonical strings otherwise.
Json element_json(const FiniteRing& ring, Element e);
Json elements_json(const FiniteRing& ring, const ElementSet& set);
Json elements_json(const FiniteRing& ring, std::span<const Element> items);
Json ideal_json(const Ideal& ideal);
Json matrix_json(const Matrix& m);

/// Indented "key: value" lines; arrays of scalars stay on one line.
std::string render_text(const Json& report);

}  // namespace ringstar::cli
