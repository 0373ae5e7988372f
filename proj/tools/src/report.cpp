#include "report.hpp"

#include <sstream>

namespace ringstar::cli {

Json element_json(const FiniteRing& ring, Element e) {
  if (ring.spec().kind == RingSpec::Kind::modular) return e.index;
  return ring.format(e);
}

Json elements_json(const FiniteRing& ring, const ElementSet& set) {
  Json out = Json::array();
  set.for_each([&](Element e) { out.push_back(element_json(ring, e)); });
  return out;
}

Json elements_json(const FiniteRing& ring, std::span<const Element> items) {
  Json out = Json::array();
  for (Element e : items) out.push_back(element_json(ring, e));
  return out;
}

Json ideal_json(const Ideal& ideal) {
  return Json{{"generators", elements_json(ideal.ring(), ideal.generators())},
              {"size", ideal.size()},
              {"elements", elements_json(ideal.ring(), ideal.elements())}};
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(element_json(m.ring(), m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

bool is_flat(const Json& value) {
  if (!value.is_array()) return !value.is_object();
  for (const auto& item : value) {
    if (item.is_structured()) return false;
  }
  return true;
}

std::string scalar(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < value.size(); ++i) out += (i ? ", " : "") + scalar(value[i]);
    return out + "]";
  }
  return value.dump();
}

void render(const Json& value, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) {
      if (is_flat(item)) {
        out << pad << key << ": " << scalar(item) << "\n";
      } else {
        out << pad << key << ":\n";
        render(item, depth + 1, out);
      }
    }
  } else if (value.is_array()) {
    for (const auto& item : value) {
      if (is_flat(item)) {
        out << pad << "- " << scalar(item) << "\n";
      } else {
        out << pad << "-\n";
        render(item, depth + 1, out);
      }
    }
  } else {
    out << pad << scalar(value) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

}  // namespace ringstar::cli
