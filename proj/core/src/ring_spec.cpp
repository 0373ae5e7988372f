#include "ringstar/ring_spec.hpp"

#include <cctype>

#include "ringstar/errors.hpp"
#include "ringstar/polynomial.hpp"

namespace ringstar {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

RingSpec RingSpec::modular_ring(std::uint64_t n) {
  RingSpec s;
  s.kind = Kind::modular;
  s.modulus = n;
  return s;
}

RingSpec RingSpec::polynomial_ring(std::uint32_t p, std::vector<std::uint32_t> monic) {
  RingSpec s;
  s.kind = Kind::polynomial_quotient;
  s.prime = p;
  s.polynomial = std::move(monic);
  return s;
}

RingSpec RingSpec::product_of(std::vector<RingSpec> factors) {
  RingSpec s;
  s.kind = Kind::product;
  s.children = std::move(factors);
  return s;
}

RingSpec RingSpec::quotient_of(RingSpec base, std::vector<std::string> generators) {
  RingSpec s;
  s.kind = Kind::quotient;
  s.children.push_back(std::move(base));
  s.generators = std::move(generators);
  return s;
}

std::string RingSpec::to_string() const {
  switch (kind) {
    case Kind::modular:
      return "Z/" + std::to_string(modulus);
    case Kind::polynomial_quotient:
      return "GF(" + std::to_string(prime) + ")[x]/(" + poly::format(polynomial) + ")";
    case Kind::product: {
      std::string out = "prod(";
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += ',';
        out += children[i].to_string();
      }
      return out + ")";
    }
    case Kind::quotient: {
      std::string out = "quot(" + children.front().to_string() + ";";
      for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out += ',';
        out += generators[i];
      }
      return out + ")";
    }
  }
  return {};
}

std::vector<std::string> split_top_level(std::string_view text, char separator) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == separator && depth == 0) {
      out.push_back(current);
      current.clear();
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) current += c;
  }
  out.push_back(current);
  return out;
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  RingSpec parse_all() {
    RingSpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SpecError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::uint64_t number() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a decimal number");
    }
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (value > (std::uint64_t{1} << 40)) fail("number too large");
    }
    return value;
  }

  /// Raw text up to the parenthesis closing the one just consumed; consumes it.
  std::string_view until_close(std::size_t& start) {
    start = pos_;
    int depth = 1;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')' && --depth == 0) {
        std::string_view inner = text_.substr(start, pos_ - start);
        ++pos_;
        return inner;
      }
      ++pos_;
    }
    fail("unbalanced parenthesis");
  }

  RingSpec parse_spec() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept("prod")) return parse_product();
    if (accept("quot")) return parse_quotient();
    if (accept("GF")) return parse_polynomial();
    if (accept("Z")) {
      expect("/");
      const std::size_t npos = pos_;
      const std::uint64_t n = number();
      if (n < 2) throw SpecError("modulus must be at least 2", npos);
      return RingSpec::modular_ring(n);
    }
    throw SpecError("expected 'Z/', 'GF(', 'prod(' or 'quot('", at);
  }

  RingSpec parse_polynomial() {
    expect("(");
    skip_ws();
    const std::size_t ppos = pos_;
    const std::uint64_t p = number();
    if (!is_prime(p)) throw SpecError("GF(p) requires a prime p, got " + std::to_string(p), ppos);
    expect(")");
    expect("[");
    expect("x");
    expect("]");
    expect("/");
    expect("(");
    std::size_t start = 0;
    std::string_view body = until_close(start);
    Coefficients f = poly::parse(body, static_cast<std::uint32_t>(p), start);
    if (f.size() < 2) throw SpecError("modulus polynomial must have degree >= 1", start);
    if (f.back() != 1) throw SpecError("modulus polynomial must be monic", start);
    return RingSpec::polynomial_ring(static_cast<std::uint32_t>(p), std::move(f));
  }

  RingSpec parse_product() {
    expect("(");
    std::vector<RingSpec> factors;
    factors.push_back(parse_spec());
    while (accept(",")) factors.push_back(parse_spec());
    expect(")");
    if (factors.size() < 2) fail("prod(...) needs at least two factors");
    return RingSpec::product_of(std::move(factors));
  }

  RingSpec parse_quotient() {
    expect("(");
    RingSpec base = parse_spec();
    expect(";");
    std::size_t start = 0;
    std::string_view body = until_close(start);
    std::vector<std::string> gens = split_top_level(body, ',');
    for (const auto& g : gens) {
      if (g.empty()) throw SpecError("empty quotient generator", start);
    }
    return RingSpec::quotient_of(std::move(base), std::move(gens));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingSpec parse_ring_spec(std::string_view text) { return SpecParser(text).parse_all(); }

}  // namespace ringstar
