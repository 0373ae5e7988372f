#include "ringstar/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "ringstar/errors.hpp"

namespace ringstar::poly {

void trim(Coefficients& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Coefficients add(const Coefficients& a, const Coefficients& b, std::uint32_t p) {
  Coefficients out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t sum = (i < a.size() ? a[i] : 0) + std::uint64_t{i < b.size() ? b[i] : 0u};
    out[i] = static_cast<std::uint32_t>(sum % p);
  }
  trim(out);
  return out;
}

Coefficients negate(const Coefficients& a, std::uint32_t p) {
  Coefficients out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] == 0 ? 0 : p - a[i];
  return out;
}

Coefficients multiply(const Coefficients& a, const Coefficients& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  Coefficients out(acc.begin(), acc.end());
  trim(out);
  return out;
}

Coefficients remainder(Coefficients a, const Coefficients& monic, std::uint32_t p) {
  trim(a);
  const std::size_t deg = monic.size() - 1;
  while (a.size() > deg) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - deg;
    for (std::size_t i = 0; i <= deg; ++i) {
      const std::uint64_t sub = lead * monic[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, std::uint32_t p, std::size_t base)
      : text_(text), p_(p), base_(base) {}

  Coefficients run() {
    Coefficients out;
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = take() == '-';
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      term(out, negative);
      skip_ws();
    }
    trim(out);
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw SpecError(what, base_ + pos_); }

  std::uint64_t number() {
    std::uint64_t value = 0;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(take() - '0');
      if (value > (std::uint64_t{1} << 40)) fail("number too large");
    }
    return value;
  }

  void term(Coefficients& out, bool negative) {
    std::uint64_t coef = 1;
    std::size_t degree = 0;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = number();
      have_coef = true;
      skip_ws();
      if (peek() == '*') {
        take();
        skip_ws();
        if (peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    if (peek() == 'x') {
      take();
      skip_ws();
      degree = 1;
      if (peek() == '^') {
        take();
        skip_ws();
        degree = static_cast<std::size_t>(number());
        if (degree > 64) fail("degree too large");
      }
    } else if (!have_coef) {
      fail("expected coefficient or 'x'");
    }
    if (out.size() <= degree) out.resize(degree + 1, 0);
    std::uint64_t c = coef % p_;
    if (negative) c = (p_ - c) % p_;
    out[degree] = static_cast<std::uint32_t>((out[degree] + c) % p_);
  }

  std::string_view text_;
  std::uint32_t p_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

Coefficients parse(std::string_view text, std::uint32_t p, std::size_t base_offset) {
  return TermParser(text, p, base_offset).run();
}

std::string format(const Coefficients& c) {
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c[k]);
      continue;
    }
    if (c[k] != 1) out += std::to_string(c[k]) + "*";
    out += 'x';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::uint32_t encode(const Coefficients& c, std::uint32_t p) {
  std::uint64_t index = 0;
  for (std::size_t k = c.size(); k-- > 0;) index = index * p + c[k];
  return static_cast<std::uint32_t>(index);
}

Coefficients decode(std::uint32_t index, std::uint32_t p, std::size_t degree) {
  Coefficients c(degree, 0);
  for (std::size_t k = 0; k < degree; ++k) {
    c[k] = index % p;
    index /= p;
  }
  trim(c);
  return c;
}

}  // namespace ringstar::poly
