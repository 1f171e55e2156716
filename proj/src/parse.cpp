#include "ffor/parse.hpp"

#include <cctype>
#include <string>

#include "ffor/error.hpp"

namespace ffor {

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const RingPtr& ring)
      : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = accept('-');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a positive integer exponent");
      }
      std::uint64_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
        if (n > 0xffffffffULL) fail("exponent too large");
      }
      if (n == 0) fail("exponent must be positive");
      return base.pow(n);
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Coeff p = ring_->field().characteristic();
      std::uint64_t value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = (value * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % p;
      }
      return Polynomial::constant(ring_, static_cast<Coeff>(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '\'')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto index = ring_->variable_index(name);
      if (!index) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *index);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return PolynomialParser(text, ring).parse();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text,
                                              const RingPtr& ring) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos || text[begin] != '[' || text[end] != ']') {
    throw ParseError("expected a bracketed list '[f1, f2, ...]'");
  }
  std::string_view inner = text.substr(begin + 1, end - begin - 1);
  std::vector<Polynomial> out;
  if (inner.find_first_not_of(" \t") == std::string_view::npos) return out;

  // Split on top-level commas.
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= inner.size(); ++i) {
    if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
      Polynomial f = parse_polynomial(inner.substr(start, i - start), ring);
      if (!f.is_zero()) out.push_back(std::move(f));
      start = i + 1;
    } else if (inner[i] == '(') {
      ++depth;
    } else if (inner[i] == ')') {
      --depth;
    }
  }
  return out;
}

}  // namespace ffor
