#include "ellbundle/cohomology.hpp"
#include "ellbundle/error.hpp"

#include <cctype>

namespace ellbundle {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  GradedClass parse() {
    GradedClass x = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("parse", what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  bool eat_minus() { return eat("-") || eat("−"); }
  bool eat_times() { return eat("*") || eat("·"); }

  GradedClass expr() {
    GradedClass acc = term();
    while (true) {
      if (eat("+")) {
        acc += term();
      } else if (eat_minus()) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  GradedClass term() {
    GradedClass acc = unary();
    while (true) {
      if (eat_times()) {
        acc *= unary();
      } else if (eat("/")) {
        const GradedClass d = unary();
        if (d.max_weight() > 0 || d.constant_term() == 0) fail("division only by nonzero constants");
        acc = Rational(1) / d.constant_term() * acc;
      } else {
        return acc;
      }
    }
  }

  GradedClass unary() {
    if (eat_minus()) return -unary();
    if (eat("+")) return unary();
    return power();
  }

  GradedClass power() {
    GradedClass base = atom();
    if (!eat("^")) return base;
    skip_space();
    bool negative = eat_minus();
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return pow(base, negative ? -k : k);
  }

  GradedClass atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (eat("(")) {
      GradedClass inner = expr();
      if (!eat(")")) fail("expected ')'");
      return inner;
    }
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return GradedClass::constant(ring_, Rational(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }
    const std::size_t start = pos_;
    for (std::string_view greek : {"σ", "ζ", "α"}) {
      if (text_.substr(pos_, greek.size()) == greek) {
        pos_ += greek.size();
        return GradedClass::generator(ring_, greek);
      }
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("unexpected '" + std::string(1, ch) + "'");
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "exp") {
      if (!eat("(")) fail("expected '(' after exp");
      GradedClass arg = expr();
      if (!eat(")")) fail("expected ')'");
      return exp(arg);
    }
    if (!ring_->has_generator(name)) fail("unknown generator '" + name + "'");
    return GradedClass::generator(ring_, name);
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedClass parse_class(const RingPtr& ring, std::string_view text) { return Parser(ring, text).parse(); }

}  // namespace ellbundle
