#include "vzhu/parse.hpp"

#include <cctype>

#include "vzhu/errors.hpp"

namespace vzhu {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Algebra& alg) : text_(text), alg_(alg) {}

  Vec parse() {
    skip();
    if (peek() == '0' && is_lone_zero()) {
      ++pos_;
      skip();
      expect_end();
      return {};
    }
    Vec out;
    bool first = true;
    while (true) {
      skip();
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        break;
      }
      Vec t = term();
      add_scaled(out, t, sign);
      first = false;
      skip();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail({"'+'", "'-'", "end of input"});
    }
    expect_end();
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool is_lone_zero() const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p >= text_.size();
  }

  std::string found() const {
    if (at_end()) return "";
    return std::string(1, text_[pos_]);
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(pos_, std::move(expected), found());
  }

  void expect_end() {
    skip();
    if (!at_end()) fail({"'+'", "'-'", "end of input"});
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail({std::string("'") + c + "'"});
    ++pos_;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail({"integer"});
    if (pos_ - start > 9) {
      pos_ = start;
      fail({"integer of at most 9 digits"});
    }
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Vec term() {
    skip();
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string num(text_.substr(start, pos_ - start));
      std::string den = "1";
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        std::size_t ds = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (ds == pos_) fail({"integer"});
        den = std::string(text_.substr(ds, pos_ - ds));
        if (Integer(den) == 0) {
          pos_ = ds;
          fail({"nonzero denominator"});
        }
      }
      coeff = Rational(Integer(num), Integer(den));
      coeff.canonicalize();
      expect('*');
    }
    return scaled(monomial(), coeff);
  }

  // Parses the generator word, then applies modes right to left.
  Vec monomial() {
    std::vector<std::pair<int, long>> modes;
    std::string sym = alg_.generator_symbol();
    while (true) {
      skip();
      if (text_.substr(pos_, 3) == "|0>") {
        pos_ += 3;
        break;
      }
      if (text_.substr(pos_, sym.size()) != sym) fail({"'" + sym + "'", "'|0>'"});
      pos_ += sym.size();
      expect('(');
      skip();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      long label = integer();
      if (neg) label = -label;
      expect(')');
      long power = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        power = integer();
      }
      modes.emplace_back(static_cast<int>(label + alg_.label_offset()), power);
    }
    Vec v = vacuum_vec();
    const Module& mod = alg_.vacuum_module();
    for (auto it = modes.rbegin(); it != modes.rend(); ++it)
      for (long k = 0; k < it->second; ++k) v = mod.act(it->first, v);
    return v;
  }

  std::string_view text_;
  const Algebra& alg_;
  std::size_t pos_ = 0;
};

}  // namespace

Vec parse_vector(std::string_view text, const Algebra& alg) { return Parser(text, alg).parse(); }

}  // namespace vzhu
