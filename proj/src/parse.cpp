#include "multlab/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

namespace multlab {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

// Sparse monomial as read: variable index (zero-based) -> exponent.
using RawMonomial = std::map<std::size_t, Exponent>;

class Parser {
 public:
  explicit Parser(std::string_view text, std::size_t offset = 0)
      : text_(text), offset_(offset) {}

  std::vector<RawMonomial> ideal() {
    skip_space();
    expect('(');
    std::vector<RawMonomial> monos;
    monos.push_back(monomial());
    skip_space();
    while (peek() == ',') {
      ++pos_;
      monos.push_back(monomial());
      skip_space();
    }
    expect(')');
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return monos;
  }

  std::size_t max_index() const { return max_index_; }

 private:
  RawMonomial monomial() {
    skip_space();
    RawMonomial mono;
    if (peek() == '1') {
      ++pos_;
      return mono;
    }
    factor(mono);
    for (;;) {
      skip_space();
      char c = peek();
      if (c == '*') {
        ++pos_;
        skip_space();
        factor(mono);
      } else if (is_var_start(c)) {
        factor(mono);
      } else {
        break;
      }
    }
    return mono;
  }

  void factor(RawMonomial& mono) {
    std::size_t var = variable();
    skip_space();
    Exponent e = 1;
    if (peek() == '^') {
      ++pos_;
      skip_space();
      e = integer();
    }
    Exponent& slot = mono[var];
    if (__builtin_add_overflow(slot, e, &slot)) fail("exponent overflow");
  }

  std::size_t variable() {
    char c = peek();
    std::size_t start = pos_;
    if (c == 'y' || c == 'z' || c == 'w') {
      ++pos_;
      std::size_t idx = c == 'y' ? 1 : c == 'z' ? 2 : 3;
      note_index(idx);
      return idx;
    }
    if (c != 'x') fail("expected a variable");
    ++pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Exponent n = integer();
      if (n < 1) fail_at("variable index must be at least 1", start);
      note_index(static_cast<std::size_t>(n - 1));
      return static_cast<std::size_t>(n - 1);
    }
    note_index(0);
    return 0;
  }

  Exponent integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::int64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > std::numeric_limits<Exponent>::max()) fail("integer too large");
    }
    return static_cast<Exponent>(value);
  }

  void note_index(std::size_t idx) { max_index_ = std::max(max_index_, idx + 1); }

  static bool is_var_start(char c) { return c == 'x' || c == 'y' || c == 'z' || c == 'w'; }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, offset_ + at);
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
};

struct RawIdeal {
  std::vector<RawMonomial> monos;
  std::size_t max_index;
};

RawIdeal read(std::string_view expr, std::size_t offset) {
  Parser p(expr, offset);
  auto monos = p.ideal();
  return {std::move(monos), p.max_index()};
}

MonomialIdeal build(const RawIdeal& raw, std::size_t d) {
  std::vector<Monomial> gens;
  for (const RawMonomial& mono : raw.monos) {
    std::vector<Exponent> e(d, 0);
    for (auto [var, exp] : mono) e[var] = exp;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(gens), d);
}

std::size_t resolve_dim(std::size_t inferred, std::optional<std::size_t> dim) {
  if (!dim) {
    if (inferred == 0) throw ParseError("cannot infer the dimension of a constant ideal", 0);
    return inferred;
  }
  if (*dim == 0) throw ParseError("dimension must be positive", 0);
  if (*dim < inferred) {
    throw ParseError("variable x" + std::to_string(inferred) + " exceeds dimension " +
                         std::to_string(*dim),
                     0);
  }
  return *dim;
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view expr, std::optional<std::size_t> dim) {
  RawIdeal raw = read(expr, 0);
  return build(raw, resolve_dim(raw.max_index, dim));
}

std::vector<MonomialIdeal> parse_ideals(const std::vector<std::string>& exprs,
                                        std::optional<std::size_t> dim) {
  std::vector<RawIdeal> raws;
  std::size_t inferred = 0;
  for (const std::string& e : exprs) {
    raws.push_back(read(e, 0));
    inferred = std::max(inferred, raws.back().max_index);
  }
  std::size_t d = resolve_dim(inferred, dim);
  std::vector<MonomialIdeal> out;
  for (const RawIdeal& raw : raws) out.push_back(build(raw, d));
  return out;
}

std::vector<MonomialIdeal> parse_module(std::string_view expr, std::optional<std::size_t> dim) {
  std::vector<RawIdeal> raws;
  std::size_t inferred = 0;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = expr.find(';', start);
    std::string_view part = expr.substr(start, end == std::string_view::npos ? end : end - start);
    raws.push_back(read(part, start));
    inferred = std::max(inferred, raws.back().max_index);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  std::size_t d = resolve_dim(inferred, dim);
  std::vector<MonomialIdeal> out;
  for (const RawIdeal& raw : raws) out.push_back(build(raw, d));
  return out;
}

}  // namespace multlab
