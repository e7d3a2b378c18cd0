// Copyright 2026 The redspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "redspec/genus/ramification_dsl.hpp"

#include <gmpxx.h>

#include <cctype>

#include "redspec/error.hpp"

namespace redspec {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t offset, const Bindings* bindings)
      : text_(text), offset_(offset), bindings_(bindings) {}

  std::size_t pos() const { return pos_; }
  bool done() {
    skip();
    return pos_ == text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 1, offset_ + pos_ + 1);
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start])))
      fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer_literal() {
    skip();
    bool neg = consume('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 15) fail("integer too large");
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  // expr := term (('+'|'-') term)*
  mpq_class expr() {
    mpq_class v = term();
    for (;;) {
      if (consume('+')) {
        v += term();
      } else if (peek() == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  // Text of the expression just parsed, for error messages.
  std::string slice(std::size_t from) const {
    std::string s(text_.substr(from, pos_ - from));
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
    return s;
  }

  long integral(std::size_t from, const mpq_class& v) const {
    if (v.get_den() != 1) {
      throw InputError("expression '" + slice(from) + "' evaluates to " + v.get_str() +
                       ", which is not an integer");
    }
    if (!v.get_num().fits_slong_p()) throw InputError("expression '" + slice(from) + "' overflows");
    return v.get_num().get_si();
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  mpq_class term() {
    mpq_class v = factor();
    for (;;) {
      if (consume('*')) {
        v *= factor();
      } else if (consume('/')) {
        std::size_t at = pos_;
        mpq_class d = factor();
        if (d == 0) {
          pos_ = at;
          fail("division by zero");
        }
        v /= d;
      } else {
        return v;
      }
    }
  }

  mpq_class factor() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      mpq_class v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return mpq_class(integer_literal());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = pos_;
      std::string name = identifier();
      auto it = bindings_->find(name);
      if (it == bindings_->end()) {
        pos_ = at;
        fail("unbound name '" + name + "'");
      }
      return mpq_class(it->second);
    }
    fail(c == '\0' ? "unexpected end of expression" : std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t offset_;
  const Bindings* bindings_;
  std::size_t pos_ = 0;
};

}  // namespace

long evaluate_expression(std::string_view expr, const Bindings& bindings) {
  Parser p(expr, 0, &bindings);
  std::size_t from = p.pos();
  mpq_class v = p.expr();
  if (!p.done()) p.fail("trailing characters");
  return p.integral(from, v);
}

RamificationType parse_ramification(std::string_view text, const Bindings& extra) {
  Bindings bindings = extra;
  std::string_view body = text;
  if (auto w = text.find("where"); w != std::string_view::npos) {
    body = text.substr(0, w);
    Parser p(text.substr(w + 5), w + 5, &bindings);
    do {
      std::string name = p.identifier();
      p.expect('=');
      bindings[name] = p.integer_literal();
    } while (p.consume(','));
    if (!p.done()) p.fail("expected ',' or end of input");
  }
  Parser p(body, 0, &bindings);
  RamificationType r;
  bool first = true;
  do {
    p.expect('[');
    Partition part;
    do {
      std::size_t from = p.pos();
      long e = p.integral(from, p.expr());
      if (e < 1) throw InputError("part '" + p.slice(from) + "' = " + std::to_string(e) + " < 1");
      long mult = 1;
      if (p.consume('^')) {
        std::size_t at = p.pos();
        mpq_class m;
        if (p.consume('{')) {
          at = p.pos();
          m = p.expr();
          long v = p.integral(at, m);
          p.expect('}');
          mult = v;
        } else {
          mult = p.integral(at, mpq_class(p.integer_literal()));
        }
        if (mult < 0) {
          throw InputError("multiplicity '" + p.slice(at) + "' = " + std::to_string(mult) +
                           " is negative");
        }
      }
      part.insert(part.end(), static_cast<std::size_t>(mult), static_cast<std::uint32_t>(e));
    } while (p.consume(','));
    p.expect(']');
    canonicalize(part);
    std::uint64_t sum = partition_sum(part);
    if (first) {
      r.degree = sum;
      first = false;
    }
    r.entries.push_back(std::move(part));
  } while (p.consume(','));
  if (!p.done()) p.fail("expected ',' or end of input");
  r.validate();
  return r;
}

}  // namespace redspec
