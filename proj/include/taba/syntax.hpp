// Parsers for the textual forms accepted on the command line: integer lists,
// terms in each representation, and weighted binary trees.
#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "taba/core_lists.hpp"
#include "taba/errors.hpp"
#include "taba/eta.hpp"
#include "taba/gallery.hpp"

namespace taba {

namespace detail::syntax {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t pos() const { return pos_; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  template <class Int>
  Int integer() {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    Int value{};
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail("integer out of range");
    if (ec != std::errc{}) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a keyword");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string quoted() {
    expect('"');
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out.push_back(text_[pos_++]);
    }
    if (pos_ >= text_.size()) fail("unterminated string");
    ++pos_;
    if (out.empty()) fail("empty name");
    return out;
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class Rep>
Term<Rep> term(Cursor& in) {
  const char rep = Rep::suffix;
  std::size_t start = in.pos();
  bool parenthesized = in.accept('(');
  std::string kw = in.word();
  if (kw.size() != 4 || kw.back() != rep) {
    if (kw.size() == 4 && (kw.back() == 'n' || kw.back() == 'l' || kw.back() == 'i'))
      throw ParseError("keyword '" + kw + "' belongs to another representation", start);
    throw ParseError("unknown keyword '" + kw + "'", start);
  }
  std::string head = kw.substr(0, 3);
  using T = Term<Rep>;
  T result = T::exp();
  if (head == "exp") {
    if constexpr (std::same_as<typename Rep::Payload, std::string>) {
      if (!parenthesized) throw ParseError("expn takes a payload", start);
      result = T::exp(in.quoted());
    } else {
      if (parenthesized) {
        in.expect(')');
        return result;
      }
      return result;
    }
  } else {
    if (!parenthesized) throw ParseError("'" + kw + "' must be parenthesized", start);
    if (head == "var") {
      if constexpr (std::same_as<typename Rep::Var, std::string>)
        result = T::var(in.quoted());
      else
        result = T::var(in.integer<std::size_t>());
    } else if (head == "lam") {
      if constexpr (std::same_as<typename Rep::Binder, std::string>) {
        std::string name = in.quoted();
        result = T::lam(std::move(name), term<Rep>(in));
      } else {
        result = T::lam(term<Rep>(in));
      }
    } else if (head == "app") {
      T fun = term<Rep>(in);
      result = T::app(std::move(fun), term<Rep>(in));
    } else {
      throw ParseError("unknown keyword '" + kw + "'", start);
    }
  }
  if (parenthesized) in.expect(')');
  return result;
}

inline BinTree tree(Cursor& in) {
  std::size_t start = in.pos();
  in.expect('(');
  std::string kw = in.word();
  BinTree result = BinTree::leaf(0);
  if (kw == "leaf") {
    result = BinTree::leaf(in.integer<std::uint64_t>());
  } else if (kw == "node") {
    BinTree left = tree(in);
    result = BinTree::node(std::move(left), tree(in));
  } else {
    throw ParseError("unknown tree keyword '" + kw + "'", start);
  }
  in.expect(')');
  return result;
}

}  // namespace detail::syntax

/// Accepts "[1; 2; 3]" or "[1, 2, 3]"; either separator, any spacing.
inline ValueList<long long> parse_value_list(std::string_view text) {
  detail::syntax::Cursor in(text);
  ValueList<long long> out;
  in.expect('[');
  if (!in.accept(']')) {
    do {
      out.push_back(in.integer<long long>());
    } while (in.accept(';') || in.accept(','));
    in.expect(']');
  }
  in.finish();
  return out;
}

template <class Rep>
Term<Rep> parse_term(std::string_view text) {
  detail::syntax::Cursor in(text);
  Term<Rep> t = detail::syntax::term<Rep>(in);
  in.finish();
  return t;
}

enum class Representation { named, level, index };

using AnyTerm = std::variant<TermN, TermL, TermI>;

inline AnyTerm parse_term(std::string_view text, Representation rep) {
  switch (rep) {
    case Representation::named: return parse_term<NamedRep>(text);
    case Representation::level: return parse_term<LevelRep>(text);
    case Representation::index: return parse_term<IndexRep>(text);
  }
  throw ContractError("parse_term: unknown representation");
}

inline BinTree parse_tree(std::string_view text) {
  detail::syntax::Cursor in(text);
  BinTree t = detail::syntax::tree(in);
  in.finish();
  return t;
}

}  // namespace taba
