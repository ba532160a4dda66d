#include <cctype>
#include <charconv>

#include "ecodyn/dims.hpp"
#include "ecodyn/error.hpp"

namespace ecodyn::dims {

namespace {

constexpr std::string_view kMiddleDot = "\xC2\xB7";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::string_view take_while(auto pred) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError(what + " at offset " + std::to_string(pos_) + " in '" +
                          std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

int parse_exponent(Cursor& cur) {
  if (!cur.accept("^")) return 1;
  const bool neg = cur.accept("-");
  const auto digits = cur.take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (digits.empty()) cur.fail("expected integer exponent");
  int value = 0;
  std::from_chars(digits.data(), digits.data() + digits.size(), value);
  return neg ? -value : value;
}

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::unordered_map<std::string, Dimension>& symbols)
      : cur_(text), symbols_(symbols) {}

  DimExpr expression() {
    DimExpr lhs = term();
    for (;;) {
      if (cur_.accept("+")) {
        lhs = std::move(lhs) + term();
      } else if (cur_.peek() == '-') {
        cur_.accept("-");
        lhs = std::move(lhs) - term();
      } else {
        return lhs;
      }
    }
  }

  bool done() { return cur_.done(); }
  [[noreturn]] void fail(const std::string& what) const { cur_.fail(what); }

 private:
  DimExpr term() {
    DimExpr lhs = factor();
    for (;;) {
      if (cur_.accept("*") || cur_.accept(kMiddleDot)) {
        lhs = std::move(lhs) * factor();
      } else if (cur_.accept("/")) {
        lhs = std::move(lhs) / factor();
      } else {
        return lhs;
      }
    }
  }

  DimExpr factor() {
    if (cur_.accept("(")) {
      DimExpr inner = expression();
      if (!cur_.accept(")")) cur_.fail("expected ')'");
      return inner;
    }
    if (cur_.accept("-")) {
      return DimExpr::leaf("-1", kDimensionless) * factor();
    }
    const char c = cur_.peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const auto lit = cur_.take_while([](char ch) {
        return std::isdigit(static_cast<unsigned char>(ch)) || ch == '.' || ch == 'e' || ch == 'E';
      });
      return DimExpr::leaf(std::string(lit), kDimensionless);
    }
    const auto ident = cur_.take_while([](char ch) {
      return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    });
    if (ident.empty()) cur_.fail("expected identifier, number or '('");
    if ((ident == "int" || ident == "d") && cur_.accept("(")) {
      DimExpr inner = expression();
      if (!cur_.accept(")")) cur_.fail("expected ')'");
      return ident == "int" ? integrate_dt(std::move(inner)) : differentiate_dt(std::move(inner));
    }
    const auto it = symbols_.find(std::string(ident));
    if (it == symbols_.end()) {
      throw ValidationError("no dimension given for symbol '" + std::string(ident) + "'");
    }
    return DimExpr::leaf(std::string(ident), it->second);
  }

  Cursor cur_;
  const std::unordered_map<std::string, Dimension>& symbols_;
};

}  // namespace

Dimension parse_dimension(std::string_view text) {
  Cursor cur(trim(text));
  if (cur.done()) cur.fail("empty dimension");
  Dimension result = kDimensionless;
  int sign = 1;
  for (;;) {
    Dimension unit;
    if (cur.accept("$")) {
      unit = kMoney;
    } else if (cur.accept("s")) {
      unit = kTime;
    } else if (cur.accept("1")) {
      unit = kDimensionless;
    } else {
      cur.fail("expected '$', 's' or '1'");
    }
    const int exp = sign * parse_exponent(cur);
    result.money += unit.money * exp;
    result.time += unit.time * exp;
    if (cur.done()) return result;
    if (cur.accept("/")) {
      sign = -1;
    } else if (cur.accept("*") || cur.accept(kMiddleDot)) {
      sign = 1;
    } else {
      cur.fail("expected '*', '/' or end of dimension");
    }
  }
}

std::unordered_map<std::string, Dimension> parse_dimension_table(std::string_view text) {
  std::unordered_map<std::string, Dimension> table;
  while (!trim(text).empty()) {
    const auto comma = text.find(',');
    const auto entry = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto colon = entry.find(':');
    if (colon == std::string_view::npos) {
      throw ValidationError("dimension entry '" + std::string(entry) + "' is not 'name:dim'");
    }
    const auto name = std::string(trim(entry.substr(0, colon)));
    if (name.empty()) throw ValidationError("dimension entry with empty name");
    if (!table.emplace(name, parse_dimension(entry.substr(colon + 1))).second) {
      throw ValidationError("symbol '" + name + "' given twice");
    }
  }
  return table;
}

Relation parse_relation(std::string_view text,
                        const std::unordered_map<std::string, Dimension>& symbols) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) {
    throw ValidationError("relation must contain exactly one '=': '" + std::string(text) + "'");
  }
  auto side = [&](std::string_view part) {
    ExprParser p(part, symbols);
    DimExpr e = p.expression();
    if (!p.done()) p.fail("unexpected trailing input");
    return e;
  };
  return {side(text.substr(0, eq)), side(text.substr(eq + 1))};
}

}  // namespace ecodyn::dims
