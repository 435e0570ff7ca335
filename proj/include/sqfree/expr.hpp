#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "sqfree/ideal_core.hpp"

namespace sqfree {

/// Recursive-descent parser for mixed product expressions:
///
///   expr   := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := 'I' uint | 'J' uint
///
/// Whitespace is ignored. A term may hold at most one I-factor and one
/// J-factor; a missing factor means degree 0 (I_0 = J_0 = S).
class ExprParser {
 public:
  ExprParser(std::string_view text, const GroundSet& ground) : text_(text), ground_(ground) {}

  MixedSpec parse() {
    skip();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "empty expression");
    std::vector<Term> terms{term()};
    while (true) {
      skip();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '+') throw SyntaxError(pos_, "expected '+' or '*'");
      ++pos_;
      terms.push_back(term());
    }
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    return MixedSpec(ground_, std::move(terms)).normalized();
  }

 private:
  Term term() {
    Term out;
    bool seen_i = false, seen_j = false;
    while (true) {
      skip();
      const std::size_t at = pos_;
      if (pos_ >= text_.size()) throw SyntaxError(pos_, "expected 'I' or 'J'");
      const char block = text_[pos_];
      if (block != 'I' && block != 'J') throw SyntaxError(pos_, "expected 'I' or 'J'");
      ++pos_;
      skip();
      const long degree = detail::read_uint(text_, pos_);
      bool& seen = block == 'I' ? seen_i : seen_j;
      if (seen) throw Error(Errc::RepeatedBlock, std::string(1, block) + " appears twice in one product (offset " +
                                                      std::to_string(at) + ")");
      seen = true;
      const int bound = block == 'I' ? ground_.n() : ground_.m();
      if (degree > bound)
        throw Error(Errc::DegreeOutOfRange, std::string(1, block) + std::to_string(degree) + " exceeds block size " +
                                                std::to_string(bound));
      (block == 'I' ? out.q : out.r) = static_cast<int>(degree);
      skip();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      return out;
    }
  }

  void skip() { detail::skip_spaces(text_, pos_); }

  std::string_view text_;
  GroundSet ground_;
  std::size_t pos_ = 0;
};

/// Parses an expression such as "I2*J1 + I3" into a normalized spec.
inline MixedSpec parse_ideal_expr(std::string_view text, const GroundSet& ground) {
  return ExprParser(text, ground).parse();
}

/// Inverse of parse_ideal_expr on normalized specs, e.g. "I2*J1 + I3".
inline std::string format_expr(const MixedSpec& spec) {
  std::string out;
  for (const auto& t : spec.terms()) {
    if (!out.empty()) out += " + ";
    if (t.q == 0 && t.r == 0) {
      out += "I0";
      continue;
    }
    if (t.q > 0) out += "I" + std::to_string(t.q);
    if (t.q > 0 && t.r > 0) out += "*";
    if (t.r > 0) out += "J" + std::to_string(t.r);
  }
  return out;
}

}  // namespace sqfree
