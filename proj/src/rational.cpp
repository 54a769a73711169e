#include "qmval/rational.hpp"

namespace qmval {

Rat make_rat(Int num, Int den) {
  if (den == 0) throw invalid_input("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);  // cpp_rational reduces on construction
}

Rat rat_from_string(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](std::string_view what) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start)
      throw invalid_input("expected " + std::string(what) + " in rational '" +
                          std::string(text) + "'");
    return std::string(text.substr(start, pos - start));
  };

  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  Int num(digits("digits"));
  Int den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = Int(digits("denominator digits"));
  }
  if (pos != text.size())
    throw invalid_input("trailing characters in rational '" + std::string(text) + "'");
  if (negative) num = -num;
  return make_rat(std::move(num), std::move(den));
}

std::string rat_to_string(const Rat& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

std::string extrat_to_string(const ExtRat& value) {
  return value.is_infinite() ? "inf" : rat_to_string(value.finite_value());
}

ExtRat extrat_from_string(std::string_view text) {
  if (text == "inf" || text == "+inf") return ExtRat::infinity();
  return ExtRat(rat_from_string(text));
}

}  // namespace qmval
