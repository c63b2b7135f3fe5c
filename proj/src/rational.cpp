#include "octoform/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace octoform {

Rational rational_from_string(std::string_view text) {
  // gmp's parser is permissive about whitespace and bases; reject anything
  // that is not a plain signed fraction before handing over.
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t pos = 0;
  auto digits = [&](std::size_t start) {
    std::size_t p = start;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    return p;
  };
  if (text[pos] == '-' || text[pos] == '+') ++pos;
  std::size_t end_num = digits(pos);
  if (end_num == pos) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (end_num < text.size()) {
    if (text[end_num] != '/') throw std::invalid_argument("malformed rational: " + std::string(text));
    std::size_t end_den = digits(end_num + 1);
    if (end_den != text.size() || end_den == end_num + 1)
      throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  Rational value(std::string(text), 10);
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  value.canonicalize();
  return value;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_str();
}

}  // namespace octoform
