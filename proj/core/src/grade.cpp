#include "rlcode/grade.hpp"

#include "rlcode/errors.hpp"

#include <charconv>

namespace rlcode {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Grade parse_rational(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Grade(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Grade(num, den);
}

Grade parse_grade(std::string_view text) {
  const Grade g = parse_rational(text);
  if (g < 0 || g > 1) throw ParseError("grade '" + std::string(text) + "' lies outside [0,1]");
  return g;
}

std::string format_grade(const Grade& g) {
  if (g.denominator() == 1) return std::to_string(g.numerator());
  return std::to_string(g.numerator()) + "/" + std::to_string(g.denominator());
}

}  // namespace rlcode
