#include "beltrami/rational.hpp"

#include <cctype>

namespace beltrami {

namespace {

bool is_integer_token(std::string_view v) {
  if (!v.empty() && (v.front() == '-' || v.front() == '+')) v.remove_prefix(1);
  if (v.empty()) return false;
  for (const char c : v) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> rat_parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  const size_t slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      if (!is_integer_token(text)) return std::nullopt;
      return Rational(Integer(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    const Integer d{std::string(den)};
    if (d.is_zero()) return std::nullopt;
    return Rational(Integer(std::string(num)), d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace beltrami
