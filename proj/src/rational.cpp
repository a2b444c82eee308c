#include "rational.hpp"

#include <cctype>

#include "errors.hpp"

namespace polytrope {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    fail(Status::malformed, "not a rational number: '" + std::string(text) + "'");
  }
  if (slash != std::string_view::npos && den.find_first_not_of('0') == std::string_view::npos) {
    fail(Status::malformed, "zero denominator: '" + std::string(text) + "'");
  }
  std::string clean(text);
  if (clean.front() == '+') clean.erase(0, 1);
  Rational value;
  if (value.set_str(clean, 10) != 0) {
    fail(Status::malformed, "not a rational number: '" + std::string(text) + "'");
  }
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

}  // namespace polytrope
