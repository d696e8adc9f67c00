#include "sndp/rational.hpp"

#include "sndp/errors.hpp"

#include <cctype>
#include <sstream>

namespace sndp {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw ValidationError("rational with zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-')
    throw ValidationError("malformed rational \"" + text + "\"");
  mpz_class p(num), q(den);
  if (q == 0) throw ValidationError("rational with zero denominator \"" + text + "\"");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string rational_approx_string(const Rational& value, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << value.get_d();
  return out.str();
}

nlohmann::json rational_to_json(const Rational& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p())
    return static_cast<std::int64_t>(value.get_num().get_si());
  return rational_to_string(value);
}

Rational rational_from_json(const nlohmann::json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(static_cast<long>(value.get<std::int64_t>()));
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw ValidationError("expected integer or \"p/q\" string at " + path);
}

}  // namespace sndp
