#include "srtrace/field.hpp"

#include <charconv>
#include <stdexcept>

#include "srtrace/errors.hpp"

namespace srtrace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument("gf:" + std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    std::int64_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last || first == last) {
      throw ParseError("bad field specifier '" + text + "'");
    }
    try {
      return prime(p);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("bad field specifier '" + text + "' (expected q or gf:P)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "q" : "gf:" + std::to_string(p_);
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(p)");
  // Extended Euclid on signed 64-bit.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return from_int(t);
}

}  // namespace srtrace
