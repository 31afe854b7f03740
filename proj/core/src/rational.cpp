#include "ulat/rational.hpp"

#include <stdexcept>

namespace ulat {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer n(std::string(num[0] == '+' ? num.substr(1) : num));
  Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return rat(num(rng), den(rng));
}

Rational random_nonnegative(std::mt19937_64& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(0, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return rat(num(rng), den(rng));
}

}  // namespace ulat
