#include "koszul/field.hpp"

#include <charconv>
#include <cctype>

namespace koszul {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
    throw InputError("PrimeField: modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::from_rational(const mpq_class& q) const {
  const mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class num = q.get_num() % pz;
  mpz_class den = q.get_den() % pz;
  if (num < 0) num += pz;
  if (den == 0) {
    throw InputError("coefficient " + q.get_str() + " has a denominator divisible by " +
                     std::to_string(p_));
  }
  return mul(static_cast<Elem>(num.get_ui()), inv(static_cast<Elem>(den.get_ui())));
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (sgn(a) == 0) throw std::domain_error("RationalField::inv: zero has no inverse");
  return 1 / a;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string t = trim(text);
  for (auto& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "rationals" || t == "q" || t == "rational") return rationals();
  std::string_view digits = t;
  if (digits.rfind("prime:", 0) == 0) digits.remove_prefix(6);
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw InputError("unrecognized field '" + std::string(text) +
                     "' (expected 'rationals' or 'prime:<p>')");
  }
  if (p == 2) throw InputError("characteristic 2 is not supported");
  if (p > 0x7fffffffULL || !is_prime(p)) {
    throw InputError("field modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
  return prime(static_cast<std::uint32_t>(p));
}

void FieldSpec::validate(int max_degree) const {
  if (kind == Kind::rationals) return;
  if (p == 2) throw InputError("characteristic 2 is not supported");
  if (!is_prime(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
  if (max_degree >= 0 && p <= static_cast<std::uint32_t>(max_degree)) {
    throw InputError("field characteristic " + std::to_string(p) +
                     " must exceed the degree cutoff " + std::to_string(max_degree));
  }
}

std::string FieldSpec::to_string() const {
  return kind == Kind::rationals ? "rationals" : "prime:" + std::to_string(p);
}

mpq_class parse_rational(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw InputError("empty coefficient");
  for (char c : t) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
      throw InputError("invalid coefficient '" + t + "'");
    }
  }
  mpq_class q;
  std::string body = t[0] == '+' ? t.substr(1) : t;
  if (q.set_str(body, 10) != 0) throw InputError("invalid coefficient '" + t + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + t + "'");
  q.canonicalize();
  return q;
}

}  // namespace koszul
