#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <gmpxx.h>

namespace koszul {

/// Raised for malformed user input (bad field spec, unparsable coefficient, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails (d∘d ≠ 0, broken table).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool is_prime(std::uint64_t n);

/// Arithmetic in Z/p for an odd prime p < 2^31.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  Elem from_rational(const mpq_class& q) const;

  /// row[k] += c * src[k] for k in [begin, end).
  void axpy(Elem* row, Elem c, const Elem* src, std::size_t begin, std::size_t end) const {
    const std::uint64_t cc = c;
    for (std::size_t k = begin; k < end; ++k) {
      row[k] = static_cast<Elem>((row[k] + cc * src[k]) % p_);
    }
  }

  std::string to_string(Elem a) const { return std::to_string(a); }
  std::string name() const { return "prime:" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// Arithmetic in Q with normalized GMP fractions.
class RationalField {
 public:
  using Elem = mpq_class;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  Elem from_rational(const mpq_class& q) const { return q; }

  void axpy(Elem* row, const Elem& c, const Elem* src, std::size_t begin,
            std::size_t end) const {
    mpq_class t;
    for (std::size_t k = begin; k < end; ++k) {
      if (sgn(src[k]) == 0) continue;
      t = c * src[k];
      row[k] += t;
    }
  }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "rationals"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// User-facing ground field choice.
struct FieldSpec {
  enum class Kind { rationals, prime };

  Kind kind = Kind::prime;
  std::uint32_t p = 32003;

  static FieldSpec rationals() { return {Kind::rationals, 0}; }
  static FieldSpec prime(std::uint32_t p) { return {Kind::prime, p}; }

  /// Accepts "rationals", "Q", "prime:<p>", "<p>".
  static FieldSpec parse(std::string_view text);

  /// Throws InputError unless p is an odd prime larger than `max_degree`.
  void validate(int max_degree) const;

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Parses "n", "-n" or "n/m" into a rational.
mpq_class parse_rational(std::string_view text);

template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::rationals) {
    return std::forward<Fn>(fn)(RationalField{});
  }
  return std::forward<Fn>(fn)(PrimeField{spec.p});
}

template <class F>
inline constexpr bool is_rational_field_v = std::is_same_v<F, RationalField>;

}  // namespace koszul
