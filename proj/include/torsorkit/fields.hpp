#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "torsorkit/error.hpp"

namespace torsorkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Trial division primality test. Moduli are capped at 2^31 so this is
/// always cheap.
inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace detail {

// Strict decimal integer: optional sign followed by at least one digit.
inline std::optional<BigInt> parse_integer(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return std::nullopt;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') return std::nullopt;
  }
  BigInt v(std::string(s.substr(i)));
  if (s[0] == '-') v = -v;
  return v;
}

// Splits "a/b" into numerator and denominator strings; "a" alone is a/1.
inline std::optional<std::pair<BigInt, BigInt>> parse_fraction(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_integer(s);
    if (!n) return std::nullopt;
    return std::make_pair(*n, BigInt(1));
  }
  auto n = parse_integer(s.substr(0, slash));
  auto d = parse_integer(s.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return std::make_pair(*n, *d);
}

}  // namespace detail

/// The field ℚ. Elements are arbitrary-precision fractions kept in lowest
/// terms with positive denominator (the backing type canonicalizes).
class RationalField {
 public:
  using Elem = BigRat;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(v); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a == 0; }

  std::optional<Elem> inv(const Elem& a) const {
    if (a == 0) return std::nullopt;
    // keep the denominator positive, as the backing type requires
    if (numerator(a) < 0) return Elem(-denominator(a), -numerator(a));
    return Elem(denominator(a), numerator(a));
  }

  /// Accepts "a" or "a/b" with optional sign; rejects zero denominators.
  std::optional<Elem> parse(std::string_view s) const {
    auto f = detail::parse_fraction(s);
    if (!f) return std::nullopt;
    if (f->second < 0) return Elem(-f->first, -f->second);
    return Elem(f->first, f->second);
  }

  std::string to_string(const Elem& a) const {
    std::string out = numerator(a).str();
    if (denominator(a) != 1) out += "/" + denominator(a).str();
    return out;
  }

  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// The prime field 𝔽_p for p < 2^31. Elements are residues in [0, p);
/// products never overflow a signed 64-bit intermediate.
class PrimeField {
 public:
  using Elem = std::int64_t;

  explicit PrimeField(std::int64_t p) : p_(p) {
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p)) {
      throw Error(ErrorKind::Validation,
                  "modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
  }

  std::int64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long long v) const {
    Elem r = static_cast<Elem>(v % p_);
    return r < 0 ? r + p_ : r;
  }

  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return ((a - b) % p_ + p_) % p_; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  bool is_zero(Elem a) const { return a == 0; }

  std::optional<Elem> inv(Elem a) const {
    if (a % p_ == 0) return std::nullopt;
    // Extended Euclid on (a, p).
    std::int64_t r0 = a % p_, r1 = p_, s0 = 1, s1 = 0;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      std::int64_t s2 = s0 - q * s1;
      r0 = r1; r1 = r2;
      s0 = s1; s1 = s2;
    }
    return from_int(s0);
  }

  /// Accepts decimal residues (any sign/size, reduced mod p) and "a/b" with
  /// b invertible mod p.
  std::optional<Elem> parse(std::string_view s) const {
    auto f = detail::parse_fraction(s);
    if (!f) return std::nullopt;
    Elem num = reduce(f->first);
    Elem den = reduce(f->second);
    auto dinv = inv(den);
    if (!dinv) return std::nullopt;
    return mul(num, *dinv);
  }

  std::string to_string(Elem a) const { return std::to_string(a); }

  std::string name() const { return "Fp:" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Elem reduce(const BigInt& v) const {
    BigInt r = v % p_;
    if (r < 0) r += p_;
    return r.convert_to<Elem>();
  }

  std::int64_t p_;
};

template <class F>
concept FieldType = std::regular<typename F::Elem> &&
    requires(const F f, const typename F::Elem a, const typename F::Elem b,
             const std::string& s) {
      { f.zero() } -> std::same_as<typename F::Elem>;
      { f.one() } -> std::same_as<typename F::Elem>;
      { f.from_int(1LL) } -> std::same_as<typename F::Elem>;
      { f.add(a, b) } -> std::same_as<typename F::Elem>;
      { f.sub(a, b) } -> std::same_as<typename F::Elem>;
      { f.mul(a, b) } -> std::same_as<typename F::Elem>;
      { f.neg(a) } -> std::same_as<typename F::Elem>;
      { f.is_zero(a) } -> std::same_as<bool>;
      { f.inv(a) } -> std::same_as<std::optional<typename F::Elem>>;
      { f.parse(s) } -> std::same_as<std::optional<typename F::Elem>>;
      { f.to_string(a) } -> std::same_as<std::string>;
      { f.name() } -> std::same_as<std::string>;
    };

using AnyField = std::variant<RationalField, PrimeField>;

/// Parses a field tag: "Q" for the rationals, "Fp:<p>" for a prime field.
inline AnyField field_from_name(std::string_view s) {
  if (s == "Q") return RationalField{};
  if (s.rfind("Fp:", 0) == 0) {
    auto p = detail::parse_integer(s.substr(3));
    if (!p || *p < 2 || *p >= (BigInt(1) << 31)) {
      throw Error(ErrorKind::Validation, "bad prime field tag '" + std::string(s) + "'");
    }
    return PrimeField(p->convert_to<std::int64_t>());
  }
  throw Error(ErrorKind::Validation,
              "unknown field '" + std::string(s) + "' (expected \"Q\" or \"Fp:<p>\")");
}

}  // namespace torsorkit
