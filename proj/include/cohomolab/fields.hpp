#pragma once

// Exact coefficient fields: arbitrary-precision rationals (GMP-backed) and
// prime fields F_p with runtime modulus. Every computation in the library is
// exact; there is no floating point anywhere.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cohomolab {

using Rational = boost::multiprecision::mpq_rational;

template <class F>
concept FieldLike = requires(const F f, const typename F::Scalar a,
                             const typename F::Scalar b) {
  typename F::Scalar;
  { f.zero() } -> std::same_as<typename F::Scalar>;
  { f.one() } -> std::same_as<typename F::Scalar>;
  { f.add(a, b) } -> std::same_as<typename F::Scalar>;
  { f.sub(a, b) } -> std::same_as<typename F::Scalar>;
  { f.mul(a, b) } -> std::same_as<typename F::Scalar>;
  { f.neg(a) } -> std::same_as<typename F::Scalar>;
  { f.inv(a) } -> std::same_as<typename F::Scalar>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.eq(a, b) } -> std::convertible_to<bool>;
  { f.name() } -> std::convertible_to<std::string>;
  { F::has_norm } -> std::convertible_to<bool>;
};

class Rationals {
 public:
  using Scalar = Rational;
  static constexpr bool has_norm = true;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const { return Scalar(v); }

  Scalar add(const Scalar& a, const Scalar& b) const { return Scalar(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return Scalar(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return Scalar(a * b); }
  Scalar neg(const Scalar& a) const { return Scalar(-a); }
  Scalar inv(const Scalar& a) const {
    if (a == 0) throw std::domain_error("division by zero in Q");
    return Scalar(Scalar(1) / a);
  }
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const { return a == 0; }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  Scalar absolute(const Scalar& a) const { return Scalar(abs(a)); }
  bool less(const Scalar& a, const Scalar& b) const { return a < b; }

  std::string to_string(const Scalar& a) const { return a.str(); }
  Scalar parse(const std::string& s) const {
    Scalar v(s);
    // mpq_set_str does not reduce; GMP arithmetic assumes canonical operands.
    mpq_canonicalize(v.backend().data());
    return v;
  }

  std::string name() const { return "Q"; }
  bool operator==(const Rationals&) const { return true; }
};

// F_p for a (small) prime p chosen at run time. Scalars are canonical
// representatives in [0, p).
class PrimeField {
 public:
  using Scalar = std::int64_t;
  static constexpr bool has_norm = false;

  explicit PrimeField(std::int64_t p) : p_(p) {
    if (!is_prime(p)) {
      throw std::invalid_argument("PrimeField modulus " + std::to_string(p) +
                                  " is not prime");
    }
  }

  std::int64_t modulus() const { return p_; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1 % p_; }
  Scalar from_int(long v) const {
    Scalar r = static_cast<Scalar>(v) % p_;
    return r < 0 ? r + p_ : r;
  }

  Scalar add(Scalar a, Scalar b) const {
    Scalar r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  Scalar sub(Scalar a, Scalar b) const {
    Scalar r = a - b;
    return r < 0 ? r + p_ : r;
  }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar inv(Scalar a) const {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    // Extended Euclid.
    Scalar t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      Scalar q = r / new_r;
      Scalar tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return t < 0 ? t + p_ : t;
  }
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  bool is_zero(Scalar a) const { return a == 0; }
  bool eq(Scalar a, Scalar b) const { return a == b; }

  std::string to_string(Scalar a) const { return std::to_string(a); }
  Scalar parse(const std::string& s) const { return from_int(std::stol(s)); }

  std::string name() const { return "F" + std::to_string(p_); }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  static bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  std::int64_t p_;
};

static_assert(FieldLike<Rationals>);
static_assert(FieldLike<PrimeField>);

}  // namespace cohomolab
