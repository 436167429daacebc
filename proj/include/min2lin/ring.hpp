#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace min2lin {

// Which Euclidean domain the elements live in. Adding a domain (for example
// Gaussian integers with norm a^2 + b^2 and rounding division) means adding a
// Kind here and filling in the switch arms in ring.cpp.
class DomainSpec {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static DomainSpec integers() { return DomainSpec(Kind::Integers, 0); }
  static DomainSpec rationals() { return DomainSpec(Kind::Rationals, 0); }
  // Throws std::invalid_argument unless p is prime.
  static DomainSpec prime_field(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  std::uint64_t characteristic() const { return kind_ == Kind::PrimeField ? p_ : 0; }
  std::string name() const;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;

 private:
  DomainSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

class Element {
 public:
  explicit Element(DomainSpec d);  // zero
  Element(DomainSpec d, long value);
  Element(DomainSpec d, const mpz_class& value);
  // num/den; den must be nonzero and, outside Q, invertible in the domain.
  static Element fraction(DomainSpec d, const mpz_class& num, const mpz_class& den);
  // ZZ: signed decimal; Q: "num/den" or "num"; F_p: decimal in [0, p).
  static Element parse(DomainSpec d, std::string_view text);

  const DomainSpec& domain() const { return domain_; }
  const mpz_class& numerator() const { return num_; }
  const mpz_class& denominator() const { return den_; }
  bool is_zero() const { return sgn(num_) == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  int sign() const { return sgn(num_); }
  std::string to_string() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Element zero() const { return Element(domain_); }
  Element one() const { return Element(domain_, 1); }

 private:
  void reduce();
  DomainSpec domain_;
  mpz_class num_;
  mpz_class den_{1};
};

struct DivMod {
  Element q;
  Element r;
};

struct Bezout {
  Element g;
  Element s;
  Element t;
};

// Solutions of a*x + b*y = c are (x0 + stride_x*r, y0 + stride_y*r).
struct SingleSolution {
  Element x0;
  Element y0;
  Element g;
  Element stride_x;  // b / g
  Element stride_y;  // -a / g
};

mpz_class norm(const Element& a);
DivMod divmod(const Element& a, const Element& b);
Bezout ext_gcd(const Element& a, const Element& b);
Element gcd(const Element& a, const Element& b);
Element lcm(const Element& a, const Element& b);
bool is_unit(const Element& a);
Element inverse(const Element& a);
// a | b
bool divides(const Element& a, const Element& b);
// a / b, requires b | a.
Element exact_div(const Element& a, const Element& b);
// Canonical associate: |a| over ZZ, 0 or 1 over a field.
Element canonical_associate(const Element& a);
bool associated(const Element& a, const Element& b);
std::optional<SingleSolution> solve_single(const Element& a, const Element& b, const Element& c);

}  // namespace min2lin
