#include "min2lin/ring.hpp"

#include <stdexcept>

#include "min2lin/errors.hpp"

namespace min2lin {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

void check_same(const Element& a, const Element& b) {
  if (!(a.domain() == b.domain())) throw std::invalid_argument("mixed-domain arithmetic");
}

bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

DomainSpec DomainSpec::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  return DomainSpec(Kind::PrimeField, p);
}

std::string DomainSpec::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(p_);
  }
  return "?";
}

Element::Element(DomainSpec d) : domain_(d), num_(0) {}

Element::Element(DomainSpec d, long value) : domain_(d), num_(value) { reduce(); }

Element::Element(DomainSpec d, const mpz_class& value) : domain_(d), num_(value) { reduce(); }

Element Element::fraction(DomainSpec d, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  if (d.kind() == DomainSpec::Kind::Rationals) {
    Element e(d);
    e.num_ = num;
    e.den_ = den;
    e.reduce();
    return e;
  }
  Element n(d, num);
  Element m(d, den);
  return exact_div(n, m);
}

void Element::reduce() {
  switch (domain_.kind()) {
    case DomainSpec::Kind::Integers:
      den_ = 1;
      break;
    case DomainSpec::Kind::Rationals: {
      if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
      }
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
      if (g != 1 && g != 0) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
      }
      if (num_ == 0) den_ = 1;
      break;
    }
    case DomainSpec::Kind::PrimeField: {
      mpz_class p(static_cast<unsigned long>(domain_.modulus()));
      mpz_fdiv_r(num_.get_mpz_t(), num_.get_mpz_t(), p.get_mpz_t());
      den_ = 1;
      break;
    }
  }
}

Element Element::parse(DomainSpec d, std::string_view text) {
  auto bad = [&] { return ParseError("bad " + d.name() + " element '" + std::string(text) + "'"); };
  if (d.kind() == DomainSpec::Kind::Rationals) {
    auto slash = text.find('/');
    mpz_class num, den(1);
    if (!parse_integer(text.substr(0, slash), num)) throw bad();
    if (slash != std::string_view::npos) {
      auto tail = text.substr(slash + 1);
      if (tail.empty() || tail[0] == '-' || tail[0] == '+' || !parse_integer(tail, den) || den == 0) throw bad();
    }
    return fraction(d, num, den);
  }
  mpz_class v;
  if (!parse_integer(text, v)) throw bad();
  if (d.kind() == DomainSpec::Kind::PrimeField) {
    if (v < 0 || v >= mpz_class(static_cast<unsigned long>(d.modulus()))) throw bad();
  }
  return Element(d, v);
}

std::string Element::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Element Element::operator-() const {
  Element r(*this);
  r.num_ = -r.num_;
  r.reduce();
  return r;
}

Element operator+(const Element& a, const Element& b) {
  check_same(a, b);
  Element r(a.domain_);
  if (a.den_ == 1 && b.den_ == 1) {
    r.num_ = a.num_ + b.num_;
  } else {
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
  }
  r.reduce();
  return r;
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  check_same(a, b);
  Element r(a.domain_);
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_ * b.den_;
  r.reduce();
  return r;
}

mpz_class norm(const Element& a) {
  if (a.domain().kind() == DomainSpec::Kind::Integers) return abs(a.numerator());
  return a.is_zero() ? 0 : 1;
}

bool is_unit(const Element& a) {
  if (a.domain().kind() == DomainSpec::Kind::Integers) return abs(a.numerator()) == 1;
  return !a.is_zero();
}

Element inverse(const Element& a) {
  if (a.is_zero()) throw DivisionByZero();
  const auto d = a.domain();
  switch (d.kind()) {
    case DomainSpec::Kind::Integers:
      if (!is_unit(a)) throw std::domain_error(a.to_string() + " is not a unit");
      return a;
    case DomainSpec::Kind::Rationals:
      return Element::fraction(d, a.denominator(), a.numerator());
    case DomainSpec::Kind::PrimeField: {
      mpz_class p(static_cast<unsigned long>(d.modulus()));
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), a.numerator().get_mpz_t(), p.get_mpz_t());
      return Element(d, inv);
    }
  }
  return a;
}

DivMod divmod(const Element& a, const Element& b) {
  check_same(a, b);
  if (b.is_zero()) throw DivisionByZero();
  if (a.domain().is_field()) return {a * inverse(b), a.zero()};
  mpz_class r;
  mpz_class ab = abs(b.numerator());
  mpz_fdiv_r(r.get_mpz_t(), a.numerator().get_mpz_t(), ab.get_mpz_t());
  mpz_class q;
  mpz_class diff = a.numerator() - r;
  mpz_divexact(q.get_mpz_t(), diff.get_mpz_t(), b.numerator().get_mpz_t());
  return {Element(a.domain(), q), Element(a.domain(), r)};
}

Bezout ext_gcd(const Element& a, const Element& b) {
  check_same(a, b);
  const auto d = a.domain();
  if (d.is_field()) {
    if (!a.is_zero()) return {a.one(), inverse(a), a.zero()};
    if (!b.is_zero()) return {a.one(), a.zero(), inverse(b)};
    return {a.zero(), a.zero(), a.zero()};
  }
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
  return {Element(d, g), Element(d, s), Element(d, t)};
}

Element gcd(const Element& a, const Element& b) { return ext_gcd(a, b).g; }

Element lcm(const Element& a, const Element& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return a.zero();
  if (a.domain().is_field()) return a.one();
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
  return Element(a.domain(), l);
}

bool divides(const Element& a, const Element& b) {
  check_same(a, b);
  if (a.is_zero()) return b.is_zero();
  if (a.domain().is_field()) return true;
  return mpz_divisible_p(b.numerator().get_mpz_t(), a.numerator().get_mpz_t()) != 0;
}

Element exact_div(const Element& a, const Element& b) {
  check_same(a, b);
  if (b.is_zero()) throw DivisionByZero();
  if (a.domain().is_field()) return a * inverse(b);
  if (!divides(b, a)) throw std::domain_error(b.to_string() + " does not divide " + a.to_string());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
  return Element(a.domain(), q);
}

Element canonical_associate(const Element& a) {
  if (a.domain().is_field()) return a.is_zero() ? a.zero() : a.one();
  return Element(a.domain(), abs(a.numerator()));
}

bool associated(const Element& a, const Element& b) { return canonical_associate(a) == canonical_associate(b); }

std::optional<SingleSolution> solve_single(const Element& a, const Element& b, const Element& c) {
  check_same(a, b);
  check_same(a, c);
  if (a.is_zero() && b.is_zero()) {
    if (!c.is_zero()) return std::nullopt;
    return SingleSolution{a.zero(), a.zero(), a.zero(), a.zero(), a.zero()};
  }
  auto [g, s, t] = ext_gcd(a, b);
  if (!divides(g, c)) return std::nullopt;
  Element m = exact_div(c, g);
  Element x0 = s * m;
  Element y0 = t * m;
  Element stride_x = exact_div(b, g);
  Element stride_y = -exact_div(a, g);
  if (!b.is_zero()) {
    // Smallest Euclidean representative of x0 modulo b/g; y0 follows.
    x0 = divmod(x0, stride_x).r;
    y0 = exact_div(c - a * x0, b);
  } else {
    x0 = exact_div(c, a);
    y0 = a.zero();
  }
  return SingleSolution{x0, y0, g, stride_x, stride_y};
}

}  // namespace min2lin
