#include "gorlab/base_ring.hpp"

#include <stdexcept>

namespace gorlab {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BaseRing BaseRing::prime_field(long p) {
  if (!is_prime(p)) throw std::invalid_argument("F_p requires a prime p, got " + std::to_string(p));
  return BaseRing(RingKind::PrimeField, p);
}

Scalar BaseRing::normalize(const Scalar& a) const {
  switch (kind_) {
    case RingKind::Rationals:
      return a;
    case RingKind::Integers:
      if (a.get_den() != 1) throw std::invalid_argument("non-integral scalar over Z: " + a.get_str());
      return a;
    case RingKind::PrimeField: {
      mpz_class p(p_);
      mpz_class num = a.get_num() % p;
      if (num < 0) num += p;
      if (a.get_den() != 1) {
        mpz_class den = a.get_den() % p;
        if (den == 0) throw std::invalid_argument("denominator divisible by p");
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        num = (num * inv) % p;
      }
      return Scalar(num);
    }
  }
  return a;
}

Scalar BaseRing::inverse(const Scalar& a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (kind_ == RingKind::Integers) {
    if (a == 1 || a == -1) return a;
    throw std::domain_error("non-unit inverse over Z");
  }
  if (kind_ == RingKind::Rationals) return 1 / a;
  mpz_class p(p_), inv, num = a.get_num();
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return Scalar(inv);
}

bool BaseRing::is_unit(const Scalar& a) const {
  if (kind_ == RingKind::Integers) return a == 1 || a == -1;
  return a != 0;
}

std::string BaseRing::name() const {
  switch (kind_) {
    case RingKind::Rationals: return "Q";
    case RingKind::Integers: return "Z";
    case RingKind::PrimeField: return "F" + std::to_string(p_);
  }
  return "?";
}

Scalar parse_scalar(const std::string& text, const BaseRing& ring) {
  Scalar s;
  if (s.set_str(text, 10) != 0 || s.get_den() == 0) throw std::invalid_argument("bad scalar: " + text);
  s.canonicalize();
  return ring.normalize(s);
}

std::string scalar_to_string(const Scalar& s) { return s.get_str(); }

}  // namespace gorlab
