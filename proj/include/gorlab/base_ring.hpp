#pragma once

#include <gmpxx.h>

#include <string>

namespace gorlab {

using Scalar = mpq_class;

enum class RingKind { Rationals, PrimeField, Integers };

// Exact coefficient ring: Q, F_p (elements stored as integers in [0, p)) or Z.
class BaseRing {
public:
  BaseRing() = default;

  static BaseRing rationals() { return BaseRing(RingKind::Rationals, 0); }
  static BaseRing integers() { return BaseRing(RingKind::Integers, 0); }
  // Throws std::invalid_argument unless p is a prime >= 2.
  static BaseRing prime_field(long p);

  RingKind kind() const { return kind_; }
  long characteristic() const { return p_; }
  bool is_field() const { return kind_ != RingKind::Integers; }
  bool is_integers() const { return kind_ == RingKind::Integers; }

  // Canonical representative; over Z the input must be integral.
  Scalar normalize(const Scalar& a) const;
  Scalar from_int(long v) const { return normalize(Scalar(v)); }
  Scalar inverse(const Scalar& a) const;  // fields only, a != 0
  bool is_unit(const Scalar& a) const;

  std::string name() const;  // "Q", "Z", "F5"

  bool operator==(const BaseRing& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const BaseRing& o) const { return !(*this == o); }

private:
  BaseRing(RingKind k, long p) : kind_(k), p_(p) {}
  RingKind kind_ = RingKind::Rationals;
  long p_ = 0;
};

bool is_prime(long n);

// Decimal "p/q" or integer text, normalized into the ring.
Scalar parse_scalar(const std::string& text, const BaseRing& ring);
std::string scalar_to_string(const Scalar& s);

}  // namespace gorlab
