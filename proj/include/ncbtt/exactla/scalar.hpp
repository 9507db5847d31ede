#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ncbtt::exactla {

// Exact rational number. Always stored in lowest terms with positive denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class q);

  // Accepts "p", "-p", "p/q".
  static Scalar parse(std::string_view text);

  std::string str() const;
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.q_ < b.q_; }

 private:
  mpq_class q_;
};

// Coefficient field selector: characteristic 0 means the rationals.
struct Field {
  std::uint64_t characteristic = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint64_t p);
  // "Q", "q", "Fp:7", "fp:7"
  static Field parse(std::string_view text);

  bool is_rational() const { return characteristic == 0; }
  std::string str() const;

  // Canonical representative: identity over Q, residue in [0, p) over F_p.
  Scalar normalize(const Scalar& s) const;
  bool operator==(const Field&) const = default;
};

inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 26);

std::uint64_t to_residue(const Scalar& s, std::uint64_t p);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

}  // namespace ncbtt::exactla
