#include "ncbtt/exactla/scalar.hpp"

#include <stdexcept>

namespace ncbtt::exactla {

Scalar::Scalar(long num, long den) : q_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  auto slash = s.find('/');
  auto check_int = [](const std::string& part) {
    std::size_t i = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check_int(num) || !check_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("bad scalar '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(q);
}

std::string Scalar::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Scalar(mpq_class(1) / q_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  q_ += o.q_;
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  q_ -= o.q_;
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
  q_ *= o.q_;
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}
Scalar Scalar::operator-() const { return Scalar(mpq_class(-q_)); }

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= kMaxPrime) throw std::invalid_argument("prime out of supported range");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rationals();
  if (text.size() > 3 && (text.substr(0, 3) == "Fp:" || text.substr(0, 3) == "fp:")) {
    std::string digits(text.substr(3));
    for (char c : digits)
      if (c < '0' || c > '9') throw std::invalid_argument("bad field '" + std::string(text) + "'");
    return prime(std::stoull(digits));
  }
  throw std::invalid_argument("bad field '" + std::string(text) + "'");
}

std::string Field::str() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(characteristic);
}

Scalar Field::normalize(const Scalar& s) const {
  if (is_rational()) return s;
  return Scalar(static_cast<long>(to_residue(s, characteristic)));
}

std::uint64_t to_residue(const Scalar& s, std::uint64_t p) {
  mpz_class pp(static_cast<unsigned long>(p));
  mpz_class n = s.numerator() % pp;
  if (n < 0) n += pp;
  mpz_class d = s.denominator() % pp;
  if (d == 0) throw std::domain_error("denominator divisible by the characteristic");
  std::uint64_t nn = n.get_ui(), dd = d.get_ui();
  return (nn * inverse_mod(dd, p)) % p;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  if (nr == 0) throw std::domain_error("no inverse mod p");
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace ncbtt::exactla
