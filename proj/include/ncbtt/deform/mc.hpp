#pragma once

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncbtt/exactla/scalar.hpp"
#include "ncbtt/hochschild/tensor.hpp"
#include "ncbtt/homology/spaces.hpp"

namespace ncbtt::deform {

using exactla::Scalar;

// Obstruction to lifting over k[t]/t^{n+1}: omega is a cocycle, f kills every
// coboundary reachable by the solver and f(omega) != 0.
template <class E>
struct Obstruction {
  int order = 0;
  int weight = 0;
  E omega;
  std::vector<Scalar> functional;
  bool verified = false;
};

enum class Status { lifted, obstructed, window_incomplete };

const char* status_name(Status s);

template <class E>
struct Solve {
  Status status = Status::lifted;
  E solution;
  std::optional<Obstruction<E>> obstruction;
  std::string note;
};

// x = t phi_1 + ... + t^{N-1} phi_{N-1} over k[t]/t^N.
template <class E>
struct MCSeries {
  int order = 1;
  std::vector<E> phi;
};

template <class L>
concept Dgla = requires(const L& l, const typename L::Element& x, const Scalar& s, bool cyclic) {
  { l.zero() } -> std::same_as<typename L::Element>;
  { l.d(x) } -> std::same_as<typename L::Element>;
  { l.bracket(x, x) } -> std::same_as<typename L::Element>;
  { l.is_zero(x) } -> std::convertible_to<bool>;
  { x + x } -> std::convertible_to<typename L::Element>;
  { x - x } -> std::convertible_to<typename L::Element>;
  { s * x } -> std::convertible_to<typename L::Element>;
  // d y = rhs with y odd; cyclic restricts y to the cyclic subcomplex.
  { l.solve(x, cyclic) } -> std::same_as<Solve<typename L::Element>>;
};

template <Dgla L>
std::vector<typename L::Element> mc_residual(const L& l, const MCSeries<typename L::Element>& x) {
  using E = typename L::Element;
  std::vector<E> r;
  for (int n = 1; n < x.order; ++n) {
    E acc = l.d(x.phi[static_cast<std::size_t>(n - 1)]);
    E quad = l.zero();
    for (int i = 1; i < n; ++i)
      quad = quad + l.bracket(x.phi[static_cast<std::size_t>(i - 1)], x.phi[static_cast<std::size_t>(n - i - 1)]);
    r.push_back(acc + Scalar(1, 2) * quad);
  }
  return r;
}

template <Dgla L>
bool is_mc(const L& l, const MCSeries<typename L::Element>& x) {
  for (const auto& r : mc_residual(l, x))
    if (!l.is_zero(r)) return false;
  return true;
}

template <class E>
struct Lift {
  Status status = Status::lifted;
  MCSeries<E> series;
  std::optional<Obstruction<E>> obstruction;
  std::string note;
};

// From k[t]/t^N to k[t]/t^{N+1}: solve d phi_N = -omega, omega = 1/2 sum [phi_i, phi_j].
template <Dgla L>
Lift<typename L::Element> mc_lift_step(const L& l, const MCSeries<typename L::Element>& x, bool cyclic) {
  using E = typename L::Element;
  const int n = x.order;
  E omega = l.zero();
  for (int i = 1; i < n; ++i)
    omega = omega + l.bracket(x.phi[static_cast<std::size_t>(i - 1)], x.phi[static_cast<std::size_t>(n - i - 1)]);
  omega = Scalar(1, 2) * omega;
  if (!l.is_zero(l.d(omega))) throw std::logic_error("obstruction cochain is not a cocycle");
  Lift<E> out{Status::lifted, x, std::nullopt, {}};
  Solve<E> s = l.solve(Scalar(-1) * omega, cyclic);
  out.status = s.status;
  out.note = s.note;
  if (s.status == Status::lifted) {
    out.series.order = n + 1;
    out.series.phi.push_back(s.solution);
  } else if (s.obstruction) {
    out.obstruction = s.obstruction;
    out.obstruction->order = n;
    out.obstruction->omega = omega;
  }
  return out;
}

// Series in t with zero constant term, index i holding the t^{i+1} coefficient.
template <Dgla L>
std::vector<typename L::Element> series_bracket(const L& l, const std::vector<typename L::Element>& a,
                                                const std::vector<typename L::Element>& b, int order) {
  std::vector<typename L::Element> out(static_cast<std::size_t>(order - 1), l.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = i + j + 1;  // t^{i+1} t^{j+1} = t^{k+1}
      if (k + 1 < static_cast<std::size_t>(order) && !l.is_zero(a[i]) && !l.is_zero(b[j]))
        out[k] = out[k] + l.bracket(a[i], b[j]);
    }
  return out;
}

// x' = e^{ad xi} x - ((e^{ad xi} - 1) / ad xi)(d xi), xi = sum t^i xi_i even.
template <Dgla L>
MCSeries<typename L::Element> gauge_apply(const L& l, const std::vector<typename L::Element>& xi,
                                          const MCSeries<typename L::Element>& x) {
  using E = typename L::Element;
  const int n = x.order;
  std::vector<E> dxi;
  for (const auto& v : xi) dxi.push_back(l.d(v));
  dxi.resize(static_cast<std::size_t>(std::max(n - 1, 0)), l.zero());
  std::vector<E> out = x.phi;
  std::vector<E> term_x = x.phi, term_d = dxi;
  Scalar fact(1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - term_d[i];
  for (int k = 1; k < n; ++k) {
    term_x = series_bracket(l, xi, term_x, n);
    term_d = series_bracket(l, xi, term_d, n);
    fact *= Scalar(k);
    Scalar cx = fact.inverse(), cd = (fact * Scalar(k + 1)).inverse();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + cx * term_x[i] - cd * term_d[i];
  }
  return {n, out};
}

// The Hochschild DGLA (shifted cochains, delta, Gerstenhaber bracket); odd means
// the parity of the structure cochain.
class HochschildDgla {
 public:
  using Element = hochschild::Cochain;
  HochschildDgla(algebra::AlgebraPtr a, int max_weight);
  const algebra::AlgebraPtr& algebra_ptr() const { return alg_; }
  int max_weight() const { return max_weight_; }
  Element zero() const { return Element(alg_); }
  Element d(const Element& x) const;
  Element bracket(const Element& x, const Element& y) const;
  bool is_zero(const Element& x) const { return x.is_zero(); }
  Solve<Element> solve(const Element& rhs, bool cyclic) const;
  // Find xi even and c cyclic with phi = c + delta xi, weight by weight.
  std::optional<Element> cyclic_gauge(const Element& phi, int* failed_weight) const;
  const homology::CochainComplex& complex() const { return complex_; }

 private:
  void check(const Element& x) const;
  algebra::AlgebraPtr alg_;
  int max_weight_;
  homology::CochainComplex complex_;
};

// Three-dimensional fixture: odd xi, even c and e, d = 0, [xi, xi] = c.
struct Vec3 {
  std::vector<Scalar> v = std::vector<Scalar>(3);
  friend Vec3 operator+(Vec3 a, const Vec3& b) {
    for (std::size_t i = 0; i < 3; ++i) a.v[i] += b.v[i];
    return a;
  }
  friend Vec3 operator-(Vec3 a, const Vec3& b) {
    for (std::size_t i = 0; i < 3; ++i) a.v[i] -= b.v[i];
    return a;
  }
  friend Vec3 operator*(const Scalar& s, Vec3 a) {
    for (auto& x : a.v) x *= s;
    return a;
  }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

class SyntheticDgla {
 public:
  using Element = Vec3;
  static Vec3 xi(const Scalar& s = Scalar(1));
  static Vec3 c(const Scalar& s = Scalar(1));
  static Vec3 e(const Scalar& s = Scalar(1));
  Element zero() const { return {}; }
  Element d(const Element&) const { return {}; }
  Element bracket(const Element& x, const Element& y) const;
  bool is_zero(const Element& x) const;
  Solve<Element> solve(const Element& rhs, bool cyclic) const;
};

static_assert(Dgla<HochschildDgla>);
static_assert(Dgla<SyntheticDgla>);

}  // namespace ncbtt::deform
