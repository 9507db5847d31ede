#include "ncbtt/exactla/elimination.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ncbtt/exactla/fp_kernels.hpp"

namespace ncbtt::exactla {

namespace {

// ---------------------------------------------------------------------------
// Rational engine: fraction-free Gauss-Jordan on integer column vectors.

using IVec = std::vector<std::pair<std::size_t, mpz_class>>;

// a*x - c*y
IVec combine(const mpz_class& a, const IVec& x, const mpz_class& c, const IVec& y) {
  IVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -c * y[j].second);
      ++j;
    } else {
      mpz_class s = a * x[i].second - c * y[j].second;
      if (s != 0) out.emplace_back(x[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

const mpz_class* lookup(const IVec& v, std::size_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != v.end() && it->first == idx) return &it->second;
  return nullptr;
}

// Integer vector proportional to a rational one; returns the scale factor.
IVec integerize(const SparseVector& v, mpz_class& scale) {
  scale = 1;
  for (const auto& [i, s] : v) scale = lcm(scale, s.denominator());
  IVec out;
  out.reserve(v.size());
  for (const auto& [i, s] : v) out.emplace_back(i, s.numerator() * (scale / s.denominator()));
  return out;
}

struct Item {
  IVec v;
  IVec track;
  mpz_class alpha = 0;  // target multiplier, zero for inserted columns
};

void remove_content(Item& it) {
  mpz_class g = 0;
  for (const auto& e : it.v) g = gcd(g, e.second);
  for (const auto& e : it.track) g = gcd(g, e.second);
  if (it.alpha != 0) g = gcd(g, it.alpha);
  if (g == 0 || g == 1) return;
  for (auto& e : it.v) e.second /= g;
  for (auto& e : it.track) e.second /= g;
  it.alpha /= g;
}

class RationalEchelon {
 public:
  explicit RationalEchelon(bool tracking) : tracking_(tracking) {}

  void reduce(Item& it) const {
    std::vector<std::size_t> hits;
    for (const auto& e : it.v)
      if (pivot_of_.count(e.first)) hits.push_back(e.first);
    for (std::size_t lead : hits) {
      const mpz_class* cur = lookup(it.v, lead);
      if (!cur) continue;
      const Item& b = basis_[pivot_of_.at(lead)];
      const mpz_class& bl = *lookup(b.v, lead);
      mpz_class g = gcd(bl, *cur);
      mpz_class a = bl / g, c = *cur / g;
      it.v = combine(a, it.v, c, b.v);
      if (tracking_) it.track = combine(a, it.track, c, b.track);
      it.alpha *= a;
      remove_content(it);
    }
  }

  // Returns true when the column is new; otherwise relation holds the kernel vector.
  bool insert(const SparseVector& col, std::size_t id, IVec* relation) {
    Item it;
    mpz_class scale;
    it.v = integerize(col, scale);
    if (tracking_) it.track.emplace_back(id, scale);
    remove_content(it);
    reduce(it);
    if (it.v.empty()) {
      if (relation) *relation = std::move(it.track);
      return false;
    }
    std::size_t lead = it.v.front().first;
    if (it.v.front().second < 0) {
      for (auto& e : it.v) e.second = -e.second;
      for (auto& e : it.track) e.second = -e.second;
    }
    const mpz_class lv = it.v.front().second;
    for (auto& b : basis_) {
      const mpz_class* hit = lookup(b.v, lead);
      if (!hit) continue;
      mpz_class g = gcd(lv, *hit);
      mpz_class a = lv / g, c = *hit / g;
      b.v = combine(a, b.v, c, it.v);
      if (tracking_) b.track = combine(a, b.track, c, it.track);
      remove_content(b);
    }
    pivot_of_[lead] = basis_.size();
    basis_.push_back(std::move(it));
    return true;
  }

  Item reduce_target(const SparseVector& target) const {
    Item it;
    mpz_class scale;
    it.v = integerize(target, scale);
    it.alpha = scale;
    remove_content(it);
    reduce(it);
    return it;
  }

  std::vector<Scalar> certificate(const Item& rem, std::size_t rows) const {
    std::vector<Scalar> f(rows);
    std::size_t q = rem.v.front().first;
    f[q] = Scalar(1);
    for (const auto& [lead, idx] : pivot_of_) {
      const Item& b = basis_[idx];
      const mpz_class* bq = lookup(b.v, q);
      if (!bq) continue;
      f[lead] -= Scalar(mpq_class(*bq, *lookup(b.v, lead)));
    }
    return f;
  }

  std::size_t size() const { return basis_.size(); }

 private:
  bool tracking_;
  std::vector<Item> basis_;
  std::map<std::size_t, std::size_t> pivot_of_;
};

// ---------------------------------------------------------------------------
// Prime-field engine: dense monic Gauss-Jordan, row axpy through fp kernels.

class PrimeEchelon {
 public:
  PrimeEchelon(std::uint64_t p, std::size_t rows, std::size_t track_width)
      : p_(p), pd_(static_cast<double>(p)), rows_(rows), width_(rows + track_width),
        pivot_of_(rows, -1), k_(fp::active_kernels()) {}

  std::vector<double> load(const SparseVector& v) const {
    std::vector<double> w(width_, 0.0);
    for (const auto& [i, s] : v) w[i] = static_cast<double>(to_residue(s, p_));
    return w;
  }

  void reduce(std::vector<double>& w) const {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      double c = w[lead_[b]];
      if (c != 0.0) k_.axpy(w.data(), basis_[b].data(), pd_ - c, width_, pd_);
    }
  }

  std::optional<std::size_t> first_nonzero(const std::vector<double>& w) const {
    for (std::size_t i = 0; i < rows_; ++i)
      if (w[i] != 0.0) return i;
    return std::nullopt;
  }

  bool insert(std::vector<double> w) {
    reduce(w);
    auto lead = first_nonzero(w);
    if (!lead) {
      last_relation_ = std::move(w);
      return false;
    }
    auto inv = inverse_mod(static_cast<std::uint64_t>(w[*lead]), p_);
    k_.scale(w.data(), static_cast<double>(inv), width_, pd_);
    for (auto& b : basis_) {
      double c = b[*lead];
      if (c != 0.0) k_.axpy(b.data(), w.data(), pd_ - c, width_, pd_);
    }
    pivot_of_[*lead] = static_cast<long>(basis_.size());
    lead_.push_back(*lead);
    basis_.push_back(std::move(w));
    return true;
  }

  std::vector<Scalar> certificate(const std::vector<double>& rem) const {
    std::vector<Scalar> f(rows_);
    std::size_t q = *first_nonzero(rem);
    std::vector<std::uint64_t> acc(rows_, 0);
    acc[q] = 1;
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      auto bq = static_cast<std::uint64_t>(basis_[b][q]);
      if (bq) acc[lead_[b]] = (acc[lead_[b]] + p_ - bq) % p_;
    }
    for (std::size_t i = 0; i < rows_; ++i) f[i] = Scalar(static_cast<long>(acc[i]));
    return f;
  }

  const std::vector<double>& last_relation() const { return last_relation_; }
  std::size_t size() const { return basis_.size(); }
  std::size_t rows() const { return rows_; }

 private:
  std::uint64_t p_;
  double pd_;
  std::size_t rows_, width_;
  std::vector<long> pivot_of_;
  std::vector<std::size_t> lead_;
  std::vector<std::vector<double>> basis_;
  std::vector<double> last_relation_;
  const fp::Kernels& k_;
};

void check_target(const SparseMatrix& m, const std::vector<Scalar>& v) {
  if (v.size() != m.rows()) throw std::invalid_argument("dimension mismatch: vector length != rows");
}

}  // namespace

std::size_t rank(const SparseMatrix& m, Field field) {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.column(a).size() < m.column(b).size();
  });
  if (field.is_rational()) {
    RationalEchelon e(false);
    for (std::size_t c : order) e.insert(m.column(c), c, nullptr);
    return e.size();
  }
  PrimeEchelon e(field.characteristic, m.rows(), 0);
  for (std::size_t c : order) e.insert(e.load(m.column(c)));
  return e.size();
}

SolveResult cobound_certificate(const SparseMatrix& m, const std::vector<Scalar>& v, Field field) {
  check_target(m, v);
  const std::size_t n = m.cols();
  if (field.is_rational()) {
    RationalEchelon e(true);
    for (std::size_t c = 0; c < n; ++c) e.insert(m.column(c), c, nullptr);
    Item rem = e.reduce_target(sparse_from_dense(v));
    if (!rem.v.empty()) return Certificate{e.certificate(rem, m.rows())};
    std::vector<Scalar> x(n);
    for (const auto& [i, t] : rem.track) x[i] = -Scalar(mpq_class(t, rem.alpha));
    return Solution{std::move(x)};
  }
  const auto p = field.characteristic;
  PrimeEchelon e(p, m.rows(), n);
  for (std::size_t c = 0; c < n; ++c) {
    auto w = e.load(m.column(c));
    w[m.rows() + c] = 1.0;
    e.insert(std::move(w));
  }
  auto w = e.load(sparse_from_dense(v));
  e.reduce(w);
  if (e.first_nonzero(w)) return Certificate{e.certificate(w)};
  std::vector<Scalar> x(n);
  for (std::size_t c = 0; c < n; ++c) {
    auto t = static_cast<std::uint64_t>(w[m.rows() + c]);
    x[c] = Scalar(static_cast<long>((p - t) % p));
  }
  return Solution{std::move(x)};
}

std::optional<std::vector<Scalar>> solve(const SparseMatrix& m, const std::vector<Scalar>& v,
                                         Field field) {
  auto r = cobound_certificate(m, v, field);
  if (auto* s = std::get_if<Solution>(&r)) return std::move(s->x);
  return std::nullopt;
}

std::vector<std::vector<Scalar>> nullspace(const SparseMatrix& m, Field field) {
  const std::size_t n = m.cols();
  std::vector<std::vector<Scalar>> out;
  if (field.is_rational()) {
    RationalEchelon e(true);
    for (std::size_t c = 0; c < n; ++c) {
      IVec rel;
      if (e.insert(m.column(c), c, &rel)) continue;
      const mpz_class* own = lookup(rel, c);
      std::vector<Scalar> x(n);
      for (const auto& [i, t] : rel) x[i] = Scalar(mpq_class(t, *own));
      out.push_back(std::move(x));
    }
    return out;
  }
  const auto p = field.characteristic;
  PrimeEchelon e(p, m.rows(), n);
  for (std::size_t c = 0; c < n; ++c) {
    auto w = e.load(m.column(c));
    w[m.rows() + c] = 1.0;
    if (e.insert(std::move(w))) continue;
    const auto& rel = e.last_relation();
    std::vector<Scalar> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = Scalar(static_cast<long>(rel[m.rows() + i]));
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<std::size_t> pivot_columns(const SparseMatrix& m, Field field) {
  std::vector<std::size_t> out;
  if (field.is_rational()) {
    RationalEchelon e(false);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (e.insert(m.column(c), c, nullptr)) out.push_back(c);
    return out;
  }
  PrimeEchelon e(field.characteristic, m.rows(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (e.insert(e.load(m.column(c)))) out.push_back(c);
  return out;
}

}  // namespace ncbtt::exactla
