#ifndef SYMCON_SYMBOLIC_HPP
#define SYMCON_SYMBOLIC_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symcon/errors.hpp"
#include "symcon/ideal.hpp"
#include "symcon/polynomial.hpp"
#include "symcon/rational.hpp"

namespace symcon {

using Point = std::vector<Rational>;

/// N >= 1 pairwise distinct points of Q^n.
class PointSet {
 public:
  PointSet(RingPtr ring, std::vector<Point> points) : ring_(std::move(ring)), points_(std::move(points)) {
    if (!ring_) throw std::invalid_argument("point set needs a ring");
    if (points_.empty()) throw std::invalid_argument("point set must be nonempty");
    for (std::size_t k = 0; k < points_.size(); ++k) {
      if (points_[k].size() != ring_->size())
        throw std::invalid_argument("point " + std::to_string(k + 1) + " has " +
                                    std::to_string(points_[k].size()) + " coordinates, expected " +
                                    std::to_string(ring_->size()));
      for (std::size_t l = 0; l < k; ++l)
        if (points_[l] == points_[k])
          throw std::invalid_argument("duplicate point " + std::to_string(k + 1));
    }
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  RingPtr ring_;
  std::vector<Point> points_;
};

namespace detail {

/// Rank of a dense rational matrix (Gaussian elimination over Q).
inline std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Prime ideal generated by c linearly independent affine-linear forms; its
/// variety is a linear subspace of codimension c.
class LinearPrime {
 public:
  explicit LinearPrime(std::vector<Polynomial> forms) {
    if (forms.empty()) throw std::invalid_argument("linear prime needs at least one form");
    ring_ = forms.front().ring();
    std::vector<std::vector<Rational>> linear_parts;
    for (auto& f : forms) {
      require_same_ring(ring_, f.ring());
      if (f.total_degree() != 1)
        throw std::invalid_argument("'" + f.to_string() + "' is not a degree-1 form");
      std::vector<Rational> row(ring_->size());
      for (const auto& t : f.terms())
        for (std::size_t i = 0; i < ring_->size(); ++i)
          if (t.monomial[i] == 1) row[i] = t.coefficient;
      linear_parts.push_back(std::move(row));
      forms_.push_back(f.with_order(MonomialOrder::grevlex()));
    }
    if (forms_.size() > ring_->size() || detail::matrix_rank(linear_parts) != forms_.size())
      throw std::invalid_argument("linear forms are not independent");
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& forms() const noexcept { return forms_; }
  std::size_t codimension() const noexcept { return forms_.size(); }
  Ideal ideal() const { return Ideal(ring_, forms_); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> forms_;
};

inline LinearPrime linear_prime(std::vector<Polynomial> forms) {
  return LinearPrime(std::move(forms));
}

/// Radical ideal presented as the intersection of its minimal linear primes.
class DecomposedRadical {
 public:
  explicit DecomposedRadical(std::vector<LinearPrime> primes)
      : primes_(std::move(primes)), radical_(Ideal::zero(ring_of(primes_))) {
    ring_ = radical_.ring();
    std::vector<Ideal> ideals;
    for (const auto& p : primes_) {
      require_same_ring(ring_, p.ring());
      ideals.push_back(p.ideal());
    }
    for (std::size_t k = 0; k < ideals.size(); ++k)
      for (std::size_t l = 0; l < ideals.size(); ++l)
        if (k != l && ideals[k].contains(ideals[l]))
          throw std::invalid_argument("prime " + std::to_string(k + 1) + " contains prime " +
                                      std::to_string(l + 1) + "; components must be minimal");
    radical_ = intersect(ideals);
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<LinearPrime>& primes() const noexcept { return primes_; }
  const Ideal& radical_ideal() const noexcept { return radical_; }

  std::size_t max_codimension() const {
    std::size_t c = 0;
    for (const auto& p : primes_) c = std::max(c, p.codimension());
    return c;
  }

  /// Every component is a point.
  bool is_zero_dimensional() const {
    return std::all_of(primes_.begin(), primes_.end(),
                       [&](const LinearPrime& p) { return p.codimension() == ring_->size(); });
  }

 private:
  static RingPtr ring_of(const std::vector<LinearPrime>& primes) {
    if (primes.empty()) throw std::invalid_argument("decomposition needs at least one prime");
    return primes.front().ring();
  }

  RingPtr ring_;
  std::vector<LinearPrime> primes_;
  Ideal radical_;
};

/// Maximal ideal (x_1 - a_1, ..., x_n - a_n) of a point.
inline LinearPrime point_prime(const RingPtr& ring, const Point& point) {
  std::vector<Polynomial> forms;
  for (std::size_t i = 0; i < ring->size(); ++i)
    forms.push_back(Polynomial::variable(ring, i) - Polynomial::constant(ring, point[i]));
  return LinearPrime(std::move(forms));
}

inline DecomposedRadical vanishing_ideal(const PointSet& points) {
  std::vector<LinearPrime> primes;
  for (const auto& a : points.points()) primes.push_back(point_prime(points.ring(), a));
  return DecomposedRadical(std::move(primes));
}

struct SymbolicPower {
  DecomposedRadical source;
  unsigned p;
  Ideal ideal;
};

/// I^(p) = intersection of P_i^p over the primes.
inline SymbolicPower symbolic_power(const DecomposedRadical& radical, unsigned p) {
  if (p < 1) throw std::invalid_argument("symbolic power exponent must be at least 1");
  if (p == 1) return {radical, 1, radical.radical_ideal()};
  std::vector<Ideal> powers;
  for (const auto& prime : radical.primes()) powers.push_back(power(prime.ideal(), p));
  return {radical, p, intersect(powers)};
}

/// True iff every partial derivative of f of order < p vanishes at every point.
inline bool derivative_membership_oracle(const Polynomial& f, const PointSet& points, unsigned p) {
  require_same_ring(f.ring(), points.ring());
  if (p < 1) throw std::invalid_argument("order must be at least 1");
  const std::size_t n = f.ring()->size();
  // Walk multi-indices beta with |beta| < p, differentiating only in
  // non-decreasing variable order so each beta is visited once.
  std::function<bool(const Polynomial&, std::size_t, unsigned)> visit =
      [&](const Polynomial& g, std::size_t first_var, unsigned order) {
        if (g.is_zero()) return true;
        for (const auto& a : points.points())
          if (g.evaluate(a) != 0) return false;
        if (order + 1 >= p) return true;
        for (std::size_t i = first_var; i < n; ++i)
          if (!visit(g.derivative(i), i, order + 1)) return false;
        return true;
      };
  return visit(f, 0, 0);
}

/// Number of standard monomials of a zero-dimensional ideal, i.e. the
/// dimension of the quotient ring as a Q-vector space.
inline Integer colength(const Ideal& ideal) {
  if (ideal.is_zero()) throw NotZeroDimensional("the zero ideal has infinite colength");
  return Integer(static_cast<unsigned long>(standard_monomials(ideal.basis()).size()));
}

/// Additive constant min(n, r - 1).
inline unsigned skoda_exponent(unsigned n, unsigned r) {
  if (n < 1 || r < 1) throw std::invalid_argument("skoda exponent needs n >= 1 and r >= 1");
  return std::min(n, r - 1);
}

}  // namespace symcon

#endif  // SYMCON_SYMBOLIC_HPP
