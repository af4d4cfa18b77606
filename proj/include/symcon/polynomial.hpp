#ifndef SYMCON_POLYNOMIAL_HPP
#define SYMCON_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symcon/errors.hpp"
#include "symcon/monomial.hpp"
#include "symcon/rational.hpp"

namespace symcon {

struct Term {
  Monomial monomial;
  Rational coefficient;

  bool operator==(const Term&) const = default;
};

namespace detail {

/// out = f + c * m * g for term lists sorted descending by `order`.
inline void merge_terms(std::span<const Term> f, std::span<const Term> g, const Rational& c,
                        const Monomial& m, const MonomialOrder& order, std::vector<Term>& out) {
  out.clear();
  out.reserve(f.size() + g.size());
  const bool shift = !m.is_one();
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = shift ? g[j].monomial * m : g[j].monomial;
    if (i == f.size()) {
      out.push_back({gm, g[j++].coefficient * c});
      continue;
    }
    const auto cmp = order.compare(f[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, g[j++].coefficient * c});
    } else {
      Rational sum = f[i++].coefficient + g[j++].coefficient * c;
      if (sum != 0) out.push_back({gm, std::move(sum)});
    }
  }
}

}  // namespace detail

/// Sparse polynomial over Q. Terms are kept strictly descending in the
/// polynomial's monomial order with no zero coefficients; the empty term list
/// is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(RingPtr ring, MonomialOrder order = MonomialOrder::grevlex())
      : ring_(std::move(ring)), order_(order) {
    if (!ring_) throw std::invalid_argument("polynomial needs a ring");
  }

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms) {
    Polynomial p(std::move(ring), order);
    for (const auto& t : terms)
      if (t.monomial.size() != p.ring_->size())
        throw RingMismatch("term has wrong number of variables");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  static Polynomial constant(RingPtr ring, const Rational& c,
                             MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial p(ring, order);
    if (c != 0) p.terms_.push_back({Monomial(ring->size()), c});
    return p;
  }

  static Polynomial variable(RingPtr ring, std::size_t index,
                             MonomialOrder order = MonomialOrder::grevlex()) {
    if (index >= ring->size()) throw std::out_of_range("variable index out of range");
    Polynomial p(ring, order);
    p.terms_.push_back({Monomial::variable(ring->size(), index), Rational(1)});
    return p;
  }

  static Polynomial term(RingPtr ring, const Monomial& m, const Rational& c,
                         MonomialOrder order = MonomialOrder::grevlex()) {
    if (m.size() != ring->size()) throw RingMismatch("term has wrong number of variables");
    Polynomial p(ring, order);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
  }

  bool is_monomial() const noexcept { return terms_.size() == 1; }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coefficient() const { return leading_term().coefficient; }

  /// Total degree; -1 for the zero polynomial.
  long total_degree() const noexcept {
    long d = -1;
    for (const auto& t : terms_) d = std::max<long>(d, t.monomial.degree());
    return d;
  }

  Polynomial with_order(const MonomialOrder& order) const {
    if (order == order_) return *this;
    Polynomial p(ring_, order);
    p.terms_ = terms_;
    p.sort_terms();
    return p;
  }

  Polynomial monic() const {
    if (is_zero() || leading_coefficient() == 1) return *this;
    return scaled(1 / leading_coefficient());
  }

  Polynomial scaled(const Rational& c) const {
    Polynomial p(ring_, order_);
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial, t.coefficient * c});
    return p;
  }

  /// this * c * m; monomial multiplication preserves the term order.
  Polynomial mul_term(const Monomial& m, const Rational& c) const {
    Polynomial p(ring_, order_);
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coefficient * c});
    return p;
  }

  Polynomial operator-() const { return scaled(Rational(-1)); }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    f.check_compatible(g);
    return merge(f, g, Rational(1), Monomial(f.ring_->size()));
  }

  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    f.check_compatible(g);
    return merge(f, g, Rational(-1), Monomial(f.ring_->size()));
  }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.check_compatible(g);
    Polynomial p(f.ring_, f.order_);
    if (f.is_zero() || g.is_zero()) return p;
    const Polynomial& outer = f.size() <= g.size() ? f : g;
    const Polynomial& inner = f.size() <= g.size() ? g : f;
    for (const auto& t : outer.terms_)
      p = merge(p, inner, t.coefficient, t.monomial);
    return p;
  }

  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial pow(unsigned exponent) const {
    Polynomial result = constant(ring_, Rational(1), order_);
    Polynomial base = *this;
    while (exponent > 0) {
      if (exponent & 1u) result *= base;
      exponent >>= 1;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  /// Formal partial derivative with respect to variable `index`.
  Polynomial derivative(std::size_t index) const {
    if (index >= ring_->size()) throw std::out_of_range("variable index out of range");
    Polynomial p(ring_, order_);
    for (const auto& t : terms_) {
      const unsigned e = t.monomial[index];
      if (e == 0) continue;
      Monomial m = t.monomial;
      m.set(index, e - 1);
      p.terms_.push_back({m, t.coefficient * e});
    }
    // a > b with x_i | a, b implies a / x_i > b / x_i, so the order is kept.
    return p;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != ring_->size())
      throw std::invalid_argument("evaluation point has wrong length");
    Rational sum = 0;
    Rational power;
    for (const auto& t : terms_) {
      Rational value = t.coefficient;
      for (std::size_t i = 0; i < point.size(); ++i) {
        if (t.monomial[i] == 0) continue;
        mpz_pow_ui(mpq_numref(power.get_mpq_t()), mpq_numref(point[i].get_mpq_t()),
                   t.monomial[i]);
        mpz_pow_ui(mpq_denref(power.get_mpq_t()), mpq_denref(point[i].get_mpq_t()),
                   t.monomial[i]);
        value *= power;
      }
      sum += value;
    }
    return sum;
  }

  /// Equal as elements of the ring, regardless of the order they are sorted by.
  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (!same_ring(f.ring_, g.ring_)) return false;
    if (f.order_ == g.order_) return f.terms_ == g.terms_;
    return f.terms_ == g.with_order(f.order_).terms_;
  }

  /// Infix form using the ring's variable names; parseable by the session grammar.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.coefficient;
      if (first) {
        if (c < 0) {
          out << "-";
          c = -c;
        }
      } else {
        out << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      first = false;
      const std::string mono = monomial_string(t.monomial);
      if (mono.empty()) {
        out << c.get_str();
      } else {
        if (c != 1) out << c.get_str() << "*";
        out << mono;
      }
    }
    return out.str();
  }

  friend std::ostream& operator<<(std::ostream& out, const Polynomial& f) {
    return out << f.to_string();
  }

  /// this + c * m * g.
  Polynomial add_scaled(const Polynomial& g, const Rational& c, const Monomial& m) const {
    check_compatible(g);
    return merge(*this, g, c, m);
  }

  /// Adopts terms already strictly descending in `order` with nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms) {
    Polynomial p(std::move(ring), order);
    p.terms_ = std::move(terms);
    return p;
  }

  void check_compatible(const Polynomial& g) const {
    require_same_ring(ring_, g.ring_);
    if (!(order_ == g.order_)) throw OrderMismatch();
  }

 private:
  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->name(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
      return order_.compare(a.monomial, b.monomial) > 0;
    });
  }

  void normalize() {
    sort_terms();
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().monomial == t.monomial) {
        merged.back().coefficient += t.coefficient;
      } else {
        if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
        merged.push_back(std::move(t));
      }
    }
    if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
    terms_ = std::move(merged);
  }

  static Polynomial merge(const Polynomial& f, const Polynomial& g, const Rational& c,
                          const Monomial& m) {
    Polynomial p(f.ring_, f.order_);
    detail::merge_terms(f.terms_, g.terms_, c, m, f.order_, p.terms_);
    return p;
  }

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// The maximal term of f under `order`.
inline Term leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::domain_error("zero polynomial has no leading term");
  return f.with_order(order).leading_term();
}

}  // namespace symcon

#endif  // SYMCON_POLYNOMIAL_HPP
