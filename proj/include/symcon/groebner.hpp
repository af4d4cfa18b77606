#ifndef SYMCON_GROEBNER_HPP
#define SYMCON_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "symcon/monomial.hpp"
#include "symcon/polynomial.hpp"

namespace symcon {

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

namespace detail {

inline std::uint32_t support_mask(const Monomial& m) noexcept {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) mask |= 1u << i;
  return mask;
}

/// Multivariate division of a term list by a fixed divisor list. All inputs
/// must share one ring and order; divisors are nonzero.
class Divider {
 public:
  explicit Divider(std::span<const Polynomial> divisors) {
    divisors_.reserve(divisors.size());
    for (const auto& g : divisors) divisors_.push_back(&g);
    init_masks();
  }

  explicit Divider(std::vector<const Polynomial*> divisors) : divisors_(std::move(divisors)) {
    init_masks();
  }

  std::optional<std::size_t> find_divisor(const Monomial& m) const {
    const std::uint32_t mask = support_mask(m);
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
      if ((masks_[i] & ~mask) != 0) continue;
      const Monomial& lm = divisors_[i]->leading_monomial();
      if (lm.degree() <= m.degree() && lm.divides(m)) return i;
    }
    return std::nullopt;
  }

  /// Full reduction; quotient terms are recorded when `quotients` is non-null.
  Polynomial reduce(const Polynomial& f, std::vector<std::vector<Term>>* quotients) const {
    const MonomialOrder& order = f.order();
    std::vector<Term> current(f.terms().begin(), f.terms().end());
    std::vector<Term> scratch;
    std::vector<Term> remainder;
    std::size_t start = 0;
    while (start < current.size()) {
      const Term& lead = current[start];
      auto hit = find_divisor(lead.monomial);
      if (!hit) {
        remainder.push_back(lead);
        ++start;
        continue;
      }
      const Polynomial& g = *divisors_[*hit];
      const Monomial shift = lead.monomial / g.leading_monomial();
      const Rational factor = lead.coefficient / g.leading_coefficient();
      if (quotients) (*quotients)[*hit].push_back({shift, factor});
      detail::merge_terms(std::span<const Term>(current).subspan(start + 1),
                          g.terms().subspan(1), -factor, shift, order, scratch);
      current.swap(scratch);
      start = 0;
    }
    return Polynomial::from_sorted_terms(f.ring(), order, std::move(remainder));
  }

 private:
  void init_masks() {
    masks_.reserve(divisors_.size());
    for (const Polynomial* g : divisors_) {
      if (g->is_zero()) throw std::invalid_argument("zero divisor in division");
      masks_.push_back(support_mask(g->leading_monomial()));
    }
  }

  std::vector<const Polynomial*> divisors_;
  std::vector<std::uint32_t> masks_;
};

}  // namespace detail

/// f = sum(quotients[i] * basis[i]) + remainder, where no term of the remainder
/// is divisible by a leading monomial of the basis. Divisors are tried in list
/// order.
inline DivisionResult normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                                  const MonomialOrder& order) {
  std::vector<Polynomial> sorted;
  sorted.reserve(basis.size());
  for (const auto& g : basis) {
    require_same_ring(f.ring(), g.ring());
    sorted.push_back(g.with_order(order));
  }
  const Polynomial dividend = f.with_order(order);
  std::vector<std::vector<Term>> quotient_terms(sorted.size());
  detail::Divider divider(sorted);
  DivisionResult result{divider.reduce(dividend, &quotient_terms), {}};
  result.quotients.reserve(sorted.size());
  for (auto& terms : quotient_terms)
    result.quotients.push_back(Polynomial::from_sorted_terms(f.ring(), order, std::move(terms)));
  return result;
}

/// Remainder-only division; `f` and every divisor must already use the same order.
inline Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) f.check_compatible(g);
  return detail::Divider(divisors).reduce(f, nullptr);
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of zero");
  require_same_ring(f.ring(), g.ring());
  const Polynomial a = f.with_order(order);
  const Polynomial b = g.with_order(order);
  const Monomial lcm = a.leading_monomial().lcm(b.leading_monomial());
  const Polynomial left =
      a.mul_term(lcm / a.leading_monomial(), 1 / a.leading_coefficient());
  return left.add_scaled(b, -1 / b.leading_coefficient(), lcm / b.leading_monomial());
}

/// Reduced Groebner basis: monic elements, sorted by leading monomial ascending.
/// The empty basis describes the zero ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), order_(order), elements_(std::move(elements)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_unit() const noexcept { return elements_.size() == 1 && elements_[0].is_constant(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> lms;
    lms.reserve(elements_.size());
    for (const auto& g : elements_) lms.push_back(g.leading_monomial());
    return lms;
  }

  Polynomial reduce(const Polynomial& f) const {
    require_same_ring(ring_, f.ring());
    if (elements_.empty()) return f.with_order(order_);
    return detail::Divider(elements_).reduce(f.with_order(order_), nullptr);
  }

  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

  bool operator==(const GroebnerBasis& other) const {
    return same_ring(ring_, other.ring_) && order_ == other.order_ &&
           elements_ == other.elements_;
  }

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
};

namespace detail {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Moeller pair criteria (which subsume the coprime criterion).
class Buchberger {
 public:
  Buchberger(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {}

  void add_generator(const Polynomial& f) {
    Polynomial h = reduce_by_active(f);
    if (!h.is_zero()) insert(h.monic());
  }

  void run() {
    while (!pairs_.empty()) {
      const std::size_t pick = select_pair();
      const CriticalPair pair = pairs_[pick];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(pick));
      Polynomial h = reduce_by_active(s_pair(pair));
      if (!h.is_zero()) insert(h.monic());
    }
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> minimal;
    for (std::size_t k = 0; k < store_.size(); ++k)
      if (active_[k]) minimal.push_back(store_[k]);
    std::sort(minimal.begin(), minimal.end(), [this](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    // Active leading monomials are pairwise non-divisible, so interreducing the
    // tails leaves every leading term in place.
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Polynomial*> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t l = 0; l < minimal.size(); ++l)
        if (l != k) others.push_back(&minimal[l]);
      const Term& lead = minimal[k].leading_term();
      Polynomial tail = minimal[k] - Polynomial::term(ring_, lead.monomial, lead.coefficient, order_);
      Polynomial reduced_tail = others.empty() ? tail : detail::Divider(std::move(others)).reduce(tail, nullptr);
      reduced.push_back(Polynomial::term(ring_, lead.monomial, lead.coefficient, order_) +
                        reduced_tail);
    }
    return reduced;
  }

 private:
  Polynomial s_pair(const CriticalPair& pair) const {
    const Polynomial& a = store_[pair.i];
    const Polynomial& b = store_[pair.j];
    return a.mul_term(pair.lcm / a.leading_monomial(), Rational(1))
        .add_scaled(b, Rational(-1), pair.lcm / b.leading_monomial());
  }

  Polynomial reduce_by_active(const Polynomial& f) const {
    std::vector<const Polynomial*> reducers;
    for (std::size_t k = 0; k < store_.size(); ++k)
      if (active_[k]) reducers.push_back(&store_[k]);
    if (reducers.empty()) return f;
    return detail::Divider(std::move(reducers)).reduce(f, nullptr);
  }

  // Lowest lcm degree first, then by lcm in the term order, then by indices.
  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      const auto cmp = order_.compare(a.lcm, b.lcm);
      if (cmp < 0 || (cmp == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    return best;
  }

  // Gebauer-Moeller update for a new element h.
  void insert(Polynomial h) {
    const std::size_t hi = store_.size();
    const Monomial& hm = h.leading_monomial();

    std::vector<CriticalPair> candidates;
    for (std::size_t k = 0; k < store_.size(); ++k)
      if (active_[k]) candidates.push_back({k, hi, store_[k].leading_monomial().lcm(hm)});

    // Chain criterion on new pairs: drop (g, h) if another new pair's lcm
    // properly divides it (or equals it and comes earlier), unless coprime.
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& pa = candidates[a];
      const bool coprime = store_[pa.i].leading_monomial().coprime(hm);
      bool redundant = false;
      if (!coprime) {
        for (std::size_t b = 0; b < candidates.size() && !redundant; ++b) {
          if (a == b) continue;
          const auto& pb = candidates[b];
          if (!pb.lcm.divides(pa.lcm)) continue;
          if (!(pb.lcm == pa.lcm)) {
            redundant = true;
          } else if (b < a) {
            // Equal lcms: keep one representative, preferring a coprime pair
            // (which is then discarded below).
            redundant = true;
          } else {
            redundant = store_[pb.i].leading_monomial().coprime(hm);
          }
        }
      }
      if (!redundant) kept.push_back(pa);
    }
    // Coprime leading monomials: the S-polynomial reduces to zero.
    std::vector<CriticalPair> fresh;
    for (auto& p : kept)
      if (!store_[p.i].leading_monomial().coprime(hm)) fresh.push_back(std::move(p));

    // Old pairs made redundant by h.
    std::vector<CriticalPair> survivors;
    for (auto& p : pairs_) {
      const bool divides = hm.divides(p.lcm);
      const Monomial li = store_[p.i].leading_monomial().lcm(hm);
      const Monomial lj = store_[p.j].leading_monomial().lcm(hm);
      if (divides && !(li == p.lcm) && !(lj == p.lcm)) continue;
      survivors.push_back(std::move(p));
    }
    pairs_ = std::move(survivors);
    for (auto& p : fresh) pairs_.push_back(std::move(p));

    for (std::size_t k = 0; k < store_.size(); ++k)
      if (active_[k] && hm.divides(store_[k].leading_monomial())) active_[k] = false;
    store_.push_back(std::move(h));
    active_.push_back(true);
  }

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> store_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens` under `order`.
inline GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order) {
  if (gens.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  const RingPtr& ring = gens.front().ring();
  std::vector<Polynomial> inputs;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (!g.is_zero()) inputs.push_back(g.with_order(order).monic());
  }
  if (inputs.empty()) throw std::invalid_argument("buchberger needs a nonzero generator");
  std::stable_sort(inputs.begin(), inputs.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  detail::Buchberger engine(ring, order);
  for (const auto& g : inputs) {
    if (g.is_constant()) {
      return GroebnerBasis(ring, order, {Polynomial::constant(ring, Rational(1), order)});
    }
    engine.add_generator(g);
  }
  engine.run();
  return GroebnerBasis(ring, order, engine.reduced_basis());
}

/// Independent check that `elements` is a reduced Groebner basis: monic,
/// no term of any element divisible by another element's leading monomial,
/// and every S-polynomial reducing to zero (no pair criteria).
inline bool is_reduced_basis(std::span<const Polynomial> elements, const MonomialOrder& order) {
  std::vector<Polynomial> basis;
  for (const auto& g : elements) {
    if (g.is_zero()) return false;
    basis.push_back(g.with_order(order));
  }
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].leading_coefficient() != 1) return false;
    for (std::size_t l = 0; l < basis.size(); ++l) {
      if (k == l) continue;
      const Monomial& lm = basis[l].leading_monomial();
      for (const auto& t : basis[k].terms())
        if (lm.divides(t.monomial)) return false;
    }
  }
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t l = k + 1; l < basis.size(); ++l)
      if (!reduce(s_polynomial(basis[k], basis[l], order), basis).is_zero()) return false;
  return true;
}

inline bool is_reduced_basis(const GroebnerBasis& basis) {
  return is_reduced_basis(basis.elements(), basis.order());
}

}  // namespace symcon

#endif  // SYMCON_GROEBNER_HPP
