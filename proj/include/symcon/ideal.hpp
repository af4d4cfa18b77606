#ifndef SYMCON_IDEAL_HPP
#define SYMCON_IDEAL_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <span>
#include <unordered_map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symcon/errors.hpp"
#include "symcon/groebner.hpp"
#include "symcon/polynomial.hpp"

namespace symcon {

namespace detail {

/// Write-once Groebner basis cache shared by copies of one Ideal value.
class BasisCache {
 public:
  const GroebnerBasis* find(const MonomialOrder& order) const {
    std::lock_guard lock(mutex_);
    auto it = bases_.find(key(order));
    return it == bases_.end() ? nullptr : &it->second;
  }

  // First writer wins; bases are canonical, so a concurrent loser computed the same value.
  const GroebnerBasis& insert(GroebnerBasis basis) {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = bases_.emplace(key(basis.order()), std::move(basis));
    return it->second;
  }

 private:
  static std::pair<int, std::size_t> key(const MonomialOrder& order) {
    return {static_cast<int>(order.kind()), order.block()};
  }

  mutable std::mutex mutex_;
  std::map<std::pair<int, std::size_t>, GroebnerBasis> bases_;
};

}  // namespace detail

/// Finitely generated ideal of Q[x_1..x_n]. Generators are stored nonzero and
/// sorted by grevlex; an empty generator list is the zero ideal.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators)
      : ring_(std::move(ring)), cache_(std::make_shared<detail::BasisCache>()) {
    if (!ring_) throw std::invalid_argument("ideal needs a ring");
    for (auto& g : generators) {
      require_same_ring(ring_, g.ring());
      if (!g.is_zero()) generators_.push_back(g.with_order(MonomialOrder::grevlex()));
    }
  }

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

  static Ideal unit(RingPtr ring) {
    auto one = Polynomial::constant(ring, Rational(1));
    return Ideal(std::move(ring), {one});
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_zero() const noexcept { return generators_.empty(); }

  /// Reduced Groebner basis under `order`, computed once per order.
  const GroebnerBasis& basis(const MonomialOrder& order = MonomialOrder::grevlex()) const {
    if (const GroebnerBasis* cached = cache_->find(order)) return *cached;
    if (generators_.empty()) return cache_->insert(GroebnerBasis(ring_, order, {}));
    return cache_->insert(buchberger(generators_, order));
  }

  /// Installs a basis known to be the reduced basis of this ideal.
  void seed_basis(GroebnerBasis basis) const {
    require_same_ring(ring_, basis.ring());
    cache_->insert(std::move(basis));
  }

  bool is_unit() const { return basis().is_unit(); }

  bool contains(const Polynomial& f) const {
    require_same_ring(ring_, f.ring());
    return basis().contains(f);
  }

  /// True when every generator of `other` lies in this ideal.
  bool contains(const Ideal& other) const {
    require_same_ring(ring_, other.ring_);
    const GroebnerBasis& gb = basis();
    return std::all_of(other.generators_.begin(), other.generators_.end(),
                       [&](const Polynomial& g) { return gb.contains(g); });
  }

  std::string to_string() const {
    if (generators_.empty()) return "0";
    std::string s;
    for (const auto& g : generators_) {
      if (!s.empty()) s += ", ";
      s += g.to_string();
    }
    return s;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<detail::BasisCache> cache_;
};

inline bool contains(const Ideal& ideal, const Polynomial& f) { return ideal.contains(f); }

/// Equality through reduced grevlex bases.
inline bool equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  return a.basis().elements() == b.basis().elements();
}

namespace detail {

/// Monic copies with duplicates removed; a monomial generator divisible by
/// another monomial generator is dropped.
inline std::vector<Polynomial> prune_generators(std::vector<Polynomial> gens) {
  std::vector<Polynomial> unique;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    if (std::find(unique.begin(), unique.end(), m) == unique.end()) unique.push_back(std::move(m));
  }
  std::vector<bool> redundant(unique.size(), false);
  for (std::size_t k = 0; k < unique.size(); ++k) {
    if (!unique[k].is_monomial()) continue;
    const Monomial& mk = unique[k].leading_monomial();
    for (std::size_t l = 0; l < unique.size() && !redundant[k]; ++l)
      redundant[k] = l != k && unique[l].is_monomial() && unique[l].leading_monomial().divides(mk);
  }
  std::vector<Polynomial> kept;
  for (std::size_t k = 0; k < unique.size(); ++k)
    if (!redundant[k]) kept.push_back(std::move(unique[k]));
  return kept;
}

}  // namespace detail

/// Ideal generated by the pairwise products of generators.
inline Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), detail::prune_generators(std::move(gens)));
}

/// I^p, generated by the products over all size-p multisets of generators.
inline Ideal power(const Ideal& ideal, unsigned p) {
  if (p < 1) throw std::invalid_argument("ideal power exponent must be at least 1");
  if (p == 1 || ideal.is_zero()) return ideal;
  const auto& gens = ideal.generators();
  const std::size_t r = gens.size();
  std::vector<Polynomial> products;
  // Non-decreasing index tuples enumerate the multisets.
  std::vector<std::size_t> idx(p, 0);
  // Prefix products: prefix[k] = gens[idx[0]] * ... * gens[idx[k]].
  std::vector<Polynomial> prefix(p);
  auto rebuild_from = [&](std::size_t k) {
    for (std::size_t t = k; t < p; ++t)
      prefix[t] = t == 0 ? gens[idx[0]] : prefix[t - 1] * gens[idx[t]];
  };
  rebuild_from(0);
  while (true) {
    products.push_back(prefix[p - 1]);
    std::size_t k = p;
    while (k > 0 && idx[k - 1] == r - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t t = k; t < p; ++t) idx[t] = idx[k - 1];
    rebuild_from(k - 1);
  }
  return Ideal(ideal.ring(), detail::prune_generators(std::move(products)));
}

/// Standard monomials of a zero-dimensional basis, ascending in its order.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  const RingPtr& ring = gb.ring();
  const std::size_t n = ring->size();
  const auto lms = gb.leading_monomials();
  // A pure power of each variable among the leading monomials bounds a box.
  std::vector<unsigned> bound(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (const auto& m : lms) {
      if (m.degree() != m[i]) continue;
      if (!found || m[i] < bound[i]) bound[i] = m[i];
      found = true;
    }
    if (!found)
      throw NotZeroDimensional("no pure power of " + ring->name(i) +
                               " among leading monomials; quotient is infinite dimensional");
  }
  std::vector<Monomial> standard;
  Monomial m(n);
  // Divisibility is inherited by multiples, so each coordinate loop stops at
  // the first divisible monomial.
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      standard.push_back(m);
      return;
    }
    for (unsigned e = 0; e < bound[i]; ++e) {
      m.set(i, e);
      const bool divisible = std::any_of(lms.begin(), lms.end(),
                                         [&](const Monomial& lm) { return lm.divides(m); });
      if (divisible) break;
      self(self, i + 1);
    }
    m.set(i, 0);
  };
  walk(walk, 0);
  std::sort(standard.begin(), standard.end(), [&](const Monomial& a, const Monomial& b) {
    return gb.order().compare(a, b) < 0;
  });
  return standard;
}

/// True when the quotient ring is finite dimensional (a pure power of every
/// variable leads some basis element). The unit ideal qualifies.
inline bool is_zero_dimensional(const Ideal& ideal) {
  if (ideal.is_zero()) return false;
  const auto lms = ideal.basis().leading_monomials();
  for (std::size_t i = 0; i < ideal.ring()->size(); ++i) {
    const bool pure = std::any_of(lms.begin(), lms.end(),
                                  [&](const Monomial& m) { return m.degree() == m[i]; });
    if (!pure) return false;
  }
  return true;
}

namespace detail {

inline Polynomial map_terms(const Polynomial& f, const RingPtr& ring, const MonomialOrder& order,
                            std::size_t shift_in, std::size_t shift_out, unsigned lead_power) {
  const std::size_t n = ring->size();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& term : f.terms()) {
    Monomial m(n);
    if (shift_out == 1) m.set(0, lead_power);
    for (std::size_t i = 0; i + shift_out < n; ++i) m.set(i + shift_out, term.monomial[i + shift_in]);
    terms.push_back({m, term.coefficient});
  }
  return Polynomial::from_terms(ring, order, std::move(terms));
}

inline bool is_monomial_ideal(const Ideal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Polynomial& g) { return g.is_monomial(); });
}

/// Kernel of f -> (NF_1(f), ..., NF_k(f)) for zero-dimensional ideals,
/// built degree by degree in grevlex (Buchberger-Moeller style). The result
/// is the reduced grevlex basis of the intersection.
inline std::vector<Polynomial> zero_dimensional_meet(std::span<const Ideal> ideals) {
  const RingPtr& ring = ideals.front().ring();
  const std::size_t n = ring->size();
  const MonomialOrder grevlex = MonomialOrder::grevlex();

  struct Component {
    const GroebnerBasis* basis;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    std::size_t offset;
    std::unordered_map<Monomial, Polynomial, MonomialHash> normal_forms;
  };
  std::vector<Component> components;
  std::size_t dimension = 0;
  for (const auto& ideal : ideals) {
    Component c{&ideal.basis(grevlex), {}, dimension, {}};
    for (const auto& m : standard_monomials(*c.basis)) c.index.emplace(m, c.index.size());
    dimension += c.index.size();
    components.push_back(std::move(c));
  }

  // Normal form of m, reusing the normal form of m / x_i when known.
  auto normal_form_of = [&](Component& c, const Monomial& m) -> const Polynomial& {
    if (auto it = c.normal_forms.find(m); it != c.normal_forms.end()) return it->second;
    Polynomial nf(ring, grevlex);
    bool done = false;
    for (std::size_t i = 0; i < n && !done; ++i) {
      if (m[i] == 0) continue;
      Monomial lower = m;
      lower.set(i, m[i] - 1);
      auto it = c.normal_forms.find(lower);
      if (it == c.normal_forms.end()) continue;
      nf = c.basis->reduce(it->second.mul_term(Monomial::variable(n, i), Rational(1)));
      done = true;
    }
    if (!done) nf = c.basis->reduce(Polynomial::term(ring, m, Rational(1), grevlex));
    return c.normal_forms.emplace(m, std::move(nf)).first->second;
  };

  using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
  struct Row {
    std::size_t pivot;
    SparseRow values;       // image under the normal-form map
    SparseRow combination;  // coefficients over `standard`
  };
  std::vector<Row> rows;
  std::vector<Monomial> standard;
  std::vector<Polynomial> result;

  auto less = [&](const Monomial& a, const Monomial& b) { return grevlex.compare(a, b) < 0; };
  std::set<Monomial, decltype(less)> candidates(less);
  candidates.insert(Monomial(n));

  std::vector<Rational> values(dimension);
  std::vector<Rational> combination;
  while (!candidates.empty()) {
    const Monomial m = *candidates.begin();
    candidates.erase(candidates.begin());
    const bool known_leading = std::any_of(result.begin(), result.end(), [&](const Polynomial& g) {
      return g.leading_monomial().divides(m);
    });
    if (known_leading) continue;

    std::fill(values.begin(), values.end(), Rational(0));
    for (auto& c : components)
      for (const auto& t : normal_form_of(c, m).terms())
        values[c.offset + c.index.at(t.monomial)] = t.coefficient;
    combination.assign(standard.size(), Rational(0));

    for (const auto& row : rows) {
      if (values[row.pivot] == 0) continue;
      const Rational factor = values[row.pivot];
      for (const auto& [k, v] : row.values) values[k] -= factor * v;
      for (const auto& [k, v] : row.combination) combination[k] -= factor * v;
    }

    std::size_t pivot = 0;
    while (pivot < dimension && values[pivot] == 0) ++pivot;
    if (pivot == dimension) {
      // m + sum(combination) lies in every ideal; its tail is standard, hence smaller.
      std::vector<Term> terms{{m, Rational(1)}};
      for (std::size_t k = 0; k < standard.size(); ++k)
        if (combination[k] != 0) terms.push_back({standard[k], combination[k]});
      result.push_back(Polynomial::from_terms(ring, grevlex, std::move(terms)));
      continue;
    }
    const Rational scale = 1 / values[pivot];
    Row row{pivot, {}, {}};
    for (std::size_t k = 0; k < dimension; ++k)
      if (values[k] != 0) row.values.emplace_back(k, values[k] * scale);
    for (std::size_t k = 0; k < standard.size(); ++k)
      if (combination[k] != 0) row.combination.emplace_back(k, combination[k] * scale);
    row.combination.emplace_back(standard.size(), scale);
    rows.push_back(std::move(row));
    standard.push_back(m);
    for (std::size_t i = 0; i < n; ++i) candidates.insert(m * Monomial::variable(n, i));
  }
  std::sort(result.begin(), result.end(), [&](const Polynomial& a, const Polynomial& b) {
    return grevlex.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return result;
}

}  // namespace detail

/// I ∩ J by eliminating t from t*I + (1 - t)*J.
inline Ideal intersect_by_elimination(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);

  const std::size_t n = ring->size();
  if (n + 1 > kMaxVariables) throw std::invalid_argument("no room for an elimination variable");
  std::vector<std::string> names{"_t"};
  while (ring->index_of(names[0])) names[0] += "_";
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  const RingPtr extended = make_ring(std::move(names));
  const MonomialOrder elim = MonomialOrder::elimination(1);

  std::vector<Polynomial> gens;
  gens.reserve(a.size() + b.size());
  for (const auto& f : a.generators()) gens.push_back(detail::map_terms(f, extended, elim, 0, 1, 1));
  for (const auto& g : b.generators())
    gens.push_back(detail::map_terms(g, extended, elim, 0, 1, 0) -
                   detail::map_terms(g, extended, elim, 0, 1, 1));
  const GroebnerBasis gb = buchberger(gens, elim);

  const MonomialOrder grevlex = MonomialOrder::grevlex();
  std::vector<Polynomial> result;
  for (const auto& g : gb.elements()) {
    if (g.leading_monomial()[0] != 0) continue;
    // The elimination order restricted to t-free monomials is grevlex, so
    // the t-free elements form the reduced grevlex basis of the meet.
    result.push_back(detail::map_terms(g, ring, grevlex, 1, 0, 0));
  }
  Ideal meet(ring, result);
  meet.seed_basis(GroebnerBasis(ring, grevlex, std::move(result)));
  return meet;
}

/// I_1 ∩ ... ∩ I_k for zero-dimensional ideals via linear algebra on normal forms.
inline Ideal intersect_zero_dimensional(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of no ideals");
  const RingPtr& ring = ideals.front().ring();
  for (const auto& ideal : ideals) {
    require_same_ring(ring, ideal.ring());
    if (!is_zero_dimensional(ideal))
      throw NotZeroDimensional("linear-algebra intersection needs zero-dimensional ideals");
  }
  std::vector<Polynomial> basis = detail::zero_dimensional_meet(ideals);
  Ideal meet(ring, basis);
  meet.seed_basis(GroebnerBasis(ring, MonomialOrder::grevlex(), std::move(basis)));
  return meet;
}

/// I ∩ J. Monomial ideals meet through lcms of generators, zero-dimensional
/// ideals through the normal-form kernel, everything else by elimination.
inline Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (detail::is_monomial_ideal(a) && detail::is_monomial_ideal(b)) {
    std::vector<Polynomial> lcms;
    for (const auto& f : a.generators())
      for (const auto& g : b.generators())
        lcms.push_back(Polynomial::term(ring, f.leading_monomial().lcm(g.leading_monomial()),
                                        Rational(1)));
    return Ideal(ring, detail::prune_generators(std::move(lcms)));
  }
  if (is_zero_dimensional(a) && is_zero_dimensional(b)) {
    const std::vector<Ideal> pair{a, b};
    return intersect_zero_dimensional(pair);
  }
  return intersect_by_elimination(a, b);
}

/// Intersection of a nonempty list of ideals.
inline Ideal intersect(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of no ideals");
  const bool all_zero_dimensional =
      ideals.size() > 2 &&
      std::all_of(ideals.begin(), ideals.end(), [](const Ideal& i) { return is_zero_dimensional(i); });
  if (all_zero_dimensional) return intersect_zero_dimensional(ideals);
  Ideal result = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) result = intersect(result, ideals[k]);
  return result;
}

/// Exact quotient f / d; throws std::logic_error if d does not divide f.
inline Polynomial divide_exact(const Polynomial& f, const Polynomial& d) {
  const std::vector<Polynomial> divisor{d.with_order(f.order())};
  DivisionResult division = normal_form(f, divisor, f.order());
  if (!division.remainder.is_zero()) throw std::logic_error("polynomial division is not exact");
  return std::move(division.quotients.front());
}

/// (I : f) = {h : h*f in I}.
inline Ideal quotient(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) throw std::invalid_argument("ideal quotient by the zero polynomial");
  if (ideal.is_zero()) return ideal;
  const Polynomial divisor = f.with_order(MonomialOrder::grevlex());
  const Ideal meet = intersect(ideal, Ideal(ideal.ring(), {divisor}));
  std::vector<Polynomial> gens;
  gens.reserve(meet.size());
  for (const auto& g : meet.generators()) gens.push_back(divide_exact(g, divisor));
  return Ideal(ideal.ring(), std::move(gens));
}

/// (I : f^inf), the stable value of repeated quotients by f.
inline Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  Ideal current = ideal;
  while (true) {
    Ideal next = quotient(current, f);
    if (equal(next, current)) return next;
    current = std::move(next);
  }
}

}  // namespace symcon

#endif  // SYMCON_IDEAL_HPP
