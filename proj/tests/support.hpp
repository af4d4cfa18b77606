#ifndef SYMCON_TESTS_SUPPORT_HPP
#define SYMCON_TESTS_SUPPORT_HPP

#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "symcon/symcon.hpp"

namespace symcon::test {

inline RingPtr ring(std::initializer_list<const char*> names) {
  return make_ring(std::vector<std::string>(names.begin(), names.end()));
}

inline Polynomial poly(const RingPtr& r, std::string_view text,
                       const MonomialOrder& order = MonomialOrder::grevlex()) {
  return parse_polynomial(text, r).with_order(order);
}

inline std::vector<Polynomial> polys(const RingPtr& r, std::initializer_list<const char*> texts,
                                     const MonomialOrder& order = MonomialOrder::grevlex()) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(poly(r, t, order));
  return out;
}

inline Ideal ideal(const RingPtr& r, std::initializer_list<const char*> texts) {
  return Ideal(r, polys(r, texts));
}

inline std::vector<std::string> strings(std::span<const Polynomial> ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

/// Seed for randomized tests; override with SYMCON_SEED to reproduce a run.
inline std::uint64_t seed() {
  if (const char* env = std::getenv("SYMCON_SEED")) return std::strtoull(env, nullptr, 10);
  return 20240613;
}

class Random {
 public:
  explicit Random(std::uint64_t salt = 0) : engine_(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

  Rational coefficient(int bound = 5) {
    int num = 0;
    while (num == 0) num = uniform(-bound, bound);
    const int den = coin(0.25) ? uniform(1, 3) : 1;
    return make_rational(num, den);
  }

  Monomial monomial(std::size_t nvars, unsigned max_degree) {
    const unsigned d = static_cast<unsigned>(uniform(0, static_cast<int>(max_degree)));
    Monomial m(nvars);
    for (unsigned k = 0; k < d; ++k) {
      const auto i = static_cast<std::size_t>(uniform(0, static_cast<int>(nvars) - 1));
      m.set(i, m[i] + 1u);
    }
    return m;
  }

  Polynomial polynomial(const RingPtr& r, unsigned max_degree, int max_terms,
                        const MonomialOrder& order = MonomialOrder::grevlex()) {
    std::vector<Term> terms;
    const int count = uniform(0, max_terms);
    for (int k = 0; k < count; ++k) terms.push_back({monomial(r->size(), max_degree), coefficient()});
    return Polynomial::from_terms(r, order, std::move(terms));
  }

  Polynomial nonzero_polynomial(const RingPtr& r, unsigned max_degree, int max_terms,
                                const MonomialOrder& order = MonomialOrder::grevlex()) {
    for (;;) {
      Polynomial f = polynomial(r, max_degree, max_terms, order);
      if (!f.is_zero()) return f;
    }
  }

  Point point(std::size_t n, int bound = 3) {
    Point a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(make_rational(uniform(-bound, bound), uniform(1, 2)));
    return a;
  }

  PointSet point_set(const RingPtr& r, std::size_t count) {
    std::vector<Point> points;
    while (points.size() < count) {
      Point a = point(r->size());
      if (std::find(points.begin(), points.end(), a) == points.end()) points.push_back(std::move(a));
    }
    return PointSet(r, std::move(points));
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace symcon::test

#endif  // SYMCON_TESTS_SUPPORT_HPP
