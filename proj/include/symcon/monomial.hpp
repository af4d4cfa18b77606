#ifndef SYMCON_MONOMIAL_HPP
#define SYMCON_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "symcon/errors.hpp"

namespace symcon {

/// Upper bound on ring size. Elimination adjoins one extra variable, so user
/// rings are limited to kMaxVariables - 1.
inline constexpr std::size_t kMaxVariables = 16;

class Ring {
 public:
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("a ring needs at least one variable");
    if (names_.size() > kMaxVariables)
      throw std::invalid_argument("too many variables (limit " +
                                  std::to_string(kMaxVariables) + ")");
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
      if (name.empty()) throw std::invalid_argument("empty variable name");
      if (!seen.insert(name).second)
        throw std::invalid_argument("duplicate variable name '" + name + "'");
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool operator==(const Ring&) const = default;

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch();
}

/// Dense exponent vector with cached total degree.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVariables) throw std::invalid_argument("too many variables");
  }

  Monomial(std::initializer_list<unsigned> exponents)
      : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

  explicit Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
    for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
  }

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
  }

  std::size_t size() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned value) {
    if (i >= nvars_) throw std::out_of_range("variable index out of range");
    if (value > std::numeric_limits<Exponent>::max())
      throw std::overflow_error("monomial exponent overflow");
    degree_ = degree_ - exps_[i] + value;
    exps_[i] = static_cast<Exponent>(value);
  }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  Monomial lcm(const Monomial& other) const {
    check_size(other);
    Monomial m(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) m.set(i, std::max(exps_[i], other.exps_[i]));
    return m;
  }

  /// this / divisor; requires divisor | this.
  Monomial operator/(const Monomial& divisor) const {
    check_size(divisor);
    if (!divisor.divides(*this)) throw std::domain_error("monomial division is not exact");
    Monomial m(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) m.set(i, exps_[i] - divisor.exps_[i]);
    return m;
  }

  Monomial operator*(const Monomial& other) const {
    check_size(other);
    Monomial m(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i)
      m.set(i, static_cast<unsigned>(exps_[i]) + other.exps_[i]);
    return m;
  }

  bool operator==(const Monomial& other) const noexcept {
    return nvars_ == other.nvars_ && degree_ == other.degree_ &&
           std::equal(exps_.begin(), exps_.begin() + nvars_, other.exps_.begin());
  }

  std::size_t hash() const noexcept {
    std::size_t h = nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u + exps_[i];
    return h;
  }

  void check_size(const Monomial& other) const {
    if (nvars_ != other.nvars_) throw RingMismatch("monomials have different variable counts");
  }

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Term order on monomials: lex, grevlex, or a two-block elimination order
/// (grevlex on the first `block` variables, ties broken by grevlex on the rest).
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, elimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder elimination(std::size_t block) {
    if (block == 0) throw std::invalid_argument("elimination block must be nonempty");
    return MonomialOrder(Kind::elimination, block);
  }

  MonomialOrder() = default;

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }

  std::string name() const {
    switch (kind_) {
      case Kind::lex: return "lex";
      case Kind::grevlex: return "grevlex";
      case Kind::elimination: return "elim(" + std::to_string(block_) + ")";
    }
    return "?";
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    a.check_size(b);
    const std::size_t n = a.size();
    switch (kind_) {
      case Kind::lex:
        for (std::size_t i = 0; i < n; ++i)
          if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
      case Kind::grevlex:
        return grevlex_range(a, b, 0, n);
      case Kind::elimination: {
        const std::size_t k = std::min(block_, n);
        if (auto c = grevlex_range(a, b, 0, k); c != 0) return c;
        return grevlex_range(a, b, k, n);
      }
    }
    return std::strong_ordering::equal;
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  static std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b,
                                            std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
    // Equal degree: the one with the smaller last differing exponent is larger.
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }

  Kind kind_ = Kind::grevlex;
  std::size_t block_ = 0;
};

inline std::strong_ordering cmp_monomials(const Monomial& a, const Monomial& b,
                                          const MonomialOrder& order) {
  return order.compare(a, b);
}

}  // namespace symcon

#endif  // SYMCON_MONOMIAL_HPP
