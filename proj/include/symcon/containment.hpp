#ifndef SYMCON_CONTAINMENT_HPP
#define SYMCON_CONTAINMENT_HPP

#include <chrono>
#include <cstddef>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcon/ideal.hpp"
#include "symcon/rational.hpp"
#include "symcon/symbolic.hpp"

namespace symcon {

struct StepTiming {
  std::string step;
  double seconds = 0;
};

/// Outcome of one containment check lhs ⊂ rhs.
struct ContainmentReport {
  std::string kind;  // "skoda", "dimension", "probe", "els", "els-improved" or "direct"
  unsigned p = 0;
  unsigned q = 0;
  std::string lhs_descriptor;
  std::string rhs_descriptor;
  // A proven theorem guarantees the containment; unasserted cells are
  // informational (e.g. probing whether a smaller exponent already suffices).
  bool asserted = false;
  bool holds = false;
  std::optional<Polynomial> witness;  // first lhs generator outside rhs
  std::size_t lhs_generators = 0;
  std::size_t rhs_generators = 0;
  std::size_t rhs_basis_size = 0;
  std::vector<StepTiming> timings;

  bool violates_theorem() const noexcept { return asserted && !holds; }
};

namespace detail {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace detail

inline ContainmentReport check_containment(const Ideal& lhs, const Ideal& rhs) {
  require_same_ring(lhs.ring(), rhs.ring());
  ContainmentReport report;
  report.kind = "direct";
  report.lhs_descriptor = "A";
  report.rhs_descriptor = "B";
  report.lhs_generators = lhs.size();
  report.rhs_generators = rhs.size();
  detail::Stopwatch clock;
  const GroebnerBasis& gb = rhs.basis();
  report.rhs_basis_size = gb.size();
  report.timings.push_back({"rhs_basis", clock.lap()});
  report.holds = true;
  for (const auto& g : lhs.generators()) {
    if (!gb.contains(g)) {
      report.holds = false;
      report.witness = g;
      break;
    }
  }
  report.timings.push_back({"membership", clock.lap()});
  return report;
}

/// Lazily computed ordinary and symbolic powers of one decomposed radical.
/// Safe for concurrent use.
class PowerTable {
 public:
  explicit PowerTable(DecomposedRadical radical) : radical_(std::move(radical)) {}

  const DecomposedRadical& radical() const noexcept { return radical_; }

  Ideal ordinary(unsigned p) {
    return lookup(ordinary_, p, [&] { return power(radical_.radical_ideal(), p); });
  }

  Ideal symbolic(unsigned p) {
    return lookup(symbolic_, p, [&] { return symbolic_power(radical_, p).ideal; });
  }

 private:
  template <class Compute>
  Ideal lookup(std::map<unsigned, std::shared_future<Ideal>>& table, unsigned p, Compute compute) {
    std::shared_future<Ideal> future;
    std::promise<Ideal> promise;
    bool owner = false;
    {
      std::lock_guard lock(mutex_);
      auto it = table.find(p);
      if (it == table.end()) {
        future = promise.get_future().share();
        table.emplace(p, future);
        owner = true;
      } else {
        future = it->second;
      }
    }
    if (owner) {
      try {
        promise.set_value(compute());
      } catch (...) {
        promise.set_exception(std::current_exception());
      }
    }
    return future.get();
  }

  DecomposedRadical radical_;
  std::mutex mutex_;
  std::map<unsigned, std::shared_future<Ideal>> ordinary_;
  std::map<unsigned, std::shared_future<Ideal>> symbolic_;
};

struct SweepOptions {
  bool parallel = false;
};

namespace detail {

struct Cell {
  std::string kind;
  unsigned p;
  unsigned q;
  unsigned lhs_exponent;
  bool asserted;
};

inline ContainmentReport run_cell(PowerTable& table, const Cell& cell) {
  detail::Stopwatch clock;
  const Ideal lhs = table.symbolic(cell.lhs_exponent);
  const double lhs_time = clock.lap();
  const Ideal rhs = table.ordinary(cell.p);
  const double rhs_time = clock.lap();
  ContainmentReport report = check_containment(lhs, rhs);
  report.kind = cell.kind;
  report.p = cell.p;
  report.q = cell.q;
  report.asserted = cell.asserted;
  report.lhs_descriptor = "I^(" + std::to_string(cell.lhs_exponent) + ")";
  report.rhs_descriptor = "I^" + std::to_string(cell.p);
  report.timings.insert(report.timings.begin(),
                        {{"symbolic_power", lhs_time}, {"ordinary_power", rhs_time}});
  return report;
}

inline std::vector<ContainmentReport> run_cells(PowerTable& table, const std::vector<Cell>& cells,
                                                const SweepOptions& options) {
  std::vector<ContainmentReport> reports;
  reports.reserve(cells.size());
  if (!options.parallel) {
    for (const auto& cell : cells) reports.push_back(run_cell(table, cell));
    return reports;
  }
  std::vector<std::future<ContainmentReport>> futures;
  futures.reserve(cells.size());
  for (const auto& cell : cells)
    futures.push_back(std::async(std::launch::async, [&table, cell] { return run_cell(table, cell); }));
  for (auto& f : futures) reports.push_back(f.get());
  return reports;
}

}  // namespace detail

/// Generator count r of the radical ideal as the engine presents it.
inline unsigned generator_count(const DecomposedRadical& radical) {
  return static_cast<unsigned>(radical.radical_ideal().size());
}

/// For p = 1..p_max: I^(p+q) ⊂ I^p with q = min(n, r - 1), I^(p+n) ⊂ I^p,
/// and (unasserted) I^(p+q-1) ⊂ I^p.
inline std::vector<ContainmentReport> containment_sweep(const DecomposedRadical& radical,
                                                        unsigned p_max,
                                                        const SweepOptions& options = {}) {
  if (p_max < 1) throw std::invalid_argument("p_max must be at least 1");
  const auto n = static_cast<unsigned>(radical.ring()->size());
  const unsigned q = skoda_exponent(n, generator_count(radical));
  std::vector<detail::Cell> cells;
  for (unsigned p = 1; p <= p_max; ++p) {
    cells.push_back({"skoda", p, q, p + q, true});
    cells.push_back({"dimension", p, q, p + n, true});
    if (q >= 1) cells.push_back({"probe", p, q, p + q - 1, false});
  }
  PowerTable table(radical);
  return detail::run_cells(table, cells, options);
}

/// Improved zero-dimensional exponent ceil((1 + n/2) * p).
inline unsigned improved_els_exponent(unsigned n, unsigned p) {
  return ((2 + n) * p + 1) / 2;
}

/// For p = 1..p_max: I^(kp) ⊂ I^p with k the largest codimension of a
/// component; for point sets also I^(ceil((1 + n/2) p)) ⊂ I^p.
inline std::vector<ContainmentReport> els_check(const DecomposedRadical& radical, unsigned p_max,
                                                const SweepOptions& options = {}) {
  if (p_max < 1) throw std::invalid_argument("p_max must be at least 1");
  const auto n = static_cast<unsigned>(radical.ring()->size());
  const unsigned q = skoda_exponent(n, generator_count(radical));
  const auto k = static_cast<unsigned>(radical.max_codimension());
  std::vector<detail::Cell> cells;
  for (unsigned p = 1; p <= p_max; ++p) {
    cells.push_back({"els", p, q, k * p, true});
    if (radical.is_zero_dimensional())
      cells.push_back({"els-improved", p, q, improved_els_exponent(n, p), true});
  }
  PowerTable table(radical);
  return detail::run_cells(table, cells, options);
}

/// Colengths of symbolic and ordinary powers of the ideal of a point set.
struct AsymptoticsRow {
  unsigned p = 0;
  Integer l_sym;
  Integer l_ord;
  Rational ratio;  // n! * l_ord / p^n
  Integer lower_bound;  // C(p + n - 1, n) * N, also the exact value of l_sym
  Integer upper_bound;  // C(p + q + n - 1, n) * N

  bool sandwich_holds() const { return lower_bound <= l_ord && l_ord <= upper_bound; }
  bool length_formula_holds() const { return l_sym == lower_bound; }
};

struct AsymptoticsTable {
  unsigned n = 0;
  std::size_t points = 0;
  unsigned r = 0;
  unsigned q = 0;
  std::vector<AsymptoticsRow> rows;
};

inline AsymptoticsTable length_asymptotics(const PointSet& points, unsigned p_max) {
  if (p_max < 1) throw std::invalid_argument("p_max must be at least 1");
  PowerTable table(vanishing_ideal(points));
  AsymptoticsTable result;
  result.n = static_cast<unsigned>(points.ring()->size());
  result.points = points.size();
  result.r = generator_count(table.radical());
  result.q = skoda_exponent(result.n, result.r);
  const unsigned n = result.n;
  const Integer N(static_cast<unsigned long>(points.size()));
  const Integer n_factorial = factorial(n);
  for (unsigned p = 1; p <= p_max; ++p) {
    AsymptoticsRow row;
    row.p = p;
    row.l_sym = colength(table.symbolic(p));
    row.l_ord = colength(table.ordinary(p));
    Integer p_to_n;
    mpz_ui_pow_ui(p_to_n.get_mpz_t(), p, n);
    row.ratio = make_rational(n_factorial * row.l_ord, p_to_n);
    row.lower_bound = binomial(p + n - 1, n) * N;
    row.upper_bound = binomial(p + result.q + n - 1, n) * N;
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace symcon

#endif  // SYMCON_CONTAINMENT_HPP
