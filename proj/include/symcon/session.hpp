#ifndef SYMCON_SESSION_HPP
#define SYMCON_SESSION_HPP

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "symcon/containment.hpp"
#include "symcon/errors.hpp"
#include "symcon/parser.hpp"

namespace symcon {

struct RunOptions {
  bool json = false;
  bool timings = false;
  bool parallel = false;
};

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitError = 2 };

namespace detail {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson integer_json(const Integer& v) {
  if (v.fits_slong_p()) return OrderedJson(v.get_si());
  return OrderedJson(v.get_str());
}

inline std::string ratio_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::vector<std::string> polynomial_strings(std::span<const Polynomial> polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(f.to_string());
  return out;
}

/// Left-aligned text table; columns are padded to their widest cell.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_)
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string seconds_string(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << s;
  return os.str();
}

class Session {
 public:
  Session(const SessionScript& script, const RunOptions& options, std::ostream& out)
      : script_(script), options_(options), out_(out) {}

  int run() {
    document_["ring"] = script_.ring->names();
    document_["results"] = OrderedJson::array();
    bool first = true;
    for (const auto& command : script_.commands) {
      if (!options_.json && !first) out_ << '\n';
      first = false;
      std::visit([this](const auto& c) { execute(c); }, command);
    }
    document_["violations"] = violations_;
    if (options_.json) out_ << document_.dump(2) << '\n';
    return violations_ > 0 ? kExitViolation : kExitOk;
  }

 private:
  const Ideal& ideal(const std::string& name) const { return std::get<Ideal>(script_.lookup(name)); }

  DecomposedRadical target(const std::string& name) const {
    const Binding& b = script_.lookup(name);
    if (const auto* points = std::get_if<PointSet>(&b)) return vanishing_ideal(*points);
    return std::get<DecomposedRadical>(b);
  }

  void emit_lines(OrderedJson record, const char* key, const std::vector<std::string>& lines) {
    if (options_.json) {
      record[key] = lines;
      document_["results"].push_back(std::move(record));
      return;
    }
    for (const auto& line : lines) out_ << line << '\n';
  }

  void execute(const GbCommand& c) {
    const GroebnerBasis& gb = ideal(c.ideal).basis(c.order);
    OrderedJson record{{"command", "gb"}, {"ideal", c.ideal}, {"order", c.order.name()}};
    emit_lines(std::move(record), "basis", polynomial_strings(gb.elements()));
  }

  void execute(const MemberCommand& c) {
    const bool member = ideal(c.ideal).contains(c.polynomial);
    if (options_.json) {
      document_["results"].push_back(OrderedJson{{"command", "member"},
                                                 {"polynomial", c.polynomial.to_string()},
                                                 {"ideal", c.ideal},
                                                 {"member", member}});
      return;
    }
    out_ << (member ? "true" : "false") << '\n';
  }

  void execute(const PowerCommand& c) {
    const Ideal result = power(ideal(c.ideal), c.p);
    OrderedJson record{{"command", "power"}, {"ideal", c.ideal}, {"p", c.p}};
    emit_lines(std::move(record), "generators", polynomial_strings(result.generators()));
  }

  void execute(const SymPowerCommand& c) {
    const SymbolicPower result = symbolic_power(target(c.target), c.p);
    OrderedJson record{{"command", "sympower"}, {"target", c.target}, {"p", c.p}};
    emit_lines(std::move(record), "generators", polynomial_strings(result.ideal.basis().elements()));
  }

  void execute(const ContainmentCommand& c) {
    const DecomposedRadical radical = target(c.target);
    const SweepOptions sweep{options_.parallel};
    std::vector<ContainmentReport> reports = containment_sweep(radical, c.p_max, sweep);
    if (c.els) {
      auto more = els_check(radical, c.p_max, sweep);
      reports.insert(reports.end(), more.begin(), more.end());
    }
    const auto n = static_cast<unsigned>(radical.ring()->size());
    const unsigned r = generator_count(radical);
    const unsigned q = skoda_exponent(n, r);
    for (const auto& rep : reports)
      if (rep.violates_theorem()) ++violations_;

    if (options_.json) {
      OrderedJson cells = OrderedJson::array();
      for (const auto& rep : reports) {
        OrderedJson cell{{"kind", rep.kind},
                         {"p", rep.p},
                         {"lhs", rep.lhs_descriptor},
                         {"rhs", rep.rhs_descriptor},
                         {"asserted", rep.asserted},
                         {"holds", rep.holds},
                         {"witness", rep.witness ? OrderedJson(rep.witness->to_string()) : OrderedJson()},
                         {"lhs_generators", rep.lhs_generators},
                         {"rhs_generators", rep.rhs_generators},
                         {"rhs_basis_size", rep.rhs_basis_size}};
        if (options_.timings) {
          OrderedJson t = OrderedJson::object();
          for (const auto& step : rep.timings) t[step.step] = step.seconds;
          cell["timings"] = std::move(t);
        }
        cells.push_back(std::move(cell));
      }
      document_["results"].push_back(OrderedJson{{"command", "containment"},
                                                 {"target", c.target},
                                                 {"n", n},
                                                 {"r", r},
                                                 {"q", q},
                                                 {"max_codimension", radical.max_codimension()},
                                                 {"cells", std::move(cells)}});
      return;
    }
    out_ << "containment " << c.target << ": n = " << n << ", r = " << r << ", q = " << q << '\n';
    std::vector<std::string> header{"kind", "p", "lhs", "rhs", "asserted", "holds", "witness"};
    if (options_.timings) header.push_back("seconds");
    Table table(std::move(header));
    for (const auto& rep : reports) {
      std::vector<std::string> row{rep.kind,
                                   std::to_string(rep.p),
                                   rep.lhs_descriptor,
                                   rep.rhs_descriptor,
                                   yes_no(rep.asserted),
                                   yes_no(rep.holds),
                                   rep.witness ? rep.witness->to_string() : "-"};
      if (options_.timings) {
        double total = 0;
        for (const auto& step : rep.timings) total += step.seconds;
        row.push_back(seconds_string(total));
      }
      table.add(std::move(row));
    }
    table.print(out_);
  }

  void execute(const LengthsCommand& c) {
    const AsymptoticsTable result = length_asymptotics(std::get<PointSet>(script_.lookup(c.points)), c.p_max);
    if (options_.json) {
      OrderedJson rows = OrderedJson::array();
      for (const auto& row : result.rows)
        rows.push_back(OrderedJson{{"p", row.p},
                                   {"l_sym", integer_json(row.l_sym)},
                                   {"l_ord", integer_json(row.l_ord)},
                                   {"ratio", ratio_string(row.ratio)},
                                   {"lower", integer_json(row.lower_bound)},
                                   {"upper", integer_json(row.upper_bound)},
                                   {"length_formula", row.length_formula_holds()},
                                   {"sandwich", row.sandwich_holds()}});
      document_["results"].push_back(OrderedJson{{"command", "lengths"},
                                                 {"points", c.points},
                                                 {"n", result.n},
                                                 {"N", result.points},
                                                 {"r", result.r},
                                                 {"q", result.q},
                                                 {"rows", std::move(rows)}});
      return;
    }
    out_ << "lengths " << c.points << ": n = " << result.n << ", N = " << result.points
         << ", r = " << result.r << ", q = " << result.q << '\n';
    Table table({"p", "l_sym", "l_ord", "ratio", "lower", "upper"});
    for (const auto& row : result.rows)
      table.add({std::to_string(row.p), row.l_sym.get_str(), row.l_ord.get_str(),
                 ratio_string(row.ratio), row.lower_bound.get_str(), row.upper_bound.get_str()});
    table.print(out_);
  }

  const SessionScript& script_;
  const RunOptions& options_;
  std::ostream& out_;
  OrderedJson document_;
  unsigned violations_ = 0;
};

}  // namespace detail

/// Executes every command; returns 0, or 1 if an asserted containment failed.
inline int run_command(const SessionScript& script, const RunOptions& options, std::ostream& out) {
  return detail::Session(script, options, out).run();
}

/// Parses and runs a script, reporting errors on `err`. Returns the exit code.
inline int run_script(std::string_view text, const RunOptions& options, std::ostream& out,
                      std::ostream& err) {
  try {
    const SessionScript script = parse_input(text);
    std::ostringstream buffer;
    const int code = run_command(script, options, buffer);
    out << buffer.str();
    return code;
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace symcon

#endif  // SYMCON_SESSION_HPP
