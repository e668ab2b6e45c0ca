#pragma once

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "errors.hpp"
#include "json_io.hpp"
#include "notation.hpp"
#include "psi.hpp"
#include "reports.hpp"
#include "symmetric.hpp"
#include "verify.hpp"

namespace psiprime::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kSize = 2,
  kTheoremViolation = 3,
  kConjectureCounterexample = 4,
};

enum class Format { table, json, csv };

struct Config {
  Format format = Format::table;
  unsigned jobs = 0;  // 0 = auto
  bool styled = false;
};

/// Column-aligned text, or CSV.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out, Format format, bool styled) const {
    if (format == Format::csv) {
      print_csv_row(out, header_);
      for (const auto& r : rows_) print_csv_row(out, r);
      return;
    }
    std::vector<std::size_t> width(header_.size(), 0);
    for (std::size_t c = 0; c < header_.size(); ++c) width[c] = header_[c].size();
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t c = 0; c < r.size(); ++c) {
        s += r[c];
        if (c + 1 < r.size()) s += std::string(width[c] - r[c].size() + 2, ' ');
      }
      return s;
    };
    if (styled) out << "\x1b[1m";
    out << line(header_);
    if (styled) out << "\x1b[0m";
    out << '\n';
    for (const auto& r : rows_) out << line(r) << '\n';
  }

 private:
  static void print_csv_row(std::ostream& out, const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) out << ',';
      if (r[c].find_first_of(",\"") != std::string::npos) {
        out << '"';
        for (char ch : r[c]) out << (ch == '"' ? "\"\"" : std::string(1, ch));
        out << '"';
      } else {
        out << r[c];
      }
    }
    out << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

namespace detail {

inline std::string render_poly(const OrderPolynomial& poly) {
  std::string s;
  for (std::size_t j = poly.coeffs.size(); j-- > 0;) {
    const BigInt& c = poly.coeffs[j];
    if (sgn(c) == 0) continue;
    const BigInt mag = abs(c);
    if (s.empty()) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1 || j == 0) s += to_decimal(mag);
    if (j >= 1) s += "X";
    if (j >= 2) s += "^" + std::to_string(j);
  }
  return s.empty() ? "0" : s;
}

inline std::string render_factored(const FactoredInteger& f) {
  std::string s = f.key();
  std::string out;
  for (char ch : s) out += ch == '*' ? std::string(" * ") : std::string(1, ch);
  return out;
}

inline void emit_scalar(std::ostream& out, const Config& cfg, const std::string& name, const std::string& value) {
  switch (cfg.format) {
    case Format::json: out << Json{{name, value}}.dump() << '\n'; break;
    case Format::csv: out << name << '\n' << value << '\n'; break;
    case Format::table: out << value << '\n'; break;
  }
}

}  // namespace detail

struct ComputeArgs {
  std::string group;
  bool psi = false;
  bool psi_prime = false;
  std::optional<std::uint64_t> psi_k;
  bool psi_all = false;
  bool spectrum = false;
  bool poly = false;
  bool materialize = false;
  std::optional<std::uint64_t> digit_limit;
  std::uint64_t cap = kDefaultSymmetricCap;
};

inline int run_compute(const ComputeArgs& a, const Config& cfg, std::ostream& out) {
  const AbelianGroup g = parse_group(a.group);
  if (a.psi) {
    detail::emit_scalar(out, cfg, "psi", to_decimal(psi_sum(g)));
  } else if (a.psi_prime) {
    const auto v = psi_prime(g);
    if (a.materialize) {
      const auto value = to_decimal(materialize(v, *a.digit_limit));
      if (cfg.format == Format::json) {
        Json j = factored_to_json(v);
        j["value"] = value;
        out << j.dump() << '\n';
      } else {
        detail::emit_scalar(out, cfg, "psi_prime", value);
      }
    } else if (cfg.format == Format::json) {
      out << factored_to_json(v).dump() << '\n';
    } else if (cfg.format == Format::csv) {
      Table t({"prime", "exponent"});
      for (const auto& [p, e] : v.factors()) t.add({std::to_string(p), to_decimal(e)});
      t.print(out, cfg.format, cfg.styled);
    } else {
      out << detail::render_factored(v) << '\n';
    }
  } else if (a.psi_k) {
    const auto v = psi_k(g, *a.psi_k, a.cap);
    if (cfg.format == Format::json)
      out << Json{{"k", std::to_string(*a.psi_k)}, {"psi_k", to_decimal(v)}}.dump() << '\n';
    else
      detail::emit_scalar(out, cfg, "psi_k", to_decimal(v));
  } else if (a.psi_all) {
    const auto all = psi_all(g, a.cap);
    if (cfg.format == Format::json) {
      out << psi_k_to_json(all).dump() << '\n';
    } else {
      Table t({"k", "psi_k"});
      for (std::size_t k = 0; k < all.size(); ++k) t.add({std::to_string(k + 1), to_decimal(all[k])});
      t.print(out, cfg.format, cfg.styled);
    }
  } else if (a.spectrum) {
    const auto s = order_spectrum(g);
    if (cfg.format == Format::json) {
      out << spectrum_to_json(g.order(), s).dump() << '\n';
    } else {
      Table t({"order", "count"});
      for (const auto& [d, m] : s.entries()) t.add({std::to_string(d), to_decimal(m)});
      t.print(out, cfg.format, cfg.styled);
    }
  } else if (a.poly) {
    const auto poly = order_polynomial(g, a.cap);
    if (cfg.format == Format::json) {
      out << polynomial_to_json(poly).dump() << '\n';
    } else if (cfg.format == Format::csv) {
      Table t({"power", "coefficient"});
      for (std::size_t j = 0; j < poly.coeffs.size(); ++j) t.add({std::to_string(j), to_decimal(poly.coeffs[j])});
      t.print(out, cfg.format, cfg.styled);
    } else {
      out << detail::render_poly(poly) << '\n';
    }
  } else {
    const auto v = psi_prime(g);
    if (cfg.format == Format::json) {
      Json j = group_brief(g);
      j["psi"] = to_decimal(psi_sum(g));
      j["psi_prime"] = factored_to_json(v);
      out << j.dump() << '\n';
    } else {
      Table t({"group", "order", "psi", "psi'"});
      t.add({format_group(g), to_decimal(g.order()), to_decimal(psi_sum(g)), detail::render_factored(v)});
      t.print(out, cfg.format, cfg.styled);
    }
  }
  return kSuccess;
}

inline int run_enumerate(std::uint64_t m, const Config& cfg, std::ostream& out) {
  const auto r = check_injectivity(m);
  if (cfg.format == Format::json) {
    out << to_json(r).dump() << '\n';
  } else {
    Table t({"#", "group", "psi'"});
    for (std::size_t i = 0; i < r.entries.size(); ++i)
      t.add({std::to_string(i + 1), format_group(r.entries[i].group), detail::render_factored(r.entries[i].psi_prime)});
    t.print(out, cfg.format, cfg.styled);
  }
  return r.holds() ? kSuccess : kTheoremViolation;
}

inline int run_theorem_c(std::uint64_t p, int n, bool all_pairs, const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto r = check_theorem_c(p, n, all_pairs ? BiconditionalCheck::all_pairs : BiconditionalCheck::adjacent_only);
  if (cfg.format == Format::json) {
    out << to_json(r).dump() << '\n';
  } else {
    Table t({"partition", "group", "exponent"});
    for (const auto& row : r.rows)
      t.add({format_partition(row.partition), format_group(make_group(partition_to_group_type(row.partition, p))),
             to_decimal(row.exponent)});
    t.print(out, cfg.format, cfg.styled);
  }
  if (!r.holds()) {
    err << "THEOREM VIOLATION: psi' is not strictly increasing in lex order for p=" << p << ", n=" << n << '\n';
    return kTheoremViolation;
  }
  return kSuccess;
}

inline int run_injectivity(std::uint64_t max_order, const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto s = check_injectivity_up_to(max_order, cfg.jobs);
  if (cfg.format == Format::json) {
    out << to_json(s).dump() << '\n';
  } else {
    Table t({"max_order", "groups_checked", "failing_orders"});
    t.add({std::to_string(s.max_order), std::to_string(s.groups_checked), std::to_string(s.failures.size())});
    t.print(out, cfg.format, cfg.styled);
  }
  if (!s.holds()) {
    for (const auto& f : s.failures) err << "THEOREM VIOLATION: psi' not injective at order " << f.m << '\n';
    return kTheoremViolation;
  }
  return kSuccess;
}

inline int run_collisions(std::uint64_t max_order, const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto r = find_cross_order_collisions(max_order, cfg.jobs);
  if (cfg.format == Format::json) {
    out << to_json(r).dump() << '\n';
  } else {
    Table t({"group_a", "order_a", "group_b", "order_b", "psi'"});
    for (const auto& c : r.pairs)
      t.add({format_group(c.a), to_decimal(c.a.order()), format_group(c.b), to_decimal(c.b.order()),
             detail::render_factored(c.value)});
    t.print(out, cfg.format, cfg.styled);
  }
  // A coincidence at equal order contradicts injectivity.
  for (const auto& c : r.pairs)
    if (c.a.order() == c.b.order()) {
      err << "THEOREM VIOLATION: " << format_group(c.a) << " and " << format_group(c.b) << " share psi'\n";
      return kTheoremViolation;
    }
  return kSuccess;
}

inline int run_conjecture_f(std::uint64_t max_order, std::uint64_t cap, const Config& cfg, std::ostream& out,
                            std::ostream& err) {
  const auto s = check_conjecture_f_up_to(max_order, cfg.jobs, cap);
  if (cfg.format == Format::json) {
    out << to_json(s).dump() << '\n';
  } else {
    Table t({"max_order", "pairs_checked", "values_compared", "orders_with_coincidences"});
    t.add({std::to_string(s.max_order), std::to_string(s.pairs_checked), std::to_string(s.values_compared),
           std::to_string(s.findings.size())});
    t.print(out, cfg.format, cfg.styled);
  }
  if (!s.holds()) {
    err << "==================================================================\n"
        << " FINDING: non-isomorphic groups of equal order share some psi_k\n";
    for (const auto& f : s.findings)
      for (const auto& c : f.coincidences)
        err << "   m=" << f.m << "  k=" << c.k << "  " << format_group(c.a) << " vs " << format_group(c.b)
            << "  psi_k=" << to_decimal(c.value) << '\n';
    err << "==================================================================\n";
    return kConjectureCounterexample;
  }
  return kSuccess;
}

inline int run_oracle(const std::string& text, const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto r = oracle_check(parse_group(text));
  if (cfg.format == Format::json) {
    out << to_json(r).dump() << '\n';
  } else {
    Table t({"check", "formula", "oracle", "agrees"});
    for (const auto& c : r.checks) t.add({c.name, c.formula, c.oracle, c.agrees ? "yes" : "NO"});
    t.print(out, cfg.format, cfg.styled);
    if (r.brute_force_skipped && cfg.format == Format::table)
      out << "(element enumeration skipped: order above " << kBruteForceCap << ")\n";
  }
  if (!r.holds()) {
    err << "MISMATCH: formula and oracle disagree for " << format_group(r.group) << '\n';
    return kTheoremViolation;
  }
  return kSuccess;
}

/// Entry point; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool styled = false) {
  CLI::App app{"Sums, products and symmetric functions of element orders of finite abelian groups", "psiprime"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  cfg.styled = styled;
  bool as_json = false, as_csv = false;
  std::string jobs_text = "auto";
  auto* json_flag = app.add_flag("--json", as_json, "Machine-readable JSON output");
  auto* csv_flag = app.add_flag("--csv", as_csv, "CSV output");
  json_flag->excludes(csv_flag);
  app.add_option("--jobs", jobs_text, "Worker threads for sweeps: a positive integer or 'auto'")
      ->check([](const std::string& s) -> std::string {
        if (s == "auto") return {};
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || std::stoul(s) == 0)
          return "expected a positive integer or 'auto'";
        return {};
      });

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Compute invariants of one group");
  compute->add_option("group", ca.group, "Group, e.g. Z4xZ3^2 or [4,3,3]")->required();
  auto* o_psi = compute->add_flag("--psi", ca.psi, "Sum of element orders");
  auto* o_pp = compute->add_flag("--psi-prime", ca.psi_prime, "Product of element orders (factored)");
  auto* o_k = compute->add_option("--psi-k", ca.psi_k, "k-th elementary symmetric function of the orders");
  auto* o_all = compute->add_flag("--psi-all", ca.psi_all, "All psi_k");
  auto* o_spec = compute->add_flag("--spectrum", ca.spectrum, "Element order spectrum");
  auto* o_poly = compute->add_flag("--poly", ca.poly, "Order polynomial");
  const std::vector<CLI::Option*> selectors{o_psi, o_pp, o_k, o_all, o_spec, o_poly};
  for (auto* a : selectors)
    for (auto* b : selectors)
      if (a != b) a->excludes(b);
  auto* o_mat = compute->add_flag("--materialize", ca.materialize, "Print psi' as a decimal integer");
  auto* o_lim = compute->add_option("--digit-limit", ca.digit_limit, "Digit budget for --materialize");
  o_mat->needs(o_lim)->needs(o_pp);
  o_lim->needs(o_mat);
  compute->add_option("--cap", ca.cap, "Largest group order for psi_k and the polynomial")->capture_default_str();

  std::uint64_t enum_m = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List abelian groups of order m with psi'");
  enumerate->add_option("m", enum_m, "Group order")->required()->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->require_subcommand(1);
  std::uint64_t tc_prime = 0;
  int tc_n = 0;
  bool tc_all_pairs = false;
  auto* theorem_c = verify->add_subcommand("theorem-c", "psi' strictly increasing over partitions of n in lex order");
  theorem_c->add_option("--prime", tc_prime, "Prime p")->required();
  theorem_c->add_option("--n", tc_n, "Exponent n of the group order p^n")->required();
  theorem_c->add_flag("--all-pairs", tc_all_pairs, "Also compare every pair of partitions");

  std::uint64_t max_order = 0;
  auto* injectivity = verify->add_subcommand("injectivity", "psi' separates groups of equal order");
  injectivity->add_option("--max-order", max_order, "Largest order to scan")->required();
  auto* collisions = verify->add_subcommand("collisions", "Equal psi' across different orders");
  collisions->add_option("--max-order", max_order, "Largest order to scan")->required();
  std::uint64_t cf_cap = kDefaultSymmetricCap;
  auto* conjecture_f = verify->add_subcommand("conjecture-f", "Each psi_k separates groups of equal order");
  conjecture_f->add_option("--max-order", max_order, "Largest order to scan")->required();
  conjecture_f->add_option("--cap", cf_cap, "Symmetric-function size cap")->capture_default_str();

  std::string oracle_group;
  auto* oracle = app.add_subcommand("oracle", "Cross-check formulas against independent oracles");
  oracle->add_option("group", oracle_group, "Group expression")->required();

  std::vector<std::string> argv_store{"psiprime"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  cfg.format = as_json ? Format::json : as_csv ? Format::csv : Format::table;
  cfg.jobs = jobs_text == "auto" ? 0 : static_cast<unsigned>(std::stoul(jobs_text));

  try {
    if (*compute) return run_compute(ca, cfg, out);
    if (*enumerate) return run_enumerate(enum_m, cfg, out);
    if (*theorem_c) return run_theorem_c(tc_prime, tc_n, tc_all_pairs, cfg, out, err);
    if (*injectivity) return run_injectivity(max_order, cfg, out, err);
    if (*collisions) return run_collisions(max_order, cfg, out, err);
    if (*conjecture_f) return run_conjecture_f(max_order, cf_cap, cfg, out, err);
    if (*oracle) return run_oracle(oracle_group, cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    const std::string* text = *compute ? &ca.group : *oracle ? &oracle_group : nullptr;
    if (text) err << "  " << *text << "\n  " << std::string(std::min(e.position(), text->size()), ' ') << "^\n";
    return kUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kSize;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace psiprime::cli
