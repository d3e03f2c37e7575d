// chainiso: tables, sequences, element listings, D*-class counts and the
// cross-validation harness for order-decreasing partial isometries.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chainiso/families.hpp"
#include "chainiso/formulas.hpp"
#include "chainiso/green.hpp"
#include "chainiso/partial_injection.hpp"
#include "chainiso/verify.hpp"

namespace {

using chainiso::Family;
using chainiso::formulas::Int;
using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitFailure = 1;

std::string dec(const Int& v) { return v.str(); }

// --- table -----------------------------------------------------------------

struct TableRow {
  int n;
  std::vector<Int> counts;  // index 0..n
  Int sum;
};

std::vector<TableRow> build_table(Family family, const std::string& stat, int max_n) {
  std::vector<TableRow> rows;
  for (int n = 0; n <= max_n; ++n) {
    TableRow row{n, {}, 0};
    for (int v = 0; v <= n; ++v) {
      Int c = (stat == "height") ? chainiso::verify::height_formula(family, n, v)
                                 : chainiso::verify::fix_formula(family, n, v);
      row.sum += c;
      row.counts.push_back(std::move(c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void cross_check_table(Family family, const std::string& stat,
                       const std::vector<TableRow>& rows, int bound) {
  for (const auto& row : rows) {
    if (row.n > bound) continue;
    std::vector<std::uint64_t> buckets(static_cast<std::size_t>(row.n) + 1, 0);
    if (stat == "height") {
      for (int p = 0; p <= row.n; ++p)
        buckets[static_cast<std::size_t>(p)] = chainiso::count({family, row.n, p});
    } else {
      chainiso::for_each_element({family, row.n, std::nullopt},
                                 [&](const chainiso::PartialInjection& a) {
                                   ++buckets[static_cast<std::size_t>(chainiso::statistics(a).fix)];
                                 });
    }
    for (int v = 0; v <= row.n; ++v) {
      if (row.counts[static_cast<std::size_t>(v)] != buckets[static_cast<std::size_t>(v)]) {
        throw std::runtime_error("cross-check failed: " + chainiso::family_name(family) + " n=" +
                                 std::to_string(row.n) + " " + stat + "=" + std::to_string(v));
      }
    }
  }
}

void print_table(const std::vector<TableRow>& rows, const std::string& format, int offset,
                 std::ostream& os) {
  const int max_n = rows.empty() ? -1 : rows.back().n;
  if (format == "ascii") {
    std::size_t width = 3;
    for (const auto& row : rows) {
      for (const auto& c : row.counts) width = std::max(width, dec(c).size());
      width = std::max(width, dec(row.sum).size());
    }
    os << std::setw(4) << "n\\v";
    for (int v = 0; v <= max_n; ++v) os << " " << std::setw(static_cast<int>(width)) << v;
    os << " " << std::setw(static_cast<int>(width) + 2) << "sum" << "\n";
    for (const auto& row : rows) {
      os << std::setw(4) << row.n;
      for (int v = 0; v <= max_n; ++v) {
        os << " " << std::setw(static_cast<int>(width));
        if (v <= row.n)
          os << dec(row.counts[static_cast<std::size_t>(v)]);
        else
          os << "";
      }
      os << " " << std::setw(static_cast<int>(width) + 2) << dec(row.sum) << "\n";
    }
  } else if (format == "csv") {
    os << "n";
    for (int v = 0; v <= max_n; ++v) os << "," << v;
    os << ",sum\n";
    for (const auto& row : rows) {
      os << row.n;
      for (int v = 0; v <= max_n; ++v) {
        os << ",";
        if (v <= row.n) os << dec(row.counts[static_cast<std::size_t>(v)]);
      }
      os << "," << dec(row.sum) << "\n";
    }
  } else if (format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json counts = json::array();
      for (const auto& c : row.counts) counts.push_back(dec(c));
      arr.push_back({{"n", row.n}, {"counts", counts}, {"sum", dec(row.sum)}});
    }
    os << arr.dump(2) << "\n";
  } else {  // bfile: the triangle read row-major
    long long index = offset;
    for (const auto& row : rows)
      for (const auto& c : row.counts) os << index++ << " " << dec(c) << "\n";
  }
}

// --- seq ---------------------------------------------------------------------

std::optional<Int> seq_value(const std::string& series, int n) {
  namespace f = chainiso::formulas;
  if (series == "order-oddp") return f::order_oddp(n);
  if (series == "order-ddp") return f::order_ddp(n);
  if (series == "order-ddpstar" || series == "order-ddp-star") return f::order_ddpstar(n);
  if (series == "order-ddp-recurrence") return f::order_ddp_recurrence(n);
  if (series == "dstar-total-ddp") return n == 0 ? Int(1) : f::dstar_total_ddp(n);
  if (series == "dstar-total-oddp") return n == 0 ? Int(1) : f::dstar_total_oddp(n);
  if (series == "dclass-total-odp") return n == 0 ? Int(1) : f::dclass_total_odp(n);
  return std::nullopt;
}

void print_seq(const std::vector<std::pair<int, Int>>& values, const std::string& format,
               std::ostream& os) {
  if (format == "ascii") {
    for (std::size_t i = 0; i < values.size(); ++i)
      os << (i ? ", " : "") << dec(values[i].second);
    os << "\n";
  } else if (format == "csv") {
    os << "n,value\n";
    for (const auto& [n, v] : values) os << n << "," << dec(v) << "\n";
  } else if (format == "json") {
    json arr = json::array();
    for (const auto& [n, v] : values) arr.push_back({{"n", n}, {"value", dec(v)}});
    os << arr.dump(2) << "\n";
  } else {  // bfile
    for (const auto& [n, v] : values) os << n << " " << dec(v) << "\n";
  }
}

// --- elements ----------------------------------------------------------------

std::string two_row(const chainiso::PartialInjection& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.dom.size(); ++i) os << (i ? " " : "") << a.dom[i];
  os << " / ";
  for (std::size_t i = 0; i < a.img.size(); ++i) os << (i ? " " : "") << a.img[i];
  os << ")";
  return os.str();
}

// --- verify ------------------------------------------------------------------

void print_reports(const std::vector<chainiso::verify::CheckReport>& reports,
                   const std::string& format, bool header, std::ostream& os) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(chainiso::verify::to_json(r));
    os << arr.dump(2) << "\n";
    return;
  }
  if (header) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    os << "# chainiso verify, " << std::put_time(std::gmtime(&now), "%F %T UTC") << "\n";
  }
  for (const auto& r : reports) {
    os << (r.pass ? "pass" : "FAIL") << "  " << r.name << "  [" << r.params << "]";
    if (r.counterexample) {
      os << "  at " << r.counterexample->where << ": expected " << r.counterexample->expected
         << ", got " << r.counterexample->actual;
    }
    os << "\n";
  }
  std::size_t failed = 0;
  for (const auto& r : reports)
    if (!r.pass) ++failed;
  os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and verification for semigroups of order-decreasing\n"
               "partial isometries of a finite chain.\n"
               "Families: dp (partial isometries), odp (order-preserving), ddp\n"
               "(order-decreasing), oddp (order-preserving and -decreasing), ddp-star\n"
               "(order-reversing and -decreasing, plus all maps of height <= 1)."};
  app.require_subcommand(1);

  // table
  std::string t_family = "ddp", t_stat = "height", t_format = "ascii";
  int t_max_n = 7, t_offset = 0;
  bool t_check = false;
  auto* t = app.add_subcommand("table", "Print a number triangle F(n; value) with row sums");
  t->add_option("--family", t_family, "odp|oddp|ddp|ddp-star (fix: oddp|ddp)");
  t->add_option("--stat", t_stat, "height or fix")->check(CLI::IsMember({"height", "fix"}));
  t->add_option("--max-n", t_max_n, "largest chain size")->check(CLI::NonNegativeNumber);
  t->add_option("--format", t_format)->check(CLI::IsMember({"ascii", "csv", "json", "bfile"}));
  t->add_option("--offset", t_offset, "first b-file index");
  t->add_flag("--check", t_check, "cross-check rows against enumeration");

  // seq
  std::string s_series = "order-ddp", s_format = "ascii";
  int s_max_n = 7, s_offset = 0;
  auto* s = app.add_subcommand("seq", "Print a counting sequence a(offset..max-n)");
  s->add_option("--series", s_series,
                "order-oddp|order-ddp|order-ddpstar|order-ddp-recurrence|"
                "dstar-total-ddp|dstar-total-oddp|dclass-total-odp");
  s->add_option("--max-n", s_max_n)->check(CLI::NonNegativeNumber);
  s->add_option("--offset", s_offset, "first index")->check(CLI::NonNegativeNumber);
  s->add_option("--format", s_format)->check(CLI::IsMember({"ascii", "csv", "json", "bfile"}));

  // elements
  std::string e_family = "ddp", e_format = "ascii";
  int e_n = 3, e_bound = 8;
  std::optional<int> e_height;
  auto* e = app.add_subcommand("elements", "List the maps of a family slice");
  e->add_option("--family", e_family, "dp|odp|ddp|oddp|ddp-star");
  e->add_option("--n", e_n, "chain size")->check(CLI::NonNegativeNumber);
  e->add_option("--height", e_height, "restrict to one height");
  e->add_option("--bound", e_bound, "listing bound (default 8)");
  e->add_option("--format", e_format)->check(CLI::IsMember({"ascii", "json"}));

  // classes
  std::string c_family = "ddp", c_format = "ascii";
  int c_n = 4;
  bool c_per_height = false, c_oracle = false;
  auto* c = app.add_subcommand("classes", "D*-class counts per family");
  c->add_option("--family", c_family, "oddp or ddp");
  c->add_option("--n", c_n, "chain size")->check(CLI::NonNegativeNumber);
  c->add_flag("--per-height", c_per_height, "also print per-height class counts");
  c->add_flag("--oracle", c_oracle, "also compute the union-find partition and compare");
  c->add_option("--format", c_format)->check(CLI::IsMember({"ascii", "json"}));

  // verify
  int v_max_n = 7;
  std::string v_format = "ascii";
  bool v_no_header = false;
  std::vector<std::string> v_checks;
  auto* v = app.add_subcommand("verify", "Run the cross-validation harness");
  v->add_option("--max-n", v_max_n)->check(CLI::NonNegativeNumber);
  v->add_option("--checks", v_checks,
                "subset of: height-tables fix-tables class-counts final-corollary closure "
                "formula-invariants (default: all)");
  v->add_option("--format", v_format)->check(CLI::IsMember({"ascii", "json"}));
  v->add_flag("--no-header", v_no_header, "suppress the timestamped header line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (t->parsed()) {
      auto family = chainiso::family_from_name(t_family);
      if (!family) {
        std::cerr << "unknown family: " << t_family << "\n";
        return kExitUsage;
      }
      const bool supported = (t_stat == "height")
                                 ? (*family != Family::DP)
                                 : (*family == Family::ODDP || *family == Family::DDP);
      if (!supported) {
        std::cerr << "no " << t_stat << " formula for family " << t_family << "\n";
        return kExitUsage;
      }
      const auto rows = build_table(*family, t_stat, t_max_n);
      if (t_check) cross_check_table(*family, t_stat, rows, chainiso::oracle_bound());
      print_table(rows, t_format, t_offset, std::cout);
      return 0;
    }

    if (s->parsed()) {
      if (s_max_n < s_offset) {
        std::cerr << "--max-n must be at least --offset\n";
        return kExitUsage;
      }
      std::vector<std::pair<int, Int>> values;
      for (int n = s_offset; n <= s_max_n; ++n) {
        auto val = seq_value(s_series, n);
        if (!val) {
          std::cerr << "unknown series: " << s_series << "\n";
          return kExitUsage;
        }
        values.emplace_back(n, std::move(*val));
      }
      print_seq(values, s_format, std::cout);
      return 0;
    }

    if (e->parsed()) {
      auto family = chainiso::family_from_name(e_family);
      if (!family) {
        std::cerr << "unknown family: " << e_family << "\n";
        return kExitUsage;
      }
      if (e_n > e_bound) {
        std::cerr << "n exceeds the listing bound (" << e_bound << ")\n";
        return kExitUsage;
      }
      const auto elems = chainiso::elements({*family, e_n, e_height});
      if (e_format == "json") {
        json arr = json::array();
        for (const auto& a : elems) arr.push_back({{"n", a.n}, {"dom", a.dom}, {"img", a.img}});
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& a : elems) std::cout << two_row(a) << "\n";
      }
      return 0;
    }

    if (c->parsed()) {
      auto family = chainiso::family_from_name(c_family);
      if (!family || (*family != Family::ODDP && *family != Family::DDP)) {
        std::cerr << "classes supports families oddp and ddp\n";
        return kExitUsage;
      }
      namespace f = chainiso::formulas;
      const bool oddp = (*family == Family::ODDP);
      Int total = (c_n == 0) ? Int(1)
                             : (oddp ? f::dstar_total_oddp(c_n) : f::dstar_total_ddp(c_n));
      std::vector<std::pair<int, Int>> per_height;
      for (int p = 1; p <= c_n; ++p)
        per_height.emplace_back(p, oddp ? f::dstar_count_oddp(c_n, p)
                                        : f::dstar_count_ddp(c_n, p));
      std::optional<chainiso::verify::ClassPartition> part;
      if (c_oracle) part = chainiso::verify::dstar_partition(*family, c_n, 12);
      bool match = true;
      if (part) {
        match = (Int(part->class_count()) == total);
        for (const auto& [p, cnt] : per_height) {
          const auto it = part->classes_per_height.find(p);
          const int actual = (it == part->classes_per_height.end()) ? 0 : it->second;
          if (Int(actual) != cnt) match = false;
        }
      }
      if (c_format == "json") {
        json j{{"family", chainiso::family_name(*family)}, {"n", c_n}, {"total", dec(total)}};
        if (c_per_height) {
          json ph = json::array();
          for (const auto& [p, cnt] : per_height)
            ph.push_back({{"height", p}, {"classes", dec(cnt)}});
          j["per_height"] = ph;
        }
        if (part) {
          j["oracle_total"] = part->class_count();
          j["match"] = match;
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << chainiso::family_name(*family) << " n=" << c_n << " D*-classes: "
                  << dec(total) << "\n";
        if (c_per_height)
          for (const auto& [p, cnt] : per_height)
            std::cout << "  height " << p << ": " << dec(cnt) << "\n";
        if (part)
          std::cout << "  oracle (union-find): " << part->class_count() << " -> "
                    << (match ? "match" : "MISMATCH") << "\n";
      }
      return match ? 0 : kExitFailure;
    }

    if (v->parsed()) {
      std::vector<chainiso::verify::CheckReport> reports;
      auto want = [&](const std::string& name) {
        return v_checks.empty() ||
               std::find(v_checks.begin(), v_checks.end(), name) != v_checks.end();
      };
      auto append = [&](std::vector<chainiso::verify::CheckReport> v2) {
        for (auto& r : v2) reports.push_back(std::move(r));
      };
      if (want("height-tables")) append(chainiso::verify::check_height_tables(v_max_n));
      if (want("fix-tables")) append(chainiso::verify::check_fix_tables(v_max_n));
      if (want("class-counts")) append(chainiso::verify::check_class_counts(v_max_n));
      if (want("final-corollary")) append(chainiso::verify::check_final_corollary(v_max_n));
      if (want("closure")) append(chainiso::verify::check_closure(v_max_n));
      if (want("formula-invariants")) append(chainiso::verify::check_formula_invariants());
      print_reports(reports, v_format, !v_no_header && v_format == "ascii", std::cout);
      return chainiso::verify::all_pass(reports) ? 0 : kExitFailure;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
