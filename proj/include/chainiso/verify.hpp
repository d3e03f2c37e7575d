#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chainiso/families.hpp"
#include "chainiso/formulas.hpp"
#include "chainiso/green.hpp"
#include "chainiso/partial_injection.hpp"

namespace chainiso::verify {

using formulas::Int;

// --- D*-partition oracle --------------------------------------------------

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// Partition of an enumerated family into D*-classes: the join of L* (equal
// images) and R* (equal domains) computed by union-find over the elements.
struct ClassPartition {
  Family family = Family::DDP;
  int n = 0;
  std::vector<PartialInjection> members;        // sorted
  std::vector<std::vector<int>> classes;        // sorted index lists
  std::vector<int> representatives;             // first member of each class
  std::map<int, int> classes_per_height;

  int class_count() const { return static_cast<int>(classes.size()); }
};

inline ClassPartition dstar_partition(Family family, int n, int bound = 10) {
  if (n > bound) throw std::invalid_argument("dstar_partition: bound exceeded");
  ClassPartition part;
  part.family = family;
  part.n = n;
  part.members = elements({family, n, std::nullopt});
  const std::size_t size = part.members.size();
  detail::DisjointSets uf(size);
  std::map<std::vector<int>, std::size_t> by_dom;
  std::map<std::vector<int>, std::size_t> by_img;
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<int> im = part.members[i].img;
    std::sort(im.begin(), im.end());
    if (auto [it, fresh] = by_dom.try_emplace(part.members[i].dom, i); !fresh)
      uf.unite(i, it->second);
    if (auto [it, fresh] = by_img.try_emplace(std::move(im), i); !fresh) uf.unite(i, it->second);
  }
  std::map<std::size_t, std::vector<int>> grouped;
  for (std::size_t i = 0; i < size; ++i) grouped[uf.find(i)].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> classes;
  for (auto& [root, idx] : grouped) classes.push_back(std::move(idx));
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (auto& cls : classes) {
    part.representatives.push_back(cls.front());
    const int h = part.members[static_cast<std::size_t>(cls.front())].height();
    ++part.classes_per_height[h];
  }
  part.classes = std::move(classes);
  return part;
}

// --- check reports ---------------------------------------------------------

struct Counterexample {
  std::string where;  // parameter values at the first mismatch
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string name;
  std::string params;  // family / n-range the check covered
  bool pass = true;
  std::optional<Counterexample> counterexample;
};

inline nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j{{"check", r.name}, {"params", r.params}, {"status", r.pass ? "pass" : "fail"}};
  if (r.counterexample) {
    j["counterexample"] = {{"where", r.counterexample->where},
                           {"expected", r.counterexample->expected},
                           {"actual", r.counterexample->actual}};
  }
  return j;
}

namespace detail {

// Accumulates one report; keeps the first counterexample only.
class Check {
 public:
  Check(std::string name, std::string params) {
    report_.name = std::move(name);
    report_.params = std::move(params);
  }

  template <class E, class A>
  void expect(const std::string& where, const E& expected, const A& actual) {
    if (!report_.pass) return;
    if (Int(expected) != Int(actual)) {
      report_.pass = false;
      std::ostringstream e, a;
      e << expected;
      a << actual;
      report_.counterexample = Counterexample{where, e.str(), a.str()};
    }
  }

  void expect_true(const std::string& where, bool ok) {
    if (ok || !report_.pass) return;
    report_.pass = false;
    report_.counterexample = Counterexample{where, "true", "false"};
  }

  CheckReport take() && { return std::move(report_); }

 private:
  CheckReport report_;
};

template <class Fn>
void run_check(std::vector<CheckReport>& out, std::string name, std::string params, Fn&& fn) {
  Check check(std::move(name), std::move(params));
  try {
    fn(check);
    out.push_back(std::move(check).take());
  } catch (const std::exception& ex) {
    CheckReport r = std::move(check).take();
    r.pass = false;
    if (!r.counterexample) r.counterexample = Counterexample{ex.what(), "no exception", "threw"};
    out.push_back(std::move(r));
  }
}

inline std::string place(Family f, int n, const char* stat, int value) {
  std::ostringstream os;
  os << family_name(f) << " n=" << n << " " << stat << "=" << value;
  return os.str();
}

}  // namespace detail

// Golden copies of the published number triangles (heights; rows n = 0..7).
inline const std::vector<std::vector<long>>& golden_ddpstar_heights() {
  static const std::vector<std::vector<long>> t = {
      {1},
      {1, 1},
      {1, 3, 0},
      {1, 6, 1, 0},
      {1, 10, 3, 0, 0},
      {1, 15, 7, 1, 0, 0},
      {1, 21, 13, 3, 0, 0, 0},
      {1, 28, 22, 8, 1, 0, 0, 0}};
  return t;
}

inline const std::vector<std::vector<long>>& golden_ddp_heights() {
  static const std::vector<std::vector<long>> t = {
      {1},
      {1, 1},
      {1, 3, 1},
      {1, 6, 5, 1},
      {1, 10, 13, 5, 1},
      {1, 15, 27, 16, 6, 1},
      {1, 21, 48, 38, 21, 7, 1},
      {1, 28, 78, 78, 57, 28, 8, 1}};
  return t;
}

inline Int height_formula(Family f, int n, int p) {
  switch (f) {
    case Family::ODP: return formulas::f_odp_height(n, p);
    case Family::ODDP: return formulas::f_oddp_height(n, p);
    case Family::DDP: return formulas::f_ddp_height(n, p);
    case Family::DDPstar: return formulas::f_ddpstar_height(n, p);
    default: throw std::invalid_argument("no height formula for this family");
  }
}

// Enumeration bucket counts vs formulas, and vs the golden fixtures where
// the paper printed the rows.
inline std::vector<CheckReport> check_height_tables(int n_max, int enum_bound = 12) {
  std::vector<CheckReport> out;
  const int top = std::min(n_max, enum_bound);
  for (Family f : {Family::ODP, Family::ODDP, Family::DDPstar, Family::DDP}) {
    detail::run_check(out, "height-table", family_name(f) + std::string(" n<=") +
                                               std::to_string(top),
                      [&](detail::Check& check) {
                        for (int n = 0; n <= top; ++n) {
                          for (int p = 0; p <= n; ++p) {
                            const std::uint64_t enumerated = count({f, n, p});
                            check.expect(detail::place(f, n, "p", p), height_formula(f, n, p),
                                         enumerated);
                          }
                        }
                      });
  }
  for (Family f : {Family::DDPstar, Family::DDP}) {
    const auto& golden =
        (f == Family::DDPstar) ? golden_ddpstar_heights() : golden_ddp_heights();
    const int gtop = std::min(n_max, static_cast<int>(golden.size()) - 1);
    detail::run_check(out, "golden-height-table",
                      family_name(f) + std::string(" n<=") + std::to_string(gtop),
                      [&](detail::Check& check) {
                        for (int n = 0; n <= gtop; ++n) {
                          for (int p = 0; p <= n; ++p) {
                            const long fixture = golden[static_cast<std::size_t>(n)]
                                                       [static_cast<std::size_t>(p)];
                            check.expect(detail::place(f, n, "p", p) + " (formula vs fixture)",
                                         fixture, height_formula(f, n, p));
                            check.expect(detail::place(f, n, "p", p) + " (enum vs fixture)",
                                         fixture, count({f, n, p}));
                          }
                        }
                      });
  }
  return out;
}

inline Int fix_formula(Family f, int n, int m) {
  switch (f) {
    case Family::ODDP: return formulas::f_oddp_fix(n, m);
    case Family::DDP: return formulas::f_ddp_fix(n, m);
    default: throw std::invalid_argument("no fix formula for this family");
  }
}

inline std::vector<CheckReport> check_fix_tables(int n_max, int enum_bound = 10) {
  std::vector<CheckReport> out;
  const int top = std::min(n_max, enum_bound);
  for (Family f : {Family::ODDP, Family::DDP}) {
    detail::run_check(
        out, "fix-table", family_name(f) + std::string(" n<=") + std::to_string(top),
        [&](detail::Check& check) {
          for (int n = 0; n <= top; ++n) {
            std::vector<std::uint64_t> buckets(static_cast<std::size_t>(n) + 1, 0);
            for_each_element({f, n, std::nullopt}, [&](const PartialInjection& a) {
              ++buckets[static_cast<std::size_t>(statistics(a).fix)];
            });
            for (int m = 0; m <= n; ++m)
              check.expect(detail::place(f, n, "m", m), fix_formula(f, n, m),
                           buckets[static_cast<std::size_t>(m)]);
          }
        });
  }
  return out;
}

// Class counts: distinct gap vectors for the order-preserving families and
// union-find D*-partitions for ODDP and DDP, against the closed forms.
inline std::vector<CheckReport> check_class_counts(int n_max, int partition_bound = 10) {
  std::vector<CheckReport> out;
  const int top = std::min(n_max, partition_bound);

  detail::run_check(out, "dclass-odp-gap-vectors", "odp n<=" + std::to_string(top),
                    [&](detail::Check& check) {
                      for (int n = 1; n <= top; ++n) {
                        std::map<int, std::set<GapVector>> gaps;
                        for_each_element({Family::ODP, n, std::nullopt},
                                         [&](const PartialInjection& a) {
                                           if (a.height() >= 1)
                                             gaps[a.height()].insert(gap_vector(a));
                                         });
                        Int total = 1;  // the singleton class of the empty map
                        for (int p = 1; p <= n; ++p) {
                          check.expect(detail::place(Family::ODP, n, "p", p),
                                       formulas::dclass_count_odp(n, p),
                                       gaps[p].size());
                          total += static_cast<long>(gaps[p].size());
                        }
                        check.expect("odp n=" + std::to_string(n) + " total",
                                     formulas::dclass_total_odp(n), total);
                      }
                    });

  for (Family f : {Family::ODDP, Family::DDP}) {
    detail::run_check(
        out, "dstar-partition", family_name(f) + std::string(" n<=") + std::to_string(top),
        [&](detail::Check& check) {
          for (int n = 1; n <= top; ++n) {
            const ClassPartition part = dstar_partition(f, n, partition_bound);
            Int total_expected = (f == Family::ODDP) ? formulas::dstar_total_oddp(n)
                                                     : formulas::dstar_total_ddp(n);
            check.expect(family_name(f) + std::string(" n=") + std::to_string(n) + " total",
                         total_expected, part.class_count());
            for (int p = 1; p <= n; ++p) {
              Int expected = (f == Family::ODDP) ? formulas::dstar_count_oddp(n, p)
                                                 : formulas::dstar_count_ddp(n, p);
              const auto it = part.classes_per_height.find(p);
              const int actual = (it == part.classes_per_height.end()) ? 0 : it->second;
              check.expect(detail::place(f, n, "p", p), expected, actual);
            }
          }
        });
  }
  return out;
}

// Resolution of the d_n closed form: with first-case coefficient 1 it must
// match both the per-height sums and the union-find totals.
inline std::vector<CheckReport> check_final_corollary(int n_max, int partition_bound = 12) {
  std::vector<CheckReport> out;
  const int top = std::min(n_max, partition_bound);
  detail::run_check(
      out, "dstar-total-ddp-closed-form",
      "coefficient=" + std::to_string(formulas::kDstarTotalDdpCoefficient) + " 3<=n<=" +
          std::to_string(top),
      [&](detail::Check& check) {
        for (int n = 3; n <= top; ++n) {
          const Int closed = formulas::dstar_total_ddp_closed_form(n);
          check.expect("n=" + std::to_string(n) + " (closed vs height sums)",
                       formulas::dstar_total_ddp(n), closed);
          const ClassPartition part = dstar_partition(Family::DDP, n, partition_bound);
          check.expect("n=" + std::to_string(n) + " (closed vs union-find)",
                       closed, part.class_count());
        }
      });
  return out;
}

inline std::vector<CheckReport> check_closure(int n_max) {
  std::vector<CheckReport> out;
  const int top = std::min(n_max, 7);
  for (Family f : {Family::ODDP, Family::DDP}) {
    detail::run_check(out, "closure", family_name(f) + std::string(" n<=") + std::to_string(top),
                      [&](detail::Check& check) {
                        for (int n = 0; n <= top; ++n) {
                          const auto elems = elements({f, n, std::nullopt});
                          for (const auto& a : elems) {
                            for (const auto& b : elems) {
                              const PartialInjection prod = compose(a, b);
                              check.expect_true(family_name(f) + std::string(" n=") +
                                                    std::to_string(n) + " product left family",
                                                std::binary_search(elems.begin(), elems.end(),
                                                                   prod));
                              if (!std::binary_search(elems.begin(), elems.end(), prod)) return;
                            }
                          }
                        }
                      });
  }
  return out;
}

// Formula-suite identities that need no enumeration.
inline std::vector<CheckReport> check_formula_invariants() {
  std::vector<CheckReport> out;

  detail::run_check(out, "pascal-recurrence-oddp", "2<=p<=n<=40", [&](detail::Check& check) {
    for (int n = 2; n <= 40; ++n)
      for (int p = 2; p <= n; ++p)
        check.expect("n=" + std::to_string(n) + " p=" + std::to_string(p),
                     formulas::f_oddp_height(n - 1, p - 1) + formulas::f_oddp_height(n - 1, p),
                     formulas::f_oddp_height(n, p));
  });

  detail::run_check(out, "skip-recurrence-ddpstar", "2<=p<=n<=40", [&](detail::Check& check) {
    for (int n = 2; n <= 40; ++n)
      for (int p = 2; p <= n; ++p)
        check.expect(
            "n=" + std::to_string(n) + " p=" + std::to_string(p),
            formulas::f_ddpstar_height(n - 2, p - 1) + formulas::f_ddpstar_height(n - 2, p),
            formulas::f_ddpstar_height(n, p));
  });

  detail::run_check(out, "ddpstar-boundary-values", "1<=p<=15", [&](detail::Check& check) {
    for (int p = 1; p <= 15; ++p) {
      check.expect("F(2p+1,p+1) p=" + std::to_string(p), 1,
                   formulas::f_ddpstar_height(2 * p + 1, p + 1));
      check.expect("F(2p,p) p=" + std::to_string(p), 3, formulas::f_ddpstar_height(2 * p, p));
    }
  });

  detail::run_check(out, "ddpstar-height2-sum-identity", "2<=n<=40", [&](detail::Check& check) {
    for (int n = 2; n <= 40; ++n)
      check.expect("n=" + std::to_string(n), formulas::gauss_sum_identity(n),
                   formulas::f_ddpstar_height(n, 2));
  });

  detail::run_check(out, "row-sums", "n<=40", [&](detail::Check& check) {
    for (int n = 0; n <= 40; ++n) {
      Int oddp_h = 0, ddp_h = 0, ddpstar_h = 0;
      for (int p = 0; p <= n; ++p) {
        oddp_h += formulas::f_oddp_height(n, p);
        ddp_h += formulas::f_ddp_height(n, p);
        ddpstar_h += formulas::f_ddpstar_height(n, p);
      }
      check.expect("oddp heights n=" + std::to_string(n), formulas::order_oddp(n), oddp_h);
      check.expect("ddp heights n=" + std::to_string(n), formulas::order_ddp(n), ddp_h);
      check.expect("ddp-star heights n=" + std::to_string(n), formulas::order_ddpstar(n),
                   ddpstar_h);
      Int oddp_f = 0, ddp_f = 0;
      for (int m = 0; m <= n; ++m) {
        oddp_f += formulas::f_oddp_fix(n, m);
        ddp_f += formulas::f_ddp_fix(n, m);
      }
      check.expect("oddp fixes n=" + std::to_string(n), formulas::order_oddp(n), oddp_f);
      check.expect("ddp fixes n=" + std::to_string(n), formulas::order_ddp(n), ddp_f);
    }
  });

  detail::run_check(out, "order-ddp-recurrence", "0<=n<=30", [&](detail::Check& check) {
    for (int n = 0; n <= 30; ++n)
      check.expect("n=" + std::to_string(n), formulas::order_ddp(n),
                   formulas::order_ddp_recurrence(n));
  });

  detail::run_check(out, "hockey-stick", "p<=n<=60", [&](detail::Check& check) {
    for (int n = 0; n <= 60; ++n)
      for (int p = 0; p <= n; ++p) {
        Int sum = 0;
        for (int m = p; m <= n; ++m) sum += formulas::binomial(m, p);
        check.expect("n=" + std::to_string(n) + " p=" + std::to_string(p),
                     formulas::binomial(n + 1, p + 1), sum);
      }
  });

  detail::run_check(out, "merged-B-closed-form", "1<=p<=n<=40", [&](detail::Check& check) {
    // merged_B itself asserts summation == closed form; evaluate across the range.
    for (int n = 1; n <= 40; ++n)
      for (int p = 1; p <= n; ++p)
        check.expect("n=" + std::to_string(n) + " p=" + std::to_string(p),
                     formulas::merged_B_closed_form(n, p), formulas::merged_B(n, p));
  });

  return out;
}

inline std::vector<CheckReport> run_all(int n_max) {
  std::vector<CheckReport> out;
  auto append = [&](std::vector<CheckReport> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };
  append(check_height_tables(n_max));
  append(check_fix_tables(n_max));
  append(check_class_counts(n_max));
  append(check_final_corollary(n_max));
  append(check_closure(n_max));
  append(check_formula_invariants());
  return out;
}

inline bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

}  // namespace chainiso::verify
