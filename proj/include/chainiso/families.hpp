#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chainiso/partial_injection.hpp"

namespace chainiso {

// The five studied subsets of the symmetric inverse monoid:
//   DP       all partial isometries
//   ODP      order-preserving partial isometries
//   DDP      order-decreasing partial isometries
//   ODDP     order-preserving and order-decreasing partial isometries
//   DDPstar  order-reversing elements of DDP, plus all maps of height <= 1
enum class Family { DP, ODP, DDP, ODDP, DDPstar };

inline constexpr Family kAllFamilies[] = {Family::DP, Family::ODP, Family::DDP,
                                          Family::ODDP, Family::DDPstar};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::DP: return "dp";
    case Family::ODP: return "odp";
    case Family::DDP: return "ddp";
    case Family::ODDP: return "oddp";
    case Family::DDPstar: return "ddp-star";
  }
  return "?";
}

inline std::optional<Family> family_from_name(std::string_view name) {
  if (name == "dp") return Family::DP;
  if (name == "odp") return Family::ODP;
  if (name == "ddp") return Family::DDP;
  if (name == "oddp") return Family::ODDP;
  if (name == "ddp-star" || name == "ddpstar") return Family::DDPstar;
  return std::nullopt;
}

inline bool family_contains(Family f, const PartialInjection& a) {
  const Classification c = classify(a);
  if (!c.isometry) return false;
  switch (f) {
    case Family::DP: return true;
    case Family::ODP: return c.order_preserving;
    case Family::DDP: return c.order_decreasing;
    case Family::ODDP: return c.order_preserving && c.order_decreasing;
    case Family::DDPstar: return c.order_decreasing && c.order_reversing;
  }
  return false;
}

// A family restricted to one chain, optionally to one height layer.
struct FamilySlice {
  Family family;
  int n;
  std::optional<int> height;
};

inline PartialInjection construct_translation(int n, std::vector<int> points, int shift) {
  std::sort(points.begin(), points.end());
  PartialInjection a;
  a.n = n;
  for (int x : points) {
    if (x < 1 || x > n) throw std::invalid_argument("domain point outside chain");
    if (x + shift < 1 || x + shift > n)
      throw std::invalid_argument("shifted image leaves the chain");
    a.dom.push_back(x);
    a.img.push_back(x + shift);
  }
  return a;
}

inline PartialInjection construct_reflection(int n, std::vector<int> points, int center) {
  std::sort(points.begin(), points.end());
  PartialInjection a;
  a.n = n;
  for (int x : points) {
    if (x < 1 || x > n) throw std::invalid_argument("domain point outside chain");
    if (center - x < 1 || center - x > n)
      throw std::invalid_argument("reflected image leaves the chain");
    a.dom.push_back(x);
    a.img.push_back(center - x);
  }
  return a;
}

namespace detail {

inline bool decreasing_family(Family f) {
  return f == Family::DDP || f == Family::ODDP || f == Family::DDPstar;
}

inline bool takes_reflections(Family f) {
  return f == Family::DP || f == Family::DDP || f == Family::DDPstar;
}

}  // namespace detail

// Direct enumeration. Every partial isometry is a translation x -> x + t
// or a reflection x -> c - x on its domain; for each domain subset we walk
// the admissible shifts and centers. Height <= 1 maps are emitted as
// translations only, so nothing is produced twice.
template <class Visit>
void for_each_element(const FamilySlice& slice, Visit&& visit) {
  const int n = slice.n;
  if (n < 0) throw std::invalid_argument("negative chain size");
  if (n > 25) throw std::invalid_argument("direct enumeration capped at n <= 25");
  const Family f = slice.family;
  const std::uint32_t limit = std::uint32_t{1} << n;
  std::vector<int> points;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int p = std::popcount(mask);
    if (slice.height && p != *slice.height) continue;
    if (p == 0) {
      visit(empty_map(n));
      continue;
    }
    points.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) points.push_back(i + 1);
    }
    const int lo = points.front();
    const int hi = points.back();

    const bool translations = (f != Family::DDPstar || p <= 1);
    if (translations) {
      const int t_min = 1 - lo;
      const int t_max = detail::decreasing_family(f) ? 0 : n - hi;
      for (int t = t_min; t <= t_max; ++t) {
        PartialInjection a;
        a.n = n;
        a.dom = points;
        a.img.reserve(points.size());
        for (int x : points) a.img.push_back(x + t);
        visit(std::move(a));
      }
    }

    if (p >= 2 && detail::takes_reflections(f)) {
      const int c_min = hi + 1;
      int c_max = n + lo;
      if (detail::decreasing_family(f)) c_max = std::min(c_max, 2 * lo);
      for (int c = c_min; c <= c_max; ++c) {
        PartialInjection a;
        a.n = n;
        a.dom = points;
        a.img.reserve(points.size());
        for (int x : points) a.img.push_back(c - x);
        visit(std::move(a));
      }
    }
  }
}

inline std::vector<PartialInjection> elements(const FamilySlice& slice) {
  std::vector<PartialInjection> out;
  for_each_element(slice, [&](PartialInjection a) { out.push_back(std::move(a)); });
  std::sort(out.begin(), out.end());
  return out;
}

// Slice cardinality by counting the admissible shift and center ranges per
// domain subset; no maps are materialized.
inline std::uint64_t count(const FamilySlice& slice) {
  const int n = slice.n;
  if (n < 0) throw std::invalid_argument("negative chain size");
  if (n > 25) throw std::invalid_argument("direct enumeration capped at n <= 25");
  const Family f = slice.family;
  const std::uint32_t limit = std::uint32_t{1} << n;
  std::uint64_t total = 0;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int p = std::popcount(mask);
    if (slice.height && p != *slice.height) continue;
    if (p == 0) {
      ++total;
      continue;
    }
    const int lo = std::countr_zero(mask) + 1;
    const int hi = std::bit_width(mask);
    if (f != Family::DDPstar || p <= 1) {
      const int t_min = 1 - lo;
      const int t_max = detail::decreasing_family(f) ? 0 : n - hi;
      if (t_max >= t_min) total += static_cast<std::uint64_t>(t_max - t_min + 1);
    }
    if (p >= 2 && detail::takes_reflections(f)) {
      const int c_min = hi + 1;
      int c_max = n + lo;
      if (detail::decreasing_family(f)) c_max = std::min(c_max, 2 * lo);
      if (c_max >= c_min) total += static_cast<std::uint64_t>(c_max - c_min + 1);
    }
  }
  return total;
}

// Naive oracle bound; super-exponential beyond this. Overridable through
// the CHAINISO_ORACLE_BOUND environment variable.
inline int oracle_bound() {
  if (const char* env = std::getenv("CHAINISO_ORACLE_BOUND")) {
    return std::atoi(env);
  }
  return 8;
}

// Independent oracle: enumerate every partial injection on [1,n] (domain
// subset, equal-size image subset, bijection between them) and keep those
// the classify predicates admit. Shares no code with for_each_element.
template <class Visit>
void naive_for_each(const FamilySlice& slice, Visit&& visit, int bound = oracle_bound()) {
  const int n = slice.n;
  if (n < 0) throw std::invalid_argument("negative chain size");
  if (n > bound) throw std::invalid_argument("chain size exceeds the naive oracle bound");
  const std::uint32_t limit = std::uint32_t{1} << n;
  std::vector<int> dom_pts;
  std::vector<int> img_pts;
  for (std::uint32_t dmask = 0; dmask < limit; ++dmask) {
    const int p = std::popcount(dmask);
    if (slice.height && p != *slice.height) continue;
    if (p == 0) {
      PartialInjection e = empty_map(n);
      if (family_contains(slice.family, e)) visit(std::move(e));
      continue;
    }
    dom_pts.clear();
    for (int i = 0; i < n; ++i) {
      if (dmask & (std::uint32_t{1} << i)) dom_pts.push_back(i + 1);
    }
    for (std::uint32_t imask = 0; imask < limit; ++imask) {
      if (std::popcount(imask) != p) continue;
      img_pts.clear();
      for (int i = 0; i < n; ++i) {
        if (imask & (std::uint32_t{1} << i)) img_pts.push_back(i + 1);
      }
      std::vector<int> perm = img_pts;
      do {
        PartialInjection a;
        a.n = n;
        a.dom = dom_pts;
        a.img = perm;
        if (family_contains(slice.family, a)) visit(std::move(a));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

inline std::vector<PartialInjection> naive_elements(const FamilySlice& slice,
                                                    int bound = oracle_bound()) {
  std::vector<PartialInjection> out;
  naive_for_each(slice, [&](PartialInjection a) { out.push_back(std::move(a)); }, bound);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chainiso
