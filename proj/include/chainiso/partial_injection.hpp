#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chainiso {

// A partial injective map on the chain {1..n}. Stored as parallel vectors
// with dom strictly increasing; img[i] is the image of dom[i]. Maps act on
// the right: compose(a, b) sends x to (x a) b.
struct PartialInjection {
  int n = 0;
  std::vector<int> dom;
  std::vector<int> img;

  int height() const noexcept { return static_cast<int>(dom.size()); }
  bool is_empty() const noexcept { return dom.empty(); }

  std::optional<int> apply(int x) const {
    auto it = std::lower_bound(dom.begin(), dom.end(), x);
    if (it == dom.end() || *it != x) return std::nullopt;
    return img[static_cast<std::size_t>(it - dom.begin())];
  }

  friend auto operator<=>(const PartialInjection&, const PartialInjection&) = default;
};

inline PartialInjection make(int n, std::vector<std::pair<int, int>> pairs) {
  if (n < 0) throw std::invalid_argument("chain size must be nonnegative");
  std::sort(pairs.begin(), pairs.end());
  PartialInjection a;
  a.n = n;
  a.dom.reserve(pairs.size());
  a.img.reserve(pairs.size());
  for (const auto& [x, y] : pairs) {
    if (x < 1 || x > n || y < 1 || y > n)
      throw std::invalid_argument("point outside chain [1," + std::to_string(n) + "]");
    if (!a.dom.empty() && a.dom.back() == x)
      throw std::invalid_argument("duplicate domain point " + std::to_string(x));
    a.dom.push_back(x);
    a.img.push_back(y);
  }
  std::vector<int> values = a.img;
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw std::invalid_argument("duplicate image point");
  return a;
}

inline PartialInjection empty_map(int n) {
  PartialInjection a;
  a.n = n;
  return a;
}

inline PartialInjection compose(const PartialInjection& alpha, const PartialInjection& beta) {
  if (alpha.n != beta.n) throw std::invalid_argument("mismatched chain sizes");
  PartialInjection r;
  r.n = alpha.n;
  for (int i = 0; i < alpha.height(); ++i) {
    if (auto y = beta.apply(alpha.img[static_cast<std::size_t>(i)])) {
      r.dom.push_back(alpha.dom[static_cast<std::size_t>(i)]);
      r.img.push_back(*y);
    }
  }
  return r;
}

struct Statistics {
  int height = 0;
  int fix = 0;
  std::optional<int> right_waist;
  std::optional<int> left_waist;
  std::optional<int> right_shoulder;
  std::optional<int> left_shoulder;
};

inline Statistics statistics(const PartialInjection& a) {
  Statistics s;
  s.height = a.height();
  for (int i = 0; i < a.height(); ++i) {
    if (a.dom[static_cast<std::size_t>(i)] == a.img[static_cast<std::size_t>(i)]) ++s.fix;
  }
  if (!a.is_empty()) {
    auto [lo, hi] = std::minmax_element(a.img.begin(), a.img.end());
    s.left_waist = *lo;
    s.right_waist = *hi;
    s.left_shoulder = a.dom.front();
    s.right_shoulder = a.dom.back();
  }
  return s;
}

// Predicate flags of a map. Maps of height <= 1 are both order-preserving
// and order-reversing (vacuously).
struct Classification {
  bool order_preserving = true;
  bool order_reversing = true;
  bool isometry = true;
  bool order_decreasing = true;
  bool partial_identity = true;
  bool idempotent = false;
};

inline Classification classify(const PartialInjection& a) {
  Classification c;
  const int p = a.height();
  for (int i = 0; i < p; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (a.img[ui] > a.dom[ui]) c.order_decreasing = false;
    if (a.img[ui] != a.dom[ui]) c.partial_identity = false;
  }
  for (int i = 0; i + 1 < p; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (a.img[ui + 1] < a.img[ui]) c.order_preserving = false;
    if (a.img[ui + 1] > a.img[ui]) c.order_reversing = false;
  }
  for (int i = 0; i < p && c.isometry; ++i) {
    for (int j = i + 1; j < p; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      if (a.dom[uj] - a.dom[ui] != std::abs(a.img[uj] - a.img[ui])) {
        c.isometry = false;
        break;
      }
    }
  }
  c.idempotent = (compose(a, a) == a);
  return c;
}

}  // namespace chainiso
