#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "chainiso/families.hpp"
#include "chainiso/partial_injection.hpp"

namespace chainiso {

// Ordered tuple of absolute differences of consecutive image values taken
// in domain order; empty for height <= 1. The D*-class key.
using GapVector = std::vector<int>;

inline GapVector gap_vector(const PartialInjection& a) {
  GapVector g;
  for (int i = 0; i + 1 < a.height(); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    g.push_back(std::abs(a.img[ui + 1] - a.img[ui]));
  }
  return g;
}

inline GapVector reverse_gap(const PartialInjection& a) {
  GapVector g = gap_vector(a);
  std::reverse(g.begin(), g.end());
  return g;
}

inline int span(const PartialInjection& a) {
  if (a.is_empty()) throw std::invalid_argument("span of the empty map");
  return a.dom.back() - a.dom.front();
}

// L* <=> equal images, R* <=> equal domains (as sets).
inline bool lstar_related(const PartialInjection& a, const PartialInjection& b) {
  std::vector<int> ia = a.img, ib = b.img;
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  return ia == ib;
}

inline bool rstar_related(const PartialInjection& a, const PartialInjection& b) {
  return a.dom == b.dom;
}

// Gap-vector characterization of D*. ODP and ODDP classes are exactly the
// equal-gap classes per height; in DDP a class and its reversal merge when
// the common span is at most floor((n-1)/2). The companion lower bound
// "p <= span" is vacuous: a non-palindromic gap tuple forces span >= p.
inline bool dstar_related(Family f, const PartialInjection& a, const PartialInjection& b) {
  if (a.n != b.n) throw std::invalid_argument("mixed chain sizes");
  if (f != Family::ODP && f != Family::ODDP && f != Family::DDP)
    throw std::invalid_argument("dstar_related: unsupported family");
  if (a.height() != b.height()) return false;
  const GapVector ga = gap_vector(a);
  const GapVector gb = gap_vector(b);
  if (ga == gb) return true;
  if (f == Family::DDP) {
    GapVector rb = gb;
    std::reverse(rb.begin(), rb.end());
    if (ga == rb) return span(a) <= (a.n - 1) / 2;
  }
  return false;
}

}  // namespace chainiso
