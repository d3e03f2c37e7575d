#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "chainiso/families.hpp"
#include "chainiso/partial_injection.hpp"

using namespace chainiso;

TEST_CASE("construct_translation") {
  CHECK(construct_translation(10, {1, 2, 4, 7, 8}, 2) ==
        make(10, {{1, 3}, {2, 4}, {4, 6}, {7, 9}, {8, 10}}));
  const auto id = construct_translation(6, {2, 5}, 0);
  CHECK(classify(id).partial_identity);
  CHECK_THROWS_AS(construct_translation(5, {4, 5}, 2), std::invalid_argument);
}

TEST_CASE("construct_reflection") {
  CHECK(construct_reflection(10, {2, 4, 7, 8}, 12) ==
        make(10, {{2, 10}, {4, 8}, {7, 5}, {8, 4}}));
  const auto r = construct_reflection(7, {5, 6, 7}, 8);
  CHECK(r == make(7, {{5, 3}, {6, 2}, {7, 1}}));
  CHECK(classify(r).order_decreasing);
  CHECK(construct_reflection(3, {1}, 2) == construct_translation(3, {1}, 0));
  CHECK_THROWS_AS(construct_reflection(3, {1, 2}, 2), std::invalid_argument);
}

TEST_CASE("enumerate small slices exactly") {
  const auto ddp2 = elements({Family::DDP, 2, std::nullopt});
  const std::vector<PartialInjection> expected = {
      empty_map(2), make(2, {{1, 1}}), make(2, {{1, 1}, {2, 2}}), make(2, {{2, 1}}),
      make(2, {{2, 2}})};
  auto sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  CHECK(ddp2 == sorted);

  const auto star = elements({Family::DDPstar, 3, 2});
  REQUIRE(star.size() == 1);
  CHECK(star.front() == make(3, {{2, 2}, {3, 1}}));

  CHECK(elements({Family::ODDP, 3, std::nullopt}).size() == 12);
}

TEST_CASE("naive oracle basics") {
  CHECK(naive_elements({Family::DP, 1, std::nullopt}).size() == 2);
  CHECK(naive_elements({Family::ODDP, 3, std::nullopt}).size() == 12);
  CHECK(naive_elements({Family::DDP, 2, std::nullopt}) ==
        elements({Family::DDP, 2, std::nullopt}));
  CHECK_THROWS_AS(naive_elements({Family::DP, 9, std::nullopt}, 8), std::invalid_argument);
}

TEST_CASE("count matches table values without materializing") {
  CHECK(count({Family::DDPstar, 7, 2}) == 22);
  CHECK(count({Family::DDP, 6, 2}) == 48);
  for (Family f : kAllFamilies) CHECK(count({f, 0, std::nullopt}) == 1);
}

TEST_CASE("fast and naive enumerators agree as sets (n <= 5)") {
  for (Family f : kAllFamilies) {
    for (int n = 0; n <= 5; ++n) {
      CHECK(elements({f, n, std::nullopt}) == naive_elements({f, n, std::nullopt}));
    }
  }
}

TEST_CASE("no duplicate emissions up to n = 9") {
  for (Family f : kAllFamilies) {
    for (int n : {7, 9}) {
      const auto elems = elements({f, n, std::nullopt});
      CHECK(std::adjacent_find(elems.begin(), elems.end()) == elems.end());
      CHECK(elems.size() == count({f, n, std::nullopt}));
    }
  }
}

TEST_CASE("families are closed under composition (n <= 5)") {
  for (Family f : {Family::DDP, Family::ODDP}) {
    for (int n = 0; n <= 5; ++n) {
      const auto elems = elements({f, n, std::nullopt});
      for (const auto& a : elems)
        for (const auto& b : elems)
          CHECK(std::binary_search(elems.begin(), elems.end(), compose(a, b)));
    }
  }
}

TEST_CASE("intersection characterizations of the decreasing families (n <= 6)") {
  for (int n = 0; n <= 6; ++n) {
    std::set<PartialInjection> ddp, oddp;
    for_each_element({Family::DP, n, std::nullopt}, [&](const PartialInjection& a) {
      if (classify(a).order_decreasing) ddp.insert(a);
    });
    for_each_element({Family::ODP, n, std::nullopt}, [&](const PartialInjection& a) {
      if (classify(a).order_decreasing) oddp.insert(a);
    });
    const auto dv = elements({Family::DDP, n, std::nullopt});
    const auto ov = elements({Family::ODDP, n, std::nullopt});
    CHECK(std::set<PartialInjection>(dv.begin(), dv.end()) == ddp);
    CHECK(std::set<PartialInjection>(ov.begin(), ov.end()) == oddp);
  }
}

TEST_CASE("left shoulder exceeds the gap below the right shoulder (n <= 9)") {
  for (int n = 2; n <= 9; ++n) {
    for_each_element({Family::DDPstar, n, std::nullopt}, [](const PartialInjection& a) {
      if (a.height() < 2) return;
      const int right = a.dom.back();
      const int next = a.dom[a.dom.size() - 2];
      const int r = right - next;
      CHECK(a.dom.front() > r);
    });
  }
}

TEST_CASE("reversing decreasing maps exist exactly up to height floor((n+1)/2)") {
  for (int n = 0; n <= 10; ++n) {
    for (int p = 0; p <= n; ++p) {
      const bool exists = count({Family::DDPstar, n, p}) > 0;
      CHECK(exists == (p <= (n + 1) / 2));
    }
  }
}
