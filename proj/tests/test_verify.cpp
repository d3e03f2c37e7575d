#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "chainiso/green.hpp"
#include "chainiso/verify.hpp"

using namespace chainiso;
using namespace chainiso::verify;

TEST_CASE("dstar_partition class counts") {
  CHECK(dstar_partition(Family::DDP, 4).class_count() == 9);
  CHECK(dstar_partition(Family::ODDP, 5).class_count() == 17);
  const auto trivial = dstar_partition(Family::DDP, 0);
  REQUIRE(trivial.class_count() == 1);
  CHECK(trivial.members.front().is_empty());
  CHECK_THROWS_AS(dstar_partition(Family::DDP, 11), std::invalid_argument);
}

TEST_CASE("partition classes are disjoint, covering and height-homogeneous") {
  for (Family f : {Family::ODDP, Family::DDP}) {
    for (int n = 0; n <= 7; ++n) {
      const auto part = dstar_partition(f, n);
      std::set<int> seen;
      for (const auto& cls : part.classes) {
        REQUIRE(!cls.empty());
        const int h = part.members[static_cast<std::size_t>(cls.front())].height();
        for (int i : cls) {
          CHECK(seen.insert(i).second);
          CHECK(part.members[static_cast<std::size_t>(i)].height() == h);
        }
      }
      CHECK(seen.size() == part.members.size());
    }
  }
}

TEST_CASE("classes carry at most the gap vector and its reversal") {
  for (Family f : {Family::ODDP, Family::DDP}) {
    for (int n = 1; n <= 7; ++n) {
      const auto part = dstar_partition(f, n);
      for (const auto& cls : part.classes) {
        std::set<GapVector> gaps;
        for (int i : cls) gaps.insert(gap_vector(part.members[static_cast<std::size_t>(i)]));
        if (f == Family::ODDP) {
          CHECK(gaps.size() == 1);
        } else {
          CHECK(gaps.size() <= 2);
          if (gaps.size() == 2) {
            auto rev = *gaps.begin();
            std::reverse(rev.begin(), rev.end());
            CHECK(rev == *std::next(gaps.begin()));
          }
        }
      }
    }
  }
}

TEST_CASE("all checks pass on small chains") {
  const auto reports = run_all(6);
  for (const auto& r : reports) {
    INFO(r.name << " [" << r.params << "]"
                << (r.counterexample ? " at " + r.counterexample->where : ""));
    CHECK(r.pass);
  }
  CHECK(all_pass(reports));
}

TEST_CASE("reports are deterministic") {
  const auto a = run_all(4);
  const auto b = run_all(4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].params == b[i].params);
    CHECK(a[i].pass == b[i].pass);
    CHECK(to_json(a[i]) == to_json(b[i]));
  }
}

TEST_CASE("a corrupted expectation fails with a counterexample") {
  std::vector<CheckReport> out;
  verify::detail::run_check(out, "self-test", "ddp-star n=7", [](verify::detail::Check& check) {
    // deliberately corrupted fixture value: the true entry is 22
    check.expect("ddp-star n=7 p=2", 23, formulas::f_ddpstar_height(7, 2));
  });
  REQUIRE(out.size() == 1);
  CHECK_FALSE(out.front().pass);
  REQUIRE(out.front().counterexample.has_value());
  CHECK(out.front().counterexample->where == "ddp-star n=7 p=2");
  CHECK(out.front().counterexample->expected == "23");
  CHECK(out.front().counterexample->actual == "22");
  CHECK_FALSE(all_pass(out));
}

TEST_CASE("a throwing check is reported, not propagated") {
  std::vector<CheckReport> out;
  verify::detail::run_check(out, "self-test-throw", "-", [](verify::detail::Check&) {
    throw std::runtime_error("boom");
  });
  REQUIRE(out.size() == 1);
  CHECK_FALSE(out.front().pass);
}

TEST_CASE("run_all on the empty chain passes") {
  CHECK(all_pass(run_all(0)));
}

TEST_CASE("json serialization") {
  CheckReport r{"height-table", "ddp n<=7", true, std::nullopt};
  const auto j = to_json(r);
  CHECK(j.at("check") == "height-table");
  CHECK(j.at("status") == "pass");
  CHECK_FALSE(j.contains("counterexample"));
}
