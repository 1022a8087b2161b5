#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goursat/analysis.hpp"
#include "helpers.hpp"

using namespace goursat;
using testutil::dv;

TEST_CASE("big growth vector is the constant ladder") {
  CHECK(big_growth_vector(5) == std::vector<int>{2, 3, 4, 5, 6, 7});
  CHECK(big_growth_vector(2) == std::vector<int>{2, 3, 4});
}

TEST_CASE("class report assembles every per-class quantity") {
  ClassReport rep = class_report(parse("GGSTSGS"));
  CHECK(rep.derived == dv({1, 1, 2, 2, 4, 4, 10}));
  CHECK(rep.degree.str() == "25");
  CHECK(rep.codim == 4);
  CHECK(rep.sgrv.length() == rep.degree);
  CHECK(rep.big_growth == big_growth_vector(7));
  CHECK(std::get<ParamProfile>(rep.params).s == 2);

  ClassReport gg = class_report(parse("GG"));
  CHECK(gg.derived == dv({1, 1}));
  CHECK(gg.degree.str() == "3");
  CHECK(gg.codim == 0);
  CHECK(std::get<GenericMarker>(gg.params).r == 2);

  // GGS^10: degree F_14 = 377
  ClassReport fib = class_report(parse("GGSSSSSSSSSS"));
  CHECK(fib.degree.str() == "377");
  CHECK(fib.codim == 10);
}

TEST_CASE("equivalence verification sweeps") {
  EquivalenceSummary s = verify_equivalence(8);
  CHECK(s.r_max == 8);
  CHECK(s.classes_per_length ==
        std::vector<std::uint64_t>{1, 2, 5, 13, 34, 89, 233});
  CHECK(s.total == 377);
  CHECK(s.divergences == 0);
  CHECK(s.first_divergence.empty());

  EquivalenceSummary tiny = verify_equivalence(2);
  CHECK(tiny.total == 1);
  CHECK(tiny.divergences == 0);
}

TEST_CASE("parallel sweeps agree with the serial ones") {
  EquivalenceSummary serial = verify_equivalence(9, 1);
  EquivalenceSummary parallel = verify_equivalence(9, 4);
  CHECK(serial.total == parallel.total);
  CHECK(serial.classes_per_length == parallel.classes_per_length);
  CHECK(serial.divergences == parallel.divergences);

  SpectrumReport s1 = degree_spectrum(8, 1);
  SpectrumReport s3 = degree_spectrum(8, 3);
  CHECK(s1.realized == s3.realized);
  CHECK(s1.missing == s3.missing);
  CHECK(s1.classes == s3.classes);

  ExtremalReport e1 = extremal_classes(8, 1);
  ExtremalReport e4 = extremal_classes(8, 4);
  CHECK(e1.min_classes == e4.min_classes);
  CHECK(e1.max_classes == e4.max_classes);
  CHECK(e1.min_count == e4.min_count);
  CHECK(e1.max_count == e4.max_count);
}

TEST_CASE("degree spectrum of small lengths") {
  SpectrumReport r3 = degree_spectrum(3);
  CHECK(r3.classes == 2);
  CHECK(r3.min_degree.str() == "4");
  CHECK(r3.max_degree.str() == "5");
  REQUIRE(r3.realized.size() == 2);
  CHECK(r3.missing.empty());
  CHECK(r3.missing_total.is_zero());

  for (int r = 2; r <= 5; ++r) {
    CAPTURE(r);
    CHECK(degree_spectrum(r).missing_total.is_zero());
  }
}

TEST_CASE("degree spectrum gap at length 6") {
  SpectrumReport s = degree_spectrum(6);
  CHECK(s.classes == 34);
  CHECK(s.min_degree.str() == "7");
  CHECK(s.max_degree.str() == "21");
  REQUIRE(s.missing.size() == 1);
  CHECK(s.missing[0].str() == "20");
  CHECK(s.missing_total.str() == "1");
  CHECK(!s.missing_truncated);
  CHECK(s.realized.size() == 14);
}

TEST_CASE("missing list respects the cap") {
  // length 7 misses exactly {32, 33}
  SpectrumReport full = degree_spectrum(7);
  REQUIRE(full.missing.size() == 2);
  CHECK(full.missing[0].str() == "32");
  CHECK(full.missing[1].str() == "33");
  CHECK(full.missing_total.str() == "2");

  SpectrumReport capped = degree_spectrum(7, 1, 1);
  REQUIRE(capped.missing.size() == 1);
  CHECK(capped.missing[0].str() == "32");
  CHECK(capped.missing_truncated);
  CHECK(capped.missing_total.str() == "2");
}

TEST_CASE("derived vectors are pairwise distinct per length") {
  for (int r = 2; r <= 9; ++r) {
    DistinctnessReport rep = distinctness(r);
    CAPTURE(r);
    CHECK(rep.all_distinct);
    CHECK(rep.collisions.empty());
    CHECK(rep.classes == count_admissible(r).to_uint64());
  }
}

TEST_CASE("extremal classes") {
  ExtremalReport r5 = extremal_classes(5);
  CHECK(r5.min_degree.str() == "6");
  CHECK(r5.max_degree.str() == "13");
  CHECK(r5.min_classes == std::vector<std::string>{"GGGGG"});
  CHECK(r5.max_classes == std::vector<std::string>{"GGSSS"});
  CHECK(r5.min_count == 1);
  CHECK(r5.max_count == 1);

  ExtremalReport r2 = extremal_classes(2);
  CHECK(r2.min_degree.str() == "3");
  CHECK(r2.max_degree.str() == "3");
  CHECK(r2.min_classes == std::vector<std::string>{"GG"});
  CHECK(r2.max_classes == std::vector<std::string>{"GG"});
}

TEST_CASE("spectrum bounds are sharp in every length") {
  for (int r = 2; r <= 10; ++r) {
    SpectrumReport s = degree_spectrum(r);
    CAPTURE(r);
    CHECK(s.min_degree == Natural{static_cast<std::uint64_t>(r) + 1});
    CHECK(s.max_degree == fibonacci(r + 2));
    CHECK(s.classes == count_admissible(r).to_uint64());
    // realized values stay inside the interval and are strictly increasing
    for (std::size_t i = 1; i < s.realized.size(); ++i) {
      CHECK(s.realized[i - 1] < s.realized[i]);
    }
  }
}

TEST_CASE("class reports satisfy their cheap invariants") {
  for (int r = 2; r <= 7; ++r) {
    for_each_admissible(r, [&](const std::vector<Letter>& word) {
      ClassReport rep = class_report(ClassCode(word));
      CHECK(rep.degree == rep.sgrv.length());
      CHECK(rep.codim <= r - 2);  // the first two letters are always G
      CHECK(rep.big_growth.size() == static_cast<std::size_t>(r) + 1);
    });
  }
}

TEST_CASE("analysis rejects r below 2") {
  CHECK_THROWS_AS(verify_equivalence(1), std::invalid_argument);
  CHECK_THROWS_AS(degree_spectrum(0), std::invalid_argument);
  CHECK_THROWS_AS(distinctness(1), std::invalid_argument);
  CHECK_THROWS_AS(extremal_classes(-1), std::invalid_argument);
}
