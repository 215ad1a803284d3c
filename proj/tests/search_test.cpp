#include <doctest.h>

#include <algorithm>

#include "bikei/errors.hpp"
#include "bikei/search.hpp"
#include "oracles.hpp"

using namespace bikei;

namespace {

bool lexicographic_less(const FiniteBirack& a, const FiniteBirack& b) {
  for (std::size_t i = 0; i < a.first_table().size(); ++i) {
    const Pair pa{a.first_table()[i], a.second_table()[i]};
    const Pair pb{b.first_table()[i], b.second_table()[i]};
    if (pa != pb) return pa < pb;
  }
  return false;
}

bool oracle_rack(const FiniteBirack& b) {
  for (Element x = 0; x < b.size(); ++x)
    for (Element y = 0; y < b.size(); ++y)
      if (b.second(x, y) != x) return false;
  return true;
}

bool oracle_rank_one(const FiniteBirack& b) {
  const auto pi = oracle::kink_map_by_search(b);
  for (Element x = 0; x < b.size(); ++x)
    if (pi[x] != x) return false;
  return true;
}

bool oracle_column_involutions(const FiniteBirack& b) {
  const int n = b.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (b.first(x, b.first(x, y)) != y) return false;
      if (b.second(b.second(y, x), x) != y) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("predicate parsing") {
  const auto p = SearchPredicate::parse("involutory");
  CHECK(p.require_involutory);
  CHECK(p.require_yang_baxter);
  CHECK(p.require_sideways);
  CHECK(p.require_diagonal_bijectivity);
  CHECK_FALSE(p.require_rack);
  const auto k = SearchPredicate::parse("kei");
  CHECK((k.require_rack && k.require_rank_one && k.require_involutory));
  const auto atoms = SearchPredicate::parse("cols, yb");
  CHECK(atoms.require_column_involutions);
  CHECK(atoms.require_yang_baxter);
  CHECK_FALSE(atoms.require_sideways);
  CHECK(atoms.any());
  CHECK_FALSE(SearchPredicate{}.any());
  CHECK_THROWS_AS(SearchPredicate::parse("bogus"), InputError);
  CHECK_THROWS_AS(SearchPredicate::parse(""), InputError);
  CHECK_FALSE(SearchPredicate::birack().describe().empty());
}

TEST_CASE("a singleton carries exactly one birack") {
  const auto r = enumerate_biracks(1, SearchPredicate::birack());
  CHECK(r.structures.size() == 1);
}

TEST_CASE("involutory biracks of order 2 match the 256-candidate filter") {
  const auto found = enumerate_biracks(2, SearchPredicate::parse("involutory")).structures;
  std::vector<FiniteBirack> expected;
  for (const auto& b : oracle::all_maps_on_two()) {
    const auto m = oracle::pair_map_of(b);
    if (oracle::is_birack(m) && oracle::is_involutory(m)) expected.push_back(b);
  }
  CHECK(found == expected);
  CHECK_FALSE(found.empty());
  for (const auto& b : found) {
    CHECK(verify_axioms(b).all_passed());
    CHECK(is_involutory(b));
  }
}

TEST_CASE("every preset on order 2 matches an independent filter") {
  const auto candidates = oracle::all_maps_on_two();
  struct Case {
    const char* spec;
    bool (*keep)(const FiniteBirack&);
  };
  const Case cases[] = {
      {"birack", [](const FiniteBirack& b) { return oracle::is_birack(oracle::pair_map_of(b)); }},
      {"colinv",
       [](const FiniteBirack& b) {
         return oracle::is_birack(oracle::pair_map_of(b)) && oracle_column_involutions(b);
       }},
      {"biquandle",
       [](const FiniteBirack& b) {
         return oracle::is_birack(oracle::pair_map_of(b)) && oracle_rank_one(b);
       }},
      {"bikei",
       [](const FiniteBirack& b) {
         const auto m = oracle::pair_map_of(b);
         return oracle::is_birack(m) && oracle::is_involutory(m) && oracle_rank_one(b);
       }},
      {"rack",
       [](const FiniteBirack& b) {
         return oracle::is_birack(oracle::pair_map_of(b)) && oracle_rack(b);
       }},
      {"quandle",
       [](const FiniteBirack& b) {
         return oracle::is_birack(oracle::pair_map_of(b)) && oracle_rack(b) && oracle_rank_one(b);
       }},
      {"kei",
       [](const FiniteBirack& b) {
         const auto m = oracle::pair_map_of(b);
         return oracle::is_birack(m) && oracle::is_involutory(m) && oracle_rack(b) &&
                oracle_rank_one(b);
       }},
      {"cols,yb",
       [](const FiniteBirack& b) {
         return oracle_column_involutions(b) && oracle::yang_baxter(oracle::pair_map_of(b));
       }},
  };
  for (const auto& c : cases) {
    CAPTURE(c.spec);
    std::vector<FiniteBirack> expected;
    for (const auto& b : candidates)
      if (c.keep(b)) expected.push_back(b);
    CHECK(enumerate_biracks(2, SearchPredicate::parse(c.spec)).structures == expected);
  }
}

TEST_CASE("order 3 enumeration is sound, sorted and duplicate-free") {
  const auto all = enumerate_biracks(3, SearchPredicate::birack()).structures;
  CHECK_FALSE(all.empty());
  CHECK(std::is_sorted(all.begin(), all.end(), lexicographic_less));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  std::vector<FiniteBirack> involutory_subset;
  for (const auto& b : all) {
    CHECK(verify_axioms(b).all_passed());
    CHECK(oracle::is_birack(oracle::pair_map_of(b)));
    if (oracle::is_involutory(oracle::pair_map_of(b))) involutory_subset.push_back(b);
  }
  const auto inv = enumerate_biracks(3, SearchPredicate::parse("involutory")).structures;
  CHECK(inv == involutory_subset);
  for (const auto& b : inv) CHECK(is_involutory(b));
  CHECK(std::find(all.begin(), all.end(), make_tsr({3, 2, 2, 1})) != all.end());
  CHECK(enumerate_biracks(3, SearchPredicate::birack()).structures == all);
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_biracks(5, SearchPredicate::birack()), ResourceError);
  CHECK_THROWS_AS(enumerate_biracks(3, SearchPredicate::birack(), 10), ResourceError);
  CHECK_THROWS_AS(enumerate_biracks(2, SearchPredicate{}), InputError);
}

TEST_CASE("search_tsr listings") {
  auto has = [](const std::vector<TsrCandidate>& list, TsrParams p) {
    return std::find_if(list.begin(), list.end(),
                        [&](const TsrCandidate& c) { return c.params == p; });
  };
  const auto four = search_tsr(4);
  auto it = has(four, {4, 1, 2, 3});
  REQUIRE(it != four.end());
  CHECK(it->involutory);
  const auto eleven = search_tsr(11);
  it = has(eleven, {11, 6, 5, 3});
  REQUIRE(it != eleven.end());
  CHECK_FALSE(it->involutory);
  CHECK(it->rank == 1);
  const auto three = search_tsr(3);
  it = has(three, {3, 2, 2, 1});
  REQUIRE(it != three.end());
  CHECK(it->involutory);
  CHECK_THROWS_AS(search_tsr(65), ResourceError);
  CHECK_THROWS_AS(search_tsr(0), InputError);
}

TEST_CASE("search_tsr agrees with the tables") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    const auto list = search_tsr(n);
    const auto expected = oracle::valid_tsr(n);
    REQUIRE(list.size() == expected.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      CHECK(list[i].params == expected[i]);
      const auto x = make_tsr(list[i].params);
      CHECK(list[i].involutory == is_involutory(x));
      CHECK(list[i].rank == x.rank());
    }
  }
}

TEST_CASE("column involutions versus involutory biracks") {
  for (int n = 1; n <= 4; ++n) {
    const auto report = column_involution_converse(n);
    CAPTURE(n);
    CHECK(report.witnesses.empty() == (n <= 3));
    CHECK(report.inclusion_holds);
    CHECK(report.column_involutive >= report.involutory);
    CHECK(report.column_involutive - report.involutory == report.witnesses.size());
    for (const auto& w : report.witnesses) {
      CHECK(verify_axioms(w).all_passed());
      CHECK(oracle_column_involutions(w));
      CHECK_FALSE(oracle::is_involutory(oracle::pair_map_of(w)));
    }
  }
}

TEST_CASE("order 4 has biracks with involutive columns that are not involutory") {
  const auto report = column_involution_converse(4);
  CHECK(report.involutory == 1188);
  CHECK(report.column_involutive == 1200);
  REQUIRE(report.witnesses.size() == 12);
  const auto& w = report.witnesses.front();
  const auto m = oracle::pair_map_of(w);
  CHECK(oracle::is_birack(m));
  CHECK(oracle_column_involutions(w));
  // find the pair where (tau o B)^2 or S o B differs from the identity
  bool tau_square_fails = false, sideways_fails = false;
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) {
      const Pair p = w.apply(x, y);
      const Pair q = w.apply(p.second, p.first);
      tau_square_fails |= q != Pair{y, x};
      sideways_fails |= w.sideways(p.first, p.second) != Pair{x, y};
    }
  CHECK((tau_square_fails || sideways_fails));
}
