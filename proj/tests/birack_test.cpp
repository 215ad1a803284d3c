#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bikei/birack.hpp"
#include "bikei/column_group.hpp"
#include "bikei/errors.hpp"
#include "bikei/matrix_io.hpp"
#include "bikei/permutation.hpp"
#include "bikei/tsr.hpp"
#include "oracles.hpp"

using namespace bikei;

namespace {

FiniteBirack fox() { return make_tsr({3, 2, 2, 1}); }

BirackMatrix z4_matrix() {
  return {4,
          {{3, 1, 3, 1}, {4, 2, 4, 2}, {1, 3, 1, 3}, {2, 4, 2, 4}},
          {{3, 3, 3, 3}, {2, 2, 2, 2}, {1, 1, 1, 1}, {4, 4, 4, 4}}};
}

// Every valid (t, s, r) birack with n <= limit.
std::vector<FiniteBirack> tsr_family(std::int64_t limit) {
  std::vector<FiniteBirack> out;
  for (std::int64_t n = 1; n <= limit; ++n)
    for (const auto& p : oracle::valid_tsr(n)) out.push_back(make_tsr(p));
  return out;
}

}  // namespace

TEST_CASE("permutation helpers") {
  CHECK(is_permutation(Permutation{2, 0, 1}));
  CHECK_FALSE(is_permutation(Permutation{0, 0, 1}));
  CHECK_FALSE(is_permutation(Permutation{0, 3, 1}));
  CHECK(is_involution(Permutation{1, 0, 2}));
  CHECK_FALSE(is_involution(Permutation{1, 2, 0}));
  CHECK(compose(Permutation{1, 2, 0}, Permutation{1, 0, 2}) == Permutation{2, 1, 0});
  CHECK(inverse(Permutation{1, 2, 0}) == Permutation{2, 0, 1});
  CHECK(exponent(Permutation{1, 0, 3, 4, 2}) == 6);
  CHECK(exponent(identity_permutation(4)) == 1);
  auto lengths = cycle_lengths(Permutation{1, 0, 3, 4, 2});
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<int>{2, 3});
}

TEST_CASE("from_matrix reads the Z_4 example and spot-checks U(1,2)") {
  const auto b = from_matrix(z4_matrix());
  // U(1,2) = 1 encodes B_1(x_2, x_1) = x_1: 2*2 + 1 = 5 = 1 mod 4.
  CHECK(b.first(1, 0) == 0);
  CHECK(b == make_tsr({4, 1, 2, 3}));
  CHECK(verify_axioms(b).all_passed());
}

TEST_CASE("from_matrix rejects bad tables") {
  BirackMatrix m{2, {{1, 1}, {1, 2}}, {{1, 1}, {2, 2}}};
  CHECK_THROWS_AS(from_matrix(m), InputError);  // U column 1 is constant
  m = {2, {{1, 2}, {2, 3}}, {{1, 1}, {2, 2}}};
  CHECK_THROWS_AS(from_matrix(m), InputError);  // entry 3 out of range
  m = {2, {{1, 2}}, {{1, 1}, {2, 2}}};
  CHECK_THROWS_AS(from_matrix(m), InputError);  // wrong shape
  m = {2, {{1, 2}, {2, 1}}, {{1, 2}, {1, 2}}};
  CHECK_THROWS_WITH_AS(from_matrix(m), doctest::Contains("of L"), InputError);
}

TEST_CASE("make_tsr reproduces the printed Z_4 matrix") {
  CHECK(to_matrix(make_tsr({4, 1, 2, 3})) == z4_matrix());
  CHECK(format_matrix(z4_matrix()) ==
        "4\n3 1 3 1 3 3 3 3\n4 2 4 2 2 2 2 2\n1 3 1 3 1 1 1 1\n2 4 2 4 4 4 4 4\n");
}

TEST_CASE("matrix text round trip and errors") {
  const std::string text = "# Z_4 example\n4\n3 1 3 1 3 3 3 3\n\n4 2 4 2 2 2 2 2\n"
                           "1 3 1 3 1 1 1 1\n2 4 2 4 4 4 4 4\n";
  CHECK(parse_matrix_text(text) == z4_matrix());
  CHECK(parse_matrix_text(format_matrix(z4_matrix())) == z4_matrix());
  CHECK_THROWS_AS(parse_matrix_text(""), InputError);
  CHECK_THROWS_AS(parse_matrix_text("2\n1 2 1 1\n"), InputError);
  CHECK_THROWS_AS(parse_matrix_text("2\n1 2 1 x\n2 1 2 2\n"), InputError);
  CHECK_THROWS_AS(parse_matrix_text("2\n1 2 1 1 1\n2 1 2 2\n"), InputError);
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/birack.txt"), InputError);
}

TEST_CASE("to_matrix and from_matrix are inverse") {
  for (const auto& b : tsr_family(7)) {
    CHECK(from_matrix(to_matrix(b)) == b);
    const auto m = to_matrix(b);
    CHECK(to_matrix(from_matrix(m)) == m);
  }
}

TEST_CASE("constant action biracks") {
  const auto trivial = make_constant_action({0, 1}, {0, 1});
  CHECK(verify_axioms(trivial).all_passed());
  CHECK(classify(trivial).is_kei);

  const auto swap = make_constant_action({1, 0}, {0, 1});
  CHECK(verify_axioms(swap).all_passed());
  CHECK(is_involutory(swap));
  const auto km = kink_map_and_rank(swap);
  CHECK(km.pi == Permutation{1, 0});
  CHECK(km.rank == 2);
  const auto flags = classify(swap);
  CHECK(flags.is_birack);
  CHECK(flags.is_involutory);
  CHECK_FALSE(flags.is_bikei);
  CHECK_FALSE(flags.is_biquandle);
}

TEST_CASE("non-commuting constant action is rejected") {
  const Permutation sigma{1, 0, 2}, rho{0, 2, 1};
  CHECK_THROWS_AS(make_constant_action(sigma, rho), InputError);
  // The same tables built raw fail Yang-Baxter on some triple.
  std::vector<Element> first(9), second(9);
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) {
      first[x * 3 + y] = sigma[y];
      second[x * 3 + y] = rho[x];
    }
  const auto raw = FiniteBirack::from_tables(3, first, second);
  const auto& yb = verify_axioms(raw)[Axiom::yang_baxter];
  CHECK_FALSE(yb.passed);
  REQUIRE(yb.witness.size() == 3);
  CHECK_FALSE(oracle::is_birack(oracle::pair_map_of(raw)));
  CHECK_THROWS_AS(make_constant_action({0, 0}, {0, 1}), InputError);
  CHECK_THROWS_AS(make_constant_action({0, 1}, {0}), InputError);
}

TEST_CASE("make_tsr parameter validation") {
  CHECK_NOTHROW(make_tsr({3, 2, 2, 1}));
  CHECK_NOTHROW(make_tsr({11, 6, 5, 3}));
  CHECK_THROWS_AS(make_tsr({4, 1, 1, 1}), InputError);  // s^2 = 1, (1 - tr)s = 0
  CHECK_THROWS_AS(make_tsr({4, 2, 0, 1}), InputError);  // t not a unit
  CHECK_THROWS_AS(make_tsr({4, 1, 0, 2}), InputError);  // r not a unit
  CHECK_THROWS_AS(make_tsr({0, 1, 0, 1}), InputError);
  CHECK_THROWS_AS(make_tsr({5000, 1, 0, 1}), ResourceError);
  CHECK(normalize_tsr({3, -1, 5, 4}) == TsrParams{3, 2, 2, 1});
}

TEST_CASE("Fox kei labels: all three colors agree or all are distinct") {
  const auto x = fox();
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) {
      const Element c = x.first(a, b);
      const bool agree = a == b && b == c;
      const bool distinct = a != b && b != c && a != c;
      CHECK((agree || distinct));
      CHECK(x.second(a, b) == a);
    }
}

TEST_CASE("residue naming puts n last") {
  CHECK(residue_to_element(1, 4) == 0);
  CHECK(residue_to_element(0, 4) == 3);
  CHECK(residue_to_element(-1, 4) == 2);
  for (Element e = 0; e < 4; ++e) CHECK(residue_to_element(element_to_residue(e, 4), 4) == e);
}

TEST_CASE("verify_axioms on the examples") {
  CHECK(verify_axioms(make_tsr({4, 1, 2, 3})).all_passed());
  CHECK(verify_axioms(make_tsr({11, 6, 5, 3})).all_passed());
  CHECK(verify_axioms(fox()).all_passed());
  const auto report = verify_axioms(fox());
  CHECK(report.results.size() == 8);
}

TEST_CASE("verify_axioms witnesses a non-bijective map") {
  // B(x, y) = (0, 0) on two elements.
  const auto b = FiniteBirack::from_tables(2, {0, 0, 0, 0}, {0, 0, 0, 0});
  const auto report = verify_axioms(b);
  CHECK_FALSE(report.all_passed());
  const auto& bij = report[Axiom::pair_bijective];
  CHECK_FALSE(bij.passed);
  CHECK(bij.witness == std::vector<Element>{0, 0});
  CHECK(bij.detail.find("(1,1)") != std::string::npos);
  CHECK_FALSE(report[Axiom::diagonal_sideways_first].evaluated);
  CHECK_FALSE(b.has_sideways());
  CHECK_THROWS_AS(b.sideways(0, 0), std::logic_error);
}

TEST_CASE("is_involutory examples") {
  CHECK(is_involutory(make_tsr({4, 1, 2, 3})));
  CHECK_FALSE(is_involutory(make_tsr({11, 6, 5, 3})));
  CHECK(is_involutory(fox()));
}

TEST_CASE("tsr_involutory_criterion examples and specializations") {
  CHECK(tsr_involutory_criterion({4, 1, 2, 3}));
  CHECK_FALSE(tsr_involutory_criterion({11, 6, 5, 3}));
  CHECK(tsr_involutory_criterion({3, 2, 2, 1}));
  CHECK_THROWS_AS(tsr_involutory_criterion({4, 1, 1, 1}), InputError);
  for (std::int64_t n = 1; n <= 9; ++n)
    for (const auto& p : oracle::valid_tsr(n)) {
      const auto m = [n](std::int64_t v) { return ((v % n) + n) % n; };
      if (p.r == m(1)) {  // (t,s)-racks: t^2 = 1 and (t + 1)s = 0
        CHECK(tsr_involutory_criterion(p) == (m(p.t * p.t) == m(1) && m((p.t + 1) * p.s) == 0));
      }
      if (p.s == m(1 - p.t * p.r)) {  // Alexander biquandles: (1 + t)(1 - r) = 0
        CHECK(tsr_involutory_criterion(p) ==
              (m(p.t * p.t) == m(1) && m(p.r * p.r) == m(1) && m((1 + p.t) * (1 - p.r)) == 0));
      }
      if (p.r == m(1) && p.s == m(1 - p.t)) {  // Alexander quandles
        CHECK(tsr_involutory_criterion(p) == (m(p.t * p.t) == m(1)));
      }
    }
}

TEST_CASE("Alexander biquandle with (1 - t)(1 - r) = 0 that is not involutory") {
  // t = 1, r = 2, s = 1 - tr = 2 over Z_3: rank 1, t^2 = r^2 = 1 and
  // (1 - t)(1 - r) = 0, yet (1 - r)s = 2 and the tables confirm B is not involutory.
  const TsrParams p{3, 1, 2, 2};
  const auto x = make_tsr(p);
  CHECK(x.rank() == 1);
  CHECK_FALSE(tsr_involutory_criterion(p));
  CHECK_FALSE(is_involutory(x));
  CHECK_FALSE(oracle::is_involutory(oracle::pair_map_of(x)));
}

TEST_CASE("involutory criterion agrees with the tables for n <= 6") {
  for (std::int64_t n = 1; n <= 6; ++n)
    for (const auto& p : oracle::valid_tsr(n)) {
      const auto x = make_tsr(p);
      CHECK(tsr_involutory_criterion(p) == is_involutory(x));
      CHECK(is_involutory(x) == oracle::is_involutory(oracle::pair_map_of(x)));
    }
}

TEST_CASE("classify examples") {
  const auto f = classify(fox());
  CHECK(f.is_kei);
  CHECK(f.is_bikei);
  CHECK(f.is_quandle);
  CHECK(f.is_involutory);
  CHECK(f.is_rack);

  const auto v = classify(make_tsr({11, 6, 5, 3}));
  CHECK(v.is_birack);
  CHECK(v.is_biquandle);
  CHECK_FALSE(v.is_involutory);
  CHECK_FALSE(v.is_rack);
  CHECK_FALSE(v.is_bikei);

  const auto z4 = classify(make_tsr({4, 1, 2, 3}));
  CHECK(z4.is_bikei);
  CHECK_FALSE(z4.is_rack);

  CHECK(classify(make_constant_action({0, 1}, {0, 1})).is_kei);
  CHECK_FALSE(classify(FiniteBirack::from_tables(2, {0, 0, 0, 0}, {0, 0, 0, 0})).is_birack);
}

TEST_CASE("classification flags are consistent") {
  for (const auto& x : tsr_family(8)) {
    const auto c = classify(x);
    CHECK(c.is_birack);
    CHECK(c.is_kei == (c.is_bikei && c.is_quandle));
    CHECK(c.is_bikei == (c.is_involutory && c.is_biquandle));
    CHECK(c.is_quandle == (c.is_rack && c.is_biquandle));
    CHECK(c.is_biquandle == (x.rank() == 1));
    bool rack = true;
    for (Element a = 0; a < x.size(); ++a)
      for (Element b = 0; b < x.size(); ++b) rack &= x.second(a, b) == a;
    CHECK(c.is_rack == rack);
  }
}

TEST_CASE("kink map and rank examples") {
  auto km = kink_map_and_rank(fox());
  CHECK(km.pi == identity_permutation(3));
  CHECK(km.rank == 1);
  km = kink_map_and_rank(make_tsr({4, 1, 2, 3}));
  CHECK(km.pi == identity_permutation(4));
  CHECK(km.rank == 1);
  km = kink_map_and_rank(make_tsr({7, 1, 0, 3}));  // pi(x) = 3x, order 6
  CHECK(km.rank == 6);
  CHECK(km.rank == tsr_rank({7, 1, 0, 3}));
}

TEST_CASE("kink map matches (tr + s)x and the loop search for all small tsr biracks") {
  for (std::int64_t n = 1; n <= 10; ++n)
    for (const auto& p : oracle::valid_tsr(n)) {
      const auto x = make_tsr(p);
      const auto km = kink_map_and_rank(x);
      CHECK(km.pi == oracle::kink_map_by_search(x));
      CHECK(km.rank == tsr_rank(p));
      CHECK(static_cast<std::uint64_t>(km.rank) == exponent(km.pi));
      for (Element e = 0; e < n; ++e)
        CHECK(km.pi[e] == residue_to_element((p.t * p.r + p.s) * element_to_residue(e, n), n));
    }
}

TEST_CASE("sideways map of the Fox kei has the closed form") {
  const auto x = fox();
  const auto s = sideways_map(x);
  for (std::int64_t u = 0; u < 3; ++u)
    for (std::int64_t v = 0; v < 3; ++v) {
      const Element eu = residue_to_element(u, 3), ev = residue_to_element(v, 3);
      const Pair got = s[eu * 3 + ev];
      CHECK(got.first == ev);
      CHECK(got.second == residue_to_element(2 * u + 2 * v, 3));
    }
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) CHECK(x.sideways(x.first(a, b), a) == Pair{x.second(a, b), b});
}

TEST_CASE("sideways map closed form for all tsr biracks") {
  for (std::int64_t n = 1; n <= 8; ++n)
    for (const auto& p : oracle::valid_tsr(n)) {
      const auto x = make_tsr(p);
      std::int64_t tinv = 1;
      while (mod(tinv * p.t, n) != mod(1, n)) ++tinv;
      for (std::int64_t u = 0; u < n; ++u)
        for (std::int64_t v = 0; v < n; ++v) {
          const Pair got = x.sideways(residue_to_element(u, n), residue_to_element(v, n));
          CHECK(got.first == residue_to_element(p.r * v, n));
          CHECK(got.second == residue_to_element(tinv * u - tinv * p.s * v, n));
        }
    }
}

TEST_CASE("sideways map equals the inverse for involutory biracks") {
  for (const auto& x : tsr_family(8)) {
    if (!is_involutory(x)) continue;
    for (Element a = 0; a < x.size(); ++a)
      for (Element b = 0; b < x.size(); ++b) CHECK(x.sideways(a, b) == x.apply_inverse(a, b));
  }
  const auto one = make_tsr({1, 0, 0, 0});
  CHECK(one.sideways(0, 0) == Pair{0, 0});
}

TEST_CASE("axioms hold pointwise for verified biracks") {
  for (const auto& x : tsr_family(6)) {
    REQUIRE(verify_axioms(x).all_passed());
    CHECK(oracle::is_birack(oracle::pair_map_of(x)));
    for (Element a = 0; a < x.size(); ++a)
      for (Element b = 0; b < x.size(); ++b)
        CHECK(x.sideways(x.first(a, b), a) == Pair{x.second(a, b), b});
  }
}

TEST_CASE("columns of involutory biracks are involutions") {
  for (const auto& x : tsr_family(9)) {
    if (!is_involutory(x)) continue;
    for (Element a = 0; a < x.size(); ++a) {
      CHECK(is_involution(x.upper_column(a)));
      CHECK(is_involution(x.lower_column(a)));
    }
  }
}

TEST_CASE("subbirack closure examples") {
  const auto x = fox();
  CHECK(subbirack_closure(x, {0}) == ElementSet{0});
  CHECK(subbirack_closure(x, {0, 1}) == ElementSet{0, 1, 2});
  CHECK(subbirack_closure(x, {0, 1, 2}) == ElementSet{0, 1, 2});
  CHECK(subbirack_closure(x, {}).empty());
}

TEST_CASE("subbirack closure is idempotent, monotone and matches the oracle") {
  std::mt19937 rng(11);
  for (const auto& x : tsr_family(8)) {
    const int n = x.size();
    for (int trial = 0; trial < 6; ++trial) {
      ElementSet small, big;
      for (Element e = 0; e < n; ++e) {
        const int r = static_cast<int>(rng() % 4);
        if (r == 0) small.push_back(e);
        if (r <= 1) big.push_back(e);
      }
      const auto cs = subbirack_closure(x, small), cb = subbirack_closure(x, big);
      CHECK(subbirack_closure(x, cs) == cs);
      CHECK(std::includes(cb.begin(), cb.end(), cs.begin(), cs.end()));
      const auto o = oracle::closure(x, {small.begin(), small.end()});
      CHECK(cs == ElementSet(o.begin(), o.end()));
    }
  }
}

TEST_CASE("column group examples") {
  const auto x = fox();
  const auto all = column_group(x, {0, 1, 2});
  CHECK(all.order == 6);
  CHECK(all.generators.size() == 3);
  CHECK(column_group(x, {0}).order == 2);
  CHECK(column_group(x, {}).order == 1);
  const auto trivial = make_constant_action({0, 1, 2}, {0, 1, 2});
  CHECK(column_group(trivial, {0, 2}).order == 1);
  CHECK(column_group(trivial, {0, 2}).generators.empty());
  CHECK_THROWS_AS(column_group(make_tsr({11, 6, 5, 3}), {0}), ResourceError);
}

TEST_CASE("column group order divides n! and matches the oracle") {
  std::mt19937 rng(5);
  for (const auto& x : tsr_family(7)) {
    const int n = x.size();
    std::uint64_t factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    for (int trial = 0; trial < 4; ++trial) {
      ElementSet subset;
      for (Element e = 0; e < n; ++e)
        if (rng() % 2) subset.push_back(e);
      const auto cg = column_group(x, subset);
      CHECK(factorial % cg.order == 0);
      CHECK(cg.order == oracle::column_group_order(x, {subset.begin(), subset.end()}));
      if (is_involutory(x))
        for (const auto& g : cg.generators) CHECK(is_involution(g));
    }
  }
}
