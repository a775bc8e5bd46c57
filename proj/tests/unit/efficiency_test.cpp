#include "coarse/cost_expression.hpp"
#include "coarse/efficiency.hpp"
#include "coarse/errors.hpp"

#include "../support/generators.hpp"

#include <doctest.h>

#include <set>

using namespace coarse;


namespace {

/// Every vector of counts c_e (e = 2..budget+1) with sum c_e (e-1) <= budget.
std::vector<std::vector<std::size_t>> vectorsByCounts(std::size_t budget) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, std::size_t e, std::size_t left) -> void {
    if (e > budget + 1) {
      if (!current.empty()) out.push_back(current);
      return;
    }
    const std::size_t before = current.size();
    for (std::size_t count = 0; count * (e - 1) <= left; ++count) {
      self(self, e + 1, left - count * (e - 1));
      current.push_back(e);
    }
    current.resize(before);
  };
  rec(rec, 2, budget);
  return out;
}

Rational exactCost(const std::vector<std::size_t>& v, const CostModel& kappa) {
  Rational total = 0;
  for (std::size_t e : v) total += kappa(e).rational();
  return total;
}

CostModel randomConvexTable(testgen::Rng& rng, std::size_t maxE) {
  std::map<std::size_t, Rational> t;
  Rational value = 0;
  Rational step = 0;
  for (std::size_t e = 2; e <= maxE; ++e) {
    step += static_cast<long long>(testgen::uniform(rng, 1, 4));
    value += step;
    t[e] = value;
  }
  return CostModel::table(t);
}

}  // namespace

TEST_SUITE("efficiency") {
  TEST_CASE("cost model kinds") {
    CHECK(CostModel::power(2)(1) == Cost(0LL));
    CHECK(CostModel::power(2)(3) == Cost(9LL));
    CHECK(CostModel::linear(Rational(1, 2))(3) == Cost(Rational(3, 2)));
    CHECK(CostModel::scaledCeilLog2(1)(5) == Cost(3LL));
    CHECK(CostModel::scaledCeilLog2(1)(4) == Cost(2LL));
    CHECK(CostModel::expression("e^2 - 1")(1) == Cost(0LL));
    CHECK(CostModel::expression("e^2 - 1")(3) == Cost(8LL));
    CHECK_FALSE(CostModel::power(Rational(1, 2))(4).exact());
    CHECK(CostModel::power(Rational(1, 2))(4) == Cost(2LL));
    CHECK_THROWS_AS(CostModel::power(2)(0), InputError);
    CHECK(CostModel::power(2).description() == "power:2");
  }

  TEST_CASE("cost tables") {
    const auto t = CostModel::table({{1, 5}, {2, 4}, {3, Rational(13, 2)}});
    CHECK(t(1) == Cost(0LL));
    CHECK(t(3).str() == "13/2");
    CHECK(t.maxCategories() == 3);
    CHECK_THROWS_AS(t(4), InputError);
    CHECK_THROWS_AS(CostModel::table({{3, 1}}), InputError);
    CHECK_THROWS_AS(CostModel::table({{2, 1}, {4, 2}}), InputError);
    CHECK_THROWS_AS(CostModel::table({{2, 3}, {3, 2}}), InputError);
    CHECK_THROWS_AS(CostModel::table({{2, -1}}), InputError);
    CHECK_THROWS_AS(requireNondecreasing(CostModel::expression("5 - e"), 4), InputError);
  }

  TEST_CASE("expressions") {
    CHECK(CostExpression::parse("2*e + 1").evaluate(3) == Cost(7LL));
    CHECK(CostExpression::parse("-e + 10").evaluate(3) == Cost(7LL));
    CHECK(CostExpression::parse("2^3^2").evaluate(2) == Cost(512LL));
    CHECK(CostExpression::parse("e/2").evaluate(3).str() == "3/2");
    CHECK(CostExpression::parse("ceillog2(e)").evaluate(9) == Cost(4LL));
    CHECK(CostExpression::parse("ceil(e/2)").evaluate(5) == Cost(3LL));
    CHECK(CostExpression::parse("floor(e/2)").evaluate(5) == Cost(2LL));
    CHECK(CostExpression::parse("log2(e)").evaluate(8) == Cost(3LL));
    CHECK(CostExpression::parse("sqrt(e)").evaluate(2) == Cost::approximate(1.4142135623730951));
    CHECK(CostExpression::parse("0.25 * e").evaluate(2).str() == "1/2");
    CHECK_THROWS_AS(CostExpression::parse("e +"), InputError);
    CHECK_THROWS_AS(CostExpression::parse("f(e)"), InputError);
    CHECK_THROWS_AS(CostExpression::parse("(e"), InputError);
    CHECK_THROWS_AS(CostExpression::parse("1/(e-2)").evaluate(2), InputError);
  }

  TEST_CASE("rational parsing and tolerance") {
    CHECK(parseRational("13/2") == Rational(13, 2));
    CHECK(parseRational("-2") == Rational(-2));
    CHECK(parseRational("0.25") == Rational(1, 4));
    CHECK_THROWS_AS(parseRational("abc"), InputError);
    CHECK_THROWS_AS(parseRational("1/0"), InputError);
    CHECK(Cost::approximate(1.0 + 1e-12) == Cost(1LL));
    CHECK(Cost::approximate(1.0 + 1e-6) > Cost(1LL));
    CHECK(ceilLog2(1) == 0);
    CHECK(ceilLog2(2) == 1);
    CHECK(ceilLog2(5) == 3);
    CHECK(ceilLog2(1ULL << 40) == 40);
  }

  TEST_CASE("set costs") {
    const auto kappa = CostModel::power(2);
    CHECK(vectorCost({{2, 2, 2}}, kappa) == Cost(12LL));
    CHECK(vectorCost({{3, 2}}, kappa) == Cost(13LL));
    CHECK(vectorCost({{1, 1, 4}}, kappa) == Cost(16LL));
  }

  TEST_CASE("efficiency relation") {
    CHECK((moreEfficient(8, Cost(12LL), 6, Cost(13LL)) == Efficiency::more));
    CHECK((moreEfficient(6, Cost(13LL), 8, Cost(12LL)) == Efficiency::less));
    CHECK((moreEfficient(8, Cost(12LL), 8, Cost(12LL)) == Efficiency::equal));
    CHECK((moreEfficient(8, Cost(13LL), 6, Cost(12LL)) == Efficiency::incomparable));
    CHECK((moreEfficient(8, Cost(12LL), 8, Cost(13LL)) == Efficiency::more));
  }

  TEST_CASE("binary condition") {
    const auto p2 = binaryCondition(CostModel::power(2), 12);
    CHECK(p2.holds);
    CHECK(p2.rows.size() == 10);
    const auto lin = binaryCondition(CostModel::linear(1), 12);
    CHECK_FALSE(lin.holds);
    CHECK(lin.firstFailure == 3);
    const auto lg = binaryCondition(CostModel::scaledCeilLog2(1), 12);
    CHECK_FALSE(lg.holds);
    CHECK(lg.firstFailure == 3);
    CHECK_THROWS_AS(binaryCondition(CostModel::linear(1), 2), InputError);
  }

  TEST_CASE("marginal profile") {
    const auto p = marginalProfile(CostModel::power(2), 5);
    CHECK(p.increments.size() == 4);
    CHECK(p.increments[0] == Cost(4LL));
    CHECK(p.increments[1] == Cost(5LL));
    CHECK(p.strictlyIncreasing);
    // kappa(1) = 0 makes the first step of a linear model the largest
    CHECK_FALSE(marginalProfile(CostModel::linear(1), 5).increasing);
    const auto flat = marginalProfile(CostModel::expression("e - 1"), 5);
    CHECK(flat.increasing);
    CHECK_FALSE(flat.strictlyIncreasing);
  }

  TEST_CASE("coarseness dominance") {
    CHECK(coarsenessDominates({{2, 2, 2}}, {{4}}));
    CHECK(coarsenessDominates({{2, 2, 3}}, {{3, 3}}));
    CHECK_FALSE(coarsenessDominates({{4}}, {{2, 2, 2}}));
    CHECK_FALSE(coarsenessDominates({{2, 3}}, {{2, 3}}));
    CHECK(coarsenessDominates({{1, 2, 2, 2}}, {{4, 1}}));
    CHECK_FALSE(coarsenessDominates({{1}}, {{2}}));
  }

  TEST_CASE("result one verdicts") {
    const auto pass = verifyResult1({{2, 2, 2}}, {{4}}, CostModel::power(2), 1000);
    CHECK((pass.status == VerdictStatus::pass));
    CHECK(pass.variant == "strictly-increasing");
    CHECK((pass.relation == Efficiency::more));
    CHECK(pass.v.cost == Cost(12LL));
    CHECK(pass.w.cost == Cost(16LL));

    const auto flat = CostModel::expression("e - 1");
    const auto weak = verifyResult1({{2, 2, 2}}, {{4}}, flat, 1000);
    CHECK((weak.status == VerdictStatus::pass));
    CHECK(weak.variant == "increasing");

    const auto saturated = verifyResult1({{2, 2, 2}}, {{4}}, flat, 4);
    CHECK((saturated.status == VerdictStatus::notApplicable));

    CHECK((verifyResult1({{2, 2}}, {{4}}, CostModel::power(2), 100).status == VerdictStatus::notApplicable));
    CHECK((verifyResult1({{4}}, {{2, 2, 2}}, CostModel::power(2), 100).status == VerdictStatus::notApplicable));
    const auto concave = CostModel::expression("sqrt(e)");
    CHECK((verifyResult1({{2, 2, 2}}, {{4}}, concave, 100).status == VerdictStatus::notApplicable));
  }

  TEST_CASE("result one holds on random dominated pairs") {
    testgen::Rng rng(41);
    const auto vectors = enumerateVectors(10);
    int checked = 0;
    for (int trial = 0; trial < 3000 && checked < 300; ++trial) {
      const auto& v = vectors[testgen::uniform(rng, 0, vectors.size() - 1)];
      const auto& w = vectors[testgen::uniform(rng, 0, vectors.size() - 1)];
      std::size_t bv = 0, bw = 0;
      for (std::size_t e : v.entries) bv += e - 1;
      for (std::size_t e : w.entries) bw += e - 1;
      if (bv != bw || !coarsenessDominates(v, w)) continue;
      const auto kappa = randomConvexTable(rng, 11);
      const auto r = verifyResult1(v, w, kappa, UINT64_MAX);
      CHECK((r.status == VerdictStatus::pass));
      ++checked;
    }
    CHECK(checked >= 100);
  }

  TEST_CASE("vector enumeration") {
    const auto byRecursion = enumerateVectors(7);
    const auto byCounts = vectorsByCounts(7);
    std::set<std::vector<std::size_t>> a, b;
    for (const auto& v : byRecursion) a.insert(v.entries);
    for (auto v : byCounts) {
      std::sort(v.begin(), v.end());
      b.insert(v);
    }
    CHECK(a.size() == byRecursion.size());
    CHECK(a == b);
    CHECK_THROWS_AS(enumerateVectors(kMaxFrontierBudget + 1), ResourceError);
  }

  TEST_CASE("frontier matches quadratic dominance filter") {
    testgen::Rng rng(42);
    std::vector<CostModel> models = {CostModel::power(2), CostModel::linear(1), CostModel::scaledCeilLog2(1),
                                     CostModel::power(3)};
    for (int i = 0; i < 8; ++i) models.push_back(randomConvexTable(rng, 10));
    for (const auto& kappa : models) {
      for (std::uint64_t m : {5ULL, 30ULL, 64ULL, 1000ULL}) {
        const std::size_t budget = 8;
        std::vector<std::tuple<Rational, std::uint64_t, std::vector<std::size_t>>> pts;
        for (auto v : vectorsByCounts(budget)) {
          std::sort(v.begin(), v.end());
          std::uint64_t prod = 1;
          for (std::size_t e : v) prod *= e;
          pts.emplace_back(exactCost(v, kappa), std::min(prod, m), v);
        }
        std::set<std::vector<std::size_t>> expected;
        for (const auto& [c, n, v] : pts) {
          bool dominated = false;
          for (const auto& [c2, n2, v2] : pts) {
            if (n2 >= n && c2 <= c && (n2 > n || c2 < c)) dominated = true;
          }
          if (!dominated) expected.insert(v);
        }
        const auto got = frontier(kappa, m, budget);
        std::set<std::vector<std::size_t>> gotSet;
        for (const auto& p : got) gotSet.insert(p.vector.entries);
        CHECK(gotSet == expected);
        for (std::size_t i = 0; i < got.size(); ++i) {
          for (std::size_t j = 0; j < got.size(); ++j) {
            const auto rel = moreEfficient(got[i], got[j]);
            CHECK((i == j || rel == Efficiency::incomparable || rel == Efficiency::equal));
          }
          if (i > 0) CHECK(got[i - 1].cost <= got[i].cost);
        }
      }
    }
  }

  TEST_CASE("frontier spot values") {
    const auto f = frontier(CostModel::power(2), 64, 6);
    REQUIRE(f.size() == 6);
    CHECK(f.back().vector.entries == std::vector<std::size_t>(6, 2));
    CHECK(f.back().cost == Cost(24LL));
    CHECK(f.back().maxDistinctions == 64);
    const auto one = frontier(CostModel::power(2), 64, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].vector.str() == "(2)");
    CHECK_THROWS_AS(frontier(CostModel::power(2), 64, 25), ResourceError);
  }
}
