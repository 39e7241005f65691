#include <doctest.h>

#include <cmath>

#include "overrule/binarize.hpp"
#include "overrule/errors.hpp"
#include "overrule/rng.hpp"
#include "overrule/rules.hpp"

using namespace overrule;

namespace {

// Two binary features, a 4-way categorical and a continuous feature on
// [0, 100] with exact decile cuts.
BinarizedDataset mixed_universe() {
  Schema schema = parse_schema_json(R"({
    "features": [
      {"name": "A", "kind": "binary"},
      {"name": "B", "kind": "binary"},
      {"name": "cat", "kind": "categorical", "categories": ["p","q","r","s"]},
      {"name": "x", "kind": "continuous", "min": 0, "max": 100,
       "thresholds": [10,20,30,40,50,60,70,80,90]}
    ]
  })");
  std::string csv = "A,B,cat,x\n";
  const char* cats[4] = {"p", "q", "r", "s"};
  Rng rng(11);
  for (int i = 0; i < 64; ++i) {
    csv += std::to_string(i & 1) + "," + std::to_string((i >> 1) & 1) + ",";
    csv += cats[rng.index(4)];
    csv += "," + std::to_string(rng.uniform(0, 100)) + "\n";
  }
  return binarize(parse_csv(csv, schema));
}

Literal lit_eq(int feature, int cat, double frac) {
  return Literal{feature, LitOp::eq, 0.0, cat, frac};
}

}  // namespace

TEST_SUITE("rules") {

TEST_CASE("all-true conjunction covers every row") {
  BinarizedDataset bin = mixed_universe();
  Conjunction top = Conjunction::all_true();
  CHECK(top.degree() == 0);
  for (std::size_t r = 0; r < bin.n_rows(); ++r) CHECK(eval_conjunction(top, bin, r));
  CHECK(bin.cover(top).count() == bin.n_rows());
}

TEST_CASE("conjunction evaluation matches its literals") {
  BinarizedDataset bin = mixed_universe();
  Conjunction c({lit_eq(0, 1, 0.5), lit_eq(1, 0, 0.5)});  // A=1 and B=0
  BitVec cov = bin.cover(c);
  int ia = bin.literal_index(lit_eq(0, 1, 0.5));
  int ib = bin.literal_index(lit_eq(1, 0, 0.5));
  REQUIRE(ia >= 0);
  REQUIRE(ib >= 0);
  for (std::size_t r = 0; r < bin.n_rows(); ++r) {
    CHECK(cov.test(r) == (bin.test(ia, r) && bin.test(ib, r)));
    CHECK(eval_conjunction(c, bin, r) == cov.test(r));
  }
}

TEST_CASE("contradictory conjunctions are rejected at construction") {
  CHECK_THROWS_AS(Conjunction({lit_eq(0, 1, 0.5), lit_eq(0, 0, 0.5)}), ConfigError);
  Literal le30{3, LitOp::le, 30.0, -1, 0.3};
  Literal gt70{3, LitOp::gt, 70.0, -1, 0.3};
  CHECK_THROWS_AS(Conjunction({le30, gt70}), ConfigError);
}

TEST_CASE("literal missing from the universe raises") {
  BinarizedDataset bin = mixed_universe();
  Literal foreign{3, LitOp::le, 33.0, -1, 0.33};  // not a decile cut
  CHECK_THROWS_AS(bin.cover(Conjunction({foreign})), Error);
}

TEST_CASE("ruleset evaluation: DNF or, CNF negated or") {
  BinarizedDataset bin = mixed_universe();
  RuleSet empty_dnf{RuleForm::DNF, {}, {}};
  RuleSet empty_cnf{RuleForm::CNF, {}, {}};
  for (std::size_t r = 0; r < bin.n_rows(); ++r) {
    CHECK_FALSE(eval_ruleset(empty_dnf, bin, r));
    CHECK(eval_ruleset(empty_cnf, bin, r));
  }
  RuleSet dnf{RuleForm::DNF,
              {Conjunction({lit_eq(0, 1, 0.5)}), Conjunction({lit_eq(1, 1, 0.5)})},
              {}};
  int ia = bin.literal_index(lit_eq(0, 1, 0.5));
  int ib = bin.literal_index(lit_eq(1, 1, 0.5));
  for (std::size_t r = 0; r < bin.n_rows(); ++r)
    CHECK(eval_ruleset(dnf, bin, r) == (bin.test(ia, r) || bin.test(ib, r)));
}

TEST_CASE("exact clause volumes") {
  BinarizedDataset bin = mixed_universe();
  const auto& features = bin.features();
  CHECK(exact_clause_volume(Conjunction({lit_eq(0, 1, 0.5)}), features) ==
        doctest::Approx(0.5));
  CHECK(exact_clause_volume(Conjunction({lit_eq(0, 1, 0.5), lit_eq(1, 1, 0.5)}), features) ==
        doctest::Approx(0.25));
  // decile cut (x <= 30) times one of four categories
  Literal le30{3, LitOp::le, 30.0, -1, 0.3};
  CHECK(exact_clause_volume(Conjunction({le30, lit_eq(2, 2, 0.25)}), features) ==
        doctest::Approx(0.075));
  CHECK(exact_clause_volume(Conjunction::all_true(), features) == doctest::Approx(1.0));
  // interval (30, 70]
  Literal le70{3, LitOp::le, 70.0, -1, 0.7};
  Literal gt30{3, LitOp::gt, 30.0, -1, 0.7};
  CHECK(exact_clause_volume(Conjunction({le70, gt30}), features) == doctest::Approx(0.4));
}

TEST_CASE("same-op literals merge to the tightest bound") {
  Literal le50{3, LitOp::le, 50.0, -1, 0.5};
  Literal le70{3, LitOp::le, 70.0, -1, 0.7};
  Conjunction c({le50, le70});
  CHECK(c.degree() == 1);
  CHECK(c.literals()[0].value == doctest::Approx(50.0));
}

TEST_CASE("clause volume agrees with Monte Carlo coverage") {
  BinarizedDataset bin = mixed_universe();
  const std::size_t n = 100000;
  BinarizedDataset ref = sample_reference(bin.features(), bin.literals(), n, 99);
  Rng rng(5);
  const auto& lits = bin.literals();
  for (int trial = 0; trial < 25; ++trial) {
    Conjunction c = Conjunction::all_true();
    int tries = 0;
    while (c.degree() < 2 && tries++ < 10) {
      auto ext = c.extended(lits[rng.index(lits.size())]);
      if (ext) c = *ext;
    }
    double v = exact_clause_volume(c, bin.features());
    double mc = double(ref.cover(c).count()) / double(n);
    double band = 4.0 * std::sqrt(std::max(v * (1 - v), 1e-6) / double(n));
    CAPTURE(c.to_string(bin.features()));
    CHECK(std::fabs(v - mc) <= band);
  }
}

TEST_CASE("complexity formula and edge cases") {
  Conjunction c1({lit_eq(0, 1, 0.5)});
  Conjunction c3({lit_eq(0, 1, 0.5), lit_eq(1, 0, 0.5), lit_eq(2, 1, 0.25)});
  RuleSet rs{RuleForm::DNF, {c1, c3}, {}};
  CHECK(complexity(rs, 0.01, 0.001) == doctest::Approx(0.024));
  RuleSet all_true{RuleForm::DNF, {Conjunction::all_true()}, {}};
  CHECK(complexity(all_true, 0.5, 0.5) == doctest::Approx(0.0));
  CHECK(complexity(rs, 0, 0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(complexity(rs, -0.1, 0), ConfigError);
}

TEST_CASE("DNF coverage grows with clauses, clause coverage shrinks with literals") {
  BinarizedDataset bin = mixed_universe();
  Rng rng(21);
  const auto& lits = bin.literals();
  for (int trial = 0; trial < 20; ++trial) {
    RuleSet rs{RuleForm::DNF, {}, {}};
    BitVec covered(bin.n_rows());
    for (int k = 0; k < 3; ++k) {
      Conjunction c({lits[rng.index(lits.size())]});
      // adding a literal never grows the clause
      auto ext = c.extended(lits[rng.index(lits.size())]);
      if (ext) {
        CHECK(BitVec::diff_count(bin.cover(*ext), bin.cover(c)) == 0);
        c = *ext;
      }
      rs.clauses.push_back(c);
      BitVec now = covered;
      now |= bin.cover(c);
      // adding a clause never shrinks the DNF
      CHECK(BitVec::diff_count(covered, now) == 0);
      covered = now;
    }
  }
}

TEST_CASE("CNF is the exact complement of its exclusion DNF") {
  BinarizedDataset bin = mixed_universe();
  Rng rng(31);
  const auto& lits = bin.literals();
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Conjunction> clauses;
    for (int k = 0; k < 2; ++k) clauses.push_back(Conjunction({lits[rng.index(lits.size())]}));
    RuleSet dnf{RuleForm::DNF, clauses, {}};
    RuleSet cnf{RuleForm::CNF, clauses, {}};
    std::size_t covered = 0;
    for (std::size_t r = 0; r < bin.n_rows(); ++r) {
      CHECK(eval_ruleset(dnf, bin, r) != eval_ruleset(cnf, bin, r));
      covered += eval_ruleset(dnf, bin, r) + eval_ruleset(cnf, bin, r);
    }
    CHECK(covered == bin.n_rows());
  }
}

}  // TEST_SUITE
