#include <catch2/catch_amalgamated.hpp>

#include "asf/verify.hpp"

using namespace asf;

TEST_CASE("verification suite passes on a healthy A2 table") {
  VerifyConfig cfg;
  cfg.type = CartanType::parse("A2");
  cfg.trials = 15;
  cfg.seed = 7;
  VerifyResult r = run_verify(cfg);
  CHECK(r.pass);
  CHECK(r.report["pass"] == true);
  CHECK(r.report["failures"].empty());
  CHECK(r.report["trials"].size() == 15);
  CHECK(r.report["algebra"]["antisymmetry"] == true);
  CHECK(r.report["algebra"]["jacobi"] == true);
  CHECK(r.report["algebra"]["jacobi_mode"] == "exhaustive");
  CHECK(r.report["algebra"]["structure_constant_bound"] == true);
  CHECK(r.report["weyl"]["enumerated"] == true);
  CHECK(r.report["weyl"]["order_matches_formula"] == true);
  CHECK(r.report["config"]["seed"] == 7);
  for (const json& tr : r.report["trials"]) {
    CHECK(tr["solver_equivalence"] == true);
    CHECK(tr["omega_membership"] == true);
    CHECK(tr["perturbation_rejected"] == true);
  }
}

TEST_CASE("reports are byte-identical across runs with the same seed") {
  VerifyConfig cfg;
  cfg.type = CartanType::parse("B2");
  cfg.trials = 8;
  cfg.seed = 2024;
  std::string a = run_verify(cfg).report.dump();
  std::string b = run_verify(cfg).report.dump();
  CHECK(a == b);
  cfg.seed = 2025;
  CHECK(run_verify(cfg).report.dump() != a);
}

TEST_CASE("a corrupted bracket table is flagged") {
  RootSystem rs = build(CartanType::parse("B2"));
  const int c = rs.sum_index(0, 1).value();
  VerifyConfig cfg;
  cfg.type = rs.type();
  cfg.trials = 3;

  SECTION("one-sided corruption breaks antisymmetry") {
    StructureTable st(rs);
    st.override_basis_bracket(0, 1, LieElt::e(c, 5));
    VerifyResult r = run_verify(st, cfg);
    CHECK_FALSE(r.pass);
    CHECK(r.report["pass"] == false);
    CHECK(r.report["algebra"]["antisymmetry"] == false);
    CHECK(!r.report["failures"].empty());
  }

  SECTION("an antisymmetric rescaling still breaks the Jacobi identity") {
    StructureTable st(rs);
    st.override_basis_bracket(0, 1, LieElt::e(c, 5));
    st.override_basis_bracket(1, 0, LieElt::e(c, -5));
    VerifyResult r = run_verify(st, cfg);
    CHECK_FALSE(r.pass);
    CHECK(r.report["algebra"]["antisymmetry"] == true);
    CHECK(r.report["algebra"]["jacobi"] == false);
  }
}

TEST_CASE("enumeration cap falls back to formula-only group checks") {
  VerifyConfig cfg;
  cfg.type = CartanType::parse("F4");
  cfg.trials = 2;
  cfg.weyl_cap = 100;
  VerifyResult r = run_verify(cfg);
  CHECK(r.pass);
  CHECK(r.report["weyl"]["enumerated"] == false);
  CHECK(r.report["weyl"]["order_formula"] == "1152");
  CHECK(!r.report["weyl"].contains("order_matches_formula"));
}

TEST_CASE("nonpositive trial counts are rejected") {
  VerifyConfig cfg;
  cfg.type = CartanType::parse("A1");
  cfg.trials = 0;
  CHECK_THROWS_AS(run_verify(cfg), std::invalid_argument);
}
