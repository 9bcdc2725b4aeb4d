#include <catch2/catch_amalgamated.hpp>

#include "asf/domain.hpp"
#include "asf/rng.hpp"

using namespace asf;

TEST_CASE("A1: the sequence stops after E_1") {
  StructureTable st(build(CartanType::parse("A1")));
  CartanElt h{{Rat(5)}};
  LieElt e = LieElt::e(0, Rat(-3, 2));
  ESequence seq = solve_incremental(st, h, e);
  REQUIRE(seq.e_terms.size() == 1);
  CHECK(seq.term(1) == e);
  CHECK(solve_direct(st, h, e) == seq);
  CHECK(phi_inverse(st, h, e) == LaurentLie::term(-1, e));
}

TEST_CASE("A2 closed form for the depth-2 correction") {
  StructureTable st(build(CartanType::parse("A2")));
  const RootSystem& rs = st.rs();
  // alpha = root 1 = (1,0) with alpha(h) = 1, beta = root 0 = (0,1) with
  // beta(h) = 3; E = e_alpha + e_beta
  CartanElt h{{Rat(1), Rat(3)}};
  LieElt e = LieElt::e(0, 1) + LieElt::e(1, 1);
  ESequence seq = solve_incremental(st, h, e);
  REQUIRE(seq.e_terms.size() == 2);
  CHECK(seq.term(1) == e);
  CHECK(seq.term(2) == LieElt::e(2, Rat(1, 4)));
  CHECK(solve_direct(st, h, e) == seq);

  LaurentLie phi = phi_inverse(st, h, e);
  CHECK(phi.coefficient(-1) == e);
  CHECK(phi.coefficient(-2) == LieElt::e(2, Rat(1, 4)));
  CHECK(verify_omega(st, h, phi));
  // image under exp has no pole and no constant-term surprises
  LaurentLie img = exp_ad_apply(st, phi, eps_h(rs, h));
  CHECK(in_L(img));
  CHECK(img.coefficient(0) == st.bracket(e, cartan_to_lie(rs, h)));
}

TEST_CASE("A2 with equal simple values needs no correction at all") {
  StructureTable st(build(CartanType::parse("A2")));
  CartanElt h{{Rat(2), Rat(2)}};
  LieElt e = LieElt::e(0, 1) + LieElt::e(1, 1);
  ESequence seq = solve_direct(st, h, e);
  CHECK(seq.term(2).is_zero());
  CHECK(phi_inverse(st, h, e) == LaurentLie::term(-1, e));
}

TEST_CASE("verify_omega rejects the uncorrected principal part") {
  StructureTable st(build(CartanType::parse("A2")));
  CartanElt h{{Rat(1), Rat(3)}};
  LieElt e = LieElt::e(0, 1) + LieElt::e(1, 1);
  LaurentLie bare = LaurentLie::term(-1, e);
  CHECK_FALSE(verify_omega(st, h, bare));
  CHECK(verify_omega(st, h, LaurentLie{}));
  CHECK_THROWS_AS(verify_omega(st, h, LaurentLie::term(0, e)), std::invalid_argument);
}

TEST_CASE("solvers agree and satisfy the membership and filtration contracts") {
  for (const char* t : {"B2", "B3", "G2"}) {
    CAPTURE(t);
    StructureTable st(build(CartanType::parse(t)));
    const RootSystem& rs = st.rs();
    TrialRng rng(103);
    for (int trial = 0; trial < 12; ++trial) {
      CartanElt h = random_regular_h(rs, rng, 7);
      LieElt e = random_nilpotent(rs, rng, 5, 4);
      ESequence inc = solve_incremental(st, h, e);
      ESequence dir = solve_direct(st, h, e);
      CHECK(inc == dir);
      CHECK(static_cast<int>(inc.e_terms.size()) == rs.max_height());
      for (int r = 1; r <= rs.max_height(); ++r)
        CHECK(filtration_degree(rs, inc.term(r)) >= r);
      CHECK(verify_omega(st, h, principal_part(inc)));
    }
  }
}

TEST_CASE("scaling E scales the depth-r term by c^r") {
  StructureTable st(build(CartanType::parse("G2")));
  const RootSystem& rs = st.rs();
  CartanElt h{{Rat(3), Rat(-1)}};
  REQUIRE(is_regular(h, rs));
  TrialRng rng(5);
  LieElt e = random_nilpotent(rs, rng, 4, 3);
  Rat c(-5, 2);
  ESequence base = solve_incremental(st, h, e);
  ESequence scaled = solve_incremental(st, h, e * c);
  Rat cr = 1;
  for (int r = 1; r <= rs.max_height(); ++r) {
    cr *= c;
    CHECK(scaled.term(r) == base.term(r) * cr);
  }
}

TEST_CASE("leading term equals [E, h] and is invertible") {
  StructureTable st(build(CartanType::parse("A1")));
  CartanElt h1{{Rat(2)}};
  CHECK(leading_term(st, h1, LieElt::e(0, 1)) == LieElt::e(0, -2));
  CHECK(leading_term(st, h1, LieElt{}).is_zero());

  StructureTable b3(build(CartanType::parse("B3")));
  const RootSystem& rs = b3.rs();
  TrialRng rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    CartanElt h = random_regular_h(rs, rng, 6);
    LieElt e = random_nilpotent(rs, rng, 4, 5);
    LieElt lt = leading_term(b3, h, e);
    CHECK(lt == b3.bracket(e, cartan_to_lie(rs, h)));
    CHECK(ad_h_inverse(rs, h, lt) == e);
  }
}

TEST_CASE("solver input validation") {
  StructureTable st(build(CartanType::parse("A2")));
  LieElt e = LieElt::e(0, 1);
  CHECK_THROWS_AS(solve_incremental(st, CartanElt{{Rat(1)}}, e), std::invalid_argument);
  CHECK_THROWS_MATCHES(
      solve_incremental(st, CartanElt{{Rat(2), Rat(-2)}}, e), std::invalid_argument,
      Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("not regular")));
  CartanElt h{{Rat(1), Rat(3)}};
  CHECK_THROWS_AS(solve_direct(st, h, LieElt::h(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(solve_direct(st, h, LieElt::e(st.rs().nu(), 1)), std::invalid_argument);
}

TEST_CASE("perturbing a solved sequence leaves omega") {
  StructureTable st(build(CartanType::parse("B2")));
  const RootSystem& rs = st.rs();
  CartanElt h{{Rat(2), Rat(7)}};
  REQUIRE(is_regular(h, rs));
  LieElt e = LieElt::e(0, 1) + LieElt::e(1, Rat(1, 3));
  LaurentLie phi = phi_inverse(st, h, e);
  REQUIRE(verify_omega(st, h, phi));
  for (int r = 2; r <= rs.max_height() + 1; ++r)
    for (int a = 0; a < rs.nu(); ++a) {
      LaurentLie perturbed = phi;
      perturbed.add(-r, LieElt::e(a, Rat(1, 2)));
      CHECK_FALSE(verify_omega(st, h, perturbed));
    }
}

TEST_CASE("steinberg_image accepts exactly the compatible cells") {
  StructureTable st(build(CartanType::parse("A2")));
  const RootSystem& rs = st.rs();
  std::vector<WeylElem> ws = weyl_enumerate(rs);
  CartanElt h{{Rat(1), Rat(3)}};
  LieElt e = LieElt::e(0, 1) + LieElt::e(1, 1);

  SteinbergImage id_img = steinberg_image(st, h, e, ws.front());
  REQUIRE(id_img.accepted());
  CHECK(id_img.point->nilpotent == LieElt::e(0, 3) + LieElt::e(1, 1));  // -[E,h]
  CHECK(id_img.point->w == ws.front());

  SteinbergImage w0_img = steinberg_image(st, h, e, ws.back());
  CHECK_FALSE(w0_img.accepted());
  CHECK(w0_img.violating_roots == std::vector<int>{0, 1});

  // s1 inverts root (1,0) = index 1, so e_1 violates it but e_0 does not
  const WeylElem& s1 = ws[1];
  REQUIRE(s1.word == std::vector<int>{0});
  CHECK(steinberg_image(st, h, LieElt::e(0, 1), s1).accepted());
  SteinbergImage rej = steinberg_image(st, h, LieElt::e(1, 1), s1);
  CHECK_FALSE(rej.accepted());
  CHECK(rej.violating_roots == std::vector<int>{1});

  // zero E is compatible with every cell
  CHECK(steinberg_image(st, h, LieElt{}, ws.back()).accepted());
}
