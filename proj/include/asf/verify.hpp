#pragma once

#include <string>

#include "asf/cells.hpp"
#include "asf/json_io.hpp"
#include "asf/rng.hpp"

namespace asf {

struct VerifyConfig {
  CartanType type;
  int trials = 50;
  std::uint64_t seed = 1;
  int h_range = 9;          // random h entries drawn from [-h_range, h_range] \ {0}
  int coeff_den_bound = 6;  // numerator/denominator bound for random E coefficients
  int weyl_cap = 10000;
};

struct VerifyResult {
  bool pass = true;
  json report;
};

namespace detail {

class CheckSink {
 public:
  void record(json& section, const std::string& name, bool ok, json detail = nullptr) {
    section[name] = ok;
    if (ok) return;
    pass = false;
    json f{{"check", name}};
    if (!detail.is_null()) f["case"] = std::move(detail);
    failures.push_back(std::move(f));
  }

  bool pass = true;
  json failures = json::array();
};

inline void check_algebra(const StructureTable& st, CheckSink& sink, json& out) {
  const RootSystem& rs = st.rs();
  const int dim = st.dim();

  bool anti = true;
  json anti_case;
  auto key_of = [&](int slot) { return slot < rs.num_roots() ? slot : -1 - (slot - rs.num_roots()); };
  for (int a = 0; a < dim && anti; ++a)
    for (int b = 0; b < dim && anti; ++b) {
      int ka = key_of(a), kb = key_of(b);
      if (!(st.basis_bracket(ka, kb) == -st.basis_bracket(kb, ka))) {
        anti = false;
        anti_case = json{{"a", ka}, {"b", kb}};
      }
    }
  sink.record(out, "antisymmetry", anti, anti_case);

  bool jacobi = true;
  json jacobi_case;
  auto basis_elt = [](int key) {
    return key >= 0 ? LieElt::e(key, 1) : LieElt::h(-1 - key, 1);
  };
  auto jacobi_triple = [&](int ka, int kb, int kc) {
    LieElt s = st.bracket(basis_elt(ka), st.basis_bracket(kb, kc));
    s += st.bracket(basis_elt(kb), st.basis_bracket(kc, ka));
    s += st.bracket(basis_elt(kc), st.basis_bracket(ka, kb));
    return s.is_zero();
  };
  const bool exhaustive = rs.rank() <= 4;
  if (exhaustive) {
    for (int a = 0; a < dim && jacobi; ++a)
      for (int b = a + 1; b < dim && jacobi; ++b)
        for (int c = b + 1; c < dim && jacobi; ++c)
          if (!jacobi_triple(key_of(a), key_of(b), key_of(c))) {
            jacobi = false;
            jacobi_case = json{{"a", key_of(a)}, {"b", key_of(b)}, {"c", key_of(c)}};
          }
  } else {
    TrialRng rng(0xacedbeef);
    for (int t = 0; t < 2000 && jacobi; ++t) {
      int a = key_of(static_cast<int>(rng.below(static_cast<std::uint64_t>(dim))));
      int b = key_of(static_cast<int>(rng.below(static_cast<std::uint64_t>(dim))));
      int c = key_of(static_cast<int>(rng.below(static_cast<std::uint64_t>(dim))));
      if (!jacobi_triple(a, b, c)) {
        jacobi = false;
        jacobi_case = json{{"a", a}, {"b", b}, {"c", c}};
      }
    }
  }
  out["jacobi_mode"] = exhaustive ? "exhaustive" : "sampled";
  sink.record(out, "jacobi", jacobi, jacobi_case);

  bool bound = true;
  json bound_case;
  for (int i = 0; i < rs.num_roots() && bound; ++i)
    for (int j = 0; j < rs.num_roots() && bound; ++j) {
      if (rs.negate(i) == j) continue;
      if (!rs.sum_index(i, j)) continue;
      Int n = st.structure_constant(i, j);
      Int expect = Int(st.p_value(i, j)) + 1;
      if (!(n == expect || n == -expect)) {
        bound = false;
        bound_case = json{{"alpha", i}, {"beta", j}, {"n", n.str()}};
      }
    }
  sink.record(out, "structure_constant_bound", bound, bound_case);
}

inline void check_weyl(const RootSystem& rs, int cap, CheckSink& sink, json& out) {
  Int formula = weyl_order_from_heights(rs);
  out["order_formula"] = formula.str();
  if (formula > cap) {
    out["enumerated"] = false;
    return;
  }
  out["enumerated"] = true;
  std::vector<WeylElem> ws = weyl_enumerate(rs, cap);
  sink.record(out, "order_matches_formula", Int(ws.size()) == formula,
              json{{"enumerated", ws.size()}, {"formula", formula.str()}});

  bool lengths = true;
  int longest_count = 0;
  for (const WeylElem& w : ws) {
    InversionData d = inversion_data(rs, w);
    if (static_cast<int>(d.inversions.size()) != w.length()) lengths = false;
    if (w.length() == rs.nu()) ++longest_count;
  }
  sink.record(out, "length_equals_inversion_count", lengths);
  sink.record(out, "unique_longest_element", longest_count == 1);

  bool census_ok = true;
  std::vector<int> by_length(static_cast<std::size_t>(rs.nu()) + 1, 0);
  for (const CellReport& r : cell_census(rs, cap)) {
    if (r.length + r.fibre_dim != rs.nu() || r.cell_dim != rs.nu()) census_ok = false;
    ++by_length[static_cast<std::size_t>(r.length)];
  }
  bool palindromic = true;
  for (std::size_t i = 0; i < by_length.size(); ++i)
    if (by_length[i] != by_length[by_length.size() - 1 - i]) palindromic = false;
  sink.record(out, "census_dimensions", census_ok);
  sink.record(out, "census_length_palindrome", palindromic);
}

}  // namespace detail

/// Runs the whole randomized and exhaustive check suite against the given
/// structure table (injectable so tests can corrupt it) and returns a
/// deterministic JSON report: same config, same bytes.
inline VerifyResult run_verify(const StructureTable& st, const VerifyConfig& cfg) {
  require(cfg.trials > 0, "verify: trials must be positive");
  const RootSystem& rs = st.rs();
  detail::CheckSink sink;
  json report;
  report["config"] = json{{"coeff_den_bound", cfg.coeff_den_bound},
                          {"h_range", cfg.h_range},
                          {"seed", cfg.seed},
                          {"trials", cfg.trials},
                          {"type", rs.type().str()},
                          {"weyl_cap", cfg.weyl_cap}};

  json algebra = json::object();
  detail::check_algebra(st, sink, algebra);
  report["algebra"] = std::move(algebra);

  json weyl = json::object();
  detail::check_weyl(rs, cfg.weyl_cap, sink, weyl);
  report["weyl"] = std::move(weyl);

  json trials = json::array();
  for (int i = 0; i < cfg.trials; ++i) {
    TrialRng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
    CartanElt h = random_regular_h(rs, rng, cfg.h_range);
    LieElt e = random_nilpotent(rs, rng, cfg.coeff_den_bound, cfg.coeff_den_bound);
    json tr{{"index", i}};
    json failing_case{{"E", lie_to_json(e)}, {"h", cartan_to_json(h)}, {"trial", i}};
    try {
      ESequence inc = solve_incremental(st, h, e);
      ESequence dir = solve_direct(st, h, e);
      sink.record(tr, "solver_equivalence", inc == dir, failing_case);

      LaurentLie phi = principal_part(inc);
      LaurentLie img = exp_ad_apply(st, phi, eps_h(rs, h));
      sink.record(tr, "omega_membership", verify_omega(st, h, phi) && in_L(img), failing_case);

      bool filt = true;
      for (int r = 1; r <= rs.max_height(); ++r)
        if (filtration_degree(rs, inc.term(r)) < r) filt = false;
      sink.record(tr, "filtration_degrees", filt, failing_case);

      LieElt lt = leading_term(st, h, e);
      LieElt eh_bracket = st.bracket(e, cartan_to_lie(rs, h));
      sink.record(tr, "leading_term_identity", lt == eh_bracket, failing_case);
      sink.record(tr, "leading_term_inverts", e.is_zero() || ad_h_inverse(rs, h, lt) == e,
                  failing_case);

      Rat c = random_rational(rng, cfg.coeff_den_bound, cfg.coeff_den_bound);
      ESequence scaled = solve_incremental(st, h, e * c);
      bool homog = true;
      Rat cr = 1;
      for (int r = 1; r <= rs.max_height(); ++r) {
        cr *= c;
        if (!(scaled.term(r) == inc.term(r) * cr)) homog = false;
      }
      sink.record(tr, "scaling_homogeneity", homog, failing_case);

      int pr = static_cast<int>(rng.range(2, rs.max_height() + 2));
      int proot = static_cast<int>(rng.below(static_cast<std::uint64_t>(rs.nu())));
      LaurentLie perturbed = phi;
      perturbed.add(-pr, LieElt::e(proot, 1));
      sink.record(tr, "perturbation_rejected", !verify_omega(st, h, perturbed), failing_case);

      bool rt = lie_from_json(rs, lie_to_json(e)) == e &&
                laurent_from_json(rs, laurent_to_json(phi)) == phi &&
                eseq_from_json(rs, eseq_to_json(inc)) == inc;
      sink.record(tr, "json_round_trip", rt, failing_case);
    } catch (const std::exception& ex) {
      failing_case["error"] = ex.what();
      sink.record(tr, "no_exception", false, failing_case);
    }
    trials.push_back(std::move(tr));
  }
  report["trials"] = std::move(trials);

  report["failures"] = std::move(sink.failures);
  report["pass"] = sink.pass;
  return VerifyResult{sink.pass, std::move(report)};
}

inline VerifyResult run_verify(const VerifyConfig& cfg) {
  RootSystem rs = build(cfg.type);
  return run_verify(StructureTable(rs), cfg);
}

}  // namespace asf
