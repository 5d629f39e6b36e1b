#include "casc/suites.hpp"

namespace casc {

bool valid_suite_selector(const std::string& s) {
  static const std::set<std::string> known{
      "cascade", "w0", "isotropy", "codim", "shift", "fixed", "transitivity",
      "all"};
  return known.count(s) > 0;
}

std::vector<TheoremReport> run_suites(const SimpleType& type,
                                      const SuiteConfig& cfg) {
  auto want = [&](const std::string& s) {
    return cfg.suites.count("all") > 0 || cfg.suites.count(s) > 0;
  };
  RootSystem rs = make_root_system(type);
  CascadeSet cs = CascadeSet::from_tree(compute_cascade(rs));
  std::vector<TheoremReport> reports;

  if (want("cascade")) {
    TheoremReport rep;
    rep.id = "cascade_oracle";
    rep.dims["m"] = static_cast<long long>(cs.m());
    if (rs.rank() > cfg.oracle_rank_limit) {
      rep.skipped = true;
      rep.pass = true;
    } else {
      std::size_t brute =
          max_strongly_orthogonal_bruteforce(rs, cfg.oracle_rank_limit);
      rep.dims["bruteforce"] = static_cast<long long>(brute);
      rep.pass = brute == cs.m() && cascade_independence(rs, cs);
    }
    reports.push_back(rep);
  }
  if (want("w0")) {
    TheoremReport rep;
    rep.id = "w0_factorization";
    rep.pass = verify_w0_product(rs, cs);
    bool minus_one = is_minus_identity(longest_element(rs));
    rep.dims["m"] = static_cast<long long>(cs.m());
    rep.dims["ell"] = static_cast<long long>(rs.rank());
    if (minus_one != (cs.m() == rs.rank())) rep.pass = false;
    reports.push_back(rep);
  }

  const bool needs_algebra =
      want("isotropy") || want("codim") || want("shift") || want("fixed") ||
      want("transitivity");
  if (!needs_algebra) return reports;

  LieAlgebra g = build_algebra(rs);
  auto points = sample_rx_points(g, cs, 20, cfg.seed);

  if (want("isotropy")) {
    reports.push_back(verify_n_isotropy(g, cs, points));
    reports.push_back(verify_nminus_isotropy(g, cs, points));
    reports.push_back(verify_b_isotropy(g, cs, points));
  }
  if (want("codim"))
    reports.push_back(verify_codim_bounds(g, cs, cfg.samples, cfg.seed));
  if (want("shift"))
    reports.push_back(verify_shift_invariance(g, 50, cfg.seed));
  if (want("fixed")) reports.push_back(verify_fixed_set(g));
  if (want("transitivity"))
    reports.push_back(verify_h_transitivity_tangent(g, cs, points));
  return reports;
}

}  // namespace casc
