#include "suites.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "yfuse/fusion.hpp"
#include "yfuse/mixed_tensor.hpp"
#include "yfuse/yangian.hpp"

namespace yfuse::cli {

SuiteBounds default_bounds() { return SuiteBounds{}; }

SuiteBounds tiny_bounds() {
  SuiteBounds b;
  b.name = "tiny";
  b.max_group_order = 3;
  b.max_rank_cells = 3;
  b.max_rank_outer = 4;
  b.max_N = 2;
  b.max_mixed_factors = 3;
  b.max_module_factors = 2;
  b.max_fact_size = 3;
  return b;
}

SuiteBounds bounds_named(const std::string& name) {
  if (name == "default") return default_bounds();
  if (name == "tiny") return tiny_bounds();
  throw Error(ErrorKind::InvalidInput, "unknown bounds '" + name + "' (expected tiny or default)");
}

namespace {

/// Counts instances and records the first failure.
class Tally {
 public:
  void operator()(bool ok) {
    ++cases_;
    pass_ = pass_ && ok;
  }
  CheckResult result(int criterion, std::string name) const { return {criterion, std::move(name), cases_, pass_ && cases_ > 0}; }

 private:
  long cases_ = 0;
  bool pass_ = true;
};

const StandardTableau& empty_tableau() {
  static const StandardTableau e = column_tableau(SkewShape(Partition{}));
  return e;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n)
    for (auto& p : partitions_of(n)) out.push_back(p);
  return out;
}

/// Skew shapes lambda/mu with n cells and |lambda| <= max_outer.
std::vector<SkewShape> skew_shapes(int n, int max_outer) {
  std::vector<SkewShape> out;
  for (const auto& outer : partitions_up_to(max_outer))
    for (const auto& inner : partitions_up_to(outer.size() - n)) {
      if (outer.size() - inner.size() != n || !outer.contains(inner)) continue;
      out.emplace_back(outer, inner);
    }
  return out;
}

/// Column tableaux of the skew shapes with n cells and |lambda| <= n + 1
/// (only the empty tableau when n = 0).
std::vector<StandardTableau> shape_family(int n) {
  if (n == 0) return {empty_tableau()};
  std::vector<StandardTableau> out;
  for (const auto& s : skew_shapes(n, n + 1)) out.push_back(column_tableau(s));
  return out;
}

int column_height(const Partition& p) { return p.empty() ? 0 : conjugate(p)[1]; }

// ---- fusion -------------------------------------------------------------

CheckResult check_contents_example() {
  const StandardTableau t = column_tableau(SkewShape(Partition{5, 3, 3, 3, 3}, Partition{3, 3, 2}));
  Tally tally;
  tally(contents(t) == std::vector<int>{-3, -4, -2, -3, 0, -1, -2, 3, 4});
  return tally.result(1, "content sequence of the column tableau of (5,3,3,3,3)/(3,3,2)");
}

CheckResult check_fusion_oracle(const SuiteBounds& b) {
  Tally tally;
  for (int l = 1; l <= b.max_group_order; ++l)
    for (const auto& p : partitions_of(l))
      for (const auto& t : enumerate_standard_tableaux(SkewShape(p))) {
        const auto f = fuse_f_Lambda(t);
        tally(f == jm_oracle_f_Lambda(t) && check_idempotent_scalar(t, f));
      }
  return tally.result(2, "fused symmetrizers agree with the Jucys-Murphy oracle and square to a scalar multiple");
}

CheckResult check_skew_consistency(const SuiteBounds& b) {
  Tally tally;
  // Extracted skew elements keyed by the skew tableau they come from.
  std::map<std::pair<std::vector<int>, std::vector<int>>, GroupAlgebraQ> seen;
  for (int l = 1; l <= b.max_group_order; ++l)
    for (const auto& p : partitions_of(l))
      for (const auto& t : enumerate_standard_tableaux(SkewShape(p)))
        for (int m = 0; m < l; ++m) {
          const auto omega = remainder_after(t, m);
          const auto extracted = extract_f_Omega(fuse_f_Lambda(t), m);
          bool ok = check_skew_factorization(t, m) && extracted == fuse_f_Omega(omega);
          std::vector<int> key;
          for (const auto& c : omega.positions()) {
            key.push_back(c.i);
            key.push_back(c.j);
          }
          const auto [it, inserted] = seen.emplace(std::make_pair(omega.shape().inner().parts(), key), extracted);
          if (!inserted) ok = ok && it->second == extracted;
          tally(ok);
        }
  return tally.result(3, "skew factorization and independence of the completing tableau");
}

// ---- tensor -------------------------------------------------------------

CheckResult check_rank_oracle(const SuiteBounds& b) {
  Tally tally;
  for (int N = 2; N <= std::min(3, b.max_N); ++N) {
    for (int n = 1; n <= b.max_rank_cells; ++n)
      for (const auto& s : skew_shapes(n, b.max_rank_outer)) {
        const long expected = ssyt_count(s, N);
        tally(rank(F_Omega_op(column_tableau(s), N).matrix) == expected);
        tally(rank(F_Omega_op(row_tableau(s), N).matrix) == expected);
      }
    // Consecutive row windows of the figure shape with at most the allowed cells.
    const std::vector<int> outer = {5, 3, 3, 3, 3}, inner = {3, 3, 2};
    for (std::size_t a = 0; a < outer.size(); ++a)
      for (std::size_t e = a + 1; e <= outer.size(); ++e) {
        std::vector<int> o(outer.begin() + static_cast<long>(a), outer.begin() + static_cast<long>(e)), i;
        for (std::size_t r = a; r < e; ++r) i.push_back(r < inner.size() ? inner[r] : 0);
        const SkewShape s{Partition(o), Partition(i)};
        if (s.size() == 0 || s.size() > b.max_rank_cells) continue;
        tally(rank(F_Omega_op(column_tableau(s), N).matrix) == ssyt_count(s, N));
      }
  }
  return tally.result(4, "rank of the skew symmetrizer equals the semistandard tableau count");
}

CheckResult check_rmatrix_suite(const SuiteBounds& b, std::uint64_t seed) {
  Tally tally;
  for (int N = 1; N <= b.max_N; ++N)
    for (const auto& r : verify_rmatrix_identities(N, 4, seed)) tally(r.passed && r.samples >= 4);
  return tally.result(5, "R-matrix braid, unitarity, reflection and contraction identities");
}

CheckResult check_symmetrizer_suite(const SuiteBounds& b) {
  Tally tally;
  for (int N = 1; N <= b.max_N; ++N)
    for (int l = 0; l <= b.max_mixed_factors; ++l)
      for (int lt = 0; lt + l <= b.max_mixed_factors; ++lt)
        for (const auto& p : partitions_of(l))
          for (const auto& pt : partitions_of(lt)) {
            if (column_height(p) + column_height(pt) > N) continue;
            for (const auto& t : enumerate_standard_tableaux(SkewShape(p)))
              for (const auto& tt : enumerate_standard_tableaux(SkewShape(pt))) {
                const auto r = verify_symmetrizer_identities(t, tt, N);
                tally(r.all() && r.rank == weyl_dimension(p, pt, N));
              }
          }
  return tally.result(6, "mixed symmetrizer identities for straight shapes");
}

CheckResult check_exchange_suite(const SuiteBounds& b) {
  Tally tally;
  for (int n = 0; n <= b.max_mixed_factors; ++n)
    for (int nt = 0; nt + n <= b.max_mixed_factors; ++nt) {
      if (n + nt == 0) continue;
      for (const auto& om : shape_family(n))
        for (const auto& omt : shape_family(nt))
          for (int NM = 1; NM <= 4; ++NM) {
            if (column_height(om.shape().outer()) + column_height(omt.shape().outer()) > NM) continue;
            for (int N = 1; N <= NM; ++N) {
              try {
                tally(check_G_exchange(om, omt, N, NM - N));
              } catch (const Error& e) {
                if (e.kind() != ErrorKind::DenominatorZero) throw;
              }
            }
          }
    }
  return tally.result(7, "contraction products exchange with the reflected tensor symmetrizer");
}

// ---- yangian ------------------------------------------------------------

std::vector<Rational> samples(SampleSequence& seq, int k) {
  std::vector<Rational> v;
  for (int i = 0; i < k; ++i) v.push_back(seq.next());
  return v;
}

CheckResult check_rtt_suite(const SuiteBounds& b, std::uint64_t seed) {
  Tally tally;
  SampleSequence seq(seed);
  for (int N = 1; N <= b.max_N; ++N)
    for (int n = 0; n <= b.max_module_factors; ++n)
      for (int nt = 0; nt + n <= b.max_module_factors; ++nt) {
        const auto y = samples(seq, nt), z = samples(seq, n);
        tally(check_RTT(rho_mixed(N, y, z), 3, seed));
        tally(check_RTT(sigma_mixed(N, y, z), 3, seed));
        tally(check_RTT(pi_N_action(N, n, nt), 3, seed));
        const Rational shift_by = seq.next();
        tally(check_RTT(twist(shift(rho_mixed(N, y, z), shift_by), g_mu(Partition{2, 1})), 3, seed));
      }
  // The branching realization on tensor modules of gl_{N+M}.
  for (int N = 1; N <= 2; ++N)
    for (int M = 0; M <= 1; ++M) {
      tally(check_RTT(pi_NM_action(mixed_tensor_gl_rep(MixedTensorSpace(N + M, 1, 1)), N, M), 3, seed));
      tally(check_RTT(pi_NM_action(mixed_tensor_gl_rep(MixedTensorSpace(N + M, 2, 0)), N, M), 3, seed));
    }
  tally(check_RTT(build_VmuMut_module(Partition{2}, Partition{}, Partition{1}, Partition{}, 2, 1).series, 3, seed));
  tally(check_RTT(V_OmOmt_module(column_tableau(SkewShape(Partition{1})), column_tableau(SkewShape(Partition{1})), 2, 0),
                  3, seed));
  return tally.result(8, "every constructed module satisfies the defining RTT relations");
}

CheckResult check_intertwiner_suite(const SuiteBounds& b) {
  Tally tally;
  for (int N = 1; N <= b.max_N; ++N)
    for (int M = 0; M <= 1; ++M)
      for (int n = 0; n <= b.max_module_factors; ++n)
        for (int nt = 0; nt + n <= b.max_module_factors; ++nt) {
          if (n + nt == 0) continue;
          for (const auto& om : shape_family(n))
            for (const auto& omt : shape_family(nt)) {
              const auto& lam = om.shape().outer();
              const auto& lamt = omt.shape().outer();
              if (column_height(lam) + column_height(lamt) > N + M) continue;
              if (column_height(om.shape().inner()) + column_height(omt.shape().inner()) > M) continue;
              try {
                tally(verify_intertwiner_property(om, omt, N, M));
              } catch (const Error& e) {
                if (e.kind() != ErrorKind::DenominatorZero) throw;
              }
            }
        }
  return tally.result(9, "the mixed symmetrizer intertwines the two orderings of the tensor product");
}

struct BranchingInstance {
  Partition lambda, lambda_tilde, mu, mu_tilde;
  int N, M;
};

const std::vector<BranchingInstance>& branching_instances() {
  static const std::vector<BranchingInstance> v = {
      {Partition{1}, Partition{1}, Partition{}, Partition{}, 2, 0},
      {Partition{2}, Partition{}, Partition{1}, Partition{}, 2, 1},
      {Partition{1, 1}, Partition{1}, Partition{1}, Partition{}, 2, 1},
  };
  return v;
}

CheckResult check_equivalence_suite() {
  Tally tally;
  for (const auto& in : branching_instances()) {
    const auto om = column_tableau(SkewShape(in.lambda, in.mu));
    const auto omt = column_tableau(SkewShape(in.lambda_tilde, in.mu_tilde));
    const auto cert = verify_module_equivalence(in.lambda, in.lambda_tilde, in.mu, in.mu_tilde, in.N, in.M, om, omt);
    const auto hom = build_VmuMut_module(in.lambda, in.lambda_tilde, in.mu, in.mu_tilde, in.N, in.M);
    tally(cert.pass() && hom.hom_dim == rank(F_OmOmt_op(om, omt, in.N, in.M).matrix));
  }
  return tally.result(10, "branching modules are equivalent to the symmetrizer image modules");
}

CheckResult check_exterior_suite(const SuiteBounds& b, std::uint64_t seed) {
  Tally tally;
  SampleSequence seq(seed);
  for (int N = 1; N <= b.max_N; ++N)
    for (int n = 1; n <= N; ++n)
      for (const Rational& z : {Rational(0), seq.next()}) tally(verify_exterior_powers(N, n, z).all());
  return tally.result(11, "exterior powers of evaluation modules and their duals");
}

CheckResult check_g_series(const SuiteBounds& b) {
  Tally tally;
  tally(g_mu(Partition{}) == RationalFunction(1));
  const RationalFunction x = RationalFunction::x();
  tally(g_mu(Partition{1}) == x * x / (x * x - RationalFunction(1)));
  for (int l = 1; l <= b.max_fact_size; ++l)
    for (const auto& p : partitions_of(l))
      for (const auto& t : enumerate_standard_tableaux(SkewShape(p))) tally(check_fact(t));
  return tally.result(12, "g-series values and their content factorization");
}

CheckResult check_polynomial_twist_suite() {
  Tally tally;
  for (const auto& in : branching_instances()) {
    const auto om = column_tableau(SkewShape(in.lambda, in.mu));
    const auto omt = column_tableau(SkewShape(in.lambda_tilde, in.mu_tilde));
    tally(verify_polynomial_twist(in.lambda, in.lambda_tilde, in.mu, in.mu_tilde, in.N, in.M, om, omt).pass());
  }
  return tally.result(13, "symmetrizer image modules are twisted polynomial modules");
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& name, const SuiteBounds& b, std::uint64_t seed) {
  const bool all = name == "all";
  if (!all && name != "fusion" && name != "tensor" && name != "yangian")
    throw Error(ErrorKind::InvalidInput, "unknown suite '" + name + "' (expected all, fusion, tensor or yangian)");
  std::vector<CheckResult> out;
  auto timed = [&out](const std::function<CheckResult()>& check) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r = check();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  };
  if (all || name == "fusion") {
    timed([] { return check_contents_example(); });
    timed([&] { return check_fusion_oracle(b); });
    timed([&] { return check_skew_consistency(b); });
  }
  if (all || name == "tensor") {
    timed([&] { return check_rank_oracle(b); });
    timed([&] { return check_rmatrix_suite(b, seed); });
    timed([&] { return check_symmetrizer_suite(b); });
    timed([&] { return check_exchange_suite(b); });
  }
  if (all || name == "yangian") {
    timed([&] { return check_rtt_suite(b, seed); });
    timed([&] { return check_intertwiner_suite(b); });
    timed([] { return check_equivalence_suite(); });
    timed([&] { return check_exterior_suite(b, seed); });
    timed([&] { return check_g_series(b); });
    timed([] { return check_polynomial_twist_suite(); });
  }
  return out;
}

Json suite_json(const std::string& name, const SuiteBounds& b, std::uint64_t seed,
                const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  bool pass = true;
  for (const auto& r : results) {
    checks.push_back(Json{{"criterion", r.criterion}, {"name", r.name}, {"cases", r.cases}, {"pass", r.pass}});
    pass = pass && r.pass;
  }
  return Json{{"command", "suite"}, {"suite", name}, {"bounds", b.name}, {"seed", seed}, {"checks", checks},
              {"pass", pass}};
}

}  // namespace yfuse::cli
