// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "fockspace/verify.hpp"

using namespace fockspace;

namespace {

struct Tally {
  std::size_t cases = 0, failed = 0;
  double worst_ratio = 0.0;  // residual / tolerance
};

Tally tally(const VerificationReport& r, const std::set<std::string>& groups,
            const std::function<bool(const CaseRecord&)>& keep = nullptr) {
  Tally t;
  for (const auto& c : r.cases) {
    if (!groups.count(c.group) || (keep && !keep(c))) continue;
    ++t.cases;
    if (!c.pass) ++t.failed;
    if (c.tolerance > 0) t.worst_ratio = std::max(t.worst_ratio, c.residual / c.tolerance);
  }
  return t;
}

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail, double seconds) {
  std::printf("[%s] criterion %d: %s (%s; %.2f s)\n", ok ? "PASS" : "FAIL", id, name, detail.c_str(), seconds);
  if (!ok) ++failures;
}

std::string summary(const Tally& t) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu cases, %zu failed, worst residual/tol %.3g", t.cases, t.failed, t.worst_ratio);
  return buf;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;

  auto t0 = clock::now();
  const VerificationReport hyd = run_suite("hydrogen");
  const double hyd_s = since(t0);
  t0 = clock::now();
  const VerificationReport maps = run_suite("maps");
  const double maps_s = since(t0);
  t0 = clock::now();
  const VerificationReport cl = run_suite("clifford");
  const double cl_s = since(t0);
  t0 = clock::now();
  const VerificationReport ids = run_suite("identities");
  const double ids_s = since(t0);

  {
    const Tally t = tally(hyd, {"ground_state"});
    report(1, "ground-state momentum amplitude 2 sqrt(2)/pi", t.cases == 3 && t.failed == 0, summary(t), hyd_s);
  }
  {
    const Tally f = tally(hyd, {"fourier"});
    const Tally ph = tally(hyd, {"fourier_phase"});
    report(2, "Fourier consistency sweep n <= 4", f.cases == 20 * 30 && ph.cases == 10 && f.failed + ph.failed == 0,
           summary(f) + "; phase blocks " + std::to_string(ph.cases), hyd_s);
  }
  {
    const Tally g = tally(hyd, {"gram_position"});
    const Tally m = tally(hyd, {"norm_momentum"});
    report(3, "position Gram matrix and momentum norms", g.cases > 0 && m.cases == 15 && g.failed + m.failed == 0,
           summary(g) + "; momentum " + summary(m), hyd_s);
  }
  {
    const Tally c = tally(hyd, {"coefficient"});
    const Tally b = tally(hyd, {"beta_derivative"});
    report(4, "generating-function coefficient extraction", c.cases == 30 && b.cases == 15 && c.failed + b.failed == 0,
           summary(c) + "; beta " + summary(b), hyd_s);
  }
  {
    // 0.5% bound on the lifted integrals, both quadrature and Monte Carlo
    const Tally t = tally(maps, {"ks_integral"});
    report(5, "KS measure identity (exp(-r), exp(-r^2))", t.cases == 4 && t.failed == 0, summary(t), maps_s);
  }
  {
    const Tally d = tally(cl, {"det_identity"});
    const Tally a = tally(cl, {"anticommutation"});
    const Tally mc = tally(cl, {"gaussian_mc"}, [](const CaseRecord& c) {
      const int n = c.params.at("n").get<int>();
      return n == 2 || n == 3;
    });
    report(6, "Clifford determinant family", d.cases >= 1000 && d.failed == 0 && a.failed == 0 && mc.cases >= 2 &&
                                                 mc.failed == 0,
           summary(d) + "; anticommutation " + std::to_string(a.cases) + "; MC " + summary(mc), cl_s);
  }
  {
    const Tally t = tally(ids, {"genfunc_gegenbauer", "recurrence", "bessel_genfunc", "integral_rep"});
    const Tally l0 = tally(ids, {"integral_rep"},
                           [](const CaseRecord& c) { return c.id.find("closed_l0") != std::string::npos; });
    report(7, "Gegenbauer identity suite", t.cases > 0 && t.failed == 0 && l0.cases > 0, summary(t), ids_s);
  }
  {
    const Tally t = tally(ids, {"s3_orthonormality", "triple_d", "passage"});
    report(8, "hyperspherical block", t.cases > 0 && t.failed == 0, summary(t), ids_s);
  }
  {
    t0 = clock::now();
    const std::vector<Discrepancy> ds = collect_discrepancies();
    const std::set<std::string> expected{"laguerre_factorial", "momentum_phase",  "measure_weight",
                                         "fock_components",    "ks_fiber_normalization", "anticommutator",
                                         "mixed_bilinear",     "integral_rep_prefactor", "hyperspherical_exponent",
                                         "passage_phase",      "duplication_formula"};
    std::set<std::string> got;
    bool dup_ok = false;
    double ratio = 0.0;
    for (const auto& d : ds) {
      got.insert(d.id);
      if (d.id == "duplication_formula") {
        ratio = d.measured.at("n1_printed_ratio").get<double>();
        dup_ok = d.status == "printed_fails" && std::abs(ratio - 2.0) < 1e-12 &&
                 !d.measured.at("n1_printed_passes").get<bool>() && d.measured.at("n1_corrected_passes").get<bool>();
      }
    }
    const Tally corrected = tally(ids, {"duplication"});
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu discrepancies, printed ratio at n=1 %.15g, corrected cases %zu failed %zu",
                  ds.size(), ratio, corrected.cases, corrected.failed);
    report(9, "known-failure documentation", got == expected && dup_ok && corrected.failed == 0, buf, since(t0));
  }

  std::printf("%s\n", failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED");
  return failures ? 1 : 0;
}
