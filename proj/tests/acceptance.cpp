// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are pinned in the checks themselves.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "qchan/quantumness.hpp"
#include "qchan/sweep.hpp"

using namespace qchan;

namespace {

int g_failures = 0;

void report(int id, const std::string& title, bool pass,
            const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", id,
              title.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

// --------------------------------------------------------------------------
// 1. Closed-form agreement for the dephasing families at 1e-12
// --------------------------------------------------------------------------
void criterion_1() {
  double worst = 0.0;

  const double nm_times[] = {0, 5, 10, 15.8, 25, 63, 100, 311, 1000, 5000};
  const double m_times[] = {0, 0.3, 0.5, 1, 2, 5, 10, 50, 100, 500};
  for (double t : nm_times) {
    const RtnParams p{0.05, 0.001, t};
    worst = std::max(worst, std::abs(quantumness(rtn_channel(p)) -
                                     reference_quantumness(ZooParams{p})));
  }
  for (double t : m_times) {
    const RtnParams p{0.07, 1.0, t};
    worst = std::max(worst, std::abs(quantumness(rtn_channel(p)) -
                                     reference_quantumness(ZooParams{p})));
  }

  for (double alpha : {0.0, 0.5, 1.0})
    for (double p : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5}) {
      const NmdParams np{alpha, p, 1.0};
      worst = std::max(worst, std::abs(quantumness(nmd_channel(np)) -
                                       reference_quantumness(ZooParams{np})));
    }

  for (int i = 0; i < 20; ++i) {
    const PdParams pp{std::numbers::pi / 2 * i / 19.0};
    worst = std::max(worst, std::abs(quantumness(pd_channel(pp)) -
                                     reference_quantumness(ZooParams{pp})));
  }

  report(1, "eigen-pipeline Q matches RTN/NMD/PD closed forms within 1e-12",
         worst <= 1e-12, "max |diff| = " + std::to_string(worst));
}

// --------------------------------------------------------------------------
// 2. RTN long-time limits
// --------------------------------------------------------------------------
void criterion_2() {
  const RtnParams p{0.05, 0.001, 1e5};
  const KrausChannel ch = rtn_channel(p);
  const double q = quantumness(ch);
  const double f = average_fidelity_analytic(ch);
  const bool pass = q < 1e-6 && std::abs(f - 2.0 / 3.0) < 1e-6;
  report(2, "RTN t->inf: Q(1e5) < 1e-6 and |F - 2/3| < 1e-6", pass,
         "Q = " + std::to_string(q) + ", |F - 2/3| = " +
             std::to_string(std::abs(f - 2.0 / 3.0)));
}

// --------------------------------------------------------------------------
// 3. NMD endpoint at p = 1/2
// --------------------------------------------------------------------------
void criterion_3() {
  double worst = 0.0;
  for (double alpha : {0.1, 0.5, 1.0}) {
    const KrausChannel ch = nmd_channel({alpha, 0.5, 1.0});
    // limits of the closed forms at p = 1/2: Q = alpha^2/4,
    // F = (2 - alpha/2)/3
    worst = std::max(worst, std::abs(quantumness(ch) - alpha * alpha / 4.0));
    worst = std::max(worst, std::abs(average_fidelity_analytic(ch) -
                                     (2.0 - alpha / 2.0) / 3.0));
  }
  report(3, "NMD p=1/2: Q = a^2/4 and F = (2 - a/2)/3 within 1e-12",
         worst <= 1e-12, "max |diff| = " + std::to_string(worst));
}

// --------------------------------------------------------------------------
// 4. Amplitude-damping piecewise form and its branch crossover
// --------------------------------------------------------------------------
void criterion_4() {
  double worst = 0.0;
  for (int i = 1; i <= 200; ++i) {
    const double s = static_cast<double>(i) / 200.0;
    const GadParams p{0.0, 1.0, -2.0 * std::log(s)};
    const double xi = 1.0 - p.s();
    const double expected = xi <= 1.0 / 6.0
                                ? 0.5 * (6.0 * xi * xi - 3.0 * xi + 2.0)
                                : 1.0 - xi;
    worst = std::max(worst, std::abs(quantumness(gad_channel(p)) - expected));
  }

  // locate the crossover from the pipeline itself: sign change of
  // L_zz - L_xx as a function of xi
  auto branch_gap = [](double xi) {
    const GadParams p{0.0, 1.0, -2.0 * std::log(1.0 - xi)};
    const Mat3 l = l_matrix(affine_rep(gad_channel(p))).matrix();
    return l(2, 2) - l(0, 0);
  };
  double lo = 0.05, hi = 0.45;
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (branch_gap(lo) * branch_gap(mid) <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  const double crossover = 0.5 * (lo + hi);

  const bool pass = worst <= 1e-12 && std::abs(crossover - 1.0 / 6.0) <= 1e-9;
  report(4, "AD piecewise matches on 200-step s grid; crossover xi = 1/6",
         pass,
         "max |diff| = " + std::to_string(worst) +
             ", crossover = " + std::to_string(crossover));
}

// --------------------------------------------------------------------------
// 5. Average fidelity: closed forms at 1e-12, Monte Carlo at 3 sigma
// --------------------------------------------------------------------------
void criterion_5() {
  std::vector<ZooParams> grid;
  for (double t : {0.0, 5.0, 15.0, 40.0, 100.0, 1000.0})
    grid.push_back(RtnParams{0.05, 0.001, t});
  for (double t : {0.5, 2.0, 10.0, 100.0})
    grid.push_back(RtnParams{0.07, 1.0, t});
  for (double alpha : {0.0, 0.5, 1.0})
    for (double p : {0.1, 0.3, 0.5}) grid.push_back(NmdParams{alpha, p, 1.0});
  for (int i = 0; i < 10; ++i)
    grid.push_back(PdParams{std::numbers::pi / 2 * i / 9.0});
  for (double n : {0.0, 2.0, 50.0})
    for (double t : {0.05, 0.4, 1.2}) grid.push_back(GadParams{n, 1.0, t});
  for (int i = 0; i < 10; ++i) grid.push_back(UnruhParams{0.75 * i / 9.0});

  double worst_closed = 0.0;
  for (const ZooParams& params : grid)
    worst_closed = std::max(
        worst_closed,
        std::abs(average_fidelity_analytic(make_channel(params)) -
                 reference_avg_fidelity(params)));

  const std::vector<ZooParams> mc_points = {
      RtnParams{0.05, 0.001, 5.0},  RtnParams{0.05, 0.001, 15.0},
      RtnParams{0.05, 0.001, 40.0}, RtnParams{0.07, 1.0, 0.5},
      RtnParams{0.07, 1.0, 2.0},    NmdParams{0.0, 0.1, 1.0},
      NmdParams{0.5, 0.25, 1.0},    NmdParams{1.0, 0.5, 1.0},
      NmdParams{0.3, 0.4, 1.0},     NmdParams{1.0, 0.1, 1.0},
      PdParams{0.2},                PdParams{0.5},
      PdParams{0.9},                PdParams{1.2},
      PdParams{1.5},                GadParams{0.0, 1.0, 0.3},
      GadParams{0.0, 1.0, 1.0},     GadParams{2.0, 1.0, 0.2},
      GadParams{50.0, 1.0, 0.05},   GadParams{2.0, 1.0, 0.7},
      UnruhParams{0.1},             UnruhParams{0.3},
      UnruhParams{0.5},             UnruhParams{0.65},
      UnruhParams{0.75}};

  double worst_sigma = 0.0;
  double worst_stderr = 0.0;
  std::uint64_t seed = 2026;
  for (const ZooParams& params : mc_points) {
    const KrausChannel ch = make_channel(params);
    const FidelityEstimate est = average_fidelity_mc(ch, 1000000, seed++);
    const double diff = std::abs(est.mean - average_fidelity_analytic(ch));
    worst_sigma = std::max(worst_sigma, diff / est.std_error);
    worst_stderr = std::max(worst_stderr, est.std_error);
  }

  const bool pass =
      worst_closed <= 1e-12 && worst_sigma <= 3.0 && worst_stderr < 5e-4;
  report(5,
         "avg fidelity: closed forms within 1e-12; MC(1e6) within 3 sigma, "
         "stderr < 5e-4",
         pass,
         "max closed |diff| = " + std::to_string(worst_closed) +
             ", max |diff|/stderr = " + std::to_string(worst_sigma) +
             ", max stderr = " + std::to_string(worst_stderr));
}

// --------------------------------------------------------------------------
// 6. CPTP validation across the zoo (including GAD at n = 50)
// --------------------------------------------------------------------------
void criterion_6() {
  std::vector<ZooParams> grid;
  for (double t : {0.0, 5.0, 15.0, 40.0, 100.0})
    grid.push_back(RtnParams{0.05, 0.001, t});
  for (double t : {0.0, 0.5, 2.0, 10.0, 100.0})
    grid.push_back(RtnParams{0.07, 1.0, t});
  for (double alpha : {0.0, 0.5, 1.0})
    for (double p : {0.05, 0.25, 0.5}) grid.push_back(NmdParams{alpha, p, 1.0});
  grid.push_back(NmdParams{1.0, 0.0, 1.0});
  for (int i = 0; i < 10; ++i)
    grid.push_back(PdParams{std::numbers::pi / 2 * i / 9.0});
  for (double n : {0.0, 2.0, 50.0})
    for (double t : {0.02, 0.2, 1.5}) grid.push_back(GadParams{n, 1.0, t});
  grid.push_back(GadParams{50.0, 1.0, 0.2});
  for (int i = 0; i < 10; ++i)
    grid.push_back(UnruhParams{(std::numbers::pi / 4 - 1e-6) * i / 9.0});

  double worst_residual = 0.0;
  double worst_choi = 1.0;
  for (const ZooParams& params : grid) {
    const KrausChannel ch = make_channel(params);
    worst_residual = std::max(worst_residual, completeness_residual(ch));
    worst_choi = std::min(worst_choi, choi_matrix(ch).eigenvalues()[3]);
  }
  const bool pass = worst_residual <= 1e-12 && worst_choi >= -1e-10;
  report(6,
         "all zoo channels CPTP: completeness residual <= 1e-12, min Choi "
         "eigenvalue >= -1e-10",
         pass,
         "max residual = " + std::to_string(worst_residual) +
             ", min Choi eigenvalue = " + std::to_string(worst_choi));
}

// --------------------------------------------------------------------------
// 7. Fig. 1 qualitative reproduction
// --------------------------------------------------------------------------
void criterion_7() {
  const auto presets = figure_presets("fig1");
  const auto nm_rows = run_sweep(presets[0]);
  const auto m_rows = run_sweep(presets[1]);

  int crossings = 0;
  for (std::size_t i = 1; i < nm_rows.size(); ++i) {
    const double a = nm_rows[i - 1].f_analytic - 2.0 / 3.0;
    const double b = nm_rows[i].f_analytic - 2.0 / 3.0;
    if (a * b < 0.0) ++crossings;
  }

  int m_crossings = 0;
  bool monotone = true;
  for (std::size_t i = 1; i < m_rows.size(); ++i) {
    const double a = m_rows[i - 1].f_analytic - 2.0 / 3.0;
    const double b = m_rows[i].f_analytic - 2.0 / 3.0;
    if (a * b < 0.0) ++m_crossings;
    if (m_rows[i].f_analytic > m_rows[i - 1].f_analytic + 1e-15)
      monotone = false;
  }

  const bool pass = crossings >= 3 && m_crossings == 0 && monotone;
  report(7,
         "fig1 presets: non-Markovian F crosses 2/3 >= 3 times; Markovian F "
         "monotone, no crossing",
         pass,
         "crossings = " + std::to_string(crossings) +
             ", Markovian crossings = " + std::to_string(m_crossings) +
             (monotone ? ", monotone" : ", NOT monotone"));
}

// --------------------------------------------------------------------------
// 8. Documented divergences from the printed closed forms
// --------------------------------------------------------------------------
void criterion_8() {
  std::string detail;
  bool pass = true;

  // Unruh at cos^2 r = 0.9: pipeline gives 0.88, printed form says 0.9.
  const UnruhParams up{std::acos(std::sqrt(0.9))};
  const double q_unruh = quantumness(unruh_channel(up));
  if (std::abs(q_unruh - 0.88) > 1e-12) {
    pass = false;
    detail += "unruh pipeline Q = " + std::to_string(q_unruh) + " != 0.88; ";
  }
  if (std::abs(reference_quantumness(ZooParams{up}) - 0.9) > 1e-12) {
    pass = false;
    detail += "unruh reference not transcribed as cos^2 r; ";
  }

  // GAD at n = 2.  Oracle route: sort the diagonal of L built from the
  // numerically extracted (A, B) and sum the two smallest entries directly,
  // bypassing the Jacobi solver.
  const double n = 2.0;
  auto oracle_q = [&](double t) {
    const AffineRep rep = affine_rep(gad_channel({n, 1.0, t}));
    const Mat3 l = l_matrix(rep).matrix();
    double d[3] = {l(0, 0), l(1, 1), l(2, 2)};
    std::sort(d, d + 3);
    return d[0] + d[1];
  };

  // continuity on a t grid
  double max_jump = 0.0;
  double prev = quantumness(gad_channel({n, 1.0, 0.0}));
  for (int i = 1; i <= 400; ++i) {
    const double q = quantumness(gad_channel({n, 1.0, 2.0 * i / 400.0}));
    max_jump = std::max(max_jump, std::abs(q - prev));
    prev = q;
  }
  if (max_jump > 0.02) {
    pass = false;
    detail += "GAD n=2 witness jumps by " + std::to_string(max_jump) + "; ";
  }

  // crossover from the pipeline must sit at s* = 5/(4n^2+4n+6) = 1/6
  const double s_star = 5.0 / (4.0 * n * n + 4.0 * n + 6.0);
  auto gap = [&](double t) {
    const Mat3 l = l_matrix(affine_rep(gad_channel({n, 1.0, t}))).matrix();
    return l(2, 2) - l(0, 0);
  };
  double lo = 0.1, hi = 2.0;
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (gap(lo) * gap(mid) <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  const double t_star = 0.5 * (lo + hi);
  const double s_at_cross = GadParams{n, 1.0, t_star}.s();
  if (std::abs(s_at_cross - s_star) > 1e-9) {
    pass = false;
    detail += "pipeline crossover s = " + std::to_string(s_at_cross) +
              " != " + std::to_string(s_star) + "; ";
  }

  // past the crossover the witness equals s (pipeline and oracle agree)
  for (double t : {0.75, 1.0, 1.5, 2.0}) {
    const double s = GadParams{n, 1.0, t}.s();
    const double q = quantumness(gad_channel({n, 1.0, t}));
    if (std::abs(q - s) > 1e-12 || std::abs(oracle_q(t) - s) > 1e-12) {
      pass = false;
      detail += "past-crossover Q != s at t = " + std::to_string(t) + "; ";
    }
  }

  // before the crossover the pipeline must NOT match the printed form: the
  // printed first branch omits the s^2/2 term, so the gap equals s^2/2
  const double theta = GadParams{n, 1.0, 0.0}.theta();
  for (double t : {0.05, 0.2, 0.4}) {
    const GadParams p{n, 1.0, t};
    const double s = p.s();
    const double printed = 0.5 * s + 2.5 * (2.0 * theta - 1.0) *
                                         (2.0 * theta - 1.0) * (1.0 - s) *
                                         (1.0 - s);
    const double gap_to_printed =
        std::abs(quantumness(gad_channel(p)) - printed);
    if (std::abs(gap_to_printed - 0.5 * s * s) > 1e-9) {
      pass = false;
      detail += "pipeline silently matches the printed GAD form at t = " +
                std::to_string(t) + "; ";
    }
  }

  report(8,
         "documented divergences: Unruh Q(cos^2 r = 0.9) = 0.88; GAD n=2 "
         "continuous, Q = s past s* = 1/6, printed form differs by s^2/2",
         pass, detail.empty() ? "all divergences reproduced" : detail);
}

// --------------------------------------------------------------------------
// 9. Determinism of figure presets
// --------------------------------------------------------------------------
void criterion_9() {
  bool pass = true;
  std::string detail;
  for (const char* name : {"fig1", "fig2", "fig3", "fig4", "fig5"}) {
    for (SweepConfig cfg : figure_presets(name)) {
      cfg.seed = 97;
      if (std::string(name) == "fig3") cfg.mc_samples = 5000;
      const std::string first = csv_string(run_sweep(cfg));
      const std::string second = csv_string(run_sweep(cfg));
      if (first != second) {
        pass = false;
        detail += std::string(name) + "/" + cfg.label + " differs; ";
      }
    }
  }
  report(9, "figure presets are byte-identical across reruns with one seed",
         pass, detail.empty() ? "all presets reproducible" : detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();

  if (g_failures == 0)
    std::printf("acceptance: all 9 criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
