#include "lelong/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "lelong/error.hpp"

namespace lelong {

namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr std::size_t kMaxPanels = 1u << 15;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  int depth;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const Integrand& f, double a, double b, int depth, std::size_t& evals) {
  const double c = 0.5 * (a + b);
  const double hl = 0.5 * (b - a);
  const Estimate fc = f(c);
  double resk = kWgk[7] * fc.value;
  double resg = kWg[3] * fc.value;
  double resabs = kWgk[7] * std::abs(fc.value);
  double carried = kWgk[7] * fc.error;
  for (int j = 0; j < 7; ++j) {
    const double dx = hl * kXgk[j];
    const Estimate f1 = f(c - dx);
    const Estimate f2 = f(c + dx);
    const double s = f1.value + f2.value;
    resk += kWgk[j] * s;
    resabs += kWgk[j] * (std::abs(f1.value) + std::abs(f2.value));
    carried += kWgk[j] * (f1.error + f2.error);
    if (j % 2 == 1) resg += kWg[j / 2] * s;
  }
  evals += 15;
  const double ahl = std::abs(hl);
  double err = std::abs((resk - resg) * hl);
  err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * resabs * ahl);
  err += carried * ahl;
  if (!std::isfinite(resk)) err = std::numeric_limits<double>::infinity();
  return {a, b, resk * hl, err, depth};
}

}  // namespace

void validate(const QuadratureConfig& cfg) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
    throw Error(ErrorKind::Domain, "quadrature tolerances must be positive");
  if (cfg.max_depth < 1) throw Error(ErrorKind::Domain, "max_depth must be at least 1");
  if (!(cfg.v_tail_cutoff_digits > 0.0))
    throw Error(ErrorKind::Domain, "v_tail_cutoff_digits must be positive");
}

std::vector<double> uniform_breakpoints(double a, double b, std::size_t panels) {
  panels = std::max<std::size_t>(panels, 1);
  std::vector<double> out(panels + 1);
  for (std::size_t i = 0; i <= panels; ++i)
    out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(panels);
  out.back() = b;
  return out;
}

QuadratureResult integrate(const Integrand& f, const std::vector<double>& breakpoints,
                           double rel_tol, double abs_tol, int max_depth) {
  QuadratureResult out;
  if (breakpoints.size() < 2) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Panel> heap;
  std::vector<Panel> frozen;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i + 1] > breakpoints[i])) continue;
    Panel p = gk15(f, breakpoints[i], breakpoints[i + 1], 0, out.evaluations);
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }
  auto target = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };
  std::size_t count = heap.size();
  double frozen_err = 0.0;
  while (total_err > target() && !heap.empty() && count < kMaxPanels) {
    Panel worst = heap.top();
    heap.pop();
    if (worst.depth >= max_depth) {
      frozen.push_back(worst);
      frozen_err += worst.error;
      if (frozen_err > target()) break;
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel l = gk15(f, worst.a, mid, worst.depth + 1, out.evaluations);
    Panel r = gk15(f, mid, worst.b, worst.depth + 1, out.evaluations);
    total += l.value + r.value - worst.value;
    total_err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
    ++count;
  }
  // Re-sum from the panels to drop drift in the running totals.
  double v = 0.0;
  double e = 0.0;
  std::vector<Panel> all = std::move(frozen);
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  for (const auto& p : all) {
    v += p.value;
    e += p.error;
  }
  out.value = v;
  out.error = e;
  out.converged = std::isfinite(v) && e <= std::max(abs_tol, rel_tol * std::abs(v));
  return out;
}

QuadratureResult integrate(const Integrand& f, double a, double b, double rel_tol, double abs_tol,
                           int max_depth) {
  return integrate(f, std::vector<double>{a, b}, rel_tol, abs_tol, max_depth);
}

}  // namespace lelong
