#include "lelong/svg.hpp"

#include <algorithm>
#include <cmath>

#include "lelong/error.hpp"
#include "lelong/io.hpp"

namespace lelong {

namespace {

constexpr int kDigits = 6;
constexpr double kInner = kSvgCanvas - 2 * kSvgMargin;

std::string num(double x) { return format_fixed(x, kDigits); }

std::string header() {
  const std::string s = std::to_string(kSvgCanvas);
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + s + "\" height=\"" + s + "\" viewBox=\"0 0 " + s +
         " " + s + "\">\n<rect x=\"" + std::to_string(kSvgMargin) + "\" y=\"" + std::to_string(kSvgMargin) +
         "\" width=\"" + num(kInner) + "\" height=\"" + num(kInner) + "\" fill=\"none\" stroke=\"#888\"/>\n";
}

std::string point(char cmd, double x, double y) { return std::string(1, cmd) + num(x) + ' ' + num(y); }

}  // namespace

std::string torus_svg(const Eigenvalue& lambda, cplx alpha, double r, int loops, std::size_t samples) {
  if (loops < 1) throw Error(ErrorKind::Domain, "loops must be positive");
  if (samples < 2) throw Error(ErrorKind::Domain, "need at least two samples per loop");
  const double scale = kInner / kTwoPi;
  std::string out = header();
  for (int n = 0; n < loops; ++n) {
    const auto pts = torus_curve(lambda, alpha * std::polar(1.0, lambda.value() * kTwoPi * n), r, kTwoPi, samples);
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      // arg z runs 0 .. 2 pi within a loop; its endpoint wraps to 0, so pin it to the right edge.
      const double az = i + 1 == pts.size() ? kTwoPi : pts[i].arg_z;
      const double x = kSvgMargin + scale * az;
      const double y = kSvgCanvas - kSvgMargin - scale * pts[i].arg_w;
      const bool jump = i > 0 && std::abs(pts[i].arg_w - pts[i - 1].arg_w) > kPi;
      if (!d.empty()) d += ' ';
      d += point(i == 0 || jump ? 'M' : 'L', x, y);
    }
    out += "<path d=\"" + d + "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1\"/>\n";
  }
  return out + "</svg>\n";
}

std::string schedule_svg(const LelongEstimate& est) {
  if (est.rs.empty()) throw Error(ErrorKind::Domain, "empty schedule");
  const double lo = std::log(est.rs.back());
  const double hi = std::log(est.rs.front());
  const double span = hi > lo ? hi - lo : 1.0;
  double top = 0.0;
  for (double nu : est.nus) top = std::max(top, nu);
  if (!(top > 0.0)) top = 1.0;
  std::string out = header();
  std::string d;
  std::string dots;
  for (std::size_t i = 0; i < est.rs.size(); ++i) {
    const double x = kSvgMargin + kInner * (hi - std::log(est.rs[i])) / span;
    const double y = kSvgCanvas - kSvgMargin - kInner * est.nus[i] / top;
    if (!d.empty()) d += ' ';
    d += point(i == 0 ? 'M' : 'L', x, y);
    dots += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"3\"/>\n";
  }
  out += "<path d=\"" + d + "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n" + dots;
  out += "<text x=\"" + std::to_string(kSvgCanvas / 2) + "\" y=\"" + std::to_string(kSvgCanvas - 10) +
         "\" text-anchor=\"middle\">log r</text>\n";
  out += "<text x=\"12\" y=\"" + std::to_string(kSvgCanvas / 2) + "\">nu</text>\n";
  return out + "</svg>\n";
}

}  // namespace lelong
