#include "circpack/svg.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace circpack {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

std::string render_svg(const Packing& packing, const std::map<int, Rational>& radius, const SvgOptions& options) {
  if (!(options.scale > 0)) throw std::invalid_argument("scale must be positive");
  const double s = options.scale;
  const double bw = packing.bin_width.get_d() * s;
  const double bh = packing.bin_height.get_d() * s;
  const double margin = 10.0;
  const double gap = 0.1 * bw;
  const std::size_t n = packing.bins.size();
  const double width = 2 * margin + static_cast<double>(n) * bw + (n > 1 ? static_cast<double>(n - 1) * gap : 0.0);
  const double height = 2 * margin + (n > 0 ? bh : 0.0);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) + "\" fill=\"white\"/>\n";
  for (std::size_t b = 0; b < n; ++b) {
    const double x0 = margin + static_cast<double>(b) * (bw + gap);
    const double y0 = margin;
    out += "<g id=\"bin" + std::to_string(b) + "\">\n";
    out += "<rect x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" + num(bw) + "\" height=\"" + num(bh) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (options.grid_level > 0) {
      const Rational side = packing.bin_width / pow(Rational(options.grid_base), options.grid_level);
      const double step = side.get_d() * s;
      if (step >= 1.0) {
        for (double x = x0 + step; x < x0 + bw - 1e-9; x += step) {
          out += "<line x1=\"" + num(x) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x) + "\" y2=\"" + num(y0 + bh) +
                 "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
        }
        for (double y = y0 + bh - step; y > y0 + 1e-9; y -= step) {
          out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y) + "\" x2=\"" + num(x0 + bw) + "\" y2=\"" + num(y) +
                 "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
        }
      }
    }
    for (const auto& p : packing.bins[b].placements) {
      auto it = radius.find(p.id);
      if (it == radius.end()) throw std::invalid_argument("no radius for circle " + std::to_string(p.id));
      const double cx = x0 + p.center.x.get_d() * s;
      const double cy = y0 + bh - p.center.y.get_d() * s;
      const double r = it->second.get_d() * s;
      out += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) +
             "\" fill=\"#6fa8dc\" fill-opacity=\"0.8\" stroke=\"#1c4587\" stroke-width=\"0.5\"/>\n";
      if (options.labels) {
        out += "<text x=\"" + num(cx) + "\" y=\"" + num(cy) + "\" font-size=\"" + num(std::max(6.0, r * 0.6)) +
               "\" text-anchor=\"middle\" dominant-baseline=\"central\">" + std::to_string(p.id) + "</text>\n";
      }
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace circpack
