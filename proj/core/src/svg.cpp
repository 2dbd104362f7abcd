#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>

#include "ktorbit/webs.hpp"

namespace ktorbit {

namespace {

// Fixed-precision formatting that is independent of the locale.
void append_number(std::string& out, double value, int precision = 4) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, precision);
  std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));
  // Values that round to zero print without a sign.
  if (text.front() == '-' && text.find_first_not_of("-0.") == std::string_view::npos) text.remove_prefix(1);
  out.append(text);
}

void append_path(std::string& out, const Polyline& line, std::string_view cls, bool closed) {
  if (line.size() < 2) return;
  out += "<path class=\"";
  out += cls;
  out += "\" d=\"";
  for (std::size_t i = 0; i < line.size(); ++i) {
    out += i == 0 ? "M" : " L";
    append_number(out, line[i].u);
    out += ' ';
    append_number(out, line[i].v);
  }
  if (closed) out += " Z";
  out += "\"/>\n";
}

}  // namespace

std::string render_svg(const WebDocument& doc, const WebRenderConfig& cfg) {
  const Box& b = cfg.box;
  const double width = b.u1 - b.u0;
  const double height = b.v1 - b.v0;
  const double stroke = std::max(width, height) / 400.0;
  constexpr double pixels = 600.0;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
  append_number(out, pixels, 0);
  out += "\" height=\"";
  append_number(out, pixels * height / width, 0);
  out += "\" viewBox=\"";
  append_number(out, b.u0);
  out += ' ';
  append_number(out, b.v0);
  out += ' ';
  append_number(out, width);
  out += ' ';
  append_number(out, height);
  out += "\">\n<style>\n";
  out += ".fol1{fill:none;stroke:#000000;stroke-width:";
  append_number(out, stroke, 5);
  out += "}\n.fol2{fill:none;stroke:#000000;stroke-width:";
  append_number(out, stroke, 5);
  out += ";stroke-dasharray:";
  append_number(out, 6 * stroke, 5);
  out += ' ';
  append_number(out, 4 * stroke, 5);
  out += "}\n.sing-boundary{fill:none;stroke:#888888;stroke-width:";
  append_number(out, 2 * stroke, 5);
  out += "}\n.sing-region{fill:#dddddd;stroke:none}\n</style>\n";
  out += "<rect x=\"";
  append_number(out, b.u0);
  out += "\" y=\"";
  append_number(out, b.v0);
  out += "\" width=\"";
  append_number(out, width);
  out += "\" height=\"";
  append_number(out, height);
  out += "\" fill=\"#ffffff\"/>\n";
  // Flip so that v grows upwards.
  out += "<g transform=\"matrix(1 0 0 -1 0 ";
  append_number(out, b.v0 + b.v1);
  out += ")\">\n";
  for (const auto& region : doc.singular_regions) append_path(out, region, "sing-region", true);
  for (const auto& line : doc.foliation_solid) append_path(out, line, "fol1", false);
  for (const auto& line : doc.foliation_dashed) append_path(out, line, "fol2", false);
  for (const auto& line : doc.singular_boundaries) append_path(out, line, "sing-boundary", false);
  for (const auto& p : doc.singular_points) {
    out += "<circle class=\"sing-boundary\" cx=\"";
    append_number(out, p.u);
    out += "\" cy=\"";
    append_number(out, p.v);
    out += "\" r=\"";
    append_number(out, 3 * stroke, 5);
    out += "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace ktorbit
