#include "sperner/svg.hpp"

#include <cmath>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>

#include "sperner/lattice.hpp"

namespace sperner {
namespace {

struct Pt {
  double x = 0;
  double y = 0;
};

constexpr double kMargin = 40.0;
constexpr double kSide = 480.0;
constexpr int kWidth = 560;

double triangle_height() { return kSide * std::sqrt(3.0) / 2.0; }

int canvas_height() {
  return static_cast<int>(std::ceil(2.0 * kMargin + triangle_height()));
}

// Drawing corners for e_1 (top), e_2 (bottom left), e_3 (bottom right).
Pt corner(int i) {
  const double h = triangle_height();
  switch (i) {
  case 0: return {kMargin + kSide / 2.0, kMargin};
  case 1: return {kMargin, kMargin + h};
  default: return {kMargin + kSide, kMargin + h};
  }
}

Pt embed_real(std::span<const double> x) {
  Pt p;
  for (int i = 0; i < 3; ++i) {
    const Pt c = corner(i);
    p.x += x[i] * c.x;
    p.y += x[i] * c.y;
  }
  return p;
}

Pt embed(std::span<const int> a, int q) {
  double x[3];
  for (int i = 0; i < 3; ++i) x[i] = static_cast<double>(a[i]) / q;
  return embed_real(x);
}

// Fixed two-decimal formatting keeps the output byte-stable across runs.
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

const char* color_fill(int c) {
  switch (c) {
  case 1: return "#2e7d32"; // green
  case 2: return "#1565c0"; // blue
  case 3: return "#c62828"; // red
  default: return "#9e9e9e"; // unset
  }
}

std::string points_attr(const Pt* pts, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (i) s += ' ';
    s += fmt(pts[i].x);
    s += ',';
    s += fmt(pts[i].y);
  }
  return s;
}

std::string svg_open(const std::string& title) {
  const int h = canvas_height();
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                  "width=\"" + std::to_string(kWidth) + "\" height=\"" +
                  std::to_string(h) + "\" viewBox=\"0 0 " +
                  std::to_string(kWidth) + " " + std::to_string(h) + "\">\n";
  s += "<title>" + title + "</title>\n";
  return s;
}

void append_triangle(std::string& out, const Pt* pts, const std::string& cls,
                     const std::string& fill, const std::string& stroke,
                     const char* stroke_width) {
  out += "<polygon class=\"" + cls + "\" points=\"" + points_attr(pts, 3) +
         "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
         stroke_width + "\"/>\n";
}

} // namespace

std::string render_labeling_svg(const Labeling& lab) {
  if (lab.k() != 3)
    throw std::invalid_argument("render_labeling_svg: only k = 3 can be drawn");
  const int q = lab.q();

  std::string out = svg_open("simplex labeling k=3 q=" + std::to_string(q));
  out += "<g class=\"cells\">\n";

  auto cell_class = [&](const std::vector<Coords>& verts, bool up,
                        int& mono_color) {
    int c0 = lab.color_at(verts[0]);
    bool mono = c0 > 0;
    bool seen[4] = {false, false, false, false};
    int distinct = 0;
    for (const Coords& v : verts) {
      const int c = lab.color_at(v);
      if (c != c0) mono = false;
      if (c >= 1 && c <= 3 && !seen[c]) {
        seen[c] = true;
        ++distinct;
      }
    }
    mono_color = mono ? c0 : 0;
    std::string cls = up ? "cell up" : "cell down";
    if (up) cls += mono ? " mono color-" + std::to_string(c0) : " nonmono";
    if (distinct == 3) cls += " rainbow";
    return cls;
  };

  for (const Coords& b : enumerate_cells(3, q)) {
    const auto verts = cell_vertices(b);
    Pt pts[3];
    for (int i = 0; i < 3; ++i) pts[i] = embed(verts[i], q);
    int mono_color = 0;
    const std::string cls = cell_class(verts, true, mono_color);
    const bool rainbow = cls.find("rainbow") != std::string::npos;
    append_triangle(out, pts, cls,
                    mono_color > 0 ? color_fill(mono_color) : "#cfd8dc",
                    rainbow ? "#ffab00" : "#263238", rainbow ? "2.5" : "1");
  }
  if (q >= 2) {
    for (const Coords& d : enumerate_down_cells(q)) {
      const auto verts = down_cell_vertices(d);
      Pt pts[3];
      for (int i = 0; i < 3; ++i) pts[i] = embed(verts[i], q);
      int mono_color = 0;
      const std::string cls = cell_class(verts, false, mono_color);
      const bool rainbow = cls.find("rainbow") != std::string::npos;
      append_triangle(out, pts, cls, "none",
                      rainbow ? "#ffab00" : "#90a4ae", rainbow ? "2.5" : "0.75");
    }
  }
  out += "</g>\n<g class=\"vertices\">\n";

  const double r = std::min(6.0, 120.0 / q);
  lab.lattice().for_each([&](std::span<const int> a) {
    const int c = lab.color_at(a);
    const Pt p = embed(a, q);
    out += "<circle class=\"vertex color-" + std::to_string(c) + "\" cx=\"" +
           fmt(p.x) + "\" cy=\"" + fmt(p.y) + "\" r=\"" + fmt(r) +
           "\" fill=\"" + color_fill(c) +
           "\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n";
  });
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_voronoi_svg(const VoronoiSpec& spec) {
  if (spec.k() != 3)
    throw std::invalid_argument("render_voronoi_svg: only k = 3 can be drawn");
  const auto& z = spec.z;

  std::string out = svg_open("voronoi partition k=3");
  Pt tri[3] = {corner(0), corner(1), corner(2)};
  append_triangle(out, tri, "simplex", "#fdfdfd", "#263238", "1.5");

  const Pt zp = embed_real(z);
  out += "<g class=\"cuts\">\n";
  // Between parts i and j the cut is the segment from z to the point of the
  // opposite edge (x_l = 0) where x_i - z_i = x_j - z_j, i.e.
  // x_i = (1 + z_i - z_j)/2.
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const int l = 3 - i - j;
      double x[3] = {0, 0, 0};
      x[i] = (1.0 + z[i] - z[j]) / 2.0;
      x[j] = 1.0 - x[i];
      x[l] = 0.0;
      const Pt e = embed_real(x);
      out += "<line class=\"cut cut-" + std::to_string(i + 1) + "-" +
             std::to_string(j + 1) + "\" x1=\"" + fmt(zp.x) + "\" y1=\"" +
             fmt(zp.y) + "\" x2=\"" + fmt(e.x) + "\" y2=\"" + fmt(e.y) +
             "\" stroke=\"#6a1b9a\" stroke-width=\"2\"/>\n";
    }
  }
  out += "</g>\n";
  out += "<circle class=\"base-point\" cx=\"" + fmt(zp.x) + "\" cy=\"" +
         fmt(zp.y) + "\" r=\"5.00\" fill=\"#6a1b9a\"/>\n";

  for (int i = 0; i < 3; ++i) {
    const Pt c = corner(i);
    const Pt p = {0.6 * c.x + 0.4 * zp.x, 0.6 * c.y + 0.4 * zp.y};
    out += "<text class=\"part-label\" x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y) +
           "\" font-size=\"20\" text-anchor=\"middle\" fill=\"" +
           color_fill(i + 1) + "\">A" + std::to_string(i + 1) + "</text>\n";
  }

  char content[32];
  std::snprintf(content, sizeof(content), "%.6f",
                separating_set_content_exact(3));
  out += std::string("<text class=\"annotation\" x=\"") + fmt(kMargin) +
         "\" y=\"" + fmt(canvas_height() - 12.0) +
         "\" font-size=\"16\" fill=\"#263238\">separating content = "
         "sqrt(3/2) = " + content + "</text>\n";
  out += "</svg>\n";
  return out;
}

} // namespace sperner
