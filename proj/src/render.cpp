#include "fibchar/render.hpp"

#include <algorithm>
#include <sstream>

namespace fibchar {

namespace {

constexpr int kCell = 24;      // pixel size of one Young diagram cell
constexpr int kMargin = 20;
constexpr int kLegendLine = 18;

const char* kEnvelopeColors[] = {"#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                 "#8c564b", "#17becf"};

void open_svg(std::ostringstream& os, int width, int height) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
     << ' ' << height << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"#ffffff\"/>\n";
}

void draw_rect_outline(std::ostringstream& os, int rows, int cols,
                       const char* color, int strokeWidth, int dash) {
  if (rows <= 0 || cols <= 0) return;
  os << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
     << cols * kCell << "\" height=\"" << rows * kCell << "\" fill=\"none\""
     << " stroke=\"" << color << "\" stroke-width=\"" << strokeWidth << "\"";
  if (dash > 0) os << " stroke-dasharray=\"" << dash << ' ' << dash / 2 + 2 << "\"";
  os << "/>\n";
}

void draw_text(std::ostringstream& os, int x, int y, const std::string& text,
               const char* color = "#000000") {
  os << "<text x=\"" << x << "\" y=\"" << y
     << "\" font-family=\"monospace\" font-size=\"13\" fill=\"" << color
     << "\">" << text << "</text>\n";
}

std::string linear_label(const std::string& var, int slope, int shift) {
  std::ostringstream os;
  if (slope == 0) {
    os << shift;
    return os.str();
  }
  std::string head;
  if (slope == 1)
    head = var;
  else
    head = std::to_string(slope) + var;
  if (shift == 0) return head;
  os << '(' << head << (shift > 0 ? "+" : "-") << std::abs(shift) << ')';
  return os.str();
}

}  // namespace

std::string rect_label(int rowShift, int slope, int colShift) {
  // rows = k + rowShift, cols = slope*k + colShift
  std::string rows = linear_label("k", 1, rowShift);
  if (rowShift != 0) rows = rows;  // parenthesized by linear_label
  return rows + "\xC3\x97" + linear_label("k", slope, colShift);
}

std::string render_durfee_svg(const Partition& p, int l, int n, int m) {
  const DurfeeClass cls = durfee_classify(p, l, n, m);
  const int rows = static_cast<int>(p.parts.size());
  const int cols = p.parts.empty() ? 0 : p.parts[0];

  int figRows = std::max(rows, 1);
  int figCols = std::max(cols, 1);
  int durfRows = 0, durfCols = 0;
  if (cls.hasRect) {
    durfRows = cls.k + n;
    durfCols = (l + 1) * cls.k + m;
    figRows = std::max(figRows, durfRows + 2);
    figCols = std::max(figCols, durfCols + l + 2);
  }
  const int legendLines = 3 + (cls.hasRect ? l : 0);
  const int width = 2 * kMargin + figCols * kCell + 240;
  const int height =
      2 * kMargin + figRows * kCell + kLegendLine * (legendLines + 1);

  std::ostringstream os;
  open_svg(os, width, height);

  // Young diagram cells.
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < p.parts[static_cast<std::size_t>(r)]; ++c)
      os << "<rect x=\"" << kMargin + c * kCell << "\" y=\""
         << kMargin + r * kCell << "\" width=\"" << kCell << "\" height=\""
         << kCell << "\" fill=\"#dce9f5\" stroke=\"#4a6785\" stroke-width=\"1\"/>\n";

  int legendY = kMargin + figRows * kCell + kLegendLine;
  std::ostringstream label;
  if (!cls.hasRect) {
    draw_rect_outline(os, n, m, "#d62728", 3, 6);
    draw_text(os, kMargin, legendY, "class: no " + std::to_string(n) + "\xC3\x97" +
                                        std::to_string(m) + " rectangle");
    legendY += kLegendLine;
  } else {
    draw_rect_outline(os, durfRows, durfCols, "#1f77b4", 3, 0);
    draw_text(os, kMargin, legendY,
              "Durfee rectangle " + std::to_string(durfRows) + "\xC3\x97" +
                  std::to_string(durfCols) + " (k=" + std::to_string(cls.k) +
                  ", class i=" + std::to_string(cls.i) + ")",
              "#1f77b4");
    legendY += kLegendLine;
    for (int i = 1; i <= l; ++i) {
      const int er = durfRows + 1;
      const int ec = durfCols + i;
      const char* color = kEnvelopeColors[(i - 1) % 6];
      draw_rect_outline(os, er, ec, color, 2, 4 + 2 * i);
      draw_text(os, kMargin, legendY,
                "enveloping " + std::to_string(er) + "\xC3\x97" +
                    std::to_string(ec) +
                    (contains_rect(p, er, ec) ? " (contained)" : " (not contained)"),
                color);
      legendY += kLegendLine;
    }
  }
  std::ostringstream parts;
  parts << "partition (";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) parts << ',';
    parts << p.parts[i];
  }
  parts << ")  l=" << l << " n=" << n << " m=" << m;
  draw_text(os, kMargin, legendY, parts.str());
  legendY += kLegendLine;
  draw_text(os, kMargin, legendY,
            "Durfee rectangles " + rect_label(n, l + 1, m) +
                ", enveloping " + rect_label(n + 1, l + 1, m + 1) +
                (l > 1 ? " .. " + rect_label(n + 1, l + 1, m + l) : ""));
  os << "</svg>\n";
  return os.str();
}

std::string render_family_svg(int l, int n, int m, int kmax) {
  if (kmax < 0) throw BadArgument("render_family_svg: negative kmax");
  const int maxRows = kmax + n + 1;
  const int maxCols = (l + 1) * kmax + m + l;
  const int legendLines = kmax + 2;
  const int width = 2 * kMargin + std::max(maxCols, 1) * kCell + 260;
  const int height =
      2 * kMargin + std::max(maxRows, 1) * kCell + kLegendLine * (legendLines + 1);

  std::ostringstream os;
  open_svg(os, width, height);
  int legendY = kMargin + std::max(maxRows, 1) * kCell + kLegendLine;
  for (int k = 0; k <= kmax; ++k) {
    const int rows = k + n;
    const int cols = (l + 1) * k + m;
    draw_rect_outline(os, rows, cols, "#1f77b4", 3, 0);
    for (int i = 1; i <= l; ++i)
      draw_rect_outline(os, rows + 1, cols + i, kEnvelopeColors[(i - 1) % 6], 2,
                        4 + 2 * i);
    if (rows > 0 && cols > 0) {
      draw_text(os, kMargin + cols * kCell + 6, kMargin + rows * kCell - 6,
                "k=" + std::to_string(k), "#1f77b4");
    }
    draw_text(os, kMargin, legendY,
              "k=" + std::to_string(k) + ": Durfee " + std::to_string(rows) +
                  "\xC3\x97" + std::to_string(cols));
    legendY += kLegendLine;
  }
  draw_text(os, kMargin, legendY,
            "Durfee rectangles " + rect_label(n, l + 1, m) +
                (l >= 1 ? ", enveloping " + rect_label(n + 1, l + 1, m + 1) +
                              (l > 1 ? " .. " + rect_label(n + 1, l + 1, m + l)
                                     : "")
                        : ""));
  os << "</svg>\n";
  return os.str();
}

}  // namespace fibchar
