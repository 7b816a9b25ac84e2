#include "structlogic/render.hpp"

#include <set>
#include <sstream>

namespace structlogic::render {

using optics::Cell;
using optics::OpticalGrid;
using optics::TraceResult;

namespace {

char ascii_cell(Cell c) {
  switch (c) {
    case Cell::null_cell: return '.';
    case Cell::black: return '#';
    case Cell::mirror_fwd: return '\\';
    case Cell::mirror_rev: return '/';
    case Cell::half_fwd: return '%';
    case Cell::half_rev: return '&';
  }
  return '?';
}

std::string render_ascii(const OpticalGrid& g,
                         const std::optional<TraceResult>& trace,
                         const RenderSpec& spec) {
  std::set<std::pair<int, int>> hot;
  if (trace && spec.show_paths) {
    for (const auto& path : trace->paths)
      for (const auto& s : path.steps) hot.insert({s.row, s.col});
  }
  std::ostringstream out;
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      if (hot.count({r, c}) && g.at(r, c) == Cell::null_cell)
        out << '*';
      else
        out << ascii_cell(g.at(r, c));
    }
    out << "\n";
  }
  return out.str();
}

std::string render_svg(const OpticalGrid& g,
                       const std::optional<TraceResult>& trace,
                       const RenderSpec& spec) {
  const int s = spec.cell_size;
  const int w = g.cols * s;
  const int h = g.rows * s;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
      << "\">\n";
  out << "<rect width=\"" << w << "\" height=\"" << h
      << "\" fill=\"white\"/>\n";
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      const int x = c * s;
      const int y = r * s;
      out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << s
          << "\" height=\"" << s
          << "\" fill=\"none\" stroke=\"#ccc\" stroke-width=\"1\"/>\n";
      const Cell cell = g.at(r, c);
      switch (cell) {
        case Cell::null_cell:
          break;
        case Cell::black:
          out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << s
              << "\" height=\"" << s << "\" fill=\"black\"/>\n";
          break;
        case Cell::mirror_fwd:
        case Cell::half_fwd:
          out << "<line x1=\"" << x << "\" y1=\"" << y << "\" x2=\"" << x + s
              << "\" y2=\"" << y + s << "\" stroke=\"#333\" stroke-width=\"2\""
              << (cell == Cell::half_fwd ? " stroke-dasharray=\"4 3\"" : "")
              << "/>\n";
          break;
        case Cell::mirror_rev:
        case Cell::half_rev:
          out << "<line x1=\"" << x << "\" y1=\"" << y + s << "\" x2=\""
              << x + s << "\" y2=\"" << y << "\" stroke=\"#333\" stroke-width=\"2\""
              << (cell == Cell::half_rev ? " stroke-dasharray=\"4 3\"" : "")
              << "/>\n";
          break;
      }
    }
  }
  if (trace && spec.show_paths) {
    for (const auto& path : trace->paths) {
      if (path.steps.empty()) continue;
      out << "<polyline fill=\"none\" stroke=\"red\" stroke-width=\"1\" points=\"";
      for (std::size_t i = 0; i < path.steps.size(); ++i) {
        if (i) out << " ";
        const auto& st = path.steps[i];
        out << st.col * s + s / 2 << "," << st.row * s + s / 2;
      }
      out << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const OpticalGrid& g,
                   const std::optional<TraceResult>& trace,
                   const RenderSpec& spec) {
  if (spec.cell_size <= 0) throw Error("cell size must be positive");
  return spec.format == RenderSpec::Format::ascii
             ? render_ascii(g, trace, spec)
             : render_svg(g, trace, spec);
}

}  // namespace structlogic::render
