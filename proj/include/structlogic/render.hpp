#pragma once

#include <optional>
#include <string>

#include "structlogic/optics.hpp"

namespace structlogic::render {

struct RenderSpec {
  enum class Format { ascii, svg };
  Format format = Format::ascii;
  int cell_size = 24;       // svg pixels per cell
  bool show_paths = true;
};

// ASCII: one character per cell ('.' null, '#' black, '\' and '/' mirrors,
// '%' and '&' half mirrors), '*' overlaying cells a traced ray crossed.
// SVG: grid squares, 45-degree segments for mirrors, one polyline per ray
// path. Both renderings are byte-stable for identical inputs.
std::string render(const optics::OpticalGrid& g,
                   const std::optional<optics::TraceResult>& trace,
                   const RenderSpec& spec);

}  // namespace structlogic::render
