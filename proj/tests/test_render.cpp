#include <doctest.h>

#include "structlogic/optics.hpp"
#include "structlogic/render.hpp"

using namespace structlogic;
using namespace structlogic::optics;
using render::RenderSpec;

TEST_CASE("a bare cell renders as a single dot") {
  const auto g = make_grid(1, 1);
  CHECK(render::render(g, std::nullopt, {}) == ".\n");
}

TEST_CASE("ascii uses one character per cell kind") {
  auto g = make_grid(2, 3);
  g.set(0, 0, Cell::black);
  g.set(0, 1, Cell::mirror_fwd);
  g.set(0, 2, Cell::mirror_rev);
  g.set(1, 0, Cell::half_fwd);
  g.set(1, 1, Cell::half_rev);
  CHECK(render::render(g, std::nullopt, {}) == "#\\/\n%&.\n");
}

TEST_CASE("ascii path overlay marks traversed cells") {
  const auto g = make_grid(1, 3);
  const auto t = trace(g, {Side::west, 0});
  RenderSpec spec;
  spec.show_paths = true;
  CHECK(render::render(g, t, spec) == "***\n");
}

TEST_CASE("svg contains the ray polyline") {
  const auto g = gate_grid(GateName::AND);
  const auto sealed = apply_inputs(g, {{"A", dualrail::bit1}, {"B", dualrail::bit1}});
  const auto t = trace(sealed, {Side::east, 1});
  RenderSpec spec;
  spec.format = RenderSpec::Format::svg;
  const auto doc = render::render(sealed, t, spec);
  CHECK(doc.find("<svg") != std::string::npos);
  CHECK(doc.find("<polyline") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  const auto g = gate_grid(GateName::OR);
  RenderSpec spec;
  spec.format = RenderSpec::Format::svg;
  CHECK(render::render(g, std::nullopt, spec) ==
        render::render(g, std::nullopt, spec));
}

TEST_CASE("cell size must be positive") {
  RenderSpec spec;
  spec.cell_size = 0;
  CHECK_THROWS_AS(render::render(make_grid(1, 1), std::nullopt, spec), Error);
}
