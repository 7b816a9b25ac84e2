// Exhaustive search for 3x3 window-operator layouts of the AND and OR
// gates. Ports are fixed (A north, B south, output east, ground in the
// middle channel); the rail orientation of each port and all 6^9 cell
// matrices are enumerated, and a candidate is accepted when probing the
// output ground reads the full truth table with no ambiguous or dark rows.
// Accepted layouts are frozen into optics.cpp and re-verified by the test
// suite through the real tracer.

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

namespace {

// Cell codes: 0 null, 1 black, 2 mirror "\", 3 mirror "/", 4 half "\",
// 5 half "/".
const char* kTokens[6] = {"0", "i", "1", "-1", "2", "-2"};

// Headings: N=0, E=1, S=2, W=3.
constexpr int kFwd[4] = {3, 2, 1, 0};  // "\" : N->W, E->S, S->E, W->N
constexpr int kRev[4] = {1, 0, 3, 2};  // "/" : N->E, E->W?  no: see note

// Careful: "/" maps E<->N and W<->S.
constexpr int kRevFix[4] = {1, 0, 3, 2};

constexpr int kDr[4] = {-1, 0, 1, 0};
constexpr int kDc[4] = {0, 1, 0, -1};

// Boundary channel ids: side*3 + index, sides N=0,E=1,S=2,W=3.
int exit_channel(int r, int c, int h) {
  switch (h) {
    case 0: return 0 * 3 + c;
    case 1: return 1 * 3 + r;
    case 2: return 2 * 3 + c;
    default: return 3 * 3 + r;
  }
}

struct Entry {
  int r, c, h;
};

Entry entry_state(int channel) {
  const int side = channel / 3;
  const int idx = channel % 3;
  switch (side) {
    case 0: return {0, idx, 2};
    case 1: return {idx, 2, 3};
    case 2: return {2, idx, 0};
    default: return {idx, 0, 1};
  }
}

// Returns the bitmask of boundary channels reached from `entry`, following
// couplers; partner[ch] is the coupled channel or -1.
std::uint16_t trace(const std::array<int, 9>& cells, int entry,
                    const int partner[12]) {
  std::uint64_t visited = 0;
  std::uint16_t exits = 0;
  Entry stack[64];
  int top = 0;
  stack[top++] = entry_state(entry);
  while (top > 0) {
    const Entry s = stack[--top];
    const int key = (s.r * 3 + s.c) * 4 + s.h;
    if (visited & (1ull << key)) continue;
    visited |= (1ull << key);
    const int cell = cells[static_cast<std::size_t>(s.r * 3 + s.c)];
    int outs[2];
    int nouts = 0;
    switch (cell) {
      case 0: outs[nouts++] = s.h; break;
      case 1: break;
      case 2: outs[nouts++] = kFwd[s.h]; break;
      case 3: outs[nouts++] = kRevFix[s.h]; break;
      case 4: outs[nouts++] = s.h; outs[nouts++] = kFwd[s.h]; break;
      case 5: outs[nouts++] = s.h; outs[nouts++] = kRevFix[s.h]; break;
    }
    for (int i = 0; i < nouts; ++i) {
      const int h = outs[i];
      const int nr = s.r + kDr[h];
      const int nc = s.c + kDc[h];
      if (nr >= 0 && nr < 3 && nc >= 0 && nc < 3) {
        if (top < 62) stack[top++] = {nr, nc, h};
        continue;
      }
      const int ch = exit_channel(s.r, s.c, h);
      if (partner[ch] >= 0) {
        if (top < 62) stack[top++] = entry_state(partner[ch]);
        continue;
      }
      exits |= static_cast<std::uint16_t>(1u << ch);
    }
  }
  return exits;
}

struct PortSpec {
  int alpha, ground, beta;  // channel ids
};

// side: N=0,E=1,S=2,W=3; flipped=false puts alpha at index 0.
PortSpec make_port(int side, bool flipped) {
  const int base = side * 3;
  if (!flipped) return {base, base + 1, base + 2};
  return {base + 2, base + 1, base};
}

bool check_gate(const std::array<int, 9>& cells, const PortSpec& pa,
                const PortSpec& pb, const PortSpec& po, bool is_and) {
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      int partner[12];
      std::memset(partner, -1, sizeof partner);
      const int ca = a ? pa.alpha : pa.beta;
      partner[pa.ground] = ca;
      partner[ca] = pa.ground;
      const int cb = b ? pb.alpha : pb.beta;
      partner[pb.ground] = cb;
      partner[cb] = pb.ground;
      const std::uint16_t exits = trace(cells, po.ground, partner);
      const bool alpha = exits & (1u << po.alpha);
      const bool beta = exits & (1u << po.beta);
      const bool expect = is_and ? (a && b) : (a || b);
      if (alpha == beta) return false;  // dark or ambiguous
      if (alpha != expect) return false;
    }
  }
  return true;
}

int count_cells(const std::array<int, 9>& cells) {
  int n = 0;
  for (int c : cells) n += (c != 0);
  return n;
}

void search(bool is_and, int max_print) {
  const char* name = is_and ? "AND" : "OR";
  long long found = 0;
  int best_cost = 99;
  std::array<int, 9> best{};
  PortSpec best_pa{}, best_pb{}, best_po{};
  for (int fa = 0; fa < 2; ++fa) {
    for (int fb = 0; fb < 2; ++fb) {
      for (int fo = 0; fo < 2; ++fo) {
        const PortSpec pa = make_port(0, fa);
        const PortSpec pb = make_port(2, fb);
        const PortSpec po = make_port(1, fo);
        std::array<int, 9> cells{};
        while (true) {
          if (check_gate(cells, pa, pb, po, is_and)) {
            ++found;
            const int cost = count_cells(cells);
            if (cost < best_cost) {
              best_cost = cost;
              best = cells;
              best_pa = pa;
              best_pb = pb;
              best_po = po;
            }
            if (found <= max_print) {
              std::printf("%s solution (orient A%d B%d O%d):", name, fa, fb, fo);
              for (int i = 0; i < 9; ++i) std::printf(" %s", kTokens[cells[static_cast<std::size_t>(i)]]);
              std::printf("\n");
            }
          }
          // odometer
          int i = 0;
          for (; i < 9; ++i) {
            if (++cells[static_cast<std::size_t>(i)] < 6) break;
            cells[static_cast<std::size_t>(i)] = 0;
          }
          if (i == 9) break;
        }
      }
    }
  }
  std::printf("%s: %lld solutions total\n", name, found);
  if (found > 0) {
    std::printf("%s best (%d cells, A alpha@%d B alpha@%d O alpha@%d):\n", name,
                best_cost, best_pa.alpha, best_pb.alpha % 3, best_po.alpha % 3);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c)
        std::printf("%s ", kTokens[best[static_cast<std::size_t>(r * 3 + c)]]);
      std::printf("\n");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  int max_print = 5;
  if (argc > 1) max_print = std::atoi(argv[1]);
  search(true, max_print);
  search(false, max_print);
  return 0;
}
