#include "yinyang/gadget_lab.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace yinyang {

namespace {

constexpr int kMaxEmpty = 24;

struct Neighbor {
  bool border = false;
  const Tile* tile = nullptr;
};

bool side_has(const std::string& kind, Side s) {
  auto sides = kind_sides(kind);
  return std::find(sides.begin(), sides.end(), s) != sides.end();
}

// Builds the region for one choice of the 8 neighbors, indexed by
// (dr + 1) * 3 + (dc + 1).
BoundaryContext build(const TileSet& ts, const Tile& tile, const std::array<Neighbor, 9>& nb) {
  BoundaryContext ctx;
  ctx.size = ts.size;
  const int d = ctx.dim(), n = ts.size;
  ctx.cells.assign(static_cast<std::size_t>(d) * d, Cell::Unknown);
  ctx.present.assign(static_cast<std::size_t>(d) * d, 1);
  const bool top = nb[1].border, bottom = nb[7].border, left = nb[3].border, right = nb[5].border;
  for (int R = 0; R < d; ++R)
    for (int C = 0; C < d; ++C) {
      const int r = R - BoundaryContext::kMargin, c = C - BoundaryContext::kMargin;
      const int dr = r < 0 ? -1 : r >= n ? 1 : 0, dc = c < 0 ? -1 : c >= n ? 1 : 0;
      const int i = ctx.index(R, C);
      if (dr == 0 && dc == 0) {
        ctx.cells[i] = tile.at(r, c);
        continue;
      }
      const bool off_side = (dc == -1 && left) || (dc == 1 && right);
      if ((dr == -1 && top) || (dr == 1 && bottom) || off_side) {
        ctx.present[i] = 0;
        if (ts.layout == Layout::Tree16 && !off_side) {
          // Appended filler rows: black above the tiles, white below.
          if (dr == -1 && top && r == -1) {
            ctx.cells[i] = Cell::Black;
            ctx.present[i] = 1;
          } else if (dr == 1 && bottom && r == n) {
            ctx.cells[i] = Cell::White;
            ctx.present[i] = 1;
          }
        }
        continue;
      }
      const Tile* t = nb[(dr + 1) * 3 + (dc + 1)].tile;
      Cell v = t->at((r + n) % n, (c + n) % n);
      if (v == Cell::Unknown) throw std::invalid_argument("neighbor tile " + t->kind + " has Empty cells in the margin");
      ctx.cells[i] = v;
    }
  return ctx;
}

std::string context_key(const BoundaryContext& ctx) {
  std::string k;
  k.reserve(ctx.cells.size());
  for (std::size_t i = 0; i < ctx.cells.size(); ++i)
    k.push_back(!ctx.present[i] ? 'x' : ctx.cells[i] == Cell::Black ? 'B' : ctx.cells[i] == Cell::White ? 'W' : '.');
  return k;
}

bool bad_window(Cell a, Cell b, Cell c, Cell d, bool mono_rule) {
  if (a == d && b == c && a != b) return true;
  return mono_rule && a == b && b == c && c == d;
}

}  // namespace

std::vector<BoundaryContext> synthesize_contexts(const TileSet& ts, const std::string& kind) {
  const Tile& tile = ts.tile(kind);
  const std::array<Side, 4> sides = {Side::North, Side::West, Side::East, Side::South};
  const std::array<int, 4> side_slot = {1, 3, 5, 7};
  std::array<std::vector<Neighbor>, 4> side_opts;
  for (int s = 0; s < 4; ++s) {
    const bool port = side_has(kind, sides[s]);
    for (const auto& [k, t] : ts.tiles)
      if (side_has(k, opposite(sides[s])) == port) side_opts[s].push_back({false, &t});
    if (!port) side_opts[s].push_back({true, nullptr});
  }
  std::vector<Neighbor> corner_opts;
  for (const auto& [k, t] : ts.tiles) corner_opts.push_back({false, &t});

  // Corner blocks rarely differ between tiles; deduplicate them first.
  const std::array<int, 4> corner_slot = {0, 2, 6, 8};
  std::array<std::vector<Neighbor>, 4> corners;
  const int n = ts.size;
  for (int q = 0; q < 4; ++q) {
    std::set<std::string> seen;
    const int r0 = q < 2 ? n - 2 : 0, c0 = q % 2 == 0 ? n - 2 : 0;
    for (const Neighbor& o : corner_opts) {
      std::string block;
      for (int r = r0; r < r0 + 2; ++r) block += o.tile->rows[r].substr(c0, 2);
      if (seen.insert(block).second) corners[q].push_back(o);
    }
  }

  std::vector<BoundaryContext> out;
  std::set<std::string> keys;
  std::array<std::size_t, 8> idx{};
  auto limit = [&](int k) { return k < 4 ? side_opts[k].size() : corners[k - 4].size(); };
  while (true) {
    std::array<Neighbor, 9> nb{};
    for (int s = 0; s < 4; ++s) nb[side_slot[s]] = side_opts[s][idx[s]];
    for (int q = 0; q < 4; ++q) nb[corner_slot[q]] = corners[q][idx[4 + q]];
    BoundaryContext ctx = build(ts, tile, nb);
    if (keys.insert(context_key(ctx)).second) {
      std::string desc;
      const char* names[4] = {"N", "W", "E", "S"};
      for (int s = 0; s < 4; ++s) {
        if (!desc.empty()) desc += ' ';
        desc += std::string(names[s]) + "=" + (nb[side_slot[s]].border ? std::string("border") : nb[side_slot[s]].tile->kind);
      }
      ctx.description = desc;
      out.push_back(std::move(ctx));
    }
    int k = 0;
    while (k < 8 && ++idx[k] == limit(k)) idx[k++] = 0;
    if (k == 8) break;
  }
  return out;
}

BoundaryContext standard_context(const TileSet& ts, const std::string& kind) {
  const Tile& tile = ts.tile(kind);
  std::array<Neighbor, 9> nb{};
  const Tile& blank = ts.tile("blank");
  for (auto& x : nb) x.tile = &blank;
  if (side_has(kind, Side::North)) nb[1].tile = &ts.tile("v");
  if (side_has(kind, Side::South)) nb[7].tile = &ts.tile("v");
  if (side_has(kind, Side::West)) nb[3].tile = &ts.tile("h");
  if (side_has(kind, Side::East)) nb[5].tile = &ts.tile("h");
  BoundaryContext ctx = build(ts, tile, nb);
  ctx.description = "standard";
  return ctx;
}

std::vector<LocalCompletion> enumerate_local_completions(const Tile& tile, const BoundaryContext& ctx, Variant v) {
  const std::vector<Pos> empties = tile.empty_cells();
  if (static_cast<int>(empties.size()) > kMaxEmpty)
    throw std::invalid_argument("tile " + tile.kind + " has " + std::to_string(empties.size()) + " Empty cells, bound is 24");
  const bool mono_rule = v != Variant::ConnectedOnly;
  const int d = ctx.dim();
  std::vector<Cell> g = ctx.cells;
  std::vector<int> slot(g.size(), -1);
  for (std::size_t k = 0; k < empties.size(); ++k)
    slot[ctx.index(empties[k].row + BoundaryContext::kMargin, empties[k].col + BoundaryContext::kMargin)] = static_cast<int>(k);

  // Windows are checked when their last Empty cell is assigned.
  std::vector<std::vector<std::array<int, 4>>> due(empties.size() + 1);
  for (int r = 0; r + 1 < d; ++r)
    for (int c = 0; c + 1 < d; ++c) {
      std::array<int, 4> w = {ctx.index(r, c), ctx.index(r, c + 1), ctx.index(r + 1, c), ctx.index(r + 1, c + 1)};
      bool all = true;
      int last = -1;
      for (int i : w) {
        all = all && ctx.present[i];
        last = std::max(last, slot[i]);
      }
      if (!all) continue;
      due[last < 0 ? empties.size() : last].push_back(w);
    }
  auto ok = [&](std::size_t k) {
    for (const auto& w : due[k])
      if (bad_window(g[w[0]], g[w[1]], g[w[2]], g[w[3]], mono_rule)) return false;
    return true;
  };
  std::vector<LocalCompletion> out;
  if (!ok(empties.size())) return out;

  auto sealed = [&]() {
    std::vector<char> seen(g.size(), 0);
    std::vector<int> stack;
    for (int s = 0; s < d * d; ++s) {
      if (!ctx.present[s] || seen[s]) continue;
      bool touches = false;
      seen[s] = 1;
      stack.push_back(s);
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        int xr = x / d, xc = x % d;
        if (xr == 0 || xc == 0 || xr == d - 1 || xc == d - 1) touches = true;
        const int nr[4] = {xr - 1, xr + 1, xr, xr}, nc[4] = {xc, xc, xc - 1, xc + 1};
        for (int q = 0; q < 4; ++q) {
          if (nr[q] < 0 || nc[q] < 0 || nr[q] >= d || nc[q] >= d) continue;
          int y = nr[q] * d + nc[q];
          if (!ctx.present[y]) {
            touches = true;  // puzzle border counts as open
            continue;
          }
          if (!seen[y] && g[y] == g[x]) {
            seen[y] = 1;
            stack.push_back(y);
          }
        }
      }
      if (!touches) return true;
    }
    return false;
  };

  LocalCompletion cur(empties.size());
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == empties.size()) {
      if (!sealed()) out.push_back(cur);
      return;
    }
    const int i = ctx.index(empties[k].row + BoundaryContext::kMargin, empties[k].col + BoundaryContext::kMargin);
    for (Color col : {Color::Black, Color::White}) {
      g[i] = to_cell(col);
      cur[k] = col;
      if (ok(k)) self(self, k + 1);
    }
    g[i] = Cell::Unknown;
  };
  rec(rec, 0);
  return out;
}

int PortSignature::class_of(Side s, int offset, Color c) const {
  for (std::size_t i = 0; i < crossings.size(); ++i)
    if (crossings[i].side == s && crossings[i].offset == offset && crossings[i].color == c) return klass[i];
  return -1;
}

PortSignature port_signature(const Tile& tile, const LocalCompletion& completion, const BoundaryContext& ctx) {
  const int n = tile.size();
  std::vector<Color> col(static_cast<std::size_t>(n) * n);
  std::size_t k = 0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Cell v = tile.at(r, c);
      if (v == Cell::Unknown) {
        if (k >= completion.size()) throw std::invalid_argument("completion too short");
        col[r * n + c] = completion[k++];
      } else {
        col[r * n + c] = to_color(v);
      }
    }
  // Component label per tile cell.
  std::vector<int> comp(col.size(), -1);
  int next = 0;
  for (int s = 0; s < n * n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      int xr = x / n, xc = x % n;
      const int nr[4] = {xr - 1, xr + 1, xr, xr}, nc[4] = {xc, xc, xc - 1, xc + 1};
      for (int q = 0; q < 4; ++q) {
        if (nr[q] < 0 || nc[q] < 0 || nr[q] >= n || nc[q] >= n) continue;
        int y = nr[q] * n + nc[q];
        if (comp[y] < 0 && col[y] == col[x]) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  PortSignature sig;
  std::vector<int> comps;
  const int m = BoundaryContext::kMargin;
  auto visit = [&](Side side, int off, int tr, int tc, int orow, int ocol) {
    if (!ctx.exists(orow, ocol)) return;
    Color inside = col[tr * n + tc];
    if (ctx.at(orow, ocol) != to_cell(inside)) return;
    sig.crossings.push_back({side, off, inside});
    comps.push_back(comp[tr * n + tc]);
  };
  for (int c = 0; c < n; ++c) visit(Side::North, c, 0, c, m - 1, m + c);
  for (int r = 0; r < n; ++r) visit(Side::East, r, r, n - 1, m + r, m + n);
  for (int c = 0; c < n; ++c) visit(Side::South, c, n - 1, c, m + n, m + c);
  for (int r = 0; r < n; ++r) visit(Side::West, r, r, 0, m + r, m - 1);
  // Renumber components in first-seen order so signatures compare cleanly.
  std::vector<int> renum(next, -1);
  int ids = 0;
  for (int cpt : comps) {
    if (renum[cpt] < 0) renum[cpt] = ids++;
    sig.klass.push_back(renum[cpt]);
  }
  return sig;
}

namespace {

// Face index of a white crossing around a tile whose wire uses row wr and column wc.
// Vertex: 0 NW, 1 NE, 2 SW, 3 SE. Edge tiles: 0 or 1 for the two sides of the wire.
int face_of(const std::string& kind, const Crossing& x, int wr, int wc) {
  const bool N = x.side == Side::North, S = x.side == Side::South, E = x.side == Side::East, W = x.side == Side::West;
  const bool lowoff_col = (N || S) && x.offset < wc;
  const bool lowoff_row = (E || W) && x.offset < wr;
  if (kind == "vertex") {
    bool top = N || ((E || W) && x.offset < wr);
    bool leftside = W || ((N || S) && x.offset < wc);
    return (top ? 0 : 2) + (leftside ? 0 : 1);
  }
  if (kind == "h") return (N || lowoff_row) ? 0 : 1;
  if (kind == "v") return (W || lowoff_col) ? 0 : 1;
  if (kind == "ne") return ((N && x.offset > wc) || (E && x.offset < wr)) ? 0 : 1;
  if (kind == "nw") return ((N && x.offset < wc) || (W && x.offset < wr)) ? 0 : 1;
  if (kind == "se") return ((S && x.offset > wc) || (E && x.offset > wr)) ? 0 : 1;
  if (kind == "sw") return ((S && x.offset < wc) || (W && x.offset > wr)) ? 0 : 1;
  return 0;
}

// Distinct faces per white class.
std::vector<std::set<int>> white_faces(const std::string& kind, const PortSignature& sig, int wr, int wc) {
  std::vector<std::set<int>> out;
  for (std::size_t i = 0; i < sig.crossings.size(); ++i) {
    if (sig.crossings[i].color != Color::White) continue;
    if (static_cast<int>(out.size()) <= sig.klass[i]) out.resize(sig.klass[i] + 1);
    out[sig.klass[i]].insert(face_of(kind, sig.crossings[i], wr, wc));
  }
  return out;
}

// Classes of the declared black ports; -1 when a port is not a crossing.
std::vector<int> port_classes(const Tile& tile, const PortSignature& sig) {
  std::vector<int> out;
  for (const Port& p : tile.ports)
    if (p.color == Color::Black) out.push_back(sig.class_of(p.side, p.offset, Color::Black));
  return out;
}

bool all_joined(const std::vector<int>& cls) {
  if (cls.empty()) return true;
  for (int c : cls)
    if (c < 0 || c != cls.front()) return false;
  return true;
}

bool all_separate(const std::vector<int>& cls) {
  std::set<int> s;
  for (int c : cls) {
    if (c < 0) return false;
    s.insert(c);
  }
  return s.size() == cls.size();
}

std::string completion_string(const LocalCompletion& c) {
  std::string s;
  for (Color x : c) s.push_back(color_char(x));
  return s;
}

}  // namespace

CertificationReport certify_tileset(const TileSet& ts) {
  CertificationReport rep;
  auto fail = [&](const std::string& msg) {
    rep.pass = false;
    rep.failures.push_back(msg);
  };
  for (const auto& kind : tile_kinds())
    if (!ts.tiles.count(kind)) fail("missing tile " + kind);
  if (!rep.pass) return rep;

  const Variant v = layout_variant(ts.layout);
  const int n = ts.size, wr = ts.wire_row, wc = ts.wire_col;

  // Static checks: sizes, ports, Empty placement.
  for (const auto& kind : tile_kinds()) {
    const Tile& t = ts.tile(kind);
    if (t.size() != n) {
      fail(kind + ": wrong tile size");
      continue;
    }
    std::set<Side> want;
    for (Side s : kind_sides(kind)) want.insert(s);
    std::set<Side> have;
    for (const Port& p : t.ports) {
      if (p.color != Color::Black) continue;
      have.insert(p.side);
      int expect = (p.side == Side::North || p.side == Side::South) ? wc : wr;
      if (p.offset != expect) fail(kind + ": port " + side_char(p.side) + " off the wire line");
      int r = p.side == Side::North ? 0 : p.side == Side::South ? n - 1 : p.offset;
      int c = p.side == Side::West ? 0 : p.side == Side::East ? n - 1 : p.offset;
      if (t.at(r, c) != Cell::Black) fail(kind + ": port signature mismatch (port " + side_char(p.side) + " cell is not black)");
    }
    if (have != want) fail(kind + ": port signature mismatch (declared ports do not match kind)");
    auto empties = t.empty_cells();
    if (kind != "vertex" && !empties.empty()) fail(kind + ": only the vertex tile may contain Empty cells");
    for (Pos p : empties)
      if (p.row < 2 || p.col < 2 || p.row > n - 3 || p.col > n - 3) {
        fail(kind + ": Empty cell too close to the tile boundary");
        break;
      }
    if (static_cast<int>(empties.size()) > kMaxEmpty) fail(kind + ": more than 24 Empty cells");
  }
  if (!rep.pass) return rep;

  // Seams between every legal pair of neighbors.
  const bool mono_rule = v != Variant::ConnectedOnly;
  for (const auto& [ka, a] : ts.tiles)
    for (const auto& [kb, b] : ts.tiles) {
      if (side_has(ka, Side::East) == side_has(kb, Side::West)) {
        for (int r = 0; r + 1 < n; ++r) {
          Cell w[4] = {a.at(r, n - 1), b.at(r, 0), a.at(r + 1, n - 1), b.at(r + 1, 0)};
          if (std::find(w, w + 4, Cell::Unknown) != w + 4) continue;
          if (bad_window(w[0], w[1], w[2], w[3], mono_rule))
            fail("seam window violation: " + ka + " | " + kb + " at row " + std::to_string(r));
        }
      }
      if (side_has(ka, Side::South) == side_has(kb, Side::North)) {
        for (int c = 0; c + 1 < n; ++c) {
          Cell w[4] = {a.at(n - 1, c), a.at(n - 1, c + 1), b.at(0, c), b.at(0, c + 1)};
          if (std::find(w, w + 4, Cell::Unknown) != w + 4) continue;
          if (bad_window(w[0], w[1], w[2], w[3], mono_rule))
            fail("seam window violation: " + ka + " / " + kb + " at col " + std::to_string(c));
        }
      }
    }
  if (!rep.pass) return rep;

  for (const auto& kind : tile_kinds()) {
    const Tile& t = ts.tile(kind);
    std::vector<BoundaryContext> ctxs = synthesize_contexts(ts, kind);
    std::optional<std::pair<LocalCompletion, LocalCompletion>> seen_pair;
    bool tile_ok = true;
    for (const BoundaryContext& ctx : ctxs) {
      ++rep.contexts_checked;
      auto comps = enumerate_local_completions(t, ctx, v);
      const std::string where = kind + " [" + ctx.description + "]";
      if (kind != "vertex") {
        if (comps.size() != 1) {
          fail(where + ": expected 1 completion, found " + std::to_string(comps.size()));
          tile_ok = false;
          break;
        }
        PortSignature sig = port_signature(t, comps[0], ctx);
        if (!all_joined(port_classes(t, sig))) {
          fail(where + ": port signature mismatch (wire ports not joined)");
          tile_ok = false;
          break;
        }
        if (kind != "blank")
          for (const auto& faces : white_faces(kind, sig, wr, wc))
            if (faces.size() > 1) {
              fail(where + ": port signature mismatch (white class crosses the wire)");
              tile_ok = false;
              break;
            }
        if (!tile_ok) break;
        continue;
      }
      if (comps.size() != 2) {
        fail(where + ": expected 2 completions, found " + std::to_string(comps.size()));
        tile_ok = false;
        break;
      }
      std::optional<LocalCompletion> unbroken, broken;
      for (const auto& c : comps) {
        PortSignature sig = port_signature(t, c, ctx);
        auto cls = port_classes(t, sig);
        auto faces = white_faces(kind, sig, wr, wc);
        if (all_joined(cls)) {
          bool split = std::all_of(faces.begin(), faces.end(), [](const std::set<int>& f) { return f.size() <= 1; });
          if (split) unbroken = c;
        } else if (all_separate(cls)) {
          bool merged = std::any_of(faces.begin(), faces.end(), [](const std::set<int>& f) { return f.size() == 4; });
          if (merged) broken = c;
        }
      }
      if (!unbroken || !broken) {
        fail(where + ": port signature mismatch (need one unbroken and one broken completion)");
        tile_ok = false;
        break;
      }
      if (seen_pair && (seen_pair->first != *unbroken || seen_pair->second != *broken)) {
        fail(where + ": completions depend on the context");
        tile_ok = false;
        break;
      }
      seen_pair = std::make_pair(*unbroken, *broken);
    }
    if (kind == "vertex" && tile_ok && seen_pair) {
      VertexCertificate vc;
      vc.empties = t.empty_cells();
      vc.unbroken = seen_pair->first;
      vc.broken = seen_pair->second;
      int bottom = -1;
      for (Pos p : vc.empties) bottom = std::max(bottom, p.row);
      for (std::size_t i = 0; i < vc.empties.size(); ++i)
        if (vc.empties[i].row == bottom) {
          vc.decisions.push_back(vc.empties[i]);
          if (vc.unbroken[i] != Color::Black || vc.broken[i] != Color::White) {
            fail("vertex: decision row is not black when unbroken and white when broken");
            tile_ok = false;
            break;
          }
        }
      if (tile_ok) {
        rep.vertex = vc;
        rep.notes.push_back("vertex: 2 completions in " + std::to_string(ctxs.size()) + " contexts; unbroken=" +
                            completion_string(vc.unbroken) + " broken=" + completion_string(vc.broken));
      }
    } else if (tile_ok) {
      rep.notes.push_back(kind + ": 1 completion in " + std::to_string(ctxs.size()) + " contexts");
    }
  }
  return rep;
}

}  // namespace yinyang
