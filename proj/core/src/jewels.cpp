#include "fatlab/jewels.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fatlab {

namespace {

QuadNum q3(long num, long den) { return QuadNum(Rational(num, den), Rational(0), 3); }

QuadNum q3s(long an, long ad, long bn, long bd) {
  return QuadNum(Rational(an, ad), Rational(bn, bd), 3);
}

}  // namespace

bool operator==(const PlanePoint& p, const PlanePoint& q) { return p.x == q.x && p.y == q.y; }

bool operator<(const PlanePoint& p, const PlanePoint& q) {
  int c = quad_cmp(p.x, q.x);
  if (c != 0) return c < 0;
  return quad_cmp(p.y, q.y) < 0;
}

PlanePoint unit_direction(int k) {
  // cos(30k), sin(30k) as a + b*sqrt(3)
  static const std::array<PlanePoint, 12> table = [] {
    std::array<PlanePoint, 12> t;
    const long cs[12][4] = {
        // {cos num, cos sqrt3 num, sin num, sin sqrt3 num}, all over 2
        {2, 0, 0, 0},  {0, 1, 1, 0},  {1, 0, 0, 1},  {0, 0, 2, 0},
        {-1, 0, 0, 1}, {0, -1, 1, 0}, {-2, 0, 0, 0}, {0, -1, -1, 0},
        {-1, 0, 0, -1}, {0, 0, -2, 0}, {1, 0, 0, -1}, {0, 1, -1, 0},
    };
    for (int k = 0; k < 12; ++k) {
      t[k].x = q3s(cs[k][0], 2, cs[k][1], 2);
      t[k].y = q3s(cs[k][2], 2, cs[k][3], 2);
    }
    return t;
  }();
  return table[((k % 12) + 12) % 12];
}

namespace {

PlanePoint add(const PlanePoint& p, const PlanePoint& q) { return {p.x + q.x, p.y + q.y}; }

PlanePoint sub(const PlanePoint& p, const PlanePoint& q) { return {p.x - q.x, p.y - q.y}; }

// sign of cross(q - p, r - p); positive means r lies left of p->q
int orient(const PlanePoint& p, const PlanePoint& q, const PlanePoint& r) {
  PlanePoint u = sub(q, p), v = sub(r, p);
  return quad_sign(u.x * v.y - u.y * v.x);
}

bool strictly_between(const PlanePoint& p, const PlanePoint& a, const PlanePoint& b) {
  if (orient(a, b, p) != 0) return false;
  PlanePoint u = sub(b, a), v = sub(p, a);
  QuadNum t = u.x * v.x + u.y * v.y;
  QuadNum len2 = u.x * u.x + u.y * u.y;
  return quad_sign(t) > 0 && quad_cmp(t, len2) < 0;
}

struct Seg {
  PlanePoint a, b;
  int d{0};  // direction index of b - a
};

// CCW tile at corner p whose first edge points in direction d.
std::vector<PlanePoint> tile_corners(const PlanePoint& p, int d, bool square) {
  PlanePoint b = add(p, unit_direction(d));
  if (!square) return {p, b, add(p, unit_direction(d + 2))};
  PlanePoint n = unit_direction(d + 3);
  return {p, b, add(b, n), add(p, n)};
}

std::vector<Seg> tile_edges(const std::vector<PlanePoint>& c, int d) {
  std::vector<Seg> out;
  int k = static_cast<int>(c.size());
  // a CCW unit triangle turns by 120 degrees at each corner, a square by 90
  int turn = (k == 3) ? 4 : 3;
  int dir = d;
  for (int i = 0; i < k; ++i) {
    out.push_back({c[i], c[(i + 1) % k], ((dir % 12) + 12) % 12});
    dir += turn;
  }
  return out;
}

bool point_in_tile(const PlanePoint& p, const std::vector<PlanePoint>& corners) {
  int k = static_cast<int>(corners.size());
  for (int i = 0; i < k; ++i)
    if (orient(corners[i], corners[(i + 1) % k], p) <= 0) return false;
  return true;
}

bool placement_ok(const std::vector<Seg>& tile, const std::vector<PlanePoint>& corners,
                  const std::vector<Seg>& region) {
  // the interior sits left of region edges and of tile edges alike, so a
  // same-directed coincidence is a flush edge and an opposite-directed one
  // puts the tile on the wrong side of the boundary
  for (const Seg& t : tile) {
    for (const Seg& r : region) {
      if (t.a == r.a && t.b == r.b) continue;
      if (t.a == r.b && t.b == r.a) return false;
      int o1 = orient(t.a, t.b, r.a), o2 = orient(t.a, t.b, r.b);
      int o3 = orient(r.a, r.b, t.a), o4 = orient(r.a, r.b, t.b);
      if (o1 * o2 < 0 && o3 * o4 < 0) return false;  // proper crossing
      if (strictly_between(r.a, t.a, t.b) || strictly_between(r.b, t.a, t.b)) return false;
      if (o1 != 0 || o2 != 0)
        if (strictly_between(t.a, r.a, r.b) || strictly_between(t.b, r.a, r.b)) return false;
    }
  }
  for (const Seg& r : region)
    if (point_in_tile(r.a, corners) || point_in_tile(r.b, corners)) return false;
  return true;
}

// The interior wedge at the placement corner runs counterclockwise from the
// chosen outgoing edge to the nearest other boundary ray; the tile corner
// must fit inside it.
bool wedge_fits(const std::vector<Seg>& region, const PlanePoint& p, int dmin, int tile_steps,
                const Seg* chosen) {
  for (const Seg& s : region) {
    if (s.a == p && &s != chosen) {
      int steps = ((s.d - dmin) % 12 + 12) % 12;
      if (steps < tile_steps) return false;
    }
    if (s.b == p) {
      int steps = ((s.d + 6 - dmin) % 12 + 12) % 12;
      if (steps < tile_steps) return false;
    }
  }
  return true;
}

std::vector<Seg> subtract_tile(std::vector<Seg> region, const std::vector<Seg>& tile) {
  for (const Seg& t : tile) {
    bool cancelled = false;
    for (std::size_t i = 0; i < region.size(); ++i) {
      if (region[i].a == t.a && region[i].b == t.b) {
        region.erase(region.begin() + static_cast<long>(i));
        cancelled = true;
        break;
      }
    }
    if (!cancelled) region.push_back({t.b, t.a, (t.d + 6) % 12});
  }
  return region;
}

constexpr int kTileBudget = 24;

void tile_dfs(std::vector<Seg>& region, bool squares_allowed, std::vector<JewelTile>& acc,
              std::vector<std::vector<JewelTile>>& out) {
  if (region.empty()) {
    out.push_back(acc);
    return;
  }
  if (static_cast<int>(acc.size()) >= kTileBudget)
    throw std::logic_error("jewel tiling exceeded the tile budget");
  // lexicographically smallest region vertex; every completion covers its
  // lowest outgoing edge with a tile cornered there
  const PlanePoint* best = &region.front().a;
  for (const Seg& s : region) {
    if (s.a < *best) best = &s.a;
    if (s.b < *best) best = &s.b;
  }
  PlanePoint p = *best;
  const Seg* chosen = nullptr;
  for (const Seg& s : region)
    if (s.a == p && (chosen == nullptr || s.d < chosen->d)) chosen = &s;
  if (chosen == nullptr) return;  // inconsistent boundary, nothing fits
  int dmin = chosen->d;
  for (int square = 0; square <= (squares_allowed ? 1 : 0); ++square) {
    if (!wedge_fits(region, p, dmin, square != 0 ? 3 : 2, chosen)) continue;
    std::vector<PlanePoint> corners = tile_corners(p, dmin, square != 0);
    std::vector<Seg> edges = tile_edges(corners, dmin);
    if (!placement_ok(edges, corners, region)) continue;
    std::vector<Seg> next = subtract_tile(region, edges);
    acc.push_back({square != 0, corners});
    tile_dfs(next, squares_allowed, acc, out);
    acc.pop_back();
  }
}

}  // namespace

int canonical_direction_mask(int mask) {
  auto rotate = [](int m, int j) {
    return ((m << j) | (m >> (12 - j))) & 0xfff;
  };
  int reflected = 0;
  for (int k = 0; k < 12; ++k)
    if (mask & (1 << k)) reflected |= 1 << ((12 - k) % 12);
  int best = 0xfff + 1;
  for (int j = 0; j < 12; ++j) {
    best = std::min(best, rotate(mask, j));
    best = std::min(best, rotate(reflected, j));
  }
  return best;
}

std::vector<PlanePoint> polygon_of_directions(int mask) {
  std::vector<PlanePoint> pts;
  PlanePoint v{q3(0, 1), q3(0, 1)};
  for (int k = 0; k < 12; ++k) {
    if (!(mask & (1 << k))) continue;
    pts.push_back(v);
    v = add(v, unit_direction(k));
  }
  if (!(v == PlanePoint{q3(0, 1), q3(0, 1)}))
    throw std::invalid_argument("direction subset does not close up");
  return pts;
}

namespace {

struct Candidate {
  int mask;
  int forced_tri, forced_sq;
};

// Forced tile counts from the polygon area p + q*sqrt(3): squares contribute
// 1 each, triangles sqrt(3)/4 each, so n_sq = p and n_tri = 4q.
bool forced_counts(int mask, bool squares_allowed, int* tri, int* sq) {
  std::vector<PlanePoint> pts = polygon_of_directions(mask);
  QuadNum two_area = q3(0, 1);
  int m = static_cast<int>(pts.size());
  for (int i = 0; i < m; ++i) {
    const PlanePoint& a = pts[i];
    const PlanePoint& b = pts[(i + 1) % m];
    two_area = two_area + (a.x * b.y - b.x * a.y);
  }
  Rational p = two_area.a / 2, q = two_area.b / 2;
  Rational ntri = 4 * q;
  if (denominator(ntri) != 1 || denominator(p) != 1) return false;
  if (numerator(p) < 0 || numerator(ntri) < 0) return false;
  if (!squares_allowed && numerator(p) != 0) return false;
  *tri = static_cast<int>(numerator(ntri));
  *sq = static_cast<int>(numerator(p));
  return true;
}

bool zero_sum(int mask) {
  PlanePoint v{q3(0, 1), q3(0, 1)};
  for (int k = 0; k < 12; ++k)
    if (mask & (1 << k)) v = add(v, unit_direction(k));
  return v == PlanePoint{q3(0, 1), q3(0, 1)};
}

std::vector<AnglePi> corner_angles(int mask) {
  std::vector<int> ds;
  for (int k = 0; k < 12; ++k)
    if (mask & (1 << k)) ds.push_back(k);
  std::vector<AnglePi> out;
  int m = static_cast<int>(ds.size());
  for (int i = 0; i < m; ++i) {
    int gap = ds[(i + 1) % m] - ds[i];
    if (gap <= 0) gap += 12;
    out.push_back(AnglePi(Rational(6 - gap, 6)));
  }
  return out;
}

bool has_sharp_corner(int mask) {
  for (const AnglePi& a : corner_angles(mask))
    if (a.coeff < Rational(1, 3)) return true;  // below 60 degrees, no tile fits
  return false;
}

bool squares_share_side(const std::vector<JewelTile>& tiling) {
  auto sides = [](const JewelTile& t) {
    std::vector<std::pair<PlanePoint, PlanePoint>> out;
    int k = static_cast<int>(t.corners.size());
    for (int i = 0; i < k; ++i) {
      PlanePoint a = t.corners[i], b = t.corners[(i + 1) % k];
      if (b < a) std::swap(a, b);
      out.push_back({a, b});
    }
    return out;
  };
  for (std::size_t i = 0; i < tiling.size(); ++i) {
    if (!tiling[i].square) continue;
    auto si = sides(tiling[i]);
    for (std::size_t j = i + 1; j < tiling.size(); ++j) {
      if (!tiling[j].square) continue;
      for (const auto& s : sides(tiling[j]))
        for (const auto& t : si)
          if (s.first == t.first && s.second == t.second) return true;
    }
  }
  return false;
}

JewelCatalog enumerate_jewels(bool squares_allowed, int threads) {
  if (threads < 1) threads = 1;
  std::vector<Candidate> candidates;
  int max_forced = 0;
  for (int mask = 0; mask < (1 << 12); ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) < 3) continue;
    if (canonical_direction_mask(mask) != mask) continue;
    if (!zero_sum(mask)) continue;
    int tri = 0, sq = 0;
    if (!forced_counts(mask, squares_allowed, &tri, &sq)) continue;
    max_forced = std::max(max_forced, tri + sq);
    if (tri + sq > kTileBudget)
      throw std::logic_error("candidate polygon exceeds the tile budget");
    if (has_sharp_corner(mask)) continue;
    candidates.push_back({mask, tri, sq});
  }

  std::vector<Jewel> found(candidates.size());
  std::vector<char> keep(candidates.size(), 0);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const Candidate& c = candidates[i];
      std::vector<PlanePoint> pts = polygon_of_directions(c.mask);
      std::vector<Seg> region;
      int m = static_cast<int>(pts.size());
      std::vector<int> ds;
      for (int k = 0; k < 12; ++k)
        if (c.mask & (1 << k)) ds.push_back(k);
      for (int j = 0; j < m; ++j) region.push_back({pts[j], pts[(j + 1) % m], ds[j]});
      std::vector<JewelTile> acc;
      std::vector<std::vector<JewelTile>> tilings;
      tile_dfs(region, squares_allowed, acc, tilings);
      if (tilings.empty()) continue;
      Jewel jw;
      jw.directions = c.mask;
      jw.sides = m;
      jw.corners = corner_angles(c.mask);
      jw.forced_triangles = c.forced_tri;
      jw.forced_squares = c.forced_sq;
      for (const auto& t : tilings) {
        int tri = 0, sq = 0;
        for (const JewelTile& tile : t) (tile.square ? sq : tri)++;
        if (tri != c.forced_tri || sq != c.forced_sq)
          throw std::logic_error("tiling contradicts the forced tile counts");
      }
      jw.tilings.all = tilings;
      jw.tilings.square_pair_forced = true;
      for (const auto& t : tilings)
        if (!squares_share_side(t)) jw.tilings.square_pair_forced = false;
      found[i] = std::move(jw);
      keep[i] = 1;
    }
  };
  if (threads == 1 || candidates.size() < 2) {
    work(0, candidates.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t n = candidates.size();
    std::size_t chunk = (n + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
    for (int t = 0; t < threads; ++t) {
      std::size_t lo = std::min(n, static_cast<std::size_t>(t) * chunk);
      std::size_t hi = std::min(n, lo + chunk);
      if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  JewelCatalog cat;
  cat.max_forced_tiles = max_forced;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) cat.jewels.push_back(std::move(found[i]));
  std::sort(cat.jewels.begin(), cat.jewels.end(), [](const Jewel& a, const Jewel& b) {
    if (a.sides != b.sides) return a.sides < b.sides;
    return a.directions < b.directions;
  });
  return cat;
}

}  // namespace

JewelCatalog enumerate_triangle_jewels(int threads) { return enumerate_jewels(false, threads); }

JewelCatalog enumerate_square_triangle_jewels(int threads) { return enumerate_jewels(true, threads); }

}  // namespace fatlab
