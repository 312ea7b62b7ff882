#include "fatlab/compounds.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fatlab {

namespace {

// Dihedral rule by the shapes of the two facets meeting at a ridge. Every
// atom kind we build has a single angle per shape pair; construction
// cross-checks each ridge against the tangency geometry.
Rational dihedral_coeff(AtomKind kind, FacetShape s1, FacetShape s2) {
  bool i1 = s1 == FacetShape::Icosa, i2 = s2 == FacetShape::Icosa;
  if (i1 && i2) return Rational(1, 5);
  if (i1 || i2) return Rational(2, 5);
  switch (kind) {
    case AtomKind::Simplex4:
      return Rational(1, 3);
    case AtomKind::Cross4:
      return Rational(1, 2);
    default:
      return Rational(3, 5);
  }
}

AtomType make_atom_type(std::string name, AtomKind kind, VertexModel model,
                        PolytopeLattice lat) {
  AtomType t;
  t.name = std::move(name);
  t.kind = kind;
  t.model = std::move(model);
  t.lattice = std::move(lat);
  const CellComplex& cx = t.lattice.cx;
  auto [v0, v1] = cx.cells_of_dim(0);
  t.n_vertices = v1 - v0;
  if (v0 != 0) throw std::logic_error("atom lattice must start with its vertices");

  auto [r0, r1] = cx.cells_of_dim(2);
  for (long r = r0; r < r1; ++r) {
    DihedralCos2 geo = hyperbolic_dihedral_cos2(t.model, t.lattice, r);
    auto [c2, sgn] = angle_cos2_sign(t.dihedral(r));
    if (!(geo.cos2 == c2) || geo.cos_sign != sgn)
      throw std::logic_error("dihedral table disagrees with the tangent geometry");
  }

  auto [e0, e1] = cx.cells_of_dim(1);
  t.first_edge = e0;
  t.figures.resize(static_cast<size_t>(e1 - e0));
  for (long e = e0; e < e1; ++e) {
    std::map<long, std::vector<long>> fmap;  // facet -> its ridges at e
    for (long r : cx.cover(e))
      for (long f : cx.cover(r)) fmap[f].push_back(r);
    for (auto& [f, rs] : fmap)
      if (rs.size() != 2) throw std::logic_error("edge figure is not a cycle");
    AtomType::EdgeFigure fig;
    long fstart = fmap.begin()->first;
    long f = fstart;
    long r = fmap[f][0];
    do {
      fig.facets.push_back(f);
      fig.ridges.push_back(r);
      fig.corners.push_back(t.dihedral(r));
      const auto& up = cx.cover(r);
      f = up[0] == f ? up[1] : up[0];
      const auto& rs = fmap[f];
      r = rs[0] == r ? rs[1] : rs[0];
    } while (f != fstart);
    if (fig.facets.size() != fmap.size())
      throw std::logic_error("edge figure is not a single cycle");
    AnglePi sum;
    for (const auto& c : fig.corners) sum = sum + c;
    if (sum != AnglePi(Rational(static_cast<long>(fig.facets.size()) - 2)))
      throw std::logic_error("edge figure angles do not sum to (m-2) pi");
    t.figures[static_cast<size_t>(e - e0)] = std::move(fig);
  }
  return t;
}

std::vector<long> global_verts(const AtomInstance& a, long cell) {
  const auto& locals = a.type->lattice.cx.vertex_set(cell);
  std::vector<long> out;
  out.reserve(locals.size());
  for (long lv : locals) out.push_back(a.gv[static_cast<size_t>(lv)]);
  std::sort(out.begin(), out.end());
  return out;
}

AnglePi ridge_class_total(const Compound& c, const std::vector<long>& rkey) {
  AnglePi total;
  for (const auto& s : c.ridge_slots.at(rkey))
    total = total + c.atoms[static_cast<size_t>(s.atom)].type->dihedral(s.cell);
  return total;
}

bool ridge_class_interior(const Compound& c, const std::vector<long>& rkey) {
  for (const auto& s : c.ridge_slots.at(rkey)) {
    const auto& a = c.atoms[static_cast<size_t>(s.atom)];
    for (long f : a.type->lattice.cx.cover(s.cell))
      if (c.facet_slots.at(global_verts(a, f)).size() == 1) return false;
  }
  return true;
}

}  // namespace

bool operator==(const CompoundSlot& a, const CompoundSlot& b) {
  return a.atom == b.atom && a.cell == b.cell;
}

AnglePi AtomType::dihedral(long ridge) const {
  const CellComplex& cx = lattice.cx;
  if (cx.dim_of(ridge) != 2) throw std::invalid_argument("dihedral: cell is not a ridge");
  const auto& up = cx.cover(ridge);
  if (up.size() != 2) throw std::logic_error("ridge not in exactly two facets");
  return AnglePi(dihedral_coeff(kind, lattice.facet_of_cell(up[0]).shape,
                                lattice.facet_of_cell(up[1]).shape));
}

const AtomType::EdgeFigure& AtomType::edge_figure(long edge) const {
  long idx = edge - first_edge;
  if (idx < 0 || idx >= static_cast<long>(figures.size()))
    throw std::invalid_argument("edge_figure: cell is not an edge");
  return figures[static_cast<size_t>(idx)];
}

const AtomType& atom_simplex4() {
  static const AtomType t = [] {
    Build b = build_simplex4();
    return make_atom_type("simplex4", AtomKind::Simplex4, std::move(b.model),
                          std::move(b.lattice));
  }();
  return t;
}

const AtomType& atom_cross4() {
  static const AtomType t = [] {
    Build b = build_cross4();
    return make_atom_type("cross4", AtomKind::Cross4, std::move(b.model),
                          std::move(b.lattice));
  }();
  return t;
}

const AtomType& atom_cell600() {
  static const AtomType t = [] {
    const Cell600& c = cell600();
    return make_atom_type("600-cell", AtomKind::Cell600, c.model, c.lattice);
  }();
  return t;
}

const AtomType& atom_cut600(const std::vector<long>& cuts) {
  static std::map<std::vector<long>, std::unique_ptr<AtomType>> cache;
  static std::mutex mu;
  std::vector<long> key = cuts;
  std::sort(key.begin(), key.end());
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    CutResult cr = cut_600cell(key);
    std::ostringstream name;
    name << "cut600[";
    for (size_t i = 0; i < key.size(); ++i) name << (i ? "," : "") << key[i];
    name << "]";
    auto t = std::make_unique<AtomType>(make_atom_type(
        name.str(), AtomKind::Cut600, std::move(cr.model), std::move(cr.lattice)));
    t->cuts = cr.cuts;
    t->cut_orig = cr.orig_vertex;
    t->cut_new = cr.new_vertex;
    t->cap_cells = cr.icosa_cells;
    it = cache.emplace(std::move(key), std::move(t)).first;
  }
  return *it->second;
}

Compound make_compound(std::vector<AtomInstance> atoms) {
  if (atoms.empty()) throw std::invalid_argument("compound needs at least one atom");
  Compound c;
  c.atoms = std::move(atoms);
  int n = static_cast<int>(c.atoms.size());

  long max_v = -1;
  std::set<std::pair<const AtomType*, std::vector<long>>> distinct;
  for (const auto& a : c.atoms) {
    if (a.type == nullptr) throw std::invalid_argument("atom without a type");
    if (static_cast<long>(a.gv.size()) != a.type->n_vertices)
      throw std::invalid_argument("vertex map size does not match the atom type");
    std::vector<long> sorted = a.gv;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0) throw std::invalid_argument("negative global vertex id");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("vertex map is not injective");
    max_v = std::max(max_v, sorted.back());
    if (!distinct.insert({a.type, std::move(sorted)}).second)
      throw std::invalid_argument("duplicate atom");
  }
  c.n_vertices = max_v + 1;

  for (int ai = 0; ai < n; ++ai) {
    const CellComplex& cx = c.atoms[static_cast<size_t>(ai)].type->lattice.cx;
    for (int d = 1; d <= 3; ++d) {
      auto& slots = d == 3 ? c.facet_slots : d == 2 ? c.ridge_slots : c.edge_slots;
      auto [c0, c1] = cx.cells_of_dim(d);
      for (long cell = c0; cell < c1; ++cell)
        slots[global_verts(c.atoms[static_cast<size_t>(ai)], cell)].push_back({ai, cell});
    }
  }

  // no facet glued twice; glued pairs must agree on their whole closure
  for (const auto& [key, slots] : c.facet_slots) {
    if (slots.size() > 2) throw std::invalid_argument("facet glued more than once");
    if (slots.size() == 2) {
      auto faces = [&](const CompoundSlot& s) {
        std::set<std::vector<long>> out;
        const auto& a = c.atoms[static_cast<size_t>(s.atom)];
        for (long f : a.type->lattice.cx.closure(s.cell)) out.insert(global_verts(a, f));
        return out;
      };
      if (faces(slots[0]) != faces(slots[1]))
        throw std::invalid_argument("glued facets have mismatched face structure");
    }
  }

  // connected through glued facets
  {
    std::vector<int> uf(static_cast<size_t>(n));
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (uf[static_cast<size_t>(x)] != x) {
        uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
        x = uf[static_cast<size_t>(x)];
      }
      return x;
    };
    for (const auto& [key, slots] : c.facet_slots)
      if (slots.size() == 2) uf[static_cast<size_t>(find(slots[0].atom))] = find(slots[1].atom);
    for (int i = 0; i < n; ++i)
      if (find(i) != find(0)) throw std::invalid_argument("compound is not connected");
  }

  // the facet slots at each ridge class, linked in pairs within an atom and
  // across gluings, must form a single path or cycle
  for (const auto& [key, slots] : c.ridge_slots) {
    int k = static_cast<int>(slots.size());
    std::map<int, int> slot_of_atom;
    for (int i = 0; i < k; ++i) slot_of_atom[slots[static_cast<size_t>(i)].atom] = i;
    std::vector<int> glue(static_cast<size_t>(2 * k), -1);
    for (int i = 0; i < k; ++i) {
      const auto& a = c.atoms[static_cast<size_t>(slots[static_cast<size_t>(i)].atom)];
      const auto& up = a.type->lattice.cx.cover(slots[static_cast<size_t>(i)].cell);
      for (int j = 0; j < 2; ++j) {
        auto fkey = global_verts(a, up[static_cast<size_t>(j)]);
        const auto& fs = c.facet_slots.at(fkey);
        if (fs.size() != 2) continue;
        CompoundSlot me{slots[static_cast<size_t>(i)].atom, up[static_cast<size_t>(j)]};
        const CompoundSlot& other = fs[0] == me ? fs[1] : fs[0];
        auto it = slot_of_atom.find(other.atom);
        if (it == slot_of_atom.end())
          throw std::logic_error("glued facet partner misses the ridge class");
        int i2 = it->second;
        const auto& b = c.atoms[static_cast<size_t>(other.atom)];
        const auto& up2 = b.type->lattice.cx.cover(slots[static_cast<size_t>(i2)].cell);
        int j2 = global_verts(b, up2[0]) == fkey ? 0 : 1;
        glue[static_cast<size_t>(2 * i + j)] = 2 * i2 + j2;
      }
    }
    std::vector<int> ends;
    for (int e = 0; e < 2 * k; ++e)
      if (glue[static_cast<size_t>(e)] < 0) ends.push_back(e);
    if (ends.size() != 0 && ends.size() != 2)
      throw std::invalid_argument("inconsistent fan at a ridge");
    std::vector<char> seen(static_cast<size_t>(2 * k), 0);
    int cur = ends.empty() ? 0 : ends[0];
    int count = 0;
    while (!seen[static_cast<size_t>(cur)]) {
      int sib = cur ^ 1;
      seen[static_cast<size_t>(cur)] = seen[static_cast<size_t>(sib)] = 1;
      ++count;
      int nxt = glue[static_cast<size_t>(sib)];
      if (nxt < 0) break;
      cur = nxt;
    }
    if (count != k) throw std::invalid_argument("inconsistent fan at a ridge");
  }

  // around each edge class the atoms must hang together through shared facets
  for (const auto& [key, slots] : c.edge_slots) {
    int k = static_cast<int>(slots.size());
    if (k == 1) continue;
    std::map<int, int> idx;
    for (int i = 0; i < k; ++i) idx[slots[static_cast<size_t>(i)].atom] = i;
    std::vector<int> uf(static_cast<size_t>(k));
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (uf[static_cast<size_t>(x)] != x) {
        uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
        x = uf[static_cast<size_t>(x)];
      }
      return x;
    };
    for (int i = 0; i < k; ++i) {
      const auto& a = c.atoms[static_cast<size_t>(slots[static_cast<size_t>(i)].atom)];
      const auto& fig = a.type->edge_figure(slots[static_cast<size_t>(i)].cell);
      for (long f : fig.facets) {
        const auto& fs = c.facet_slots.at(global_verts(a, f));
        if (fs.size() != 2) continue;
        CompoundSlot me{slots[static_cast<size_t>(i)].atom, f};
        const CompoundSlot& other = fs[0] == me ? fs[1] : fs[0];
        auto it = idx.find(other.atom);
        if (it == idx.end()) throw std::logic_error("glued facet partner misses the edge class");
        uf[static_cast<size_t>(find(i))] = find(it->second);
      }
    }
    for (int i = 0; i < k; ++i)
      if (find(i) != find(0)) throw std::invalid_argument("inconsistent gluing around an edge");
  }

  // the unglued facets with their faces must form a closed 3-sphere candidate
  {
    std::array<std::set<std::vector<long>>, 4> bfaces;
    std::map<std::vector<long>, int> ridge_use;
    for (const auto& [key, slots] : c.facet_slots) {
      if (slots.size() != 1) continue;
      const auto& a = c.atoms[static_cast<size_t>(slots[0].atom)];
      for (long f : a.type->lattice.cx.closure(slots[0].cell)) {
        int d = a.type->lattice.cx.dim_of(f);
        auto k2 = global_verts(a, f);
        if (d == 2) ridge_use[k2] += 1;
        bfaces[static_cast<size_t>(d)].insert(std::move(k2));
      }
      bfaces[3].insert(key);
    }
    long long chi = static_cast<long long>(bfaces[0].size()) - static_cast<long long>(bfaces[1].size()) +
                    static_cast<long long>(bfaces[2].size()) - static_cast<long long>(bfaces[3].size());
    if (chi != 0) throw std::invalid_argument("boundary complex has nonzero Euler characteristic");
    for (const auto& [k2, cnt] : ridge_use)
      if (cnt != 2)
        throw std::invalid_argument("boundary ridge not in exactly two boundary facets");
  }

  return c;
}

std::vector<long long> compound_fvector(const Compound& c) {
  std::array<std::set<std::vector<long>>, 4> bfaces;
  for (const auto& [key, slots] : c.facet_slots) {
    if (slots.size() != 1) continue;
    const auto& a = c.atoms[static_cast<size_t>(slots[0].atom)];
    for (long f : a.type->lattice.cx.closure(slots[0].cell))
      bfaces[static_cast<size_t>(a.type->lattice.cx.dim_of(f))].insert(global_verts(a, f));
    bfaces[3].insert(key);
  }
  std::vector<long long> out(4);
  for (int d = 0; d < 4; ++d) out[static_cast<size_t>(d)] = static_cast<long long>(bfaces[static_cast<size_t>(d)].size());
  return out;
}

ConvexReport check_convex(const Compound& c) {
  ConvexReport rep;
  rep.convex = true;
  const AnglePi pi1{Rational(1)}, pi2{Rational(2)};
  for (const auto& [key, slots] : c.ridge_slots) {
    RidgeReport r;
    r.verts = key;
    r.interior = ridge_class_interior(c, key);
    r.total = ridge_class_total(c, key);
    if (r.interior) {
      r.verdict = r.total == pi2 ? RidgeVerdict::InteriorOk : RidgeVerdict::InteriorDeficient;
      if (r.verdict != RidgeVerdict::InteriorOk) rep.convex = false;
    } else if (r.total < pi1) {
      r.verdict = RidgeVerdict::StrictlyConvex;
    } else if (r.total == pi1) {
      r.verdict = RidgeVerdict::Flat;
      rep.convex = false;
    } else {
      r.verdict = RidgeVerdict::Reflex;
      rep.convex = false;
    }
    rep.ridges.push_back(std::move(r));
  }
  return rep;
}

EdgeLink edge_link(const Compound& c, const std::vector<long>& edge) {
  std::vector<long> key = edge;
  std::sort(key.begin(), key.end());
  if (key.size() != 2) throw std::invalid_argument("edge_link: need two vertices");
  auto it = c.edge_slots.find(key);
  if (it == c.edge_slots.end()) throw std::invalid_argument("edge_link: no such edge");
  const auto& slots = it->second;

  EdgeLink link;
  link.verts = {key[0], key[1]};
  link.tile_count = static_cast<int>(slots.size());

  std::map<int, int> slot_of_atom;
  for (int i = 0; i < link.tile_count; ++i)
    slot_of_atom[slots[static_cast<size_t>(i)].atom] = i;
  auto atom_of = [&](int si) -> const AtomInstance& {
    return c.atoms[static_cast<size_t>(slots[static_cast<size_t>(si)].atom)];
  };
  auto fig_of = [&](int si) -> const AtomType::EdgeFigure& {
    return atom_of(si).type->edge_figure(slots[static_cast<size_t>(si)].cell);
  };
  auto pos_in_fig = [&](int si, long f) {
    const auto& fs = fig_of(si).facets;
    return static_cast<int>(std::find(fs.begin(), fs.end(), f) - fs.begin());
  };

  // ridge classes at the edge, interior ones collected for the report
  {
    std::set<std::vector<long>> interior;
    for (int si = 0; si < link.tile_count; ++si)
      for (long r : fig_of(si).ridges) {
        auto rkey = global_verts(atom_of(si), r);
        if (ridge_class_interior(c, rkey)) interior.insert(std::move(rkey));
      }
    link.interior_ridges.assign(interior.begin(), interior.end());
  }

  // boundary sides: unglued facet slots at the edge
  struct Pos {
    int si;
    long f;
  };
  std::vector<Pos> bsides;
  for (int si = 0; si < link.tile_count; ++si)
    for (long f : fig_of(si).facets)
      if (c.facet_slots.at(global_verts(atom_of(si), f)).size() == 1)
        bsides.push_back({si, f});
  if (bsides.empty()) return link;  // closed link, nothing to walk

  auto pos_key = [&](const Pos& p) {
    return std::make_pair(slots[static_cast<size_t>(p.si)].atom, p.f);
  };
  Pos start = *std::min_element(bsides.begin(), bsides.end(), [&](const Pos& a, const Pos& b) {
    return pos_key(a) < pos_key(b);
  });

  std::vector<Pos> order{start};
  std::vector<AnglePi> corners;
  Pos cur = start;
  long r = fig_of(cur.si).ridges[static_cast<size_t>(pos_in_fig(cur.si, cur.f))];
  while (true) {
    // walk around the fan of r to the next boundary side
    int si = cur.si;
    long f = cur.f;
    long rr = r;
    auto rkey = global_verts(atom_of(si), rr);
    while (true) {
      const auto& up = atom_of(si).type->lattice.cx.cover(rr);
      long f2 = up[0] == f ? up[1] : up[0];
      auto fkey = global_verts(atom_of(si), f2);
      const auto& fs = c.facet_slots.at(fkey);
      if (fs.size() == 1) {
        cur = {si, f2};
        break;
      }
      CompoundSlot me{slots[static_cast<size_t>(si)].atom, f2};
      const CompoundSlot& other = fs[0] == me ? fs[1] : fs[0];
      si = slot_of_atom.at(other.atom);
      f = other.cell;
      const auto& fg = fig_of(si);
      int m = static_cast<int>(fg.facets.size());
      int p = pos_in_fig(si, f);
      long ra = fg.ridges[static_cast<size_t>((p + m - 1) % m)];
      long rb = fg.ridges[static_cast<size_t>(p)];
      rr = global_verts(atom_of(si), ra) == rkey ? ra : rb;
      if (global_verts(atom_of(si), rr) != rkey)
        throw std::logic_error("edge link walk lost its ridge class");
    }
    corners.push_back(ridge_class_total(c, rkey));
    if (pos_key(cur) == pos_key(start)) break;
    order.push_back(cur);
    const auto& fg = fig_of(cur.si);
    int m = static_cast<int>(fg.facets.size());
    int p = pos_in_fig(cur.si, cur.f);
    long ra = fg.ridges[static_cast<size_t>((p + m - 1) % m)];
    long rb = fg.ridges[static_cast<size_t>(p)];
    r = global_verts(atom_of(cur.si), ra) == rkey ? rb : ra;
    if (order.size() > bsides.size()) throw std::logic_error("edge link walk does not close");
  }
  if (order.size() != bsides.size())
    throw std::logic_error("edge link boundary is not a single circuit");

  for (const Pos& p : order)
    link.boundary_sides.push_back({slots[static_cast<size_t>(p.si)].atom, p.f});
  link.corner_sums = corners;

  // unfold into the plane when every tile is a unit triangle or square
  bool unitish = true;
  for (int si = 0; si < link.tile_count; ++si) {
    AtomKind k = atom_of(si).type->kind;
    if (k != AtomKind::Simplex4 && k != AtomKind::Cross4) unitish = false;
  }
  if (unitish) {
    int dir = 0, turn_sum = 0, mask = 0;
    bool ok = true;
    for (const AnglePi& corner : corners) {
      mask |= 1 << dir;
      Rational sixth = Rational(6) * corner.coeff;
      if (denominator(sixth) != 1) {
        ok = false;
        break;
      }
      int steps = 6 - static_cast<int>(numerator(sixth));
      if (steps <= 0) {
        ok = false;  // flat or reflex corner, no convex polygon to unfold
        break;
      }
      dir = (dir + steps) % 12;
      turn_sum += steps;
    }
    if (ok && turn_sum == 12 && std::popcount(static_cast<unsigned>(mask)) == static_cast<int>(corners.size()))
      link.jewel_mask = canonical_direction_mask(mask);
  }
  return link;
}

Compound build_cross_chain(int n, bool caulked) {
  if (n < 1) throw std::invalid_argument("chain needs at least one block");
  const AtomType& cross = atom_cross4();
  const AtomType& simp = atom_simplex4();

  long next = 0;
  std::vector<std::vector<long>> cross_gv;
  {
    std::vector<long> gv(8);
    std::iota(gv.begin(), gv.end(), 0);
    next = 8;
    cross_gv.push_back(std::move(gv));
  }
  for (int i = 1; i < n; ++i) {
    // local 2k is +e_k, local 2k+1 is -e_k; the new block's minus facet
    // lands on the previous block's plus facet
    std::vector<long> gv(8);
    for (int k = 0; k < 4; ++k) {
      gv[static_cast<size_t>(2 * k + 1)] = cross_gv[static_cast<size_t>(i - 1)][static_cast<size_t>(2 * k)];
      gv[static_cast<size_t>(2 * k)] = next++;
    }
    cross_gv.push_back(std::move(gv));
  }

  std::vector<AtomInstance> atoms;
  for (const auto& gv : cross_gv) atoms.push_back({&cross, gv});
  if (caulked) {
    for (int i = 1; i < n; ++i) {
      const auto& left = cross_gv[static_cast<size_t>(i - 1)];
      const auto& right = cross_gv[static_cast<size_t>(i)];
      for (int m = 0; m < 4; ++m) {
        std::vector<long> R;
        for (int a2 = 0; a2 < 4; ++a2)
          if (a2 != m) R.push_back(left[static_cast<size_t>(2 * a2)]);
        long u = left[static_cast<size_t>(2 * m + 1)];
        long w = right[static_cast<size_t>(2 * m)];
        long x = next++, y = next++;
        atoms.push_back({&simp, {R[0], R[1], R[2], u, x}});
        atoms.push_back({&simp, {R[0], R[1], R[2], x, y}});
        atoms.push_back({&simp, {R[0], R[1], R[2], y, w}});
      }
    }
  }
  return make_compound(std::move(atoms));
}

Compound build_cut600_chain(int n) {
  if (n < 1) throw std::invalid_argument("chain needs at least one block");
  if (n == 1) {
    const AtomType& t = atom_cell600();
    std::vector<long> gv(static_cast<size_t>(t.n_vertices));
    std::iota(gv.begin(), gv.end(), 0);
    return make_compound({{&t, std::move(gv)}});
  }

  const Cell600& c6 = cell600();
  // vertex negation is a symmetry carrying the link of 0 onto the link of 1
  std::vector<long> neg(120, -1);
  for (long i = 0; i < 120; ++i) {
    std::vector<QuadNum> m;
    for (const QuadNum& x : c6.model.vertices[static_cast<size_t>(i)]) m.push_back(-x);
    for (long j = 0; j < 120; ++j)
      if (c6.model.vertices[static_cast<size_t>(j)] == m) {
        neg[static_cast<size_t>(i)] = j;
        break;
      }
    if (neg[static_cast<size_t>(i)] < 0) throw std::logic_error("vertex set not centrally symmetric");
  }

  std::vector<const AtomType*> types;
  types.push_back(&atom_cut600({1}));
  for (int i = 1; i < n - 1; ++i) types.push_back(&atom_cut600({0, 1}));
  types.push_back(&atom_cut600({0}));

  long next = 0;
  std::vector<std::vector<long>> gvs;
  for (int i = 0; i < n; ++i) {
    const AtomType* t = types[static_cast<size_t>(i)];
    std::vector<long> gv(static_cast<size_t>(t->n_vertices), -1);
    if (i > 0) {
      const AtomType* p = types[static_cast<size_t>(i - 1)];
      for (long ov : c6.neighbors[0]) {
        long lv = t->cut_new[static_cast<size_t>(ov)];
        long pv = p->cut_new[static_cast<size_t>(neg[static_cast<size_t>(ov)])];
        if (lv < 0 || pv < 0) throw std::logic_error("cap vertex was cut away");
        gv[static_cast<size_t>(lv)] = gvs[static_cast<size_t>(i - 1)][static_cast<size_t>(pv)];
      }
    }
    for (auto& g : gv)
      if (g < 0) g = next++;
    gvs.push_back(std::move(gv));
  }

  std::vector<AtomInstance> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back({types[static_cast<size_t>(i)], gvs[static_cast<size_t>(i)]});
  return make_compound(std::move(atoms));
}

Compound build_cut600_ring(int n_atoms) {
  if (n_atoms < 3) throw std::invalid_argument("ring needs at least three blocks");
  const Cell600& c6 = cell600();

  // second cut vertex: nonadjacent to 0 but sharing a link triangle, so the
  // two caps meet in that triangle
  long w = -1;
  std::vector<long> tri;
  for (long v = 1; v < 120 && w < 0; ++v) {
    if (c6.adjacent(0, v)) continue;
    std::vector<long> common;
    std::set_intersection(c6.neighbors[0].begin(), c6.neighbors[0].end(),
                          c6.neighbors[static_cast<size_t>(v)].begin(),
                          c6.neighbors[static_cast<size_t>(v)].end(), std::back_inserter(common));
    if (common.size() != 3) continue;
    if (!c6.adjacent(common[0], common[1]) || !c6.adjacent(common[0], common[2]) ||
        !c6.adjacent(common[1], common[2]))
      continue;
    w = v;
    tri = common;
  }
  if (w < 0) throw std::logic_error("no second cut vertex shares a link triangle");

  const AtomType& t = atom_cut600({0, w});
  const CellComplex& cx = t.lattice.cx;
  long cap0 = t.cap_cells[0], capw = t.cap_cells[1];
  long la = t.cut_new[static_cast<size_t>(tri[0])], lb = t.cut_new[static_cast<size_t>(tri[1])],
       lc = t.cut_new[static_cast<size_t>(tri[2])];

  // triangle lists of the two cap surfaces
  auto cap_tris = [&](long cap) {
    std::vector<std::vector<long>> tris;
    for (long f : cx.closure(cap))
      if (cx.dim_of(f) == 2) tris.push_back(cx.vertex_set(f));
    std::sort(tris.begin(), tris.end());
    return tris;
  };
  std::vector<std::vector<long>> tris0 = cap_tris(cap0), trisw = cap_tris(capw);
  if (tris0.size() != 20 || trisw.size() != 20) throw std::logic_error("cap is not an icosahedron");

  auto edge_map = [&](const std::vector<std::vector<long>>& tris) {
    std::map<std::pair<long, long>, std::vector<int>> e2t;
    for (int ti = 0; ti < 20; ++ti)
      for (int a2 = 0; a2 < 3; ++a2)
        for (int b2 = a2 + 1; b2 < 3; ++b2)
          e2t[{tris[static_cast<size_t>(ti)][static_cast<size_t>(a2)],
               tris[static_cast<size_t>(ti)][static_cast<size_t>(b2)]}].push_back(ti);
    for (const auto& [e, ts] : e2t)
      if (ts.size() != 2) throw std::logic_error("cap surface edge not in two triangles");
    return e2t;
  };
  auto e2t0 = edge_map(tris0), e2tw = edge_map(trisw);

  // psi: cap0 surface -> capw surface, fixing the shared triangle, grown
  // triangle by triangle across shared edges
  std::vector<long> sharedv{la, lb, lc};
  std::sort(sharedv.begin(), sharedv.end());
  int seed0 = static_cast<int>(std::find(tris0.begin(), tris0.end(), sharedv) - tris0.begin());
  int seedw = static_cast<int>(std::find(trisw.begin(), trisw.end(), sharedv) - trisw.begin());
  if (seed0 == 20 || seedw == 20) throw std::logic_error("shared triangle missing from a cap");

  std::map<long, long> psi;
  for (long v : sharedv) psi[v] = v;
  std::vector<int> image(20, -1);
  image[static_cast<size_t>(seed0)] = seedw;
  std::deque<int> queue{seed0};
  while (!queue.empty()) {
    int ti = queue.front();
    queue.pop_front();
    const auto& tv = tris0[static_cast<size_t>(ti)];
    int tw = image[static_cast<size_t>(ti)];
    for (int a2 = 0; a2 < 3; ++a2)
      for (int b2 = a2 + 1; b2 < 3; ++b2) {
        long u1 = tv[static_cast<size_t>(a2)], u2 = tv[static_cast<size_t>(b2)];
        const auto& pair0 = e2t0.at({u1, u2});
        int tn = pair0[0] == ti ? pair0[1] : pair0[0];
        long thirdn = -1;
        for (long x : tris0[static_cast<size_t>(tn)])
          if (x != u1 && x != u2) thirdn = x;
        long i1 = psi.at(u1), i2 = psi.at(u2);
        auto ekey = std::minmax(i1, i2);
        const auto& pairw = e2tw.at({ekey.first, ekey.second});
        if (pairw[0] != tw && pairw[1] != tw)
          throw std::logic_error("cap iso walk left its edge");
        int twn = pairw[0] == tw ? pairw[1] : pairw[0];
        long ithird = -1;
        for (long x : trisw[static_cast<size_t>(twn)])
          if (x != i1 && x != i2) ithird = x;
        auto [pit, fresh] = psi.emplace(thirdn, ithird);
        if (!fresh && pit->second != ithird) throw std::logic_error("cap iso is inconsistent");
        if (image[static_cast<size_t>(tn)] < 0) {
          image[static_cast<size_t>(tn)] = twn;
          queue.push_back(tn);
        } else if (image[static_cast<size_t>(tn)] != twn) {
          throw std::logic_error("cap iso is inconsistent");
        }
      }
  }
  if (psi.size() != 12) throw std::logic_error("cap iso did not cover the icosahedron");

  // chain the copies cap-to-cap and close the loop
  long N = t.n_vertices;
  std::vector<long> uf(static_cast<size_t>(n_atoms) * static_cast<size_t>(N));
  std::iota(uf.begin(), uf.end(), 0);
  std::function<long(long)> find = [&](long x) {
    while (uf[static_cast<size_t>(x)] != x) {
      uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
      x = uf[static_cast<size_t>(x)];
    }
    return x;
  };
  const auto& cap0_verts = cx.vertex_set(cap0);
  for (int i = 0; i < n_atoms; ++i) {
    int j = (i + 1) % n_atoms;
    for (long x : cap0_verts)
      uf[static_cast<size_t>(find(j * N + x))] = find(i * N + psi.at(x));
  }
  std::vector<long> glob(static_cast<size_t>(n_atoms) * static_cast<size_t>(N), -1);
  long next = 0;
  std::vector<AtomInstance> atoms;
  for (int i = 0; i < n_atoms; ++i) {
    std::vector<long> gv(static_cast<size_t>(N));
    for (long lv = 0; lv < N; ++lv) {
      long root = find(i * N + lv);
      if (glob[static_cast<size_t>(root)] < 0) glob[static_cast<size_t>(root)] = next++;
      gv[static_cast<size_t>(lv)] = glob[static_cast<size_t>(root)];
    }
    atoms.push_back({&t, std::move(gv)});
  }
  return make_compound(std::move(atoms));
}

bool ring_of_ten_check() {
  Compound ring = build_cut600_ring(10);
  ConvexReport rep = check_convex(ring);
  if (!rep.convex) return false;

  // the shared triangle is the unique ridge class with ten atoms
  const std::vector<long>* shared = nullptr;
  for (const auto& [key, slots] : ring.ridge_slots) {
    if (slots.size() == 10) {
      if (shared) return false;
      shared = &key;
    } else if (slots.size() > 2) {
      return false;
    }
  }
  if (!shared) return false;
  if (!ridge_class_interior(ring, *shared)) return false;
  if (ridge_class_total(ring, *shared) != AnglePi(Rational(2))) return false;
  for (const auto& s : ring.ridge_slots.at(*shared))
    if (ring.atoms[static_cast<size_t>(s.atom)].type->dihedral(s.cell) != AnglePi(Rational(1, 5)))
      return false;

  // each edge of the shared triangle sees a decagonal link of ten tiles
  const AnglePi four_fifths{Rational(4, 5)};
  for (int a2 = 0; a2 < 3; ++a2)
    for (int b2 = a2 + 1; b2 < 3; ++b2) {
      EdgeLink link = edge_link(ring, {(*shared)[static_cast<size_t>(a2)], (*shared)[static_cast<size_t>(b2)]});
      if (link.tile_count != 10) return false;
      if (link.corner_sums.size() != 10) return false;
      for (const AnglePi& cs : link.corner_sums)
        if (cs != four_fifths) return false;
      if (link.interior_ridges != std::vector<std::vector<long>>{*shared}) return false;
    }

  // nine copies leave the fan short of a full turn
  Compound nine = build_cut600_ring(9);
  ConvexReport rep9 = check_convex(nine);
  if (rep9.convex) return false;
  bool deficient_found = false;
  for (const auto& r : rep9.ridges)
    if (static_cast<long>(nine.ridge_slots.at(r.verts).size()) == 9) {
      if (r.verdict != RidgeVerdict::InteriorDeficient) return false;
      if (r.total != AnglePi(Rational(9, 5))) return false;
      deficient_found = true;
    }
  return deficient_found;
}

Compound build_edge_bouquet(const std::vector<JewelTile>& tiling) {
  if (tiling.empty()) throw std::invalid_argument("bouquet needs at least one tile");
  std::map<PlanePoint, long> pid;
  for (const auto& tile : tiling)
    for (const auto& p : tile.corners) pid.emplace(p, 0);
  long next = 2;
  for (auto& [p, id] : pid) id = next++;

  const AtomType& simp = atom_simplex4();
  const AtomType& cross = atom_cross4();
  std::vector<AtomInstance> atoms;
  for (const auto& tile : tiling) {
    if (!tile.square) {
      if (tile.corners.size() != 3) throw std::invalid_argument("triangle tile needs 3 corners");
      atoms.push_back({&simp,
                       {0, 1, pid.at(tile.corners[0]), pid.at(tile.corners[1]), pid.at(tile.corners[2])}});
    } else {
      if (tile.corners.size() != 4) throw std::invalid_argument("square tile needs 4 corners");
      // the link of the edge {+e1,+e2} walks the remaining vertices in the
      // cyclic order +e3, -e4, -e3, +e4; the far pair -e1, -e2 stays private
      std::vector<long> gv(8);
      gv[0] = 0;
      gv[2] = 1;
      gv[1] = next++;
      gv[3] = next++;
      gv[4] = pid.at(tile.corners[0]);
      gv[7] = pid.at(tile.corners[1]);
      gv[5] = pid.at(tile.corners[2]);
      gv[6] = pid.at(tile.corners[3]);
      atoms.push_back({&cross, std::move(gv)});
    }
  }
  return make_compound(std::move(atoms));
}

std::vector<std::vector<long>> canonical_atom_sets(std::vector<std::vector<long>> atoms) {
  for (auto& a : atoms) std::sort(a.begin(), a.end());
  std::sort(atoms.begin(), atoms.end());

  // vertices fall into classes by an isomorphism-invariant signature;
  // minimizing over class-respecting relabelings is then well defined
  std::map<long, long> count;
  for (const auto& a : atoms)
    for (long v : a) ++count[v];
  std::map<long, std::vector<std::vector<long>>> prof;
  for (const auto& a : atoms) {
    std::vector<long> profile;
    for (long v : a) profile.push_back(count[v]);
    std::sort(profile.begin(), profile.end());
    for (long v : a) prof[v].push_back(profile);
  }
  for (auto& [v, ps] : prof) std::sort(ps.begin(), ps.end());

  std::map<std::pair<long, std::vector<std::vector<long>>>, std::vector<long>> classes;
  for (const auto& [v, cnt] : count) classes[{cnt, prof[v]}].push_back(v);

  std::vector<std::vector<long>> members;
  std::vector<long> base;
  long off = 0;
  for (const auto& [sig, vs] : classes) {
    members.push_back(vs);
    base.push_back(off);
    off += static_cast<long>(vs.size());
  }
  size_t nc = members.size();
  std::vector<std::vector<int>> perms(nc);
  for (size_t ci = 0; ci < nc; ++ci) {
    perms[ci].resize(members[ci].size());
    std::iota(perms[ci].begin(), perms[ci].end(), 0);
  }

  std::vector<std::vector<long>> best;
  while (true) {
    std::map<long, long> lab;
    for (size_t ci = 0; ci < nc; ++ci)
      for (size_t i = 0; i < members[ci].size(); ++i)
        lab[members[ci][static_cast<size_t>(perms[ci][i])]] = base[ci] + static_cast<long>(i);
    std::vector<std::vector<long>> cur;
    for (const auto& a : atoms) {
      std::vector<long> m;
      for (long v : a) m.push_back(lab[v]);
      std::sort(m.begin(), m.end());
      cur.push_back(std::move(m));
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = std::move(cur);

    size_t ci = 0;
    while (ci < nc && !std::next_permutation(perms[ci].begin(), perms[ci].end())) ++ci;
    if (ci == nc) break;
  }
  return best;
}

std::vector<SimplexCompound> classify_simplex_compounds() {
  const AtomType& simp = atom_simplex4();
  int edge_cap = enumerate_triangle_jewels().max_forced_tiles;

  auto build = [&](const std::vector<std::vector<long>>& st) {
    std::vector<AtomInstance> atoms;
    for (const auto& s : st) atoms.push_back({&simp, s});
    return make_compound(std::move(atoms));
  };

  std::set<std::vector<std::vector<long>>> visited, found;
  std::deque<std::vector<std::vector<long>>> queue;
  std::vector<std::vector<long>> start{{0, 1, 2, 3, 4}};
  visited.insert(start);
  queue.push_back(start);

  while (!queue.empty()) {
    auto st = queue.front();
    queue.pop_front();

    Compound c;
    try {
      c = build(st);
    } catch (const std::invalid_argument&) {
      continue;
    }

    bool dead = false;
    for (const auto& [key, slots] : c.edge_slots)
      if (static_cast<int>(slots.size()) > edge_cap) {
        dead = true;
        break;
      }
    for (const auto& [key, slots] : c.ridge_slots)
      if (dead || static_cast<int>(slots.size()) > 6) {
        dead = true;
        break;
      }
    if (dead) continue;
    ConvexReport rep = check_convex(c);
    for (const auto& r : rep.ridges)
      if (r.verdict == RidgeVerdict::InteriorDeficient) {
        dead = true;
        break;
      }
    if (dead) continue;

    if (rep.convex) found.insert(st);

    // a ridge whose open fan already turned flat or beyond must be finished
    // before anything else; otherwise any boundary facet may grow
    std::vector<std::vector<long>> grow_keys;
    for (const auto& [key, slots] : c.ridge_slots) {
      if (slots.size() < 3 || ridge_class_interior(c, key)) continue;
      for (const auto& s : c.ridge_slots.at(key)) {
        const auto& a = c.atoms[static_cast<size_t>(s.atom)];
        for (long f : a.type->lattice.cx.cover(s.cell)) {
          auto fkey = global_verts(a, f);
          if (c.facet_slots.at(fkey).size() == 1) grow_keys.push_back(std::move(fkey));
        }
      }
      break;  // lex-first forced ridge only
    }
    if (grow_keys.empty())
      for (const auto& [key, slots] : c.facet_slots)
        if (slots.size() == 1) grow_keys.push_back(key);

    long nv = c.n_vertices;
    for (const auto& fkey : grow_keys) {
      for (long v = 0; v <= nv; ++v) {
        if (std::find(fkey.begin(), fkey.end(), v) != fkey.end()) continue;
        std::vector<long> atom = fkey;
        atom.push_back(v);
        std::sort(atom.begin(), atom.end());
        if (std::find(st.begin(), st.end(), atom) != st.end()) continue;
        auto st2 = st;
        st2.push_back(atom);
        std::sort(st2.begin(), st2.end());
        auto can = canonical_atom_sets(st2);
        if (visited.insert(can).second) queue.push_back(std::move(can));
      }
    }
  }

  std::vector<SimplexCompound> out;
  for (const auto& st : found) out.push_back({st, compound_fvector(build(st))});
  std::sort(out.begin(), out.end(), [](const SimplexCompound& a, const SimplexCompound& b) {
    return a.atoms.size() != b.atoms.size() ? a.atoms.size() < b.atoms.size() : a.atoms < b.atoms;
  });
  return out;
}

CrossGluingCensus enumerate_cross_simplex_compounds() {
  // facets of the cross polytope are the 16 sign vectors; two are adjacent
  // when they differ in one sign, so gluable facet sets are the independent
  // sets of the 4-cube graph
  std::vector<unsigned> independent;
  for (unsigned s = 0; s < 65536u; ++s) {
    bool ok = true;
    for (int m = 0; m < 16 && ok; ++m) {
      if (!(s >> m & 1u)) continue;
      for (int i = 0; i < 4; ++i)
        if (s >> (m ^ (1 << i)) & 1u) {
          ok = false;
          break;
        }
    }
    if (ok) independent.push_back(s);
  }

  // symmetry group: coordinate permutations times sign flips; rotations are
  // the elements of positive determinant
  std::vector<std::array<int, 16>> full, rot;
  std::vector<int> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(j)]) ++inversions;
    int psign = inversions % 2 ? -1 : 1;
    for (unsigned t = 0; t < 16; ++t) {
      std::array<int, 16> g{};
      for (int m = 0; m < 16; ++m) {
        int im = 0;
        for (int j = 0; j < 4; ++j) im |= ((m >> p[static_cast<size_t>(j)]) & 1) << j;
        g[static_cast<size_t>(m)] = im ^ static_cast<int>(t);
      }
      full.push_back(g);
      int det = psign * (std::popcount(t) % 2 ? -1 : 1);
      if (det > 0) rot.push_back(g);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  if (full.size() != 384 || rot.size() != 192) throw std::logic_error("wrong symmetry group order");

  auto image = [](unsigned s, const std::array<int, 16>& g) {
    unsigned r = 0;
    for (int m = 0; m < 16; ++m)
      if (s >> m & 1u) r |= 1u << g[static_cast<size_t>(m)];
    return r;
  };

  CrossGluingCensus out;
  std::set<unsigned> reps, rot_reps;
  for (unsigned s : independent) {
    int k = std::popcount(s);
    out.raw_counts[static_cast<size_t>(k)]++;

    unsigned cf = ~0u, cr = ~0u;
    for (const auto& g : full) cf = std::min(cf, image(s, g));
    for (const auto& g : rot) cr = std::min(cr, image(s, g));
    if (reps.insert(cf).second) {
      out.counts[static_cast<size_t>(k)]++;
      std::set<unsigned> orbit;
      for (const auto& g : full) orbit.insert(image(cf, g));
      out.orbits.push_back({k, cf, static_cast<long>(orbit.size())});
    }
    if (rot_reps.insert(cr).second) out.rotation_counts[static_cast<size_t>(k)]++;
  }
  for (int k = 0; k <= 8; ++k) {
    out.total += out.counts[static_cast<size_t>(k)];
    out.rotation_total += out.rotation_counts[static_cast<size_t>(k)];
  }

  long fixed = 0;
  for (const auto& g : full)
    for (unsigned s : independent)
      if (image(s, g) == s) ++fixed;
  if (fixed % 384 != 0) throw std::logic_error("orbit count is not an integer");
  out.burnside_total = fixed / 384;

  std::sort(out.orbits.begin(), out.orbits.end(), [](const CrossGluingOrbit& a, const CrossGluingOrbit& b) {
    return a.k != b.k ? a.k < b.k : a.mask < b.mask;
  });
  return out;
}

}  // namespace fatlab
