#include "fatlab/zoo.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace fatlab {

namespace {

using Vec = std::vector<QuadNum>;

QuadNum dot(const Vec& x, const Vec& y) {
  QuadNum s(Rational(0), Rational(0), 5);
  for (size_t i = 0; i < x.size(); ++i) s = s + x[i] * y[i];
  return s;
}

Vec sub(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

QuadNum qn(long num, long den = 1) { return QuadNum(Rational(num, den), Rational(0), 5); }

}  // namespace

const FacetPlane& PolytopeLattice::facet_of_cell(long cell_id) const {
  auto it = std::lower_bound(facets.begin(), facets.end(), cell_id,
                             [](const FacetPlane& f, long id) { return f.cell < id; });
  if (it == facets.end() || it->cell != cell_id)
    throw std::invalid_argument("facet_of_cell: no hyperplane stored for this cell");
  return *it;
}

Build build_simplex4() {
  Build b;
  b.model.rational_only = true;
  b.model.ambient = 5;
  for (int i = 0; i < 5; ++i) {
    Vec v(5, qn(0));
    v[static_cast<size_t>(i)] = qn(1);
    b.model.vertices.push_back(std::move(v));
  }
  b.model.center.assign(5, QuadNum(Rational(1, 5), Rational(0), 5));
  b.model.subspace_normal = Vec(5, qn(1));
  b.model.r2 = QuadNum(Rational(3, 10), Rational(0), 5);

  // faces are the proper subsets of the vertex set
  std::map<int, long> id_of;
  CellComplex& cx = b.lattice.cx;
  for (int size = 1; size <= 4; ++size) {
    for (int mask = 1; mask < 32; ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      std::vector<long> boundary;
      if (size > 1)
        for (int i = 0; i < 5; ++i)
          if (mask & (1 << i)) boundary.push_back(id_of.at(mask & ~(1 << i)));
      id_of[mask] = cx.add_cell(size - 1, std::move(boundary));
    }
  }
  cx.finalize();
  for (int mask = 1; mask < 32; ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    int missing = 0;
    while (mask & (1 << missing)) ++missing;
    FacetPlane p;
    p.cell = id_of.at(mask);
    p.normal.assign(5, qn(0));
    p.normal[static_cast<size_t>(missing)] = qn(-1);
    p.offset = qn(0);
    p.shape = FacetShape::Tet;
    b.lattice.facets.push_back(std::move(p));
  }
  std::sort(b.lattice.facets.begin(), b.lattice.facets.end(),
            [](const FacetPlane& x, const FacetPlane& y) { return x.cell < y.cell; });
  return b;
}

Build build_cross4() {
  Build b;
  b.model.rational_only = true;
  b.model.ambient = 4;
  // vertex 2i+s is +e_i for s=0, -e_i for s=1
  for (int i = 0; i < 4; ++i)
    for (int s = 0; s < 2; ++s) {
      Vec v(4, qn(0));
      v[static_cast<size_t>(i)] = qn(s == 0 ? 1 : -1);
      b.model.vertices.push_back(std::move(v));
    }
  b.model.center.assign(4, qn(0));
  b.model.r2 = QuadNum(Rational(1, 2), Rational(0), 5);

  CellComplex& cx = b.lattice.cx;
  for (int i = 0; i < 8; ++i) cx.add_cell(0);
  // faces pick a support set of coordinates and one sign per coordinate
  std::map<std::vector<long>, long> id_of;
  for (int size = 2; size <= 4; ++size) {
    for (int support = 0; support < 16; ++support) {
      if (__builtin_popcount(support) != size) continue;
      std::vector<int> coords;
      for (int i = 0; i < 4; ++i)
        if (support & (1 << i)) coords.push_back(i);
      for (int signs = 0; signs < (1 << size); ++signs) {
        std::vector<long> verts;
        for (int j = 0; j < size; ++j)
          verts.push_back(2 * coords[static_cast<size_t>(j)] + ((signs >> j) & 1));
        std::sort(verts.begin(), verts.end());
        std::vector<long> boundary;
        if (size == 2) {
          boundary = verts;
        } else {
          for (int j = 0; j < size; ++j) {
            std::vector<long> sub_verts;
            for (int t = 0; t < size; ++t)
              if (t != j) sub_verts.push_back(verts[static_cast<size_t>(t)]);
            boundary.push_back(id_of.at(sub_verts));
          }
        }
        long id = cx.add_cell(size - 1, std::move(boundary));
        id_of[verts] = id;
        if (size == 4) {
          FacetPlane p;
          p.cell = id;
          p.normal.assign(4, qn(0));
          for (int j = 0; j < 4; ++j)
            p.normal[static_cast<size_t>(coords[static_cast<size_t>(j)])] =
                qn(((signs >> j) & 1) ? -1 : 1);
          p.offset = qn(1);
          p.shape = FacetShape::Tet;
          b.lattice.facets.push_back(std::move(p));
        }
      }
    }
  }
  cx.finalize();
  std::sort(b.lattice.facets.begin(), b.lattice.facets.end(),
            [](const FacetPlane& x, const FacetPlane& y) { return x.cell < y.cell; });
  return b;
}

namespace {

std::vector<Vec> make_600cell_vertices() {
  std::vector<Vec> vs;
  const QuadNum half(Rational(1, 2), Rational(0), 5);
  const QuadNum phi_half(Rational(1, 4), Rational(1, 4), 5);     // phi/2
  const QuadNum inv_phi_half(Rational(-1, 4), Rational(1, 4), 5);  // 1/(2 phi)
  for (int i = 0; i < 4; ++i)
    for (int s = 0; s < 2; ++s) {
      Vec v(4, qn(0));
      v[static_cast<size_t>(i)] = qn(s == 0 ? 1 : -1);
      vs.push_back(std::move(v));
    }
  for (int mask = 0; mask < 16; ++mask) {
    Vec v(4);
    for (int k = 0; k < 4; ++k)
      v[static_cast<size_t>(k)] = (mask >> k) & 1 ? -half : half;
    vs.push_back(std::move(v));
  }
  // even permutations of (phi, 1, 1/phi, 0)/2 with free signs on the
  // nonzero slots
  std::vector<int> perm{0, 1, 2, 3};
  const QuadNum mag[3] = {phi_half, half, inv_phi_half};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
    if (inversions % 2 != 0) continue;
    for (int smask = 0; smask < 8; ++smask) {
      Vec v(4, qn(0));
      for (int j = 0; j < 3; ++j) {
        QuadNum val = mag[j];
        if ((smask >> j) & 1) val = -val;
        v[static_cast<size_t>(perm[static_cast<size_t>(j)])] = val;
      }
      vs.push_back(std::move(v));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return vs;
}

Cell600 build_600cell_data() {
  Cell600 c;
  c.model.rational_only = false;
  c.model.ambient = 4;
  c.model.vertices = make_600cell_vertices();
  c.model.center.assign(4, qn(0));
  c.model.r2 = QuadNum(Rational(5, 8), Rational(1, 8), 5);  // (5 + sqrt 5)/8

  const long n = static_cast<long>(c.model.vertices.size());
  if (n != 120) throw std::logic_error("600-cell: vertex generation failed");
  {
    std::set<std::vector<std::pair<Rational, Rational>>> uniq;
    for (const auto& v : c.model.vertices) {
      std::vector<std::pair<Rational, Rational>> key;
      for (const auto& x : v) key.emplace_back(x.a, x.b);
      uniq.insert(std::move(key));
    }
    if (static_cast<long>(uniq.size()) != n)
      throw std::logic_error("600-cell: duplicate vertices");
  }

  const QuadNum edge_dot(Rational(1, 4), Rational(1, 4), 5);  // cos(pi/5)
  c.neighbors.assign(static_cast<size_t>(n), {});
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j)
      if (dot(c.model.vertices[static_cast<size_t>(i)],
              c.model.vertices[static_cast<size_t>(j)]) == edge_dot) {
        c.neighbors[static_cast<size_t>(i)].push_back(j);
        c.neighbors[static_cast<size_t>(j)].push_back(i);
      }
  for (long i = 0; i < n; ++i) {
    auto& nb = c.neighbors[static_cast<size_t>(i)];
    std::sort(nb.begin(), nb.end());
    if (nb.size() != 12) throw std::logic_error("600-cell: vertex degree is not 12");
  }
  auto adjacent = [&](long i, long j) {
    const auto& nb = c.neighbors[static_cast<size_t>(i)];
    return std::binary_search(nb.begin(), nb.end(), j);
  };

  CellComplex& cx = c.lattice.cx;
  for (long v = 0; v < n; ++v) cx.add_cell(0);
  std::vector<std::array<long, 3>> triangles;
  std::vector<std::array<long, 4>> tets;
  for (long i = 0; i < n; ++i)
    for (long j : c.neighbors[static_cast<size_t>(i)]) {
      if (j < i) continue;
      long eid = cx.add_cell(1, {i, j});
      c.cell_by_verts[{i, j}] = eid;
      for (long k : c.neighbors[static_cast<size_t>(i)])
        if (k > j && adjacent(j, k)) triangles.push_back({i, j, k});
    }
  for (const auto& t : triangles) {
    long tid = cx.add_cell(2, {c.cell_by_verts.at({t[0], t[1]}), c.cell_by_verts.at({t[0], t[2]}),
                               c.cell_by_verts.at({t[1], t[2]})});
    c.cell_by_verts[{t[0], t[1], t[2]}] = tid;
    for (long l : c.neighbors[static_cast<size_t>(t[2])])
      if (l > t[2] && adjacent(t[0], l) && adjacent(t[1], l)) tets.push_back({t[0], t[1], t[2], l});
  }
  if (triangles.size() != 1200) throw std::logic_error("600-cell: triangle count");
  if (tets.size() != 600) throw std::logic_error("600-cell: tetrahedron count");
  for (const auto& t : tets) {
    long id = cx.add_cell(3, {c.cell_by_verts.at({t[0], t[1], t[2]}),
                              c.cell_by_verts.at({t[0], t[1], t[3]}),
                              c.cell_by_verts.at({t[0], t[2], t[3]}),
                              c.cell_by_verts.at({t[1], t[2], t[3]})});
    c.cell_by_verts[{t[0], t[1], t[2], t[3]}] = id;
  }
  cx.finalize();

  // supporting hyperplane x.u = 1 through each tetrahedron's vertices
  for (const auto& t : tets) {
    std::array<Vec, 4> rows;
    Vec rhs(4, qn(1));
    for (int r = 0; r < 4; ++r) rows[static_cast<size_t>(r)] = c.model.vertices[static_cast<size_t>(t[static_cast<size_t>(r)])];
    for (int col = 0; col < 4; ++col) {
      int piv = -1;
      for (int r = col; r < 4; ++r)
        if (quad_sign(rows[static_cast<size_t>(r)][static_cast<size_t>(col)]) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::logic_error("600-cell: singular facet system");
      std::swap(rows[static_cast<size_t>(col)], rows[static_cast<size_t>(piv)]);
      std::swap(rhs[static_cast<size_t>(col)], rhs[static_cast<size_t>(piv)]);
      for (int r = 0; r < 4; ++r) {
        if (r == col) continue;
        QuadNum factor = rows[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                         rows[static_cast<size_t>(col)][static_cast<size_t>(col)];
        if (quad_sign(factor) == 0) continue;
        for (int cc = 0; cc < 4; ++cc)
          rows[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
              rows[static_cast<size_t>(r)][static_cast<size_t>(cc)] -
              factor * rows[static_cast<size_t>(col)][static_cast<size_t>(cc)];
        rhs[static_cast<size_t>(r)] = rhs[static_cast<size_t>(r)] - factor * rhs[static_cast<size_t>(col)];
      }
    }
    FacetPlane p;
    p.cell = c.cell_by_verts.at({t[0], t[1], t[2], t[3]});
    p.normal.resize(4);
    for (int i = 0; i < 4; ++i)
      p.normal[static_cast<size_t>(i)] =
          rhs[static_cast<size_t>(i)] / rows[static_cast<size_t>(i)][static_cast<size_t>(i)];
    p.offset = qn(1);
    p.shape = FacetShape::Tet;
    c.lattice.facets.push_back(std::move(p));
  }
  std::sort(c.lattice.facets.begin(), c.lattice.facets.end(),
            [](const FacetPlane& x, const FacetPlane& y) { return x.cell < y.cell; });

  // strict support check over all remaining vertices
  for (const auto& p : c.lattice.facets) {
    const auto& on_facet = c.lattice.cx.vertex_set(p.cell);
    for (long v = 0; v < n; ++v) {
      int s = quad_sign(dot(c.model.vertices[static_cast<size_t>(v)], p.normal) - p.offset);
      bool member = std::binary_search(on_facet.begin(), on_facet.end(), v);
      if (member ? s != 0 : s >= 0)
        throw std::logic_error("600-cell: facet hyperplane fails strict support");
    }
  }
  return c;
}

}  // namespace

bool Cell600::adjacent(long i, long j) const {
  const auto& nb = neighbors[static_cast<size_t>(i)];
  return std::binary_search(nb.begin(), nb.end(), j);
}

const Cell600& cell600() {
  static const Cell600 instance = build_600cell_data();
  return instance;
}

CutResult cut_600cell(const std::vector<long>& vertices_to_cut) {
  const Cell600& base = cell600();
  const long n = 120;

  CutResult r;
  r.cuts = vertices_to_cut;
  std::sort(r.cuts.begin(), r.cuts.end());
  if (std::adjacent_find(r.cuts.begin(), r.cuts.end()) != r.cuts.end())
    throw std::invalid_argument("cut_600cell: repeated cut vertex");
  for (long v : r.cuts)
    if (v < 0 || v >= n) throw std::invalid_argument("cut_600cell: vertex id out of range");
  for (size_t i = 0; i < r.cuts.size(); ++i)
    for (size_t j = i + 1; j < r.cuts.size(); ++j)
      if (base.adjacent(r.cuts[i], r.cuts[j]))
        throw std::invalid_argument("cut_600cell: cut vertices must be pairwise non-adjacent");

  std::vector<bool> cut(static_cast<size_t>(n), false);
  for (long v : r.cuts) cut[static_cast<size_t>(v)] = true;

  r.new_vertex.assign(static_cast<size_t>(n), -1);
  for (long v = 0; v < n; ++v) {
    if (cut[static_cast<size_t>(v)]) continue;
    r.new_vertex[static_cast<size_t>(v)] = static_cast<long>(r.orig_vertex.size());
    r.orig_vertex.push_back(v);
    r.model.vertices.push_back(base.model.vertices[static_cast<size_t>(v)]);
  }
  r.model.rational_only = false;
  r.model.ambient = 4;
  r.model.center.assign(4, qn(0));
  r.model.r2 = base.model.r2;

  const CellComplex& bc = base.lattice.cx;
  auto survives = [&](long cell_id) {
    for (long v : bc.vertex_set(cell_id))
      if (cut[static_cast<size_t>(v)]) return false;
    return true;
  };

  CellComplex& cx = r.lattice.cx;
  std::vector<long> remap(static_cast<size_t>(bc.n_cells()), -1);
  for (long v = 0; v < n; ++v)
    if (!cut[static_cast<size_t>(v)]) remap[static_cast<size_t>(v)] = cx.add_cell(0);
  for (int d = 1; d <= 3; ++d) {
    auto [a, b] = bc.cells_of_dim(d);
    for (long id = a; id < b; ++id) {
      if (!survives(id)) continue;
      std::vector<long> boundary;
      for (long s : bc.cell(id).boundary) boundary.push_back(remap[static_cast<size_t>(s)]);
      remap[static_cast<size_t>(id)] = cx.add_cell(d, std::move(boundary));
    }
    if (d == 3) {
      // icosahedral caps close the holes, one per cut vertex
      for (long v : r.cuts) {
        const auto& nb = base.neighbors[static_cast<size_t>(v)];
        std::vector<long> boundary;
        for (size_t x = 0; x < nb.size(); ++x)
          for (size_t y = x + 1; y < nb.size(); ++y) {
            if (!base.adjacent(nb[x], nb[y])) continue;
            for (size_t z = y + 1; z < nb.size(); ++z) {
              if (!base.adjacent(nb[x], nb[z]) || !base.adjacent(nb[y], nb[z])) continue;
              long tri = base.cell_by_verts.at({nb[x], nb[y], nb[z]});
              boundary.push_back(remap[static_cast<size_t>(tri)]);
            }
          }
        if (boundary.size() != 20) throw std::logic_error("cut_600cell: cap is not an icosahedron");
        long cap = cx.add_cell(3, std::move(boundary));
        r.icosa_cells.push_back(cap);

        FacetPlane p;
        p.cell = cap;
        p.normal = base.model.vertices[static_cast<size_t>(v)];
        p.offset = QuadNum(Rational(1, 4), Rational(1, 4), 5);  // cos(pi/5)
        p.shape = FacetShape::Icosa;
        r.lattice.facets.push_back(std::move(p));
      }
    }
  }
  cx.finalize();

  for (const auto& p : base.lattice.facets) {
    if (remap[static_cast<size_t>(p.cell)] < 0) continue;
    FacetPlane q = p;
    q.cell = remap[static_cast<size_t>(p.cell)];
    r.lattice.facets.push_back(std::move(q));
  }
  std::sort(r.lattice.facets.begin(), r.lattice.facets.end(),
            [](const FacetPlane& x, const FacetPlane& y) { return x.cell < y.cell; });
  return r;
}

CutResult build_snub24() {
  // the binary tetrahedral subgroup sits first in the vertex order: the
  // 8 axis units and the 16 half-integer points
  std::vector<long> cuts(24);
  for (long i = 0; i < 24; ++i) cuts[static_cast<size_t>(i)] = i;
  return cut_600cell(cuts);
}

TangencyResult check_edge_tangent(const VertexModel& m, const PolytopeLattice& l) {
  TangencyResult res;
  auto [e0, e1] = l.cx.cells_of_dim(1);
  if (e0 == e1) {
    res.reason = "no edges";
    return res;
  }
  bool have = false;
  for (long e = e0; e < e1; ++e) {
    const auto& b = l.cx.cell(e).boundary;
    const Vec& A = m.vertices[static_cast<size_t>(b[0])];
    const Vec& B = m.vertices[static_cast<size_t>(b[1])];
    Vec w = sub(B, A);
    Vec ca = sub(m.center, A);
    QuadNum den = dot(w, w);
    if (quad_sign(den) == 0) throw std::domain_error("check_edge_tangent: degenerate edge");
    QuadNum s = dot(ca, w);
    // nearest point A + (s/den) w must be strictly interior
    if (quad_sign(s) <= 0 || quad_cmp(s, den) >= 0) {
      res.reason = "nearest point not strictly inside an edge";
      return res;
    }
    QuadNum dist2 = dot(ca, ca) - s * s / den;
    if (!have) {
      res.r2 = dist2;
      have = true;
    } else if (!(dist2 == res.r2)) {
      res.reason = "edges at unequal distances";
      return res;
    }
  }
  for (const auto& v : m.vertices) {
    Vec cv = sub(v, m.center);
    if (quad_cmp(dot(cv, cv), res.r2) <= 0) {
      res.reason = "vertex not strictly outside the tangent sphere";
      return res;
    }
  }
  res.ok = true;
  return res;
}

bool verify_facet_planes(const VertexModel& m, const PolytopeLattice& l) {
  for (const auto& p : l.facets) {
    const auto& on_facet = l.cx.vertex_set(p.cell);
    for (long v = 0; v < static_cast<long>(m.vertices.size()); ++v) {
      int s = quad_sign(dot(m.vertices[static_cast<size_t>(v)], p.normal) - p.offset);
      bool member = std::binary_search(on_facet.begin(), on_facet.end(), v);
      if (member ? s != 0 : s >= 0) return false;
    }
  }
  return true;
}

DihedralCos2 hyperbolic_dihedral_cos2(const VertexModel& m, const PolytopeLattice& l,
                                      long ridge_id) {
  const CellComplex& cx = l.cx;
  if (cx.dim_of(ridge_id) != cx.dim() - 1)
    throw std::invalid_argument("hyperbolic_dihedral_cos2: not a ridge");
  const auto& cov = cx.cover(ridge_id);
  if (cov.size() != 2)
    throw std::invalid_argument("hyperbolic_dihedral_cos2: ridge not in exactly two facets");

  auto lift = [&](const FacetPlane& p) {
    Vec u = p.normal;
    QuadNum c = p.offset - dot(u, m.center);
    if (m.subspace_normal) {
      const Vec& nrm = *m.subspace_normal;
      QuadNum t = dot(u, nrm) / dot(nrm, nrm);
      for (size_t i = 0; i < u.size(); ++i) u[i] = u[i] - t * nrm[i];
    }
    return std::make_pair(u, c);
  };
  auto [u1, c1] = lift(l.facet_of_cell(cov[0]));
  auto [u2, c2] = lift(l.facet_of_cell(cov[1]));

  auto mink = [&](const Vec& ua, const QuadNum& ca, const Vec& ub, const QuadNum& cb) {
    return dot(ua, ub) - ca * cb / m.r2;
  };
  QuadNum g12 = mink(u1, c1, u2, c2);
  QuadNum g11 = mink(u1, c1, u1, c1);
  QuadNum g22 = mink(u2, c2, u2, c2);
  if (quad_sign(g11) <= 0 || quad_sign(g22) <= 0)
    throw std::domain_error("hyperbolic_dihedral_cos2: hyperplane misses the ball");
  DihedralCos2 r;
  r.cos2 = g12 * g12 / (g11 * g22);
  r.cos_sign = quad_sign(-g12);
  return r;
}

std::string model_coords_to_json(const VertexModel& m, int indent) {
  using ordered_json = nlohmann::ordered_json;
  auto enc = [&](const QuadNum& x) -> ordered_json {
    if (m.rational_only) return x.a.str();
    ordered_json o;
    o["a"] = x.a.str();
    o["b"] = x.b.str();
    o["d"] = x.d;
    return o;
  };
  auto enc_vec = [&](const Vec& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : v) arr.push_back(enc(x));
    return arr;
  };
  ordered_json root;
  root["field"] = m.rational_only ? "rational" : "quadratic";
  root["ambient"] = m.ambient;
  root["r2"] = enc(m.r2);
  root["center"] = enc_vec(m.center);
  if (m.subspace_normal) root["subspace_normal"] = enc_vec(*m.subspace_normal);
  ordered_json verts = ordered_json::array();
  for (const auto& v : m.vertices) verts.push_back(enc_vec(v));
  root["vertices"] = std::move(verts);
  return root.dump(indent) + "\n";
}

}  // namespace fatlab
