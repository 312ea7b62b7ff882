#include "fatlab/complexes.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace fatlab {

long CellComplex::add_cell(int dim, std::vector<long> boundary, std::vector<long> walk) {
  if (finalized_) throw std::logic_error("CellComplex: add_cell after finalize");
  if (dim < 0) throw std::invalid_argument("CellComplex: negative dimension");
  int cur = cells_.empty() ? 0 : cells_.back().dim;
  if (dim < cur) throw std::logic_error("CellComplex: cells must be added by non-decreasing dim");
  if (dim > cur + 1 && !(cells_.empty() && dim == 0))
    throw std::logic_error("CellComplex: dimension gap");
  if (dim == 0 && !boundary.empty())
    throw std::invalid_argument("CellComplex: vertex with boundary");
  if (dim == 1 && boundary.size() != 2)
    throw std::invalid_argument("CellComplex: edge boundary must be [tail, head]");
  if (dim >= 1 && boundary.empty())
    throw std::invalid_argument("CellComplex: empty boundary on positive-dim cell");
  if (!walk.empty() && dim != 2)
    throw std::invalid_argument("CellComplex: walks only on 2-cells");
  long id = static_cast<long>(cells_.size());
  for (long b : boundary) {
    if (b < 0 || b >= id || cells_[static_cast<size_t>(b)].dim != dim - 1)
      throw std::invalid_argument("CellComplex: boundary entry is not a cell one dim down");
  }
  while (static_cast<int>(dim_first_.size()) <= dim) dim_first_.push_back(id);
  cells_.push_back(Cell{id, dim, std::move(boundary), std::move(walk)});
  return id;
}

int CellComplex::dim() const {
  return cells_.empty() ? -1 : cells_.back().dim;
}

std::pair<long, long> CellComplex::cells_of_dim(int d) const {
  if (d < 0 || d > dim()) return {0, 0};
  long first = dim_first_[static_cast<size_t>(d)];
  long last = d + 1 <= dim() ? dim_first_[static_cast<size_t>(d) + 1] : n_cells();
  return {first, last};
}

std::vector<long long> CellComplex::fvector() const {
  std::vector<long long> f(static_cast<size_t>(dim()) + 1, 0);
  for (int d = 0; d <= dim(); ++d) {
    auto [a, b] = cells_of_dim(d);
    f[static_cast<size_t>(d)] = b - a;
  }
  return f;
}

std::vector<long> CellComplex::walk_vertices(long id) const {
  const Cell& c = cells_[static_cast<size_t>(id)];
  std::vector<long> vs;
  vs.reserve(c.walk.size());
  for (long s : c.walk) {
    const Cell& e = cells_[static_cast<size_t>(s > 0 ? s : -s)];
    vs.push_back(s > 0 ? e.boundary[0] : e.boundary[1]);
  }
  return vs;
}

void CellComplex::finalize() {
  if (finalized_) throw std::logic_error("CellComplex: already finalized");
  const size_t n = cells_.size();
  closure_.assign(n, {});
  vertex_set_.assign(n, {});
  cover_.assign(n, {});

  long n_vertices = cells_of_dim(0).second;

  for (size_t i = 0; i < n; ++i) {
    const Cell& c = cells_[i];
    // closure = union of boundary closures plus the cell itself;
    // boundary ids are all smaller, so theirs are ready
    std::vector<long> acc{c.id};
    for (long b : c.boundary) {
      const auto& sub = closure_[static_cast<size_t>(b)];
      std::vector<long> merged;
      merged.reserve(acc.size() + sub.size());
      std::set_union(acc.begin(), acc.end(), sub.begin(), sub.end(), std::back_inserter(merged));
      acc = std::move(merged);
    }
    std::sort(acc.begin(), acc.end());
    closure_[i] = std::move(acc);
    auto vend = std::upper_bound(closure_[i].begin(), closure_[i].end(), n_vertices - 1);
    vertex_set_[i].assign(closure_[i].begin(), vend);

    std::vector<long> ub(c.boundary);
    std::sort(ub.begin(), ub.end());
    ub.erase(std::unique(ub.begin(), ub.end()), ub.end());
    for (long b : ub) cover_[static_cast<size_t>(b)].push_back(c.id);

    if (!c.walk.empty()) {
      // the walk must traverse exactly the boundary edges and chain up
      std::vector<long> we;
      we.reserve(c.walk.size());
      long prev_head = -1, first_tail = -1;
      for (long s : c.walk) {
        long eid = s > 0 ? s : -s;
        if (eid <= 0 || eid >= static_cast<long>(n) || cells_[static_cast<size_t>(eid)].dim != 1)
          throw std::invalid_argument("CellComplex: walk entry is not an edge");
        const Cell& e = cells_[static_cast<size_t>(eid)];
        long tail = s > 0 ? e.boundary[0] : e.boundary[1];
        long head = s > 0 ? e.boundary[1] : e.boundary[0];
        if (first_tail < 0) first_tail = tail;
        if (prev_head >= 0 && prev_head != tail)
          throw std::invalid_argument("CellComplex: walk does not chain");
        prev_head = head;
        we.push_back(eid);
      }
      if (prev_head != first_tail)
        throw std::invalid_argument("CellComplex: walk does not close");
      std::sort(we.begin(), we.end());
      we.erase(std::unique(we.begin(), we.end()), we.end());
      if (we != ub) throw std::invalid_argument("CellComplex: walk edges differ from boundary");
    }
  }

  vertex_star_.assign(static_cast<size_t>(n_vertices), {});
  for (size_t i = 0; i < n; ++i)
    for (long v : vertex_set_[i]) vertex_star_[static_cast<size_t>(v)].push_back(static_cast<long>(i));

  finalized_ = true;
}

long long euler_characteristic(const CellComplex& cx) {
  long long chi = 0;
  int sign = 1;
  for (long long fd : cx.fvector()) {
    chi += sign * fd;
    sign = -sign;
  }
  return chi;
}

long long flag_count(const CellComplex& cx, const std::vector<int>& dims) {
  if (dims.empty()) return 0;
  for (size_t i = 0; i + 1 < dims.size(); ++i)
    if (dims[i] >= dims[i + 1]) throw std::invalid_argument("flag_count: dims must increase");
  if (dims.front() < 0 || dims.back() > cx.dim())
    throw std::invalid_argument("flag_count: dims out of range");

  std::vector<long long> ways(static_cast<size_t>(cx.n_cells()), 0);
  auto [a0, b0] = cx.cells_of_dim(dims[0]);
  for (long c = a0; c < b0; ++c) ways[static_cast<size_t>(c)] = 1;
  for (size_t lvl = 1; lvl < dims.size(); ++lvl) {
    auto [a, b] = cx.cells_of_dim(dims[lvl]);
    auto [pa, pb] = cx.cells_of_dim(dims[lvl - 1]);
    std::vector<long long> next(static_cast<size_t>(cx.n_cells()), 0);
    for (long c = a; c < b; ++c) {
      long long s = 0;
      for (long sub : cx.closure(c))
        if (sub >= pa && sub < pb) s += ways[static_cast<size_t>(sub)];
      next[static_cast<size_t>(c)] = s;
    }
    ways = std::move(next);
  }
  long long total = 0;
  auto [ta, tb] = cx.cells_of_dim(dims.back());
  for (long c = ta; c < tb; ++c) total += ways[static_cast<size_t>(c)];
  return total;
}

std::optional<long> regularity_defect(const CellComplex& cx) {
  for (long id = 0; id < cx.n_cells(); ++id) {
    const Cell& c = cx.cell(id);
    if (c.dim == 1 && c.boundary[0] == c.boundary[1]) return id;
    std::vector<long> b(c.boundary);
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) return id;
    if (!c.walk.empty()) {
      std::vector<long> vs = cx.walk_vertices(id);
      std::sort(vs.begin(), vs.end());
      if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return id;
      std::vector<long> es;
      for (long s : c.walk) es.push_back(s > 0 ? s : -s);
      std::sort(es.begin(), es.end());
      if (std::adjacent_find(es.begin(), es.end()) != es.end()) return id;
    }
  }
  return std::nullopt;
}

StrongRegularity check_strong_regularity(const CellComplex& cx) {
  if (auto defect = regularity_defect(cx)) return {false, *defect, -1};

  const long n = cx.n_cells();
  std::unordered_set<long long> seen;
  auto [v0, v1] = cx.cells_of_dim(0);
  std::vector<long> inter;
  for (long v = v0; v < v1; ++v) {
    const auto& stars = cx.vertex_star(v);
    for (size_t i = 0; i < stars.size(); ++i) {
      for (size_t j = i + 1; j < stars.size(); ++j) {
        long a = stars[i], b = stars[j];
        if (!seen.insert(static_cast<long long>(a) * n + b).second) continue;
        const auto& ca = cx.closure(a);
        const auto& cb = cx.closure(b);
        inter.clear();
        std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                              std::back_inserter(inter));
        // nonempty: both closures contain v
        int maxd = -1;
        long m = -1;
        bool tie = false;
        for (long c : inter) {
          int d = cx.dim_of(c);
          if (d > maxd) {
            maxd = d;
            m = c;
            tie = false;
          } else if (d == maxd) {
            tie = true;
          }
        }
        if (tie || cx.closure(m) != inter) return {false, a, b};
      }
    }
  }
  return {true, -1, -1};
}

DualGraph dual_graph(const CellComplex& cx) {
  int D = cx.dim();
  if (D < 1) throw std::domain_error("dual_graph: dimension below 1");
  auto [t0, t1] = cx.cells_of_dim(D);
  auto [r0, r1] = cx.cells_of_dim(D - 1);
  DualGraph g;
  g.n = t1 - t0;
  for (long r = r0; r < r1; ++r) {
    const auto& cov = cx.cover(r);
    if (cov.size() != 2)
      throw std::domain_error("dual_graph: ridge not contained in exactly two top cells");
    long a = cov[0] - t0, b = cov[1] - t0;
    if (a > b) std::swap(a, b);
    g.arcs.emplace_back(a, b);
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  return g;
}

CellComplex dual_complex(const CellComplex& cx) {
  int D = cx.dim();
  if (D < 1) throw std::domain_error("dual_complex: dimension below 1");

  // dual id of primal cell c: same offset within its block, block
  // reversed, so dualizing twice is the identity on ids
  std::vector<long> dual_first(static_cast<size_t>(D) + 1, 0);
  long off = 0;
  for (int dd = 0; dd <= D; ++dd) {
    dual_first[static_cast<size_t>(dd)] = off;
    auto [a, b] = cx.cells_of_dim(D - dd);
    off += b - a;
  }
  auto dual_id = [&](long c) {
    int d = cx.dim_of(c);
    return dual_first[static_cast<size_t>(D - d)] + (c - cx.cells_of_dim(d).first);
  };

  CellComplex dual;
  for (int dd = 0; dd <= D; ++dd) {
    auto [a, b] = cx.cells_of_dim(D - dd);
    for (long c = a; c < b; ++c) {
      const auto& cov = cx.cover(c);
      if (dd == 1 && cov.size() != 2)
        throw std::domain_error("dual_complex: ridge not contained in exactly two top cells");
      std::vector<long> boundary;
      boundary.reserve(cov.size());
      for (long u : cov) boundary.push_back(dual_id(u));
      dual.add_cell(dd, std::move(boundary));
    }
  }
  dual.finalize();
  return dual;
}

StarResult star(const CellComplex& cx, long v) {
  auto [v0, v1] = cx.cells_of_dim(0);
  if (v < v0 || v >= v1) throw std::invalid_argument("star: not a vertex id");
  std::vector<long> acc;
  for (long c : cx.vertex_star(v)) {
    const auto& cl = cx.closure(c);
    acc.insert(acc.end(), cl.begin(), cl.end());
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  StarResult r;
  r.fvector.assign(static_cast<size_t>(cx.dim()) + 1, 0);
  for (long c : acc) ++r.fvector[static_cast<size_t>(cx.dim_of(c))];
  r.cells = std::move(acc);
  return r;
}

CellComplex product_with_path(const CellComplex& surface, int segments) {
  if (surface.dim() != 2) throw std::invalid_argument("product_with_path: need a 2-complex");
  if (segments < 1) throw std::invalid_argument("product_with_path: need at least one segment");
  if (!is_regular(surface))
    throw std::invalid_argument("product_with_path: surface must be regular");
  auto [e0, e1] = surface.cells_of_dim(1);
  auto [q0, q1] = surface.cells_of_dim(2);
  const long f0 = surface.cells_of_dim(0).second;
  const long f1 = e1 - e0;
  const long f2 = q1 - q0;
  for (long f = q0; f < q1; ++f)
    if (surface.cell(f).walk.empty())
      throw std::invalid_argument("product_with_path: every face needs a walk");

  const int N = segments;
  const long V = f0 * (N + 1);
  const long E = f1 * (N + 1) + f0 * N;
  const long F = f2 * (N + 1) + f1 * N;

  auto vert = [&](long v, int i) { return static_cast<long>(i) * f0 + v; };
  auto hedge = [&](long e, int i) { return V + static_cast<long>(i) * f1 + (e - e0); };
  auto vedge = [&](long v, int j) { return V + (N + 1) * f1 + static_cast<long>(j) * f0 + v; };
  auto hface = [&](long f, int i) { return V + E + static_cast<long>(i) * f2 + (f - q0); };
  auto qface = [&](long e, int j) {
    return V + E + (N + 1) * f2 + static_cast<long>(j) * f1 + (e - e0);
  };

  CellComplex P;
  for (int i = 0; i <= N; ++i)
    for (long v = 0; v < f0; ++v) P.add_cell(0);
  for (int i = 0; i <= N; ++i)
    for (long e = e0; e < e1; ++e) {
      const auto& b = surface.cell(e).boundary;
      P.add_cell(1, {vert(b[0], i), vert(b[1], i)});
    }
  for (int j = 0; j < N; ++j)
    for (long v = 0; v < f0; ++v) P.add_cell(1, {vert(v, j), vert(v, j + 1)});
  for (int i = 0; i <= N; ++i)
    for (long f = q0; f < q1; ++f) {
      const Cell& c = surface.cell(f);
      std::vector<long> boundary, walk;
      for (long b : c.boundary) boundary.push_back(hedge(b, i));
      for (long s : c.walk) walk.push_back(s > 0 ? hedge(s, i) : -hedge(-s, i));
      P.add_cell(2, std::move(boundary), std::move(walk));
    }
  for (int j = 0; j < N; ++j)
    for (long e = e0; e < e1; ++e) {
      const auto& b = surface.cell(e).boundary;
      P.add_cell(2, {hedge(e, j), hedge(e, j + 1), vedge(b[0], j), vedge(b[1], j)},
                 {hedge(e, j), vedge(b[1], j), -hedge(e, j + 1), -vedge(b[0], j)});
    }
  for (int j = 0; j < N; ++j)
    for (long f = q0; f < q1; ++f) {
      const Cell& c = surface.cell(f);
      std::vector<long> boundary{hface(f, j), hface(f, j + 1)};
      for (long b : c.boundary) boundary.push_back(qface(b, j));
      P.add_cell(3, std::move(boundary));
    }
  (void)F;
  P.finalize();
  return P;
}

}  // namespace fatlab
