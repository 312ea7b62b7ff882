#ifndef FATLAB_COMPLEXES_HPP
#define FATLAB_COMPLEXES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fatlab {

/// One cell of a regular-CW style complex. `boundary` holds ids of cells
/// one dimension down. For an edge it is [tail, head] and the order is
/// meaningful: it fixes the edge's orientation (a loop repeats the
/// vertex). For higher cells the order carries no information.
///
/// 2-cells may carry a `walk`: the boundary cycle as signed edge ids,
/// +e traversing tail to head, -e the reverse. Vertex ids are assigned
/// before any edge id, so every edge id is positive and the sign is
/// never ambiguous.
struct Cell {
  long id{-1};
  int dim{0};
  std::vector<long> boundary;
  std::vector<long> walk;
};

/// Cell complex with dense ids grouped by dimension: all vertices first,
/// then all edges, and so on. Build with add_cell in non-decreasing
/// dimension order, then finalize() once; finalize validates boundaries
/// and walks and precomputes closures, vertex sets and cover lists.
class CellComplex {
public:
  /// Adds a cell and returns its id. Boundary entries must reference
  /// existing cells of dimension dim-1; edges take exactly two entries.
  /// Throws std::logic_error if dim decreases between calls or the
  /// complex is already finalized.
  long add_cell(int dim, std::vector<long> boundary = {}, std::vector<long> walk = {});

  void finalize();
  bool finalized() const { return finalized_; }

  int dim() const;
  long n_cells() const { return static_cast<long>(cells_.size()); }
  const Cell& cell(long id) const { return cells_[static_cast<size_t>(id)]; }
  int dim_of(long id) const { return cells_[static_cast<size_t>(id)].dim; }

  /// Half-open id range [first, last) of the cells of dimension d.
  std::pair<long, long> cells_of_dim(int d) const;

  /// Face counts by dimension, length dim()+1.
  std::vector<long long> fvector() const;

  /// All faces of the cell including itself, sorted by id.
  const std::vector<long>& closure(long id) const { return closure_[static_cast<size_t>(id)]; }

  /// Vertices of the cell, sorted.
  const std::vector<long>& vertex_set(long id) const {
    return vertex_set_[static_cast<size_t>(id)];
  }

  /// Cells one dimension up whose boundary contains this cell.
  const std::vector<long>& cover(long id) const { return cover_[static_cast<size_t>(id)]; }

  /// Cells of every dimension whose closure contains the vertex.
  const std::vector<long>& vertex_star(long v) const {
    return vertex_star_[static_cast<size_t>(v)];
  }

  /// Walk of a 2-cell as the cyclic vertex sequence it visits; empty when
  /// the cell has no walk.
  std::vector<long> walk_vertices(long id) const;

private:
  std::vector<Cell> cells_;
  std::vector<long> dim_first_;  // dim_first_[d] = id of first cell of dim d
  bool finalized_{false};
  std::vector<std::vector<long>> closure_;
  std::vector<std::vector<long>> vertex_set_;
  std::vector<std::vector<long>> cover_;
  std::vector<std::vector<long>> vertex_star_;
};

long long euler_characteristic(const CellComplex& cx);

/// Counts chains c_0 < c_1 < ... with dims exactly the given strictly
/// increasing sequence, each cell a face of the next.
long long flag_count(const CellComplex& cx, const std::vector<int>& dims);

/// Every cell is embedded: edges have distinct endpoints, boundary lists
/// repeat no cell, and 2-cell walks visit distinct vertices and edges.
/// Returns the id of an offending cell, or nullopt when regular.
std::optional<long> regularity_defect(const CellComplex& cx);
inline bool is_regular(const CellComplex& cx) { return !regularity_defect(cx).has_value(); }

struct StrongRegularity {
  bool ok{true};
  long witness_a{-1};  // pair of cells whose closures meet in a non-face
  long witness_b{-1};
};

/// Regular, and the closures of any two cells intersect in the closure
/// of a single cell or not at all.
StrongRegularity check_strong_regularity(const CellComplex& cx);
inline bool is_strongly_regular(const CellComplex& cx) { return check_strong_regularity(cx).ok; }

/// Adjacency of top cells across ridges. Requires every ridge (cell of
/// dimension dim-1) to lie in exactly two top cells; throws
/// std::domain_error otherwise. Node i is the i-th top cell; arcs hold
/// node indices with a < b, sorted, possibly repeated for multi-adjacency.
struct DualGraph {
  long n{0};
  std::vector<std::pair<long, long>> arcs;
};
DualGraph dual_graph(const CellComplex& cx);

/// Order-reversed complex: d-cells become (dim-d)-cells, boundary in the
/// dual given by cover in the primal. Requires every ridge in exactly two
/// top cells so dual edges are honest edges. Walks are not transported.
CellComplex dual_complex(const CellComplex& cx);

struct StarResult {
  std::vector<long> cells;  // ids in the original complex, sorted
  std::vector<long long> fvector;
};

/// Closed star: union of closures of every cell containing the vertex.
StarResult star(const CellComplex& cx, long v);

/// Prism over a surface: the 2-complex times a path with segments
/// segments (segments+1 parallel copies). The input must be a regular
/// 2-complex with a walk on every face. Copies are stacked in order, so
/// cell (x, i) of copy i precedes (x, i+1), and within each dimension all
/// copy cells precede all gap cells. Face walks are transported; the
/// square over edge e in gap j gets the walk (e,j), (head,j), -(e,j+1),
/// -(tail,j) reversed orientation on top.
CellComplex product_with_path(const CellComplex& surface, int segments);

}  // namespace fatlab

#endif
