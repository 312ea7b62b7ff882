#ifndef FATLAB_COVERS_HPP
#define FATLAB_COVERS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fatlab/complexes.hpp"
#include "fatlab/exact.hpp"
#include "fatlab/fvector_families.hpp"

namespace fatlab {

/// One-vertex cellulation of the closed orientable genus-g surface: a
/// single 4g-gon with side i glued to side 2g+i reversed. f = (1, 2g, 1),
/// so f1/(f0+f2) = g exactly. Deliberately irregular (loop edges).
struct PerfectCellulation {
  int g{0};
  CellComplex cx;
};

/// Throws std::invalid_argument when g < 1.
PerfectCellulation build_sg(int g);

/// Deck-translation data for the cyclic cover of order q = 4g+1: alpha
/// generates the multiplicative group of F_q, and side i of the 4g-gon
/// is sent to the translation by powers[i] = alpha^i. alpha^{2g} = -1,
/// so opposite sides get opposite translations, as the side pairing
/// requires.
struct SigmaSpec {
  int g{0};
  long q{0};
  long alpha{0};
  std::vector<long> powers;  // powers[i] = alpha^i, i in [0, 4g)
};

/// The q-fold cyclic cover of the one-vertex genus-g surface, q = 4g+1 a
/// prime power. Vertices are the elements of F_q under GFContext
/// encoding (vertex id == encoding). Face s has corner k at
/// s + (alpha^k - 1)/(alpha - 1); consecutive corner differences are the
/// successive powers alpha^k, so the 4g edge lifts out of any vertex
/// exhaust all nonzero differences and the 1-skeleton is complete.
struct CoverSurface {
  int g{0};
  long q{0};
  GFContext gf;
  SigmaSpec sigma;
  std::vector<long> partial;  // partial[k] = 1 + alpha + ... + alpha^{k-1}
  CellComplex cx;

  long n_edge_classes() const { return 2 * g; }
  long first_edge() const { return q; }
  long first_face() const { return q + 2 * g * q; }

  /// Edge of translation class i based at vertex u: boundary
  /// [u, u + alpha^i]. i in [0, 2g).
  long edge_id(long cls, long u) const { return q + cls * q + u; }
  long edge_class(long e) const { return (e - q) / q; }
  long edge_base(long e) const { return (e - q) % q; }

  long face_id(long s) const { return first_face() + s; }
  long face_label(long f) const { return f - first_face(); }

  /// Corner k of face s.
  long corner(long s, int k) const { return gf.add(s, partial[static_cast<size_t>(k)]); }
};

/// Throws std::invalid_argument when g < 1 or 4g+1 is not a prime power.
CoverSurface build_sg_prime(int g);

/// Structural facts about the q-fold cover, each checked directly on the
/// complex. ok is the conjunction.
struct SkeletonReport {
  bool regular{false};
  bool fvector_ok{false};           // f = (q, 2gq, q)
  bool facet_vertices_ok{false};    // every face visits 4g distinct vertices
  bool skeleton_complete{false};    // 1-skeleton is the complete graph, simple
  bool dual_complete_one_edge{false};  // every face pair shares exactly one edge
  bool shared_vertices_ok{false};   // plus exactly q-4 vertices off that edge
  bool ok{false};
  std::vector<long long> fvec;
};

SkeletonReport verify_lemma9(const CoverSurface& S);

/// Two-cell route between a vertex pair: either straight across the
/// interior of face `face` from corner_base to corner_target, or (when
/// the corners are adjacent in that face) along the boundary edge
/// `edge` itself, flagged by along_edge.
struct LoopSegment {
  long face{-1};
  int corner_base{-1};
  int corner_target{-1};
  bool along_edge{false};
  long edge{-1};
};

/// A length-two cell route from base back to itself through two distinct
/// 2-cells. Such a loop obstructs strong regularity of a cyclic cover
/// exactly when the cover's cocycle sums to zero along it. cycle is a
/// boundary-path representative as signed edge multiplicities;
/// homology holds its coordinates in the cotree-complement basis, and
/// support is the smallest representative support over the four
/// boundary-route choices.
struct ObstructingLoopClass {
  long base{-1};
  long target{-1};
  LoopSegment seg1, seg2;
  std::vector<std::pair<long, long long>> cycle;  // (edge id, coefficient), sorted
  std::vector<long long> homology;
  long support{0};
};

/// Scans the universal-cover star of every vertex: lays the 4g incident
/// face copies out around it, and pairs up distinct boundary points with
/// equal projection. Deduplicated across base vertices; deterministic
/// order (by base vertex, then segment data).
std::vector<ObstructingLoopClass> enumerate_obstructing_loops(const CoverSurface& S);

/// Spanning tree of the 1-skeleton plus a dual spanning tree of the face
/// adjacency built from the non-tree edges; the leftover basis_edges are
/// a homology basis of the surface. phi[e] is the pairing row of edge e:
/// summing coefficient * phi over a cycle's edges gives its coordinates
/// in the basis-edge loop basis (phi is the dual cocycle basis, solved
/// over the dual tree with value delta_{e,b} on basis edges and 0 on
/// tree edges).
struct TreeCotree {
  long first_edge{0};
  std::vector<char> in_tree;        // per edge ordinal
  std::vector<char> in_dual_tree;   // per edge ordinal
  std::vector<long> basis_edges;    // edge ids, 2 * (1 + q(g-1)) of them
  std::vector<long> dual_order;     // face labels in dual BFS order, root first
  std::vector<long> dual_parent;    // per face label, dual-tree edge to parent (-1 at root)
  std::vector<std::vector<long long>> phi;  // per edge ordinal, basis-sized rows
};

TreeCotree tree_cotree_basis(const CoverSurface& S);

/// Coordinates of a 1-cycle given as sorted (edge id, coefficient) pairs.
std::vector<long long> homology_coords(const TreeCotree& basis,
                                       const std::vector<std::pair<long, long long>>& cycle);

/// Indivisibility and size facts for the enumerated loop classes, plus
/// the edge-count lower bound k(q-k) >= 4g for every proper face split.
/// control_flagged records that a face boundary (null-homologous by
/// construction) gets the all-zero coordinate vector.
struct IndivisibilityReport {
  bool coords_nonzero{false};
  bool coords_indivisible{false};  // gcd of coordinates is 1, per loop
  bool support_small{false};       // support < 4g, per loop
  bool split_bound{false};         // k(q-k) >= 4g for 0 < k < q
  long long min_split{0};
  bool control_flagged{false};
  bool ok{false};
};

IndivisibilityReport verify_lemma11(const CoverSurface& S,
                                    const std::vector<ObstructingLoopClass>& loops);

/// Z/n edge labeling whose signed sum around every face walk is zero.
/// values are indexed by edge ordinal (id - first_edge) and label the
/// tail-to-head direction.
struct Cocycle {
  long long n{1};
  long first_edge{0};
  std::vector<long long> values;

  long long at(long edge) const { return values[static_cast<size_t>(edge - first_edge)]; }
};

/// Uniform cocycle: spanning-tree edges 0, basis edges uniform in
/// [0, n), dual-tree edges solved from their face relations children
/// first. Identical seeds give identical cocycles on every platform.
/// Throws std::invalid_argument when n < 1.
Cocycle random_cocycle(const CoverSurface& S, long long n, std::uint64_t seed);

/// Connected n-sheeted unwrapping of S along a cocycle: vertex (v, t)
/// joins (w, t + c(e)) over the edge e = (v, w). When the cocycle's
/// image does not generate Z/n the full unwrapping falls apart; this
/// returns the component of (vertex 0, level 0), with degree sheets.
struct LiftedCover {
  long long degree{0};
  bool surjective{false};
  CellComplex cx;
  std::vector<long> base_vertex;    // per cover vertex
  std::vector<long long> level;     // per cover vertex
};

LiftedCover build_cover(const CoverSurface& S, const Cocycle& c);

/// True iff the cocycle sums to a nonzero residue along every
/// obstructing loop class. Agrees with is_strongly_regular on the built
/// cover; this form never builds it.
bool strongly_regular_via_loops(const CoverSurface& S,
                                const std::vector<ObstructingLoopClass>& loops,
                                const Cocycle& c);

/// Empirical success rate of random covers against the union bound
/// 1 - L/n. Trial i draws its cocycle from a seed derived as
/// derive_seed(seed, i), so results are independent of threading.
struct CoverExperiment {
  int g{0};
  long long n{0};
  long trials{0};
  long long loop_count{0};
  long successes{0};
  long surjective_trials{0};
  long successes_surjective{0};
  double fraction{0};
  double fraction_surjective{0};
  double bound{0};  // max(0, 1 - L/n)
};

CoverExperiment thm10_experiment(int g, long long n, long trials, std::uint64_t seed,
                                 int threads = 1);

/// Prism stack over a surface with f-vector core = (f0, f1, f2): slices
/// copies glued in a row, plus two cap contributions added per
/// dimension. With zero caps the fatness of the result increases in
/// slices toward (f0 + 2 f1 + f2)/(f0 + f2).
struct SausageResult {
  FVector f;  // length 4
  Rational fatness;
  Rational fatness_limit;
};

SausageResult sausage_fvector(const FVector& core, const Int& slices, const FVector& cap1,
                              const FVector& cap2);

/// Closed 3-sphere budget for one genus parameter: the 128 g^4-sheeted
/// cover of the q-fold cover surface, its genus ghat by Euler count,
/// handlebody caps whose refinement budget is cap_scale * 3 * f1 * ghat
/// new vertices each, and a g^7-slice prism between them. All counts
/// exact; euler_zero and fatness_ok record that the total closes up and
/// that fatness clears the linear floor g/4096.
struct SphereBudget {
  int g_in{0};
  int g_used{0};   // smallest >= g_in with 4g+1 a prime power
  long q{0};
  Int n;           // sheets: 128 g^4
  Int ghat;        // cover genus 1 + n q (g - 1)
  Int cap_budget;  // new vertices per cap
  Int slices;      // g^7
  FVector surface; // cover surface f-vector, n * (q, 2gq, q)
  FVector cap;     // per-cap added cells
  FVector total;   // assembled 3-sphere f-vector
  Rational fatness;
  bool euler_zero{false};
  bool fatness_ok{false};  // fatness >= g_used / 4096
};

/// Same arithmetic without the prime-power adjustment of g; the counts
/// are then polynomial in g, which the growth tests exploit.
SphereBudget sphere_budget_formula(int g, const Rational& cap_scale);

SphereBudget theorem2_accounting(int g, const Rational& cap_scale = Rational(1));

}  // namespace fatlab

#endif
