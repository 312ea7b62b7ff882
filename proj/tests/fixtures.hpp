#ifndef FATLAB_TESTS_FIXTURES_HPP
#define FATLAB_TESTS_FIXTURES_HPP

#include "fatlab/complexes.hpp"

// Hand-built complexes, assembled edge by edge on purpose: the library
// builders elsewhere must reproduce these, so they are kept independent.

// Torus on 5 vertices with 10 edges (all pairs) and 5 quadrilateral
// faces; face s visits s, s+1, s+3, s+2 (mod 5). The unique smallest
// strongly regular surface of genus 1 used all over the test suite.
inline fatlab::CellComplex make_sg1() {
  fatlab::CellComplex cx;
  for (int v = 0; v < 5; ++v) cx.add_cell(0);
  for (long a = 0; a < 5; ++a) cx.add_cell(1, {a, (a + 1) % 5});  // ids 5+a
  for (long a = 0; a < 5; ++a) cx.add_cell(1, {a, (a + 2) % 5});  // ids 10+a
  for (long s = 0; s < 5; ++s) {
    long e1 = 5 + s, e2 = 10 + (s + 1) % 5, e3 = 5 + (s + 2) % 5, e4 = 10 + s;
    cx.add_cell(2, {e1, e2, e3, e4}, {e1, e2, -e3, -e4});
  }
  cx.finalize();
  return cx;
}

// Boundary surface of the tetrahedron.
inline fatlab::CellComplex make_tetra_surface() {
  fatlab::CellComplex cx;
  for (int v = 0; v < 4; ++v) cx.add_cell(0);
  long e01 = cx.add_cell(1, {0, 1});
  long e02 = cx.add_cell(1, {0, 2});
  long e03 = cx.add_cell(1, {0, 3});
  long e12 = cx.add_cell(1, {1, 2});
  long e13 = cx.add_cell(1, {1, 3});
  long e23 = cx.add_cell(1, {2, 3});
  cx.add_cell(2, {e01, e12, e02}, {e01, e12, -e02});
  cx.add_cell(2, {e01, e13, e03}, {e01, e13, -e03});
  cx.add_cell(2, {e02, e23, e03}, {e02, e23, -e03});
  cx.add_cell(2, {e12, e23, e13}, {e12, e23, -e13});
  cx.finalize();
  return cx;
}

// One-vertex one-face cellulation of the genus-1 surface: two loop
// edges, face walk a b a^-1 b^-1. Deliberately irregular.
inline fatlab::CellComplex make_perfect_g1() {
  fatlab::CellComplex cx;
  cx.add_cell(0);
  long a = cx.add_cell(1, {0, 0});
  long b = cx.add_cell(1, {0, 0});
  cx.add_cell(2, {a, b}, {a, b, -a, -b});
  cx.finalize();
  return cx;
}

// Boundary complex of the 4-cube: faces are (free-coordinate set, fixed
// signs); the boundary drops one free coordinate both ways.
fatlab::CellComplex make_cube4();

#endif
