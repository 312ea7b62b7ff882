#ifndef FATLAB_JSON_IO_HPP
#define FATLAB_JSON_IO_HPP

#include <string>

#include "fatlab/complexes.hpp"

namespace fatlab {

/// Serializes as {"dim": D, "cells": [...]} with cells sorted by
/// (dim, id), each {"id", "dim", "boundary"} plus "walk" when present.
/// Edge boundary order is [tail, head] and is preserved; a negative walk
/// entry -k means edge k traversed head to tail. Output is byte-stable:
/// two structurally equal complexes serialize identically.
std::string complex_to_json(const CellComplex& cx, int indent = 2);

/// Parses the same shape; accepts any id labels (they are remapped to
/// dense dim-blocked ids in (dim, id) order), validates boundaries and
/// walks, and returns the finalized complex. Throws std::invalid_argument
/// on malformed input.
CellComplex complex_from_json(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace fatlab

#endif
