#include "fatlab/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fatlab {

using ordered_json = nlohmann::ordered_json;

std::string complex_to_json(const CellComplex& cx, int indent) {
  ordered_json root;
  root["dim"] = cx.dim();
  ordered_json cells = ordered_json::array();
  // ids are already dense and dim-blocked, so id order is (dim, id) order
  for (long id = 0; id < cx.n_cells(); ++id) {
    const Cell& c = cx.cell(id);
    ordered_json jc;
    jc["id"] = c.id;
    jc["dim"] = c.dim;
    jc["boundary"] = c.boundary;
    if (!c.walk.empty()) jc["walk"] = c.walk;
    cells.push_back(std::move(jc));
  }
  root["cells"] = std::move(cells);
  return root.dump(indent) + "\n";
}

CellComplex complex_from_json(const std::string& text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("complex_from_json: parse error: ") + e.what());
  }
  if (!root.is_object() || !root.contains("dim") || !root.contains("cells") ||
      !root["cells"].is_array())
    throw std::invalid_argument("complex_from_json: expected {dim, cells}");

  struct Raw {
    long id;
    int dim;
    std::vector<long> boundary;
    std::vector<long> walk;
  };
  std::vector<Raw> raws;
  for (const auto& jc : root["cells"]) {
    if (!jc.contains("id") || !jc.contains("dim") || !jc.contains("boundary"))
      throw std::invalid_argument("complex_from_json: cell needs id, dim, boundary");
    Raw r;
    r.id = jc["id"].get<long>();
    r.dim = jc["dim"].get<int>();
    r.boundary = jc["boundary"].get<std::vector<long>>();
    if (jc.contains("walk")) r.walk = jc["walk"].get<std::vector<long>>();
    raws.push_back(std::move(r));
  }

  std::stable_sort(raws.begin(), raws.end(),
                   [](const Raw& a, const Raw& b) {
                     return a.dim != b.dim ? a.dim < b.dim : a.id < b.id;
                   });

  std::map<long, long> remap;  // input id -> dense id
  for (size_t i = 0; i < raws.size(); ++i) {
    if (!remap.emplace(raws[i].id, static_cast<long>(i)).second)
      throw std::invalid_argument("complex_from_json: duplicate cell id");
  }

  CellComplex cx;
  for (const Raw& r : raws) {
    std::vector<long> boundary;
    boundary.reserve(r.boundary.size());
    for (long b : r.boundary) {
      auto it = remap.find(b);
      if (it == remap.end())
        throw std::invalid_argument("complex_from_json: boundary references unknown id");
      boundary.push_back(it->second);
    }
    std::vector<long> walk;
    walk.reserve(r.walk.size());
    for (long s : r.walk) {
      auto it = remap.find(s > 0 ? s : -s);
      if (it == remap.end())
        throw std::invalid_argument("complex_from_json: walk references unknown id");
      walk.push_back(s > 0 ? it->second : -it->second);
    }
    try {
      cx.add_cell(r.dim, std::move(boundary), std::move(walk));
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("complex_from_json: ") + e.what());
    }
  }
  int declared = root["dim"].get<int>();
  if (cx.dim() != declared)
    throw std::invalid_argument("complex_from_json: declared dim disagrees with cells");
  try {
    cx.finalize();
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("complex_from_json: ") + e.what());
  }
  return cx;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fatlab
