#pragma once

// Combinatorial maps (rotation systems) for closed oriented surfaces.
//
// Darts are 0..n-1. `twin` is a fixed-point-free involution pairing the two
// darts of each edge; `next` rotates counterclockwise around the dart's origin
// vertex. The face to the LEFT of dart d is the orbit of d under
// d -> next(twin(d)), and every face is a disk.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hcc {

enum class errc {
  invalid_map,
  invalid_configuration,
  bad_instance,
  not_homologous,
  not_simple,
  not_disjoint,
  unresolvable,
  coefficient_out_of_range,
  self_touching_region,
  not_reduced,
  non_simple_path,
  empty_result,
  degenerate_equal,
  length_mismatch,
  bigon_present,
  odd_parameter,
  unreachable,
  too_large,
  unknown_face,
  syntax_error,
  semantic_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_map: return "InvalidMap";
    case errc::invalid_configuration: return "InvalidConfiguration";
    case errc::bad_instance: return "BadInstance";
    case errc::not_homologous: return "NotHomologous";
    case errc::not_simple: return "NotSimple";
    case errc::not_disjoint: return "NotDisjoint";
    case errc::unresolvable: return "Unresolvable";
    case errc::coefficient_out_of_range: return "CoefficientOutOfRange";
    case errc::self_touching_region: return "SelfTouchingRegion";
    case errc::not_reduced: return "NotReducedInput";
    case errc::non_simple_path: return "NonSimplePath";
    case errc::empty_result: return "EmptyResult";
    case errc::degenerate_equal: return "DegenerateEqual";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::bigon_present: return "BigonPresent";
    case errc::odd_parameter: return "OddParameter";
    case errc::unreachable: return "Unreachable";
    case errc::too_large: return "TooLarge";
    case errc::unknown_face: return "UnknownFace";
    case errc::syntax_error: return "SyntaxError";
    case errc::semantic_error: return "SemanticError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void require(bool ok, errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

// Orbit decomposition of a permutation. Labels each point with its orbit index
// (orbits numbered by first appearance) and lists each orbit in cycle order.
inline std::vector<int> orbits_of(const std::vector<int>& perm,
                                  std::vector<std::vector<int>>& cycles) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> label(n, -1);
  cycles.clear();
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(cycles.size());
    cycles.emplace_back();
    for (int d = s; label[d] < 0; d = perm[d]) {
      label[d] = id;
      cycles.back().push_back(d);
    }
  }
  return label;
}

class combinatorial_map {
 public:
  combinatorial_map() = default;

  static combinatorial_map build(std::vector<int> twin, std::vector<int> next) {
    combinatorial_map m;
    const int n = static_cast<int>(twin.size());
    require(static_cast<int>(next.size()) == n, errc::invalid_map,
            "twin and next describe different dart counts");
    require(n % 2 == 0, errc::invalid_map, "odd dart count");
    auto check_permutation = [n](const std::vector<int>& p, const char* name) {
      std::vector<char> seen(n, 0);
      for (int v : p) {
        require(v >= 0 && v < n, errc::invalid_map,
                std::string(name) + " maps outside the dart range");
        require(!seen[v], errc::invalid_map, std::string(name) + " is not a permutation");
        seen[v] = 1;
      }
    };
    check_permutation(twin, "twin");
    check_permutation(next, "next");
    for (int d = 0; d < n; ++d) {
      require(twin[d] != d, errc::invalid_map,
              "twin fixes dart " + std::to_string(d));
      require(twin[twin[d]] == d, errc::invalid_map,
              "twin is not an involution at dart " + std::to_string(d));
    }
    m.twin_ = std::move(twin);
    m.next_ = std::move(next);
    m.finish();
    return m;
  }

  int dart_count() const { return static_cast<int>(twin_.size()); }
  int twin(int d) const { return twin_[d]; }
  int next(int d) const { return next_[d]; }
  int prev(int d) const { return prev_[d]; }
  // Successor along the boundary walk of the face left of d.
  int face_next(int d) const { return next_[twin_[d]]; }

  int vertex_count() const { return static_cast<int>(vertex_cycles_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int face_count() const { return static_cast<int>(face_cycles_.size()); }

  int vertex_of(int d) const { return vertex_of_[d]; }
  int edge_of(int d) const { return edge_of_[d]; }
  int left_face(int d) const { return face_of_[d]; }
  int right_face(int d) const { return face_of_[twin_[d]]; }

  // Darts around a vertex in counterclockwise order.
  const std::vector<int>& vertex_darts(int v) const { return vertex_cycles_[v]; }
  // Boundary walk of a face; the face lies left of every listed dart.
  const std::vector<int>& face_darts(int f) const { return face_cycles_[f]; }
  // The two darts of an edge; dart(e, 0) == 2e by construction order.
  int edge_dart(int e, int side) const { return edge_darts_[e][side]; }
  int dart_count_at(int v) const { return static_cast<int>(vertex_cycles_[v].size()); }

  int component_count() const { return component_cells_.empty() ? 0 : static_cast<int>(component_cells_.size()); }
  int component_of_dart(int d) const { return comp_of_dart_[d]; }
  int component_of_vertex(int v) const { return comp_of_dart_[vertex_cycles_[v].front()]; }
  int component_of_face(int f) const { return comp_of_dart_[face_cycles_[f].front()]; }

  // V, E, F of one connected component of the surface.
  struct cell_counts {
    int vertices = 0, edges = 0, faces = 0;
    int euler() const { return vertices - edges + faces; }
  };
  const cell_counts& component_cells(int c) const { return component_cells_[c]; }
  int component_genus(int c) const { return (2 - component_cells_[c].euler()) / 2; }

  int euler_characteristic() const {
    return vertex_count() - edge_count() + face_count();
  }
  // Genus of a connected map.
  int genus() const {
    require(component_count() == 1, errc::invalid_map,
            "genus of a disconnected map is per-component");
    return component_genus(0);
  }

 private:
  void finish() {
    const int n = dart_count();
    prev_.assign(n, -1);
    for (int d = 0; d < n; ++d) prev_[next_[d]] = d;

    vertex_of_ = orbits_of(next_, vertex_cycles_);

    edge_of_.assign(n, -1);
    edge_darts_.clear();
    for (int d = 0; d < n; ++d) {
      if (d < twin_[d]) {
        edge_of_[d] = edge_of_[twin_[d]] = static_cast<int>(edge_darts_.size());
        edge_darts_.push_back({d, twin_[d]});
      }
    }

    std::vector<int> sigma(n);
    for (int d = 0; d < n; ++d) sigma[d] = next_[twin_[d]];
    face_of_ = orbits_of(sigma, face_cycles_);

    // Connected components of the surface: darts linked by twin and next.
    comp_of_dart_.assign(n, -1);
    int comps = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
      if (comp_of_dart_[s] >= 0) continue;
      stack.push_back(s);
      comp_of_dart_[s] = comps;
      while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int e : {twin_[d], next_[d]}) {
          if (comp_of_dart_[e] < 0) {
            comp_of_dart_[e] = comps;
            stack.push_back(e);
          }
        }
      }
      ++comps;
    }
    component_cells_.assign(comps, {});
    for (auto& cyc : vertex_cycles_) component_cells_[comp_of_dart_[cyc.front()]].vertices++;
    for (auto& pr : edge_darts_) component_cells_[comp_of_dart_[pr[0]]].edges++;
    for (auto& cyc : face_cycles_) component_cells_[comp_of_dart_[cyc.front()]].faces++;
    for (int c = 0; c < comps; ++c) {
      require(component_cells_[c].euler() % 2 == 0, errc::invalid_map,
              "component with odd Euler characteristic");
      require(component_cells_[c].euler() <= 2, errc::invalid_map,
              "component with Euler characteristic above 2");
    }
  }

  std::vector<int> twin_, next_, prev_;
  std::vector<int> vertex_of_, edge_of_, face_of_, comp_of_dart_;
  std::vector<std::vector<int>> vertex_cycles_, face_cycles_;
  std::vector<std::array<int, 2>> edge_darts_;
  std::vector<cell_counts> component_cells_;
};

}  // namespace hcc
