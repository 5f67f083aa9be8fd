#pragma once

// A configuration is a combinatorial map together with curve labels: each
// labelled ("curve") edge belongs to one of two owners and carries an
// orientation via its forward dart. Unlabelled ("scaffold") edges subdivide
// the complement of the curves into disk faces; they carry the genus and the
// extra boundary circles of complement regions and are invisible to the
// curves themselves.
//
// Vertices are crossings (four curve germs, owners alternating) or markers
// (two curve germs of one owner, one incoming and one outgoing). Scaffold
// germs may appear at markers. A region is a connected component of the
// complement: faces glued across scaffold edges.

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "core.hpp"

namespace hcc {

enum class owner : std::uint8_t { first = 0, second = 1 };

inline owner other(owner o) { return o == owner::first ? owner::second : owner::first; }
inline const char* owner_name(owner o) { return o == owner::first ? "first" : "second"; }

struct edge_label {
  std::optional<owner> own;  // nullopt: scaffold edge
  int forward = -1;          // orientation dart of a curve edge, -1 for scaffold
};

enum class vertex_kind : std::uint8_t { crossing, marker, scaffold_only, malformed };

struct violation {
  std::string kind;
  int item = -1;  // vertex / region / component index, -1 if global
  std::string detail;
};

struct validation_report {
  std::vector<violation> violations;
  bool ok() const { return violations.empty(); }
};

class configuration {
 public:
  configuration() = default;

  static configuration assemble(combinatorial_map m, std::vector<edge_label> labels) {
    configuration c;
    require(static_cast<int>(labels.size()) == m.edge_count(), errc::bad_instance,
            "one label per edge required");
    for (int e = 0; e < m.edge_count(); ++e) {
      const auto& lb = labels[e];
      if (lb.own) {
        require(lb.forward == m.edge_dart(e, 0) || lb.forward == m.edge_dart(e, 1),
                errc::bad_instance,
                "forward dart of edge " + std::to_string(e) + " is not one of its darts");
      } else {
        require(lb.forward == -1, errc::bad_instance,
                "scaffold edge " + std::to_string(e) + " cannot carry an orientation");
      }
    }
    c.map_ = std::move(m);
    c.labels_ = std::move(labels);
    c.finish();
    return c;
  }

  const combinatorial_map& map() const { return map_; }

  bool is_curve_edge(int e) const { return labels_[e].own.has_value(); }
  bool is_scaffold_edge(int e) const { return !labels_[e].own.has_value(); }
  bool is_curve_dart(int d) const { return is_curve_edge(map_.edge_of(d)); }
  owner edge_owner(int e) const {
    require(is_curve_edge(e), errc::bad_instance, "scaffold edge has no owner");
    return *labels_[e].own;
  }
  int forward_dart(int e) const {
    require(is_curve_edge(e), errc::bad_instance, "scaffold edge has no orientation");
    return labels_[e].forward;
  }
  int backward_dart(int e) const { return map_.twin(forward_dart(e)); }
  bool is_forward(int d) const {
    return is_curve_dart(d) && labels_[map_.edge_of(d)].forward == d;
  }
  const std::vector<edge_label>& labels() const { return labels_; }

  int curve_edge_count() const { return curve_edge_count_; }
  std::vector<int> curve_edges(owner o) const {
    std::vector<int> out;
    for (int e = 0; e < map_.edge_count(); ++e)
      if (is_curve_edge(e) && edge_owner(e) == o) out.push_back(e);
    return out;
  }

  // Head vertex of dart d (its origin is map().vertex_of(d)).
  int head(int d) const { return map_.vertex_of(map_.twin(d)); }

  // Curve germs at v in the rotation's cyclic order (darts with origin v on
  // curve edges).
  std::vector<int> curve_darts_at(int v) const {
    std::vector<int> out;
    for (int d : map_.vertex_darts(v))
      if (is_curve_dart(d)) out.push_back(d);
    return out;
  }

  // A germ dart at v points outward iff it is its edge's forward dart.
  bool germ_outgoing(int d) const { return is_forward(d); }

  vertex_kind kind(int v) const { return kinds_[v]; }
  bool is_crossing(int v) const { return kinds_[v] == vertex_kind::crossing; }
  int crossing_count() const { return crossing_count_; }

  // --- regions: complement components (faces glued across scaffold edges) ---

  int region_count() const { return region_count_; }
  int region_of_face(int f) const { return region_of_face_[f]; }
  int region_left(int d) const { return region_of_face_[map_.left_face(d)]; }
  int region_right(int d) const { return region_of_face_[map_.right_face(d)]; }
  const std::vector<int>& region_faces(int r) const { return region_faces_[r]; }

  // Boundary walks of a region: cycles of curve darts with the region on the
  // left; scaffold germs are skipped in place.
  const std::vector<std::vector<int>>& region_walks(int r) const { return region_walks_[r]; }

  // Successor of curve dart d along its region boundary walk.
  int walk_next(int d) const {
    int x = map_.next(map_.twin(d));
    while (!is_curve_dart(x)) x = map_.next(x);
    return x;
  }

  // Euler characteristic of the open region (equals 2 - 2 genus - boundary
  // circles of the corresponding compact surface).
  int region_open_euler(int r) const { return region_open_euler_[r]; }
  bool region_is_disk(int r) const {
    return region_open_euler_[r] == 1 && static_cast<int>(region_walks_[r].size()) == 1;
  }
  // Crossing corners along the region's boundary walks.
  int region_corners(int r) const { return region_corners_[r]; }

  configuration owner_swapped() const {
    std::vector<edge_label> labels = labels_;
    for (auto& lb : labels)
      if (lb.own) lb.own = other(*lb.own);
    return assemble(map_, std::move(labels));
  }

  validation_report validate() const {
    validation_report rep;
    for (int v = 0; v < map_.vertex_count(); ++v) check_vertex(v, rep);
    for (int r = 0; r < region_count_; ++r) {
      if (region_open_euler_[r] == 1 && static_cast<int>(region_walks_[r].size()) == 1 &&
          region_corners_[r] <= 2) {
        rep.violations.push_back({"bigon-face", r,
                                  "disk region with " + std::to_string(region_corners_[r]) +
                                      " crossing corners"});
      }
    }
    for (int c = 0; c < map_.component_count(); ++c) {
      if (map_.component_genus(c) < 2)
        rep.violations.push_back({"genus-below-two", c,
                                  "surface component of genus " +
                                      std::to_string(map_.component_genus(c))});
    }
    check_marker_counts(rep);
    return rep;
  }

  void validate_or_throw() const {
    auto rep = validate();
    if (!rep.ok()) {
      std::string msg = "configuration invalid:";
      for (const auto& v : rep.violations) msg += " [" + v.kind + ": " + v.detail + "]";
      fail(errc::invalid_configuration, msg);
    }
  }

 private:
  void finish() {
    curve_edge_count_ = 0;
    for (int e = 0; e < map_.edge_count(); ++e)
      if (is_curve_edge(e)) ++curve_edge_count_;

    // Vertex kinds by curve germ census.
    kinds_.assign(map_.vertex_count(), vertex_kind::malformed);
    crossing_count_ = 0;
    for (int v = 0; v < map_.vertex_count(); ++v) {
      auto germs = curve_darts_at(v);
      if (germs.empty()) {
        kinds_[v] = vertex_kind::scaffold_only;
      } else if (germs.size() == 2) {
        kinds_[v] = vertex_kind::marker;
      } else if (germs.size() == 4) {
        kinds_[v] = vertex_kind::crossing;
        ++crossing_count_;
      }
    }

    // Regions: union-find over faces across scaffold edges.
    const int nf = map_.face_count();
    std::vector<int> parent(nf);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e = 0; e < map_.edge_count(); ++e) {
      if (!is_scaffold_edge(e)) continue;
      int d = map_.edge_dart(e, 0);
      int a = find(map_.left_face(d)), b = find(map_.right_face(d));
      if (a != b) parent[a] = b;
    }
    region_of_face_.assign(nf, -1);
    region_count_ = 0;
    for (int f = 0; f < nf; ++f) {
      int root = find(f);
      if (region_of_face_[root] < 0) region_of_face_[root] = region_count_++;
      region_of_face_[f] = region_of_face_[root];
    }
    region_faces_.assign(region_count_, {});
    for (int f = 0; f < nf; ++f) region_faces_[region_of_face_[f]].push_back(f);

    // Open Euler characteristic: faces minus interior scaffold edges plus
    // interior (scaffold-only) vertices.
    region_open_euler_.assign(region_count_, 0);
    for (int r = 0; r < region_count_; ++r)
      region_open_euler_[r] = static_cast<int>(region_faces_[r].size());
    for (int e = 0; e < map_.edge_count(); ++e) {
      if (!is_scaffold_edge(e)) continue;
      region_open_euler_[region_left(map_.edge_dart(e, 0))] -= 1;
    }
    for (int v = 0; v < map_.vertex_count(); ++v) {
      if (kinds_[v] == vertex_kind::scaffold_only)
        region_open_euler_[region_left(map_.vertex_darts(v).front())] += 1;
    }

    // Region boundary walks over curve darts.
    region_walks_.assign(region_count_, {});
    region_corners_.assign(region_count_, 0);
    std::vector<char> seen(map_.dart_count(), 0);
    for (int d0 = 0; d0 < map_.dart_count(); ++d0) {
      if (seen[d0] || !is_curve_dart(d0)) continue;
      std::vector<int> walk;
      int d = d0;
      do {
        seen[d] = 1;
        walk.push_back(d);
        d = walk_next(d);
      } while (d != d0);
      int r = region_left(d0);
      for (int x : walk)
        if (is_crossing(head(x))) region_corners_[r] += 1;
      region_walks_[r].push_back(std::move(walk));
    }
  }

  void check_vertex(int v, validation_report& rep) const {
    auto germs = curve_darts_at(v);
    if (germs.empty()) {
      rep.violations.push_back({"bad-vertex", v, "vertex carries no curve germ"});
      return;
    }
    if (germs.size() == 2) {
      owner a = edge_owner(map_.edge_of(germs[0]));
      owner b = edge_owner(map_.edge_of(germs[1]));
      if (a != b) {
        rep.violations.push_back({"bad-vertex", v, "two curve germs of different owners"});
        return;
      }
      if (germ_outgoing(germs[0]) == germ_outgoing(germs[1]))
        rep.violations.push_back(
            {"orientation-break", v, "marker germs are not one incoming, one outgoing"});
      return;
    }
    if (germs.size() != 4) {
      rep.violations.push_back({"bad-vertex", v,
                                std::to_string(germs.size()) + " curve germs"});
      return;
    }
    for (int i = 0; i < 4; ++i) {
      owner a = edge_owner(map_.edge_of(germs[i]));
      owner b = edge_owner(map_.edge_of(germs[(i + 1) % 4]));
      if (a == b) {
        rep.violations.push_back(
            {"non-alternating-crossing", v, "adjacent germs share owner " +
                                                std::string(owner_name(a))});
        return;
      }
    }
    for (owner o : {owner::first, owner::second}) {
      int in = 0, out = 0;
      for (int d : germs) {
        if (edge_owner(map_.edge_of(d)) != o) continue;
        (germ_outgoing(d) ? out : in) += 1;
      }
      if (in != 1 || out != 1) {
        rep.violations.push_back({"orientation-break", v,
                                  std::string(owner_name(o)) +
                                      " strand does not pass through the crossing"});
        return;
      }
    }
  }

  // Crossing-free curve components must carry exactly two markers.
  void check_marker_counts(validation_report& rep) const {
    std::vector<char> seen(map_.edge_count(), 0);
    for (int e0 = 0; e0 < map_.edge_count(); ++e0) {
      if (seen[e0] || !is_curve_edge(e0)) continue;
      // Follow the strand forward through markers and crossings.
      int markers = 0, crossings = 0;
      int e = e0, steps = 0;
      do {
        seen[e] = 1;
        int hd = head(forward_dart(e));
        if (kinds_[hd] == vertex_kind::crossing) ++crossings;
        if (kinds_[hd] == vertex_kind::marker) ++markers;
        e = next_strand_edge(e);
      } while (e != e0 && e >= 0 && ++steps <= map_.edge_count());
      if (e != e0) continue;  // malformed vertex already reported
      if (crossings == 0 && markers != 2)
        rep.violations.push_back({"wrong-marker-count", e0,
                                  "crossing-free component with " +
                                      std::to_string(markers) + " markers"});
    }
  }

 public:
  // The edge continuing the strand of e through the vertex at its forward
  // head: the unique same-owner outgoing germ there. Returns -1 at a
  // malformed vertex.
  int next_strand_edge(int e) const {
    int v = head(forward_dart(e));
    owner o = edge_owner(e);
    for (int d : map_.vertex_darts(v)) {
      if (!is_curve_dart(d) || !germ_outgoing(d)) continue;
      if (edge_owner(map_.edge_of(d)) == o && map_.edge_of(d) != e) return map_.edge_of(d);
    }
    // A one-edge loop component returns to itself.
    for (int d : map_.vertex_darts(v))
      if (is_curve_dart(d) && germ_outgoing(d) && edge_owner(map_.edge_of(d)) == o)
        return map_.edge_of(d);
    return -1;
  }

 private:
  combinatorial_map map_;
  std::vector<edge_label> labels_;
  std::vector<vertex_kind> kinds_;
  int curve_edge_count_ = 0;
  int crossing_count_ = 0;
  int region_count_ = 0;
  std::vector<int> region_of_face_;
  std::vector<std::vector<int>> region_faces_;
  std::vector<int> region_open_euler_;
  std::vector<int> region_corners_;
  std::vector<std::vector<std::vector<int>>> region_walks_;
};

}  // namespace hcc
