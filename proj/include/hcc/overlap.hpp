#pragma once

// The overlap field of a two-multicurve configuration: the unique (up to a
// per-component constant) integer function on faces whose jump across every
// edge matches the difference of the two curve chains. Its normalized maximum
// is the homological distance between the multicurves.

#include <climits>

#include "chain.hpp"

namespace hcc {

struct overlap_field {
  face_chain values;
  int max = 0;  // M, the homological distance for minimal-position inputs
};

// Integrate the difference x - y over the face-dual graph: crossing the
// forward dart of edge e from left to right raises the value by
// x(e) - y(e). Fails with not_homologous when some cycle has nonzero
// holonomy, i.e. [x] != [y] in curve homology. Values are shifted so every
// surface component attains minimum 0.
inline overlap_field overlap_between(const configuration& cfg, const edge_chain& x,
                                     const edge_chain& y) {
  const auto& m = cfg.map();
  const int nf = m.face_count();
  std::vector<int> val(nf, INT_MIN);
  overlap_field out;
  out.values.values.assign(nf, 0);
  out.max = 0;
  for (int f0 = 0; f0 < nf; ++f0) {
    if (val[f0] != INT_MIN) continue;
    val[f0] = 0;
    std::vector<int> stack{f0};
    std::vector<int> comp{f0};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int d : m.face_darts(f)) {
        int e = m.edge_of(d);
        int fd = cfg.is_curve_edge(e) ? cfg.forward_dart(e) : m.edge_dart(e, 0);
        int jump = x.at(e) - y.at(e);
        int nbr, nval;
        if (d == fd) {
          nbr = m.right_face(fd);
          nval = val[f] + jump;
        } else {
          nbr = m.left_face(fd);
          nval = val[f] - jump;
        }
        if (val[nbr] == INT_MIN) {
          val[nbr] = nval;
          stack.push_back(nbr);
          comp.push_back(nbr);
        } else {
          require(val[nbr] == nval, errc::not_homologous,
                  "overlap propagation inconsistent at face " + std::to_string(nbr));
        }
      }
    }
    int lo = INT_MAX;
    for (int f : comp) lo = std::min(lo, val[f]);
    for (int f : comp) {
      out.values.values[f] = val[f] - lo;
      out.max = std::max(out.max, val[f] - lo);
    }
  }
  return out;
}

inline overlap_field overlap_of(const configuration& cfg) {
  return overlap_between(cfg, owner_chain(cfg, owner::first),
                         owner_chain(cfg, owner::second));
}

inline int homological_distance(const configuration& cfg) { return overlap_of(cfg).max; }

// ---------------------------------------------------------------------------
// Arc classification.
// ---------------------------------------------------------------------------

enum class arc_kind { horizontal, vertical };
enum class arc_side { left, right };

inline const char* arc_kind_name(arc_kind k) {
  return k == arc_kind::horizontal ? "horizontal" : "vertical";
}
inline const char* arc_side_name(std::optional<arc_side> s) {
  if (!s) return "-";
  return *s == arc_side::left ? "left" : "right";
}

struct arc {
  owner own = owner::first;
  std::vector<int> edges;  // traversal order, all forward
  bool closed = false;     // entire crossing-free component
  int start_germ = -1;     // germ dart at the starting crossing (open arcs)
  int end_germ = -1;       // germ dart at the ending crossing
  arc_kind kind = arc_kind::horizontal;
  std::optional<arc_side> side;
};

struct arc_class {
  arc representative;
  arc_kind kind = arc_kind::horizontal;
  std::optional<arc_side> side;
  int multiplicity = 1;
};

namespace detail {

// Side of germ g relative to the other owner's strand through crossing v:
// left iff g lies in the CCW rotation interval from the strand's outgoing
// germ to its incoming germ.
inline arc_side side_at_crossing(const configuration& cfg, int g) {
  const auto& m = cfg.map();
  int v = m.vertex_of(g);
  owner other_own = other(cfg.edge_owner(m.edge_of(g)));
  int s_out = -1, s_in = -1;
  for (int d : m.vertex_darts(v)) {
    if (!cfg.is_curve_dart(d) || cfg.edge_owner(m.edge_of(d)) != other_own) continue;
    if (cfg.is_forward(d))
      s_out = d;
    else
      s_in = d;
  }
  require(s_out >= 0 && s_in >= 0, errc::invalid_configuration,
          "crossing lacks a through strand");
  for (int d = m.next(s_out); d != s_in; d = m.next(d))
    if (d == g) return arc_side::left;
  return arc_side::right;
}

}  // namespace detail

// Maximal same-owner arcs between crossings (whole components when a strand
// meets no crossing), with horizontal/vertical classification: an open arc is
// horizontal iff it departs and returns on the same side of the other
// multicurve, and that side is recorded. Closed arcs are horizontal by
// convention.
inline std::vector<arc> extract_arcs(const configuration& cfg) {
  const auto& m = cfg.map();
  std::vector<arc> arcs;
  for (owner o : {owner::first, owner::second}) {
    std::set<int> pending;
    for (int e : cfg.curve_edges(o)) pending.insert(e);
    while (!pending.empty()) {
      // Trace the full strand component through e0.
      int e0 = *pending.begin();
      std::vector<int> cycle;
      int e = e0;
      do {
        cycle.push_back(e);
        pending.erase(e);
        e = cfg.next_strand_edge(e);
        require(e >= 0, errc::invalid_configuration, "broken strand");
      } while (e != e0);
      // Split at crossings: edge cycle[i] ends at vertex head(forward); a
      // split happens after position i when that head is a crossing.
      std::vector<int> splits;
      for (size_t i = 0; i < cycle.size(); ++i) {
        int head = cfg.head(cfg.forward_dart(cycle[i]));
        if (cfg.is_crossing(head)) splits.push_back(static_cast<int>(i));
      }
      if (splits.empty()) {
        arc a;
        a.own = o;
        a.edges = cycle;
        a.closed = true;
        a.kind = arc_kind::horizontal;
        arcs.push_back(std::move(a));
        continue;
      }
      const int k = static_cast<int>(splits.size());
      const int n = static_cast<int>(cycle.size());
      for (int s = 0; s < k; ++s) {
        int from = (splits[s] + 1) % n;                 // first edge after the crossing
        int to = splits[(s + 1) % k];                   // last edge before the next
        arc a;
        a.own = o;
        for (int i = from;; i = (i + 1) % n) {
          a.edges.push_back(cycle[i]);
          if (i == to) break;
        }
        a.start_germ = cfg.forward_dart(a.edges.front());
        a.end_germ = m.twin(cfg.forward_dart(a.edges.back()));
        arc_side s0 = detail::side_at_crossing(cfg, a.start_germ);
        arc_side s1 = detail::side_at_crossing(cfg, a.end_germ);
        if (s0 == s1) {
          a.kind = arc_kind::horizontal;
          a.side = s0;
        } else {
          a.kind = arc_kind::vertical;
        }
        arcs.push_back(std::move(a));
      }
    }
  }
  return arcs;
}

// Group arcs into homotopy classes: two open arcs merge when they are the
// opposite same-owner sides of a rectangle region (a disk region with exactly
// four crossing corners); two closed arcs merge when they cobound an annulus
// region. Returns classes sorted by (owner, smallest edge id).
inline std::vector<arc_class> classify_arcs(const configuration& cfg) {
  const auto& m = cfg.map();
  std::vector<arc> arcs = extract_arcs(cfg);
  std::vector<int> arc_of_edge(m.edge_count(), -1);
  for (size_t i = 0; i < arcs.size(); ++i)
    for (int e : arcs[i].edges) arc_of_edge[e] = static_cast<int>(i);

  std::vector<int> parent(arcs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  for (int r = 0; r < cfg.region_count(); ++r) {
    auto walks = cfg.region_walks(r);
    if (cfg.region_is_disk(r) && cfg.region_corners(r) == 4) {
      // Split the single walk at crossing corners into four sides.
      const auto& w = walks.front();
      const int n = static_cast<int>(w.size());
      std::vector<int> corner_pos;  // i such that head(w[i]) is a crossing
      for (int i = 0; i < n; ++i)
        if (cfg.is_crossing(cfg.head(w[i]))) corner_pos.push_back(i);
      if (corner_pos.size() != 4) continue;
      std::array<int, 4> side_arc{};
      bool ok = true;
      for (int s = 0; s < 4; ++s) {
        int from = (corner_pos[s] + 1) % n;
        int to = corner_pos[(s + 1) % 4];
        int aid = arc_of_edge[m.edge_of(w[from])];
        for (int i = from;; i = (i + 1) % n) {
          if (arc_of_edge[m.edge_of(w[i])] != aid) ok = false;
          if (i == to) break;
        }
        side_arc[s] = aid;
      }
      if (!ok) continue;
      if (arcs[side_arc[0]].own == arcs[side_arc[2]].own) unite(side_arc[0], side_arc[2]);
      if (arcs[side_arc[1]].own == arcs[side_arc[3]].own) unite(side_arc[1], side_arc[3]);
    } else if (cfg.region_open_euler(r) == 0 && cfg.region_corners(r) == 0 &&
               walks.size() == 2) {
      // Annulus between closed strands.
      std::array<int, 2> aid{-1, -1};
      bool ok = true;
      for (int wi = 0; wi < 2 && ok; ++wi) {
        if (walks[wi].empty()) {
          ok = false;
          break;
        }
        aid[wi] = arc_of_edge[m.edge_of(walks[wi].front())];
        for (int d : walks[wi])
          if (arc_of_edge[m.edge_of(d)] != aid[wi]) ok = false;
      }
      if (ok && aid[0] >= 0 && aid[1] >= 0 && arcs[aid[0]].closed &&
          arcs[aid[1]].closed && arcs[aid[0]].own == arcs[aid[1]].own)
        unite(aid[0], aid[1]);
    }
  }

  std::map<int, std::vector<int>> groups;
  for (size_t i = 0; i < arcs.size(); ++i) groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  std::vector<arc_class> classes;
  for (auto& [root, members] : groups) {
    int rep = members.front();
    for (int i : members) {
      require(arcs[i].kind == arcs[rep].kind && arcs[i].side == arcs[rep].side &&
                  arcs[i].own == arcs[rep].own,
              errc::invalid_configuration, "inconsistent arc class");
      if (arcs[i].edges.front() < arcs[rep].edges.front()) rep = i;
    }
    arc_class c;
    c.representative = arcs[rep];
    c.kind = arcs[rep].kind;
    c.side = arcs[rep].side;
    c.multiplicity = static_cast<int>(members.size());
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const arc_class& a, const arc_class& b) {
    if (a.representative.own != b.representative.own)
      return a.representative.own == owner::first;
    return *std::min_element(a.representative.edges.begin(), a.representative.edges.end()) <
           *std::min_element(b.representative.edges.begin(), b.representative.edges.end());
  });
  return classes;
}

// ---------------------------------------------------------------------------
// Extremal regions.
// ---------------------------------------------------------------------------

struct extremal_regions_result {
  std::vector<int> smax_faces, smin_faces;
  edge_chain smax_boundary, smin_boundary;  // the region lies LEFT of its chain
};

inline extremal_regions_result extremal_regions(const configuration& cfg,
                                                const overlap_field& field) {
  const auto& m = cfg.map();
  extremal_regions_result out;
  face_chain ind_max, ind_min;
  ind_max.values.assign(m.face_count(), 0);
  ind_min.values.assign(m.face_count(), 0);
  for (int f = 0; f < m.face_count(); ++f) {
    if (field.values.at(f) == field.max) {
      out.smax_faces.push_back(f);
      ind_max.values[f] = 1;
    }
    if (field.values.at(f) == 0) {
      out.smin_faces.push_back(f);
      ind_min.values[f] = 1;
    }
  }
  out.smax_boundary = boundary(cfg, ind_max);
  out.smin_boundary = boundary(cfg, ind_min);
  // Every boundary arc must be horizontal.
  std::vector<arc> arcs = extract_arcs(cfg);
  std::vector<int> arc_of_edge(m.edge_count(), -1);
  for (size_t i = 0; i < arcs.size(); ++i)
    for (int e : arcs[i].edges) arc_of_edge[e] = static_cast<int>(i);
  for (const edge_chain* b : {&out.smax_boundary, &out.smin_boundary})
    for (auto [e, c] : b->coef) {
      require(arc_of_edge[e] >= 0 && arcs[arc_of_edge[e]].kind == arc_kind::horizontal,
              errc::invalid_configuration,
              "extremal region boundary contains a vertical arc");
    }
  return out;
}

// Crossing count; meaningful as the geometric intersection number only on
// bigon-free configurations, so the presence of a bigon (or monogon) region
// is an error here.
inline int intersection_number(const configuration& cfg) {
  for (int r = 0; r < cfg.region_count(); ++r) {
    if (cfg.region_is_disk(r)) {
      int c = cfg.region_corners(r);
      require(c == 0 || c > 2, errc::bigon_present,
              "disk region with " + std::to_string(c) + " corners");
    }
  }
  return cfg.crossing_count();
}

}  // namespace hcc
