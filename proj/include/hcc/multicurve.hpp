#pragma once

// Multicurves as embedded edge-subcomplexes: a ±1 edge chain together with a
// non-crossing resolution at every vertex (incoming strands paired to
// outgoing strands compatibly with the rotation order), the resulting curve
// components, and the minimal intersection number between two such
// multicurves drawn in a thin neighbourhood of the complex.

#include <set>

#include "chain.hpp"

namespace hcc {

struct multicurve {
  edge_chain chain;                // coefficients in {-1, 0, +1}
  std::map<int, int> pair_out;     // arrival germ dart -> departure germ dart
  std::map<int, int> pair_in;      // inverse of pair_out
  // Curve components in traversal order: (edge, traversed forward?).
  std::vector<std::vector<std::pair<int, bool>>> components;
  std::vector<char> trivial;       // per component: bounds a disk on one side

  bool operator==(const multicurve& o) const { return chain == o.chain; }
  bool operator!=(const multicurve& o) const { return chain != o.chain; }
  bool forward(int e) const { return chain.at(e) > 0; }
};

namespace detail {

// Traversal dart of edge e under chain c (assumes e in support).
inline int traversal_dart(const configuration& cfg, const edge_chain& c, int e) {
  int f = cfg.forward_dart(e);
  return c.at(e) > 0 ? f : cfg.map().twin(f);
}

}  // namespace detail

// Complement structure of an edge subset: faces glued across every edge NOT
// in the support. open_euler is F - interior edges + interior vertices per
// component (χ of the corresponding compact surface with boundary).
struct complement_components {
  int count = 0;
  std::vector<int> comp_of_face;
  std::vector<int> open_euler;

  int of_face(int f) const { return comp_of_face[f]; }
};

inline complement_components complement_of(const configuration& cfg,
                                           const std::set<int>& support) {
  const auto& m = cfg.map();
  complement_components out;
  std::vector<int> parent(m.face_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < m.edge_count(); ++e) {
    if (support.count(e)) continue;
    int d = m.edge_dart(e, 0);
    int a = find(m.left_face(d)), b = find(m.right_face(d));
    if (a != b) parent[a] = b;
  }
  out.comp_of_face.assign(m.face_count(), -1);
  for (int f = 0; f < m.face_count(); ++f) {
    int root = find(f);
    if (out.comp_of_face[root] < 0) out.comp_of_face[root] = out.count++;
    out.comp_of_face[f] = out.comp_of_face[root];
  }
  out.open_euler.assign(out.count, 0);
  for (int f = 0; f < m.face_count(); ++f) out.open_euler[out.comp_of_face[f]] += 1;
  for (int e = 0; e < m.edge_count(); ++e) {
    if (support.count(e)) continue;
    out.open_euler[out.comp_of_face[m.left_face(m.edge_dart(e, 0))]] -= 1;
  }
  for (int v = 0; v < m.vertex_count(); ++v) {
    bool interior = true;
    for (int d : m.vertex_darts(v))
      if (support.count(m.edge_of(d))) interior = false;
    if (interior)
      out.open_euler[out.comp_of_face[m.left_face(m.vertex_darts(v).front())]] += 1;
  }
  return out;
}

inline std::set<int> support_of(const edge_chain& c) {
  std::set<int> s;
  for (auto [e, v] : c.coef) s.insert(e);
  return s;
}

// Resolve a ±1 edge chain into an embedded multicurve: at every vertex the
// used germs must balance incoming against outgoing, and strands are paired
// greedily in rotation order (an incoming germ followed cyclically by an
// outgoing one pairs off first), which always yields a non-crossing pairing
// when balanced. Returns nullopt when some vertex is unbalanced.
inline std::optional<multicurve> resolve_embedded(const configuration& cfg,
                                                  const edge_chain& chain) {
  const auto& m = cfg.map();
  for (auto [e, c] : chain.coef) {
    require(c >= -1 && c <= 1, errc::coefficient_out_of_range,
            "edge " + std::to_string(e) + " has coefficient " + std::to_string(c));
    require(cfg.is_curve_edge(e), errc::coefficient_out_of_range,
            "chain supported on scaffold edge " + std::to_string(e));
  }
  multicurve mc;
  mc.chain = chain;

  // Germ roles at each vertex: +1 departure, -1 arrival, 0 unused.
  std::vector<int> role(m.dart_count(), 0);
  for (auto [e, c] : chain.coef) {
    int t = detail::traversal_dart(cfg, chain, e);
    role[t] = +1;
    role[m.twin(t)] = -1;
  }
  for (int v = 0; v < m.vertex_count(); ++v) {
    std::vector<int> active;
    for (int d : m.vertex_darts(v))
      if (role[d] != 0) active.push_back(d);
    if (active.empty()) continue;
    int balance = 0;
    for (int d : active) balance += role[d];
    if (balance != 0) return std::nullopt;
    // Greedy adjacent pairing on the cyclic germ sequence.
    std::vector<int> work = active;
    while (!work.empty()) {
      bool paired = false;
      const int k = static_cast<int>(work.size());
      for (int i = 0; i < k; ++i) {
        int a = work[i], b = work[(i + 1) % k];
        if (role[a] == -1 && role[b] == +1) {
          mc.pair_out[a] = b;
          mc.pair_in[b] = a;
          work.erase(work.begin() + (i + 1) % k);
          work.erase(work.begin() + (i < (i + 1) % k ? i : i - 1));
          paired = true;
          break;
        }
      }
      require(paired, errc::unresolvable, "balanced vertex failed to pair");
    }
  }

  // Trace components.
  std::set<int> pending = support_of(chain);
  while (!pending.empty()) {
    int e0 = *pending.begin();
    std::vector<std::pair<int, bool>> cyc;
    int e = e0;
    do {
      pending.erase(e);
      cyc.emplace_back(e, chain.at(e) > 0);
      int t = detail::traversal_dart(cfg, chain, e);
      int dep = mc.pair_out.at(m.twin(t));
      e = m.edge_of(dep);
    } while (e != e0);
    mc.components.push_back(std::move(cyc));
  }

  // Trivial flags: a component is trivial iff some complement component of
  // the whole multicurve is a disk whose adjacent support edges are exactly
  // this component's edges, all with the disk on one consistent side.
  auto comp = complement_of(cfg, support_of(chain));
  std::vector<std::set<int>> comp_edges(comp.count);
  std::vector<std::set<int>> comp_sides(comp.count);  // 0 = left of traversal, 1 = right
  for (auto [e, c] : chain.coef) {
    int t = detail::traversal_dart(cfg, chain, e);
    comp_edges[comp.of_face(m.left_face(t))].insert(e);
    comp_sides[comp.of_face(m.left_face(t))].insert(0);
    comp_edges[comp.of_face(m.right_face(t))].insert(e);
    comp_sides[comp.of_face(m.right_face(t))].insert(1);
  }
  for (auto& cyc : mc.components) {
    std::set<int> edges;
    for (auto [e, fwd] : cyc) edges.insert(e);
    bool triv = false;
    for (int r = 0; r < comp.count && !triv; ++r) {
      if (comp.open_euler[r] == 1 && comp_edges[r] == edges &&
          comp_sides[r].size() == 1)
        triv = true;
    }
    mc.trivial.push_back(triv ? 1 : 0);
  }
  return mc;
}

inline multicurve resolve_embedded_or_throw(const configuration& cfg, const edge_chain& chain) {
  auto mc = resolve_embedded(cfg, chain);
  require(mc.has_value(), errc::unresolvable,
          "chain has no non-crossing embedded resolution");
  return *mc;
}

// ---------------------------------------------------------------------------
// Minimal intersection number between two multicurves carried by the complex.
//
// The strands of x and y run in a thin neighbourhood of the complex. Where
// they share edges they form maximal cables ("runs"): along a run the two
// strands are parallel and x sits on one side of y, a binary choice per run
// end (an internal swap costs one crossing, so a run contributes 1 when its
// two end bits differ). At every vertex the strands connect germ slots by
// chords of the vertex disk; two chords cross exactly when their endpoints
// interlace in the refined cyclic boundary order, where the slot order of a
// cable's two strands at a run end is determined by the run's bit. The total
// is minimised exactly by enumerating bits over their coupling groups.
// ---------------------------------------------------------------------------

namespace detail {

struct run_end {
  int run = -1;
  int side = 0;    // 0: run travels away from this end's vertex; 1: into it
  int germ = -1;   // dart at the end vertex on the last shared edge
};

// The germ on the far side of the passage of multicurve m through the vertex
// of germ g: pairs arrival to departure within one strand visit.
inline int passage_partner(const multicurve& m, int g) {
  auto it = m.pair_out.find(g);
  if (it != m.pair_out.end()) return it->second;
  return m.pair_in.at(g);
}

inline int vertex_cost(const configuration& cfg, const multicurve& x, const multicurve& y,
                       int v, const std::map<int, int>& germ_bit_first_x) {
  const auto& m = cfg.map();
  // Refined boundary point list: (dart, strand 0=x/1=y) in cyclic order.
  std::vector<std::pair<int, int>> pts;
  auto x_on = [&](int d) { return x.chain.at(m.edge_of(d)) != 0; };
  auto y_on = [&](int d) { return y.chain.at(m.edge_of(d)) != 0; };
  for (int d : m.vertex_darts(v)) {
    bool bx = x_on(d), by = y_on(d);
    if (bx && by) {
      auto it = germ_bit_first_x.find(d);
      bool x_first = it == germ_bit_first_x.end() ? true : (it->second != 0);
      if (x_first) {
        pts.push_back({d, 0});
        pts.push_back({d, 1});
      } else {
        pts.push_back({d, 1});
        pts.push_back({d, 0});
      }
    } else if (bx) {
      pts.push_back({d, 0});
    } else if (by) {
      pts.push_back({d, 1});
    }
  }
  const int n = static_cast<int>(pts.size());
  std::map<std::pair<int, int>, int> pos;
  for (int i = 0; i < n; ++i) pos[pts[i]] = i;

  auto chords = [&](const multicurve& mc, int strand) {
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : mc.pair_out) {
      if (m.vertex_of(a) != v) continue;
      out.push_back({pos.at({a, strand}), pos.at({b, strand})});
    }
    return out;
  };
  auto cx = chords(x, 0), cy = chords(y, 1);
  int cost = 0;
  for (auto [a1, a2] : cx) {
    int da = ((a2 - a1) % n + n) % n;
    for (auto [b1, b2] : cy) {
      int d1 = ((b1 - a1) % n + n) % n;
      int d2 = ((b2 - a1) % n + n) % n;
      if ((d1 < da) != (d2 < da)) ++cost;
    }
  }
  return cost;
}

}  // namespace detail

inline int subcomplex_intersection(const configuration& cfg, const multicurve& x,
                                   const multicurve& y) {
  const auto& m = cfg.map();
  using namespace detail;
  if (x.chain.empty() || y.chain.empty()) return 0;

  std::vector<char> shared(m.edge_count(), 0);
  for (auto [e, c] : x.chain.coef)
    if (y.chain.at(e) != 0) shared[e] = 1;

  // Continuation of the cable past germ g: defined when both strands connect
  // g to the same partner germ.
  auto cont = [&](int g) -> int {
    int px = passage_partner(x, g);
    int py = passage_partner(y, g);
    return px == py ? px : -1;
  };

  // Runs: union-find over shared edges linked through continuations.
  std::vector<int> run_of_edge(m.edge_count(), -1);
  std::vector<std::vector<int>> run_edges;
  std::vector<char> edge_seen(m.edge_count(), 0);
  std::vector<run_end> ends;
  std::vector<std::vector<int>> run_end_idx;
  for (int e0 = 0; e0 < m.edge_count(); ++e0) {
    if (!shared[e0] || edge_seen[e0]) continue;
    // Walk from one germ of e0 outwards to an end; no end within the edge
    // budget means the run is cyclic.
    int start_germ = -1;
    int cur = m.edge_dart(e0, 0);
    for (int steps = 0; steps <= 2 * m.edge_count(); ++steps) {
      int c = cont(cur);
      if (c < 0) {
        start_germ = cur;
        break;
      }
      cur = m.twin(c);  // far germ of the adjacent shared edge
    }
    const int run = static_cast<int>(run_edges.size());
    run_edges.emplace_back();
    run_end_idx.emplace_back();
    if (start_germ < 0) {
      // Cyclic run: follow continuations forward from e0.
      int germ = m.twin(m.edge_dart(e0, 0));  // far germ of e0 in travel sense
      int e = e0;
      do {
        run_of_edge[e] = run;
        edge_seen[e] = 1;
        run_edges[run].push_back(e);
        int c = cont(germ);
        require(c >= 0, errc::invalid_map, "cyclic run lost its continuation");
        e = m.edge_of(c);
        germ = m.twin(c);
      } while (e != e0);
      continue;
    }
    // Open run: travel from start_germ to the far end.
    int germ = start_germ;  // dart at the start vertex on the first edge
    ends.push_back({run, 0, germ});
    run_end_idx[run].push_back(static_cast<int>(ends.size()) - 1);
    int e = m.edge_of(germ);
    while (true) {
      run_of_edge[e] = run;
      edge_seen[e] = 1;
      run_edges[run].push_back(e);
      int far = m.twin(germ);  // dart at the far vertex of e
      int c = cont(far);
      if (c < 0) {
        ends.push_back({run, 1, far});
        run_end_idx[run].push_back(static_cast<int>(ends.size()) - 1);
        break;
      }
      germ = c;
      e = m.edge_of(c);
    }
  }

  // Interesting vertices: both multicurves pass.
  std::vector<char> xv(m.vertex_count(), 0), yv(m.vertex_count(), 0);
  for (auto [g, h] : x.pair_out) xv[m.vertex_of(g)] = 1;
  for (auto [g, h] : y.pair_out) yv[m.vertex_of(g)] = 1;

  // Coupling groups over end-bit variables: a run couples its two ends; a
  // vertex couples every end germ it hosts.
  const int nb = static_cast<int>(ends.size());
  std::vector<int> parent(nb);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (auto& re : run_end_idx)
    if (re.size() == 2) unite(re[0], re[1]);
  std::map<int, std::vector<int>> ends_at_vertex;
  for (int i = 0; i < nb; ++i) ends_at_vertex[m.vertex_of(ends[i].germ)].push_back(i);
  for (auto& [v, list] : ends_at_vertex)
    for (size_t i = 1; i < list.size(); ++i) unite(list[0], list[i]);

  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < nb; ++i) groups[find(i)].push_back(i);

  std::vector<char> vertex_claimed(m.vertex_count(), 0);
  for (auto& [root, bits] : groups)
    for (int i : bits) vertex_claimed[m.vertex_of(ends[i].germ)] = 1;

  long long total = 0;
  // Bit-free vertices contribute a fixed cost.
  std::map<int, int> no_bits;
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (!xv[v] || !yv[v] || vertex_claimed[v]) continue;
    total += vertex_cost(cfg, x, y, v, no_bits);
  }

  for (auto& [root, bits] : groups) {
    require(bits.size() <= 20, errc::too_large, "intersection bit group too large");
    std::set<int> verts;
    for (int i : bits) verts.insert(m.vertex_of(ends[i].germ));
    std::set<int> runs;
    for (int i : bits) runs.insert(ends[i].run);
    long long best = -1;
    for (int mask = 0; mask < (1 << bits.size()); ++mask) {
      // bit value b: x lies left of the run's travel direction.
      std::map<int, int> germ_x_first;
      std::map<int, int> bit_of_end;
      for (size_t k = 0; k < bits.size(); ++k) {
        const run_end& re = ends[bits[k]];
        int b = (mask >> k) & 1;
        bit_of_end[bits[k]] = b;
        // Travel points into the vertex at side 1, away at side 0; x is
        // CCW-first in the slot iff x is left of the inward direction.
        bool x_left_of_inward = re.side == 1 ? (b != 0) : (b == 0);
        germ_x_first[re.germ] = x_left_of_inward ? 1 : 0;
      }
      long long cost = 0;
      for (int r : runs) {
        if (run_end_idx[r].size() == 2) {
          int b0 = bit_of_end.at(run_end_idx[r][0]);
          int b1 = bit_of_end.at(run_end_idx[r][1]);
          if (b0 != b1) cost += 1;
        }
      }
      for (int v : verts) {
        if (xv[v] && yv[v]) cost += vertex_cost(cfg, x, y, v, germ_x_first);
      }
      if (best < 0 || cost < best) best = cost;
    }
    total += best;
  }
  return static_cast<int>(total);
}

inline bool disjoint_multicurves(const configuration& cfg, const multicurve& a,
                                 const multicurve& b) {
  return subcomplex_intersection(cfg, a, b) == 0;
}

}  // namespace hcc
