#pragma once

// Integer chains on a configuration: 2-chains on faces, 1-chains on edges
// (signed relative to each edge's forward dart), and the boundary operator
// between them.

#include <map>

#include "config.hpp"

namespace hcc {

// 2-chain: one integer per face, dense.
struct face_chain {
  std::vector<int> values;

  face_chain() = default;
  explicit face_chain(int face_count, int init = 0) : values(face_count, init) {}

  int at(int f) const { return values.at(f); }
  int& at(int f) { return values.at(f); }
  int size() const { return static_cast<int>(values.size()); }

  bool operator==(const face_chain& o) const { return values == o.values; }

  face_chain& operator+=(const face_chain& o) {
    require(values.size() == o.values.size(), errc::unknown_face, "face-chain size mismatch");
    for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
  }
};

// 1-chain: sparse edge -> coefficient map; +1 means one forward traversal.
struct edge_chain {
  std::map<int, int> coef;

  int at(int e) const {
    auto it = coef.find(e);
    return it == coef.end() ? 0 : it->second;
  }
  void add(int e, int c) {
    if (c == 0) return;
    auto [it, inserted] = coef.try_emplace(e, 0);
    it->second += c;
    if (it->second == 0) coef.erase(it);
  }
  bool empty() const { return coef.empty(); }
  bool operator==(const edge_chain& o) const { return coef == o.coef; }
  bool operator!=(const edge_chain& o) const { return coef != o.coef; }

  edge_chain operator+(const edge_chain& o) const {
    edge_chain r = *this;
    for (auto [e, c] : o.coef) r.add(e, c);
    return r;
  }
  edge_chain operator-(const edge_chain& o) const {
    edge_chain r = *this;
    for (auto [e, c] : o.coef) r.add(e, -c);
    return r;
  }
  edge_chain operator-() const {
    edge_chain r;
    for (auto [e, c] : coef) r.coef[e] = -c;
    return r;
  }
  bool unit_coefficients() const {
    for (auto [e, c] : coef)
      if (c < -1 || c > 1) return false;
    return true;
  }
};

// Boundary of a face 2-chain: coefficient on edge e is Z(left face) -
// Z(right face) with respect to e's forward dart; scaffold edges use the
// dart with the lower index. The boundary of a constant chain on a closed
// component is zero.
inline edge_chain boundary(const configuration& cfg, const face_chain& z) {
  const auto& m = cfg.map();
  require(z.size() == m.face_count(), errc::unknown_face,
          "face chain does not match the configuration");
  edge_chain out;
  for (int e = 0; e < m.edge_count(); ++e) {
    int d = cfg.is_curve_edge(e) ? cfg.forward_dart(e) : m.edge_dart(e, 0);
    out.add(e, z.at(m.left_face(d)) - z.at(m.right_face(d)));
  }
  return out;
}

// The chain of one owner's full multicurve, every edge traversed forward.
inline edge_chain owner_chain(const configuration& cfg, owner o) {
  edge_chain out;
  for (int e = 0; e < cfg.map().edge_count(); ++e)
    if (cfg.is_curve_edge(e) && cfg.edge_owner(e) == o) out.add(e, 1);
  return out;
}

// A face chain constant on every region of the configuration (the only kind
// whose boundary avoids scaffold edges).
inline bool region_constant(const configuration& cfg, const face_chain& z) {
  for (int f = 0; f < cfg.map().face_count(); ++f)
    if (z.at(f) != z.at(cfg.region_faces(cfg.region_of_face(f)).front())) return false;
  return true;
}

// Lift a per-region assignment to a face chain.
inline face_chain from_regions(const configuration& cfg, const std::vector<int>& per_region) {
  require(static_cast<int>(per_region.size()) == cfg.region_count(), errc::unknown_face,
          "per-region values do not match the configuration");
  face_chain z(cfg.map().face_count());
  for (int f = 0; f < cfg.map().face_count(); ++f)
    z.at(f) = per_region[cfg.region_of_face(f)];
  return z;
}

}  // namespace hcc
