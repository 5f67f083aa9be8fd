#pragma once

// Parametric instance generators and the instance-file text format.
//
// Every generator emits a rotation system from a face-walk table: vertices
// are named, edges are directed (head/tail), and each face of the target map
// is listed as its counterclockwise boundary walk. The vertex rotations are
// recovered from the walks (next = walk-successor composed with twin), so a
// table is accepted exactly when the walks tile the dart set and close up
// coherently; the built map then has precisely the declared faces.
//
// Twisted curves are laid out directly as crossing patterns (parallel twist
// bands capped by genus regions), not by applying a twist operator.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chain.hpp"
#include "config.hpp"

namespace hcc {

class walk_builder {
 public:
  // Directed edge a -> b; returns its id. Darts 2e (a -> b) and 2e + 1
  // (b -> a); a curve edge takes 2e as its forward dart.
  int edge(const std::string& a, const std::string& b, std::optional<owner> own) {
    edges_.push_back({intern(a), intern(b), own});
    return static_cast<int>(edges_.size()) - 1;
  }
  static int fwd(int e) { return 2 * e; }
  static int rev(int e) { return 2 * e + 1; }

  // Append `pairs` interleaved loop pairs at vertex `at` to a face walk under
  // construction; each pair adds one handle to the region containing the face.
  void handles(std::vector<int>& walk, const std::string& at, int pairs) {
    for (int i = 0; i < pairs; ++i) {
      const int g1 = edge(at, at, std::nullopt);
      const int g2 = edge(at, at, std::nullopt);
      walk.insert(walk.end(), {fwd(g1), fwd(g2), rev(g1), rev(g2)});
    }
  }

  // Counterclockwise boundary walk of one face (the face lies to the left of
  // every listed dart).
  void face(std::vector<int> walk) { walks_.push_back(std::move(walk)); }

  configuration build() const {
    const int n = 2 * static_cast<int>(edges_.size());
    std::vector<int> twin(n), nxt(n, -1);
    std::vector<char> used(n, 0);
    for (int e = 0; 2 * e < n; ++e) {
      twin[fwd(e)] = rev(e);
      twin[rev(e)] = fwd(e);
    }
    auto tail = [&](int d) { return d % 2 == 0 ? edges_[d / 2].a : edges_[d / 2].b; };
    auto head = [&](int d) { return tail(twin[d]); };
    for (const auto& w : walks_) {
      require(!w.empty(), errc::bad_instance, "empty face walk");
      for (std::size_t i = 0; i < w.size(); ++i) {
        const int x = w[i], y = w[(i + 1) % w.size()];
        require(x >= 0 && x < n && !used[x], errc::bad_instance,
                "dart " + std::to_string(x) + " reused or out of range in face walks");
        used[x] = 1;
        require(head(x) == tail(y), errc::bad_instance,
                "face walk discontinuity at dart " + std::to_string(x));
        nxt[twin[x]] = y;
      }
    }
    for (int d = 0; d < n; ++d)
      require(used[d], errc::bad_instance, "dart " + std::to_string(d) + " missing from face walks");
    combinatorial_map m = combinatorial_map::build(std::move(twin), std::move(nxt));
    {
      std::vector<std::string> by_id(names_.size());
      for (const auto& [s, id] : names_) by_id[id] = s;
      std::vector<int> orbit_name(m.vertex_count(), -1);
      for (int d = 0; d < n; ++d) {
        int& slot = orbit_name[m.vertex_of(d)];
        if (slot < 0) slot = tail(d);
        require(slot == tail(d), errc::bad_instance,
                "face walks merge vertices " + by_id[slot] + " and " + by_id[tail(d)]);
      }
      require(m.vertex_count() == static_cast<int>(names_.size()), errc::bad_instance,
              "face walks split a named vertex (" + std::to_string(m.vertex_count()) +
                  " rotation orbits over " + std::to_string(names_.size()) + " names)");
    }
    require(m.face_count() == static_cast<int>(walks_.size()), errc::bad_instance,
            "face walks do not close into the declared faces");
    std::vector<edge_label> labels;
    labels.reserve(edges_.size());
    for (int e = 0; 2 * e < n; ++e)
      labels.push_back(edges_[e].own ? edge_label{edges_[e].own, fwd(e)}
                                     : edge_label{std::nullopt, -1});
    return configuration::assemble(std::move(m), std::move(labels));
  }

 private:
  struct edge_rec {
    int a, b;
    std::optional<owner> own;
  };

  int intern(const std::string& name) {
    auto it = names_.find(name);
    if (it != names_.end()) return it->second;
    const int id = static_cast<int>(names_.size());
    names_.emplace(name, id);
    return id;
  }

  std::map<std::string, int> names_;
  std::vector<edge_rec> edges_;
  std::vector<std::vector<int>> walks_;
};

namespace detail {

inline std::string nm(const char* stem, int k) { return stem + std::to_string(k); }

// Two curves crossing 2n times along two parallel twist bands joined by the
// band ends; the extreme-level regions are capped with `g_bot` and `g_top`
// handle pairs. Owner `first` runs straight through two markers; owner
// `second` spirals, jumping bands at the ends. For n >= 2.
inline configuration twist_band_pair(int n, int g_bot, int g_top) {
  walk_builder B;
  const auto F = owner::first, S = owner::second;
  std::vector<int> a(n), c(n), b(n), d(n);  // band edges, 1-based
  for (int k = 1; k < n; ++k) {
    a[k] = B.edge(nm("p", k), nm("p", k + 1), F);
    c[k] = B.edge(nm("p", k), nm("p", k + 1), S);
    b[k] = B.edge(nm("q", k), nm("q", k + 1), F);
    d[k] = B.edge(nm("q", k), nm("q", k + 1), S);
  }
  const int t1 = B.edge(nm("p", n), "Mt", F), t2 = B.edge("Mt", nm("q", 1), F);
  const int s1 = B.edge(nm("q", n), "Mb", F), s2 = B.edge("Mb", nm("p", 1), F);
  const int A = B.edge(nm("p", n), nm("q", 1), S), Bk = B.edge(nm("q", n), nm("p", 1), S);

  std::vector<int> bot = {walk_builder::fwd(s1)};
  B.handles(bot, "Mb", g_bot);
  bot.insert(bot.end(), {walk_builder::fwd(s2), walk_builder::rev(Bk)});
  B.face(std::move(bot));

  std::vector<int> top = {walk_builder::rev(t2)};
  B.handles(top, "Mt", g_top);
  top.insert(top.end(), {walk_builder::rev(t1), walk_builder::fwd(A)});
  B.face(std::move(top));

  B.face({walk_builder::rev(a[n - 1]), walk_builder::fwd(c[n - 1]), walk_builder::fwd(t1),
          walk_builder::fwd(t2), walk_builder::fwd(d[1]), walk_builder::rev(b[1]),
          walk_builder::rev(A)});
  B.face({walk_builder::fwd(a[1]), walk_builder::rev(c[1]), walk_builder::rev(s2),
          walk_builder::rev(s1), walk_builder::rev(d[n - 1]), walk_builder::fwd(b[n - 1]),
          walk_builder::fwd(Bk)});
  for (int k = 2; k < n; ++k) {
    B.face({walk_builder::rev(a[k - 1]), walk_builder::fwd(c[k - 1]), walk_builder::fwd(a[k]),
            walk_builder::rev(c[k])});
    B.face({walk_builder::fwd(b[k - 1]), walk_builder::fwd(d[k]), walk_builder::rev(b[k]),
            walk_builder::rev(d[k - 1])});
  }
  return B.build();
}

// n = 1 case: one crossing per band end; the two square faces between the
// crossings are joined by a connector into an annular region so neither is a
// bigon.
inline configuration twist_band_pair_one() {
  walk_builder B;
  const auto F = owner::first, S = owner::second;
  const int t1 = B.edge("p", "Mt", F), t2 = B.edge("Mt", "q", F);
  const int s1 = B.edge("q", "Mb", F), s2 = B.edge("Mb", "p", F);
  const int A1 = B.edge("p", "Mc1", S), A2 = B.edge("Mc1", "q", S);
  const int B1 = B.edge("q", "Mc2", S), B2 = B.edge("Mc2", "p", S);
  const int x = B.edge("Mc1", "Mc2", std::nullopt);

  std::vector<int> bot = {walk_builder::fwd(s1)};
  B.handles(bot, "Mb", 1);
  bot.insert(bot.end(),
             {walk_builder::fwd(s2), walk_builder::rev(B2), walk_builder::rev(B1)});
  B.face(std::move(bot));

  std::vector<int> top = {walk_builder::rev(t2)};
  B.handles(top, "Mt", 1);
  top.insert(top.end(),
             {walk_builder::rev(t1), walk_builder::fwd(A1), walk_builder::fwd(A2)});
  B.face(std::move(top));

  B.face({walk_builder::fwd(t1), walk_builder::fwd(t2), walk_builder::fwd(B1),
          walk_builder::rev(x), walk_builder::rev(A1), walk_builder::rev(s2),
          walk_builder::rev(s1), walk_builder::rev(A2), walk_builder::fwd(x),
          walk_builder::fwd(B2)});
  return B.build();
}

// Necklace of four twist stations around two parallel curves: owner `first`
// spirals in stations 1 and 2 (opposite handedness), owner `second` in
// stations 3 and 4. Stations are joined by crossing-free corridors; the two
// extreme-level corridor lenses carry a handle pair each, and the two
// mid-level lenses are glued into one annular region by a connector.
inline configuration twist_chain_pair(int a, int b) {
  walk_builder B;
  const auto W = owner::first, U = owner::second;
  auto fd = [](int e) { return walk_builder::fwd(e); };
  auto rv = [](int e) { return walk_builder::rev(e); };

  std::vector<int> u1(a), w1(a), u2(a), w2(a), u3(b), w3(b), u4(b), w4(b);
  for (int k = 1; k < a; ++k) {
    u1[k] = B.edge(nm("P1_", k), nm("P1_", k + 1), U);
    w1[k] = B.edge(nm("P1_", k), nm("P1_", k + 1), W);
    u2[k] = B.edge(nm("P2_", k), nm("P2_", k + 1), U);
    w2[k] = B.edge(nm("P2_", k), nm("P2_", k + 1), W);
  }
  for (int k = 1; k < b; ++k) {
    u3[k] = B.edge(nm("P3_", k), nm("P3_", k + 1), U);
    w3[k] = B.edge(nm("P3_", k), nm("P3_", k + 1), W);
    u4[k] = B.edge(nm("P4_", k), nm("P4_", k + 1), U);
    w4[k] = B.edge(nm("P4_", k), nm("P4_", k + 1), W);
  }
  const int W12 = B.edge(nm("P1_", a), nm("P2_", 1), W);
  const int U12a = B.edge(nm("P1_", a), "M12", U), U12b = B.edge("M12", nm("P2_", 1), U);
  const int W23 = B.edge(nm("P2_", a), nm("P3_", 1), W);
  const int U23a = B.edge(nm("P2_", a), "M23", U), U23b = B.edge("M23", nm("P3_", 1), U);
  const int W34 = B.edge(nm("P3_", b), nm("P4_", 1), W);
  const int U34a = B.edge(nm("P3_", b), "M34", U), U34b = B.edge("M34", nm("P4_", 1), U);
  const int W41 = B.edge(nm("P4_", b), nm("P1_", 1), W);
  const int U41a = B.edge(nm("P4_", b), "M41", U), U41b = B.edge("M41", nm("P1_", 1), U);
  const int x = B.edge("M23", "M41", std::nullopt);

  for (int k = 2; k < a; ++k) {
    B.face({rv(u1[k - 1]), fd(w1[k - 1]), fd(u1[k]), rv(w1[k])});
    B.face({fd(u2[k - 1]), fd(w2[k]), rv(u2[k]), rv(w2[k - 1])});
  }
  for (int k = 2; k < b; ++k) {
    B.face({fd(w3[k - 1]), fd(u3[k]), rv(w3[k]), rv(u3[k - 1])});
    B.face({fd(u4[k - 1]), fd(w4[k]), rv(u4[k]), rv(w4[k - 1])});
  }
  std::vector<int> c12 = {rv(U12b)};
  B.handles(c12, "M12", 1);
  c12.insert(c12.end(), {rv(U12a), fd(W12)});
  B.face(std::move(c12));
  B.face({rv(u1[a - 1]), fd(w1[a - 1]), fd(U12a), fd(U12b), fd(w2[1]), rv(u2[1]), rv(W12)});
  B.face({fd(W23), fd(u3[1]), rv(w3[1]), rv(U23b), rv(U23a), rv(w2[a - 1]), fd(u2[a - 1])});
  std::vector<int> c34 = {rv(U34b)};
  B.handles(c34, "M34", 1);
  c34.insert(c34.end(), {rv(U34a), fd(W34)});
  B.face(std::move(c34));
  B.face({fd(U34a), fd(U34b), fd(w4[1]), rv(u4[1]), rv(W34), rv(u3[b - 1]), fd(w3[b - 1])});
  B.face({rv(U41a), rv(w4[b - 1]), fd(u4[b - 1]), fd(W41), fd(u1[1]), rv(w1[1]), rv(U41b)});
  B.face({fd(U23a), fd(x), fd(U41b), rv(W41), fd(U41a), rv(x), fd(U23b), rv(W23)});
  return B.build();
}

}  // namespace detail

// Two homologous curves in minimal position crossing 2n times, cobounding on
// both sides; distance n + 1 apart.
inline configuration gen_bounding_pair(int n) {
  require(n >= 1, errc::bad_instance, "twist parameter must be >= 1");
  if (n == 1) return detail::twist_band_pair_one();
  return detail::twist_band_pair(n, 1, 1);
}

// The three pairwise union complexes of a curve v1 and its images v2, v3 under
// n twists about two twist pairs with disjoint supports.
struct quasiflat_family {
  configuration v1v2, v1v3, v2v3;
};

inline quasiflat_family gen_quasiflat(int n) {
  require(n >= 2, errc::bad_instance, "twist parameter must be >= 2");
  require(n % 2 == 0, errc::odd_parameter, "twist parameter must be even");
  return {detail::twist_band_pair(n, 1, 2), detail::twist_band_pair(n, 1, 2),
          detail::twist_chain_pair(n, n)};
}

// Two disjoint homologous curves, each carrying its two markers; one
// complement region has the requested genus, the other genus one.
inline configuration gen_disjoint_cobounding(int region_genus) {
  require(region_genus >= 0, errc::bad_instance, "region genus must be >= 0");
  walk_builder B;
  const auto F = owner::first, S = owner::second;
  const int e1 = B.edge("X1", "X2", F), e2 = B.edge("X2", "X1", F);
  const int f1 = B.edge("Y1", "Y2", S), f2 = B.edge("Y2", "Y1", S);
  const int x = B.edge("X1", "Y1", std::nullopt), y = B.edge("X2", "Y2", std::nullopt);
  auto fd = [](int e) { return walk_builder::fwd(e); };
  auto rv = [](int e) { return walk_builder::rev(e); };
  std::vector<int> plus = {rv(e2), rv(e1)};
  B.handles(plus, "X1", region_genus);
  plus.insert(plus.end(), {fd(x), fd(f1), fd(f2), rv(x)});
  B.face(std::move(plus));
  std::vector<int> minus = {fd(e1)};
  B.handles(minus, "X2", 1);
  minus.insert(minus.end(), {fd(y), rv(f1), rv(f2), rv(y), fd(e2)});
  B.face(std::move(minus));
  return B.build();
}

// Three pairwise-crossing curves on one surface, returned with one oriented
// cycle per strand. Owner labels are approximate (two strands share one), so
// the result is a measuring complex for chain-level distances, not a valid
// two-curve configuration.
struct triple_union {
  configuration cfg;
  edge_chain v1, v2, v3;
};

inline triple_union gen_triple(int n) {
  require(n >= 2, errc::bad_instance, "twist parameter must be >= 2");
  using detail::nm;
  walk_builder B;
  const auto V = owner::first, W = owner::second, U = owner::second;
  std::vector<int> ev, ew, eu;  // edge ids per strand
  auto EV = [&](const std::string& s, const std::string& t) {
    const int e = B.edge(s, t, V);
    ev.push_back(e);
    return e;
  };
  auto EW = [&](const std::string& s, const std::string& t) {
    const int e = B.edge(s, t, W);
    ew.push_back(e);
    return e;
  };
  auto EU = [&](const std::string& s, const std::string& t) {
    const int e = B.edge(s, t, U);
    eu.push_back(e);
    return e;
  };
  auto fd = [](int e) { return walk_builder::fwd(e); };
  auto rv = [](int e) { return walk_builder::rev(e); };

  // Block A: strand U on the right rail, V on the left rail (with marker MA),
  // W zigzagging between them on rungs and coils.
  std::vector<int> aU(n), aV(n), bU(n), bV(n), cA(n), dA(n), rP(n + 1), rQ(n + 1);
  for (int k = 1; k < n; ++k) {
    aU[k] = EU(nm("pU", k), nm("pU", k + 1));
    aV[k] = EV(nm("pV", k), nm("pV", k + 1));
    bU[k] = EU(nm("qU", k), nm("qU", k + 1));
    bV[k] = EV(nm("qV", k), nm("qV", k + 1));
    cA[k] = EW(nm("pV", k), nm("pU", k + 1));
    dA[k] = EW(nm("qU", k), nm("qV", k + 1));
  }
  for (int k = 1; k <= n; ++k) {
    rP[k] = EW(nm("pU", k), nm("pV", k));
    rQ[k] = EW(nm("qV", k), nm("qU", k));
  }
  const int tU = EU(nm("pU", n), nm("qU", 1));
  const int tV1 = EV(nm("pV", n), "MA"), tV2 = EV("MA", nm("qV", 1));
  const int ApA = EW(nm("pV", n), nm("qV", 1));

  // Block B mirror: strand W on the right rail, V on the left rail (marker
  // MB), U zigzagging.
  std::vector<int> aW(n), aV2(n), bW(n), bV2(n), cB(n), dB(n), sP(n + 1), sQ(n + 1);
  for (int k = 1; k < n; ++k) {
    aW[k] = EW(nm("pBW", k), nm("pBW", k + 1));
    aV2[k] = EV(nm("pBV", k), nm("pBV", k + 1));
    bW[k] = EW(nm("qBW", k), nm("qBW", k + 1));
    bV2[k] = EV(nm("qBV", k), nm("qBV", k + 1));
    cB[k] = EU(nm("pBV", k), nm("pBW", k + 1));
    dB[k] = EU(nm("qBW", k), nm("qBV", k + 1));
  }
  for (int k = 1; k <= n; ++k) {
    sP[k] = EU(nm("pBW", k), nm("pBV", k));
    sQ[k] = EU(nm("qBV", k), nm("qBW", k));
  }
  const int tW = EW(nm("pBW", n), nm("qBW", 1));
  const int tBV1 = EV(nm("pBV", n), "MB"), tBV2 = EV("MB", nm("qBV", 1));
  const int ApB = EU(nm("pBV", n), nm("qBV", 1));

  const int X1 = EW(nm("qU", n), "r1"), X2 = EW("r1", nm("pBW", 1));
  const int X3 = EW(nm("qBW", n), "r2"), X4 = EW("r2", nm("pU", 1));
  const int Y1 = EU(nm("qU", n), "r1"), Y2 = EU("r1", nm("pBW", 1));
  const int Y3 = EU(nm("qBW", n), "r2"), Y4 = EU("r2", nm("pU", 1));
  const int Z1 = EV(nm("qV", n), nm("pBV", 1)), Z2 = EV(nm("qBV", n), nm("pV", 1));
  const int k1 = B.edge("r1", "r2", std::nullopt), k2 = B.edge("r1", "r2", std::nullopt);

  // Block A faces.
  for (int k = 1; k < n; ++k) {
    B.face({fd(aV[k]), rv(rP[k + 1]), rv(aU[k]), fd(rP[k])});
    B.face({fd(bV[k]), fd(rQ[k + 1]), rv(bU[k]), rv(rQ[k])});
  }
  for (int k = 1; k + 1 < n; ++k) {
    B.face({fd(cA[k]), fd(aU[k + 1]), rv(cA[k + 1]), rv(aV[k])});
    B.face({fd(bU[k]), fd(dA[k + 1]), rv(bV[k + 1]), rv(dA[k])});
  }
  std::vector<int> capA = {fd(ApA), rv(tV2)};
  B.handles(capA, "MA", 1);
  capA.push_back(rv(tV1));
  B.face(std::move(capA));
  B.face({fd(tV1), fd(tV2), fd(rQ[1]), rv(tU), fd(rP[n])});
  B.face({fd(cA[n - 1]), fd(tU), fd(dA[1]), rv(bV[1]), rv(ApA), rv(aV[n - 1])});

  // Block B faces.
  for (int k = 1; k < n; ++k) {
    B.face({fd(aV2[k]), rv(sP[k + 1]), rv(aW[k]), fd(sP[k])});
    B.face({fd(bV2[k]), fd(sQ[k + 1]), rv(bW[k]), rv(sQ[k])});
  }
  for (int k = 1; k + 1 < n; ++k) {
    B.face({fd(cB[k]), fd(aW[k + 1]), rv(cB[k + 1]), rv(aV2[k])});
    B.face({fd(bW[k]), fd(dB[k + 1]), rv(bV2[k + 1]), rv(dB[k])});
  }
  std::vector<int> capB = {fd(ApB), rv(tBV2)};
  B.handles(capB, "MB", 1);
  capB.push_back(rv(tBV1));
  B.face(std::move(capB));
  B.face({fd(tBV1), fd(tBV2), fd(sQ[1]), rv(tW), fd(sP[n])});
  B.face({fd(cB[n - 1]), fd(tW), fd(dB[1]), rv(bV2[1]), rv(ApB), rv(aV2[n - 1])});

  // Transition faces around the swap crossings r1, r2.
  B.face({fd(X1), fd(Y2), fd(aW[1]), rv(cB[1]), rv(Z1), rv(dA[n - 1]), fd(bU[n - 1])});
  B.face({rv(Y1), rv(rQ[n]), fd(Z1), rv(sP[1]), rv(X2)});
  B.face({fd(X4), fd(aU[1]), rv(cA[1]), rv(Z2), rv(dB[n - 1]), fd(bW[n - 1]), fd(Y3)});
  B.face({rv(Y4), rv(X3), rv(sQ[n]), fd(Z2), rv(rP[1])});
  B.face({fd(Y1), fd(k1), fd(Y4), rv(X4), rv(k1), rv(X1)});
  B.face({fd(X2), rv(Y2), fd(k2), rv(Y3), fd(X3), rv(k2)});

  triple_union out{B.build(), {}, {}, {}};
  auto as_chain = [](const std::vector<int>& es) {
    edge_chain z;
    for (int e : es) z.add(e, 1);
    return z;
  };
  out.v1 = as_chain(ev);
  out.v2 = as_chain(ew);
  out.v3 = as_chain(eu);
  return out;
}

// ---- Instance file format (UTF-8 JSON) -------------------------------------
//
// Top level: dart_count, twin, next, and `edges`, an array annotating the
// curve edges with {darts, owner, forward}. Edges absent from the array are
// scaffold. Serialization is canonical: fixed key order, two-space indent,
// edges in ascending id order.

inline std::string serialize(const configuration& cfg) {
  const combinatorial_map& m = cfg.map();
  nlohmann::ordered_json j;
  j["dart_count"] = m.dart_count();
  j["twin"] = nlohmann::ordered_json::array();
  j["next"] = nlohmann::ordered_json::array();
  for (int d = 0; d < m.dart_count(); ++d) {
    j["twin"].push_back(m.twin(d));
    j["next"].push_back(m.next(d));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (int e = 0; e < m.edge_count(); ++e) {
    if (!cfg.is_curve_edge(e)) continue;
    nlohmann::ordered_json je;
    je["darts"] = {m.edge_dart(e, 0), m.edge_dart(e, 1)};
    je["owner"] = owner_name(cfg.edge_owner(e));
    je["forward"] = cfg.forward_dart(e);
    j["edges"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

inline configuration parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::syntax_error, e.what());
  }
  require(j.is_object(), errc::semantic_error, "top level is not an object");
  for (const char* key : {"dart_count", "twin", "next", "edges"})
    require(j.contains(key), errc::semantic_error, std::string("field `") + key + "` missing");
  require(j["dart_count"].is_number_integer(), errc::semantic_error,
          "field `dart_count` is not an integer");
  const int n = j["dart_count"].get<int>();
  require(n >= 0 && n % 2 == 0, errc::semantic_error,
          "dart_count must be a nonnegative even integer");
  auto read_perm = [&](const char* key) {
    const auto& arr = j[key];
    require(arr.is_array() && static_cast<int>(arr.size()) == n, errc::semantic_error,
            std::string("field `") + key + "` is not an array of length dart_count");
    std::vector<int> out(n);
    for (int d = 0; d < n; ++d) {
      require(arr[d].is_number_integer(), errc::semantic_error,
              std::string("`") + key + "`[" + std::to_string(d) + "] is not an integer");
      out[d] = arr[d].get<int>();
      require(out[d] >= 0 && out[d] < n, errc::semantic_error,
              std::string("`") + key + "`[" + std::to_string(d) + "] out of range");
    }
    return out;
  };
  std::vector<int> twin = read_perm("twin"), nxt = read_perm("next");
  std::vector<char> seen(n, 0);
  for (int d = 0; d < n; ++d) {
    require(twin[d] != d, errc::semantic_error,
            "`twin` has a fixed point at dart " + std::to_string(d));
    require(twin[twin[d]] == d, errc::semantic_error,
            "`twin` is not an involution at dart " + std::to_string(d));
    require(!seen[nxt[d]], errc::semantic_error,
            "`next` is not a permutation: dart " + std::to_string(nxt[d]) + " hit twice");
    seen[nxt[d]] = 1;
  }
  combinatorial_map m = combinatorial_map::build(std::move(twin), std::move(nxt));
  std::vector<edge_label> labels(m.edge_count());
  const auto& edges = j["edges"];
  require(edges.is_array(), errc::semantic_error, "field `edges` is not an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& je = edges[i];
    const std::string at = "edges[" + std::to_string(i) + "]";
    require(je.is_object(), errc::semantic_error, at + " is not an object");
    require(je.contains("darts") && je["darts"].is_array() && je["darts"].size() == 2 &&
                je["darts"][0].is_number_integer() && je["darts"][1].is_number_integer(),
            errc::semantic_error, at + ".darts is not a pair of darts");
    const int d0 = je["darts"][0].get<int>(), d1 = je["darts"][1].get<int>();
    require(d0 >= 0 && d0 < m.dart_count() && m.twin(d0) == d1, errc::semantic_error,
            at + ".darts are not the two darts of one edge");
    require(je.contains("owner"), errc::semantic_error, at + ": owner missing");
    require(je["owner"].is_string(), errc::semantic_error, at + ".owner is not a string");
    const std::string ow = je["owner"].get<std::string>();
    require(ow == "first" || ow == "second", errc::semantic_error,
            at + ".owner must be \"first\" or \"second\"");
    require(je.contains("forward") && je["forward"].is_number_integer(), errc::semantic_error,
            at + ": forward dart missing");
    const int fwd = je["forward"].get<int>();
    require(fwd == d0 || fwd == d1, errc::semantic_error,
            at + ".forward is not one of the edge's darts");
    const int e = m.edge_of(d0);
    require(!labels[e].own, errc::semantic_error,
            at + " annotates edge " + std::to_string(e) + " twice");
    labels[e] = {ow == "first" ? owner::first : owner::second, fwd};
  }
  return configuration::assemble(std::move(m), std::move(labels));
}

}  // namespace hcc
