// SPDX-License-Identifier: Apache-2.0

#include "qmg/chem/mol.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "qmg/common.hpp"

namespace qmg::chem {

int MolGraph::add_bond(int u, int v, BondOrder order, bool aromatic) {
  if (u == v) throw SyntaxError("self-loop bond", 0);
  if (u < 0 || v < 0 || u >= num_atoms() || v >= num_atoms())
    throw ShapeMismatch("bond endpoint out of range");
  if (bond_between(u, v) >= 0) throw SyntaxError("duplicate bond", 0);
  Bond b;
  b.a = std::min(u, v);
  b.b = std::max(u, v);
  b.order = order;
  b.aromatic = aromatic;
  bonds.push_back(b);
  sanitized = false;
  return num_bonds() - 1;
}

int MolGraph::bond_between(int u, int v) const {
  for (int i = 0; i < num_bonds(); ++i) {
    const Bond& b = bonds[i];
    if ((b.a == u && b.b == v) || (b.a == v && b.b == u)) return i;
  }
  return -1;
}

std::vector<std::vector<int>> MolGraph::adjacency() const {
  std::vector<std::vector<int>> adj(atoms.size());
  for (int i = 0; i < num_bonds(); ++i) {
    adj[bonds[i].a].push_back(i);
    adj[bonds[i].b].push_back(i);
  }
  return adj;
}

int MolGraph::degree(int atom) const {
  int d = 0;
  for (const Bond& b : bonds)
    if (b.a == atom || b.b == atom) ++d;
  return d;
}

int MolGraph::explicit_valence(int atom) const {
  int plain = 0;
  int n_arom = 0;
  for (const Bond& b : bonds) {
    if (b.a != atom && b.b != atom) continue;
    if (b.aromatic)
      ++n_arom;
    else
      plain += static_cast<int>(b.order);
  }
  int v = plain + n_arom;
  if (n_arom > 0) {
    // One formal ring double per aromatic atom; pyrrole-type N (3 sigma
    // neighbors) contributes its lone pair instead and gets no bonus.
    const Element e = atoms[atom].element;
    if (e == Element::C)
      v += 1;
    else if (e == Element::N && degree(atom) == 2)
      v += 1;
  }
  return v;
}

std::vector<std::vector<int>> MolGraph::components() const {
  const auto adj = adjacency();
  std::vector<int> comp(atoms.size(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < num_atoms(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    std::vector<int> members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int bi : adj[u]) {
        int w = bonds[bi].other(u);
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

MolGraph MolGraph::subgraph(const std::vector<int>& keep) const {
  std::vector<int> remap(atoms.size(), -1);
  MolGraph out;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = static_cast<int>(i);
    out.atoms.push_back(atoms[keep[i]]);
  }
  for (const Bond& b : bonds) {
    if (remap[b.a] >= 0 && remap[b.b] >= 0) {
      Bond nb = b;
      nb.a = std::min(remap[b.a], remap[b.b]);
      nb.b = std::max(remap[b.a], remap[b.b]);
      out.bonds.push_back(nb);
    }
  }
  out.sanitized = false;
  return out;
}

MolGraph MolGraph::permuted(const std::vector<int>& perm) const {
  MolGraph out;
  out.atoms.resize(atoms.size());
  for (int i = 0; i < num_atoms(); ++i) out.atoms[perm[i]] = atoms[i];
  for (const Bond& b : bonds) {
    Bond nb = b;
    nb.a = std::min(perm[b.a], perm[b.b]);
    nb.b = std::max(perm[b.a], perm[b.b]);
    out.bonds.push_back(nb);
  }
  std::sort(out.bonds.begin(), out.bonds.end(), [](const Bond& x, const Bond& y) {
    return std::make_pair(x.a, x.b) < std::make_pair(y.a, y.b);
  });
  out.sanitized = sanitized;
  return out;
}

// --- ring perception --------------------------------------------------------

namespace {

constexpr int kMinRing = 3;
constexpr int kMaxRing = 8;

// Canonical form: rotate so the smallest member is first, then pick the
// direction that makes the second member smaller.
std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
  const int n = static_cast<int>(cycle.size());
  int pos = static_cast<int>(
      std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  std::vector<int> fwd(n), rev(n);
  for (int i = 0; i < n; ++i) fwd[i] = cycle[(pos + i) % n];
  for (int i = 0; i < n; ++i) rev[i] = cycle[(pos - i + n) % n];
  return fwd[1] <= rev[1] ? fwd : rev;
}

}  // namespace

std::vector<std::vector<int>> perceive_rings(const MolGraph& g) {
  const auto adj = g.adjacency();
  std::set<std::vector<int>> found;
  std::vector<int> path;
  std::vector<char> on_path(g.atoms.size(), 0);

  // Enumerates simple cycles anchored at their smallest vertex: every other
  // path vertex must exceed the anchor, which yields each cycle once per
  // direction; the canonical form collapses the two directions.
  auto dfs = [&](auto&& self, int anchor, int u) -> void {
    for (int bi : adj[u]) {
      const int w = g.bonds[bi].other(u);
      if (w == anchor && path.size() >= kMinRing) {
        found.insert(canonical_cycle(path));
        continue;
      }
      if (w <= anchor || on_path[w]) continue;
      if (path.size() >= kMaxRing) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self, anchor, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };

  for (int s = 0; s < g.num_atoms(); ++s) {
    path.assign(1, s);
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[s] = 1;
    dfs(dfs, s, s);
  }
  return {found.begin(), found.end()};
}

// --- aromaticity -------------------------------------------------------------

namespace {

bool has_double_bond(const MolGraph& g, const std::vector<int>& incident,
                     int atom) {
  for (int bi : incident)
    if (!g.bonds[bi].aromatic && g.bonds[bi].order == BondOrder::Double)
      return true;
  (void)atom;
  return false;
}

bool has_aromatic_bond(const MolGraph& g, const std::vector<int>& incident) {
  for (int bi : incident)
    if (g.bonds[bi].aromatic) return true;
  return false;
}

}  // namespace

MolGraph perceive_aromaticity(const MolGraph& g) {
  MolGraph out = g;
  const auto rings = perceive_rings(out);
  const auto adj = out.adjacency();

  // Snapshot-based evaluation: every candidate ring is judged against the
  // incoming flags/orders, then qualifying rings are applied at once.
  std::vector<char> atom_arom(out.atoms.size(), 0);
  std::vector<char> bond_arom(out.bonds.size(), 0);

  for (const auto& ring : rings) {
    if (ring.size() != 6) continue;
    bool ok = true;
    int pi = 0;
    for (int a : ring) {
      const Element e = out.atoms[a].element;
      if (e != Element::C && e != Element::N) {
        ok = false;
        break;
      }
      if (static_cast<int>(adj[a].size()) > 3) {
        ok = false;
        break;
      }
      const bool dbl = has_double_bond(out, adj[a], a);
      const bool arom = out.atoms[a].aromatic || has_aromatic_bond(out, adj[a]);
      if (e == Element::C) {
        pi += (dbl || arom) ? 1 : 0;
      } else {
        const int provisional_h =
            std::max(0, default_valence(e) - out.explicit_valence(a));
        pi += (provisional_h > 0 || dbl || arom) ? 1 : 2;
      }
    }
    if (!ok || pi != 6) continue;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const int u = ring[i];
      const int v = ring[(i + 1) % ring.size()];
      atom_arom[u] = 1;
      const int bi = out.bond_between(u, v);
      if (bi >= 0) bond_arom[bi] = 1;
    }
  }

  for (int i = 0; i < out.num_atoms(); ++i) out.atoms[i].aromatic = atom_arom[i];
  for (int i = 0; i < out.num_bonds(); ++i) {
    out.bonds[i].aromatic = bond_arom[i];
    if (bond_arom[i]) out.bonds[i].order = BondOrder::Single;
  }
  out.sanitized = false;
  return out;
}

// --- sanitize ----------------------------------------------------------------

MolGraph sanitize(const MolGraph& g) {
  // Structural invariants first.
  for (const Bond& b : g.bonds) {
    if (b.a == b.b) throw ValenceError("self-loop bond", b.a);
    if (b.a < 0 || b.b >= g.num_atoms())
      throw ShapeMismatch("bond endpoint out of range");
  }
  for (int i = 0; i < g.num_bonds(); ++i)
    for (int j = i + 1; j < g.num_bonds(); ++j)
      if (g.bonds[i].a == g.bonds[j].a && g.bonds[i].b == g.bonds[j].b)
        throw ValenceError("duplicate bond", g.bonds[i].a);

  std::vector<char> was_aromatic(g.atoms.size(), 0);
  for (int i = 0; i < g.num_atoms(); ++i) was_aromatic[i] = g.atoms[i].aromatic;

  MolGraph out = perceive_aromaticity(g);

  // A written aromatic atom must survive re-perception.
  for (int i = 0; i < out.num_atoms(); ++i)
    if (was_aromatic[i] && !out.atoms[i].aromatic)
      throw AromaticityError("aromatic atom outside any aromatic ring", i);

  // Ring membership flags.
  const auto rings = perceive_rings(out);
  for (Bond& b : out.bonds) b.in_ring = false;
  for (const auto& ring : rings) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const int bi = out.bond_between(ring[i], ring[(i + 1) % ring.size()]);
      if (bi >= 0) out.bonds[bi].in_ring = true;
    }
  }

  // Valence caps and implicit hydrogens.
  for (int i = 0; i < out.num_atoms(); ++i) {
    const Element e = out.atoms[i].element;
    const int v = out.explicit_valence(i);
    if (v > max_valence(e))
      throw ValenceError("explicit valence exceeds element maximum", i);
    out.atoms[i].implicit_hydrogens = std::max(0, default_valence(e) - v);
    out.atoms[i].formal_charge = 0;
  }

  // Conjugation: aromatic bonds, doubles adjacent to another pi bond, and
  // singles bridging two pi systems.
  const auto adj = out.adjacency();
  auto has_pi = [&](int atom, int skip_bond) {
    for (int bi : adj[atom]) {
      if (bi == skip_bond) continue;
      const Bond& b = out.bonds[bi];
      if (b.aromatic || b.order == BondOrder::Double) return true;
    }
    return false;
  };
  for (int i = 0; i < out.num_bonds(); ++i) {
    Bond& b = out.bonds[i];
    if (b.aromatic)
      b.conjugated = true;
    else if (b.order == BondOrder::Double)
      b.conjugated = has_pi(b.a, i) || has_pi(b.b, i);
    else
      b.conjugated = has_pi(b.a, i) && has_pi(b.b, i);
  }

  out.sanitized = true;
  return out;
}

// --- isomorphism (test helper) ------------------------------------------------

namespace {

bool atoms_match(const Atom& x, const Atom& y) {
  return x.element == y.element && x.aromatic == y.aromatic;
}

bool bonds_match(const Bond& x, const Bond& y) {
  if (x.aromatic != y.aromatic) return false;
  if (!x.aromatic && x.order != y.order) return false;
  return true;
}

}  // namespace

bool isomorphic(const MolGraph& a, const MolGraph& b) {
  if (a.num_atoms() != b.num_atoms() || a.num_bonds() != b.num_bonds())
    return false;
  const int n = a.num_atoms();
  std::vector<int> map(n, -1), used(n, 0);
  const auto adj_a = a.adjacency();

  auto feasible = [&](int u, int v) {
    if (!atoms_match(a.atoms[u], b.atoms[v])) return false;
    for (int bi : adj_a[u]) {
      const int w = a.bonds[bi].other(u);
      if (map[w] < 0) continue;
      const int bj = b.bond_between(v, map[w]);
      if (bj < 0 || !bonds_match(a.bonds[bi], b.bonds[bj])) return false;
    }
    // Degree must match exactly; missing mapped-neighbor bonds are caught
    // above, extra ones by the degree check.
    return a.degree(u) == b.degree(v);
  };

  auto backtrack = [&](auto&& self, int u) -> bool {
    if (u == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v] || !feasible(u, v)) continue;
      map[u] = v;
      used[v] = 1;
      if (self(self, u + 1)) return true;
      map[u] = -1;
      used[v] = 0;
    }
    return false;
  };
  return backtrack(backtrack, 0);
}

}  // namespace qmg::chem
