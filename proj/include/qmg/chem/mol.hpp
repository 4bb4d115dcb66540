// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "qmg/chem/element.hpp"

namespace qmg::chem {

struct Atom {
  Element element = Element::C;
  int formal_charge = 0;  // always 0 in this toolkit
  bool aromatic = false;
  int implicit_hydrogens = 0;  // assigned by sanitize
};

enum class BondOrder : int { Single = 1, Double = 2 };

struct Bond {
  int a = -1;  // endpoint indices, a < b after normalization
  int b = -1;
  BondOrder order = BondOrder::Single;
  bool aromatic = false;
  bool in_ring = false;
  bool conjugated = false;

  int other(int atom) const { return atom == a ? b : a; }
};

// Attributed molecular graph with dense 0..n-1 atom indices.
class MolGraph {
 public:
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  bool sanitized = false;

  int num_atoms() const { return static_cast<int>(atoms.size()); }
  int num_bonds() const { return static_cast<int>(bonds.size()); }

  int add_atom(Element e, bool aromatic = false) {
    atoms.push_back(Atom{e, 0, aromatic, 0});
    sanitized = false;
    return num_atoms() - 1;
  }

  // Returns the bond index. Throws on self-loops and duplicates.
  int add_bond(int u, int v, BondOrder order = BondOrder::Single,
               bool aromatic = false);

  // -1 when the atoms are not bonded.
  int bond_between(int u, int v) const;

  // Incident bond indices per atom, built on demand.
  std::vector<std::vector<int>> adjacency() const;

  int degree(int atom) const;

  // Explicit bond-order sum under the flag-based aromaticity accounting:
  // non-aromatic bonds contribute their integer order; each aromatic bond
  // contributes 1 plus a single +1 for atoms holding one formal ring double
  // (aromatic C always, aromatic N only at ring degree 2).
  int explicit_valence(int atom) const;

  // Connected components as atom-index lists, ordered by smallest member.
  std::vector<std::vector<int>> components() const;

  // Induced subgraph on `keep` (ordered); atom i of the result corresponds
  // to keep[i]. Clears the sanitized flag.
  MolGraph subgraph(const std::vector<int>& keep) const;

  // Applies `perm` (new index of atom i is perm[i]); used by permutation-
  // invariance tests and canonical ordering.
  MolGraph permuted(const std::vector<int>& perm) const;
};

// Validity gate: ring perception, aromaticity re-perception, valence caps,
// implicit hydrogen assignment, conjugation flags. Idempotent.
MolGraph sanitize(const MolGraph& g);

// All simple cycles of length 3-8, deduplicated up to rotation/reflection,
// each rotated so the smallest atom index comes first and the smaller
// neighbor second; sorted lexicographically.
std::vector<std::vector<int>> perceive_rings(const MolGraph& g);

// Flags 6-cycles aromatic per the C/N-only rule: all members C or N, every
// member degree <= 3, pi-electron count equal to 6 (sp2 C contributes 1; N
// with an exocyclic H or a double/aromatic bond contributes 1, otherwise 2).
// Clears aromatic flags not supported by a qualifying ring.
MolGraph perceive_aromaticity(const MolGraph& g);

// True when the two sanitized graphs are isomorphic as attributed graphs
// (element, aromatic flags, bond orders). Exponential worst case; intended
// for tests and small molecules.
bool isomorphic(const MolGraph& a, const MolGraph& b);

}  // namespace qmg::chem
