// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string_view>

namespace qmg::chem {

// Supported element alphabet: the QM9 heavy atoms plus hydrogen.
enum class Element : int { C = 0, N = 1, O = 2, F = 3, H = 4 };

struct ElementInfo {
  std::string_view symbol;
  int atomic_number;
  double standard_atomic_weight;
  int max_valence;
  int default_valence;
};

constexpr std::array<ElementInfo, 5> kElements = {{
    {"C", 6, 12.011, 4, 4},
    {"N", 7, 14.007, 3, 3},
    {"O", 8, 15.999, 2, 2},
    {"F", 9, 18.998, 1, 1},
    {"H", 1, 1.008, 1, 1},
}};

constexpr const ElementInfo& info(Element e) {
  return kElements[static_cast<int>(e)];
}

constexpr int atomic_number(Element e) { return info(e).atomic_number; }
constexpr double atomic_weight(Element e) {
  return info(e).standard_atomic_weight;
}
constexpr int max_valence(Element e) { return info(e).max_valence; }
constexpr int default_valence(Element e) { return info(e).default_valence; }
constexpr std::string_view symbol(Element e) { return info(e).symbol; }

}  // namespace qmg::chem
