#pragma once

#include <array>
#include <string>
#include <vector>

#include "superschur/bases.hpp"
#include "superschur/superpartition.hpp"

namespace superschur {

/// One letter of a tableau weight; fermionic letters may be 0.
struct Letter {
  int value = 0;
  bool fermionic = false;
  bool operator==(const Letter& o) const {
    return value == o.value && fermionic == o.fermionic;
  }
};

/// Parses "3~,1~,2,1" (trailing ~ marks a fermionic letter).
std::vector<Letter> parse_weight(const std::string& text);
std::string weight_to_string(const std::vector<Letter>& w);

/// A tableau is a chain of superpartitions whose steps obey the Pieri rules
/// of its family; fillings are derived views.
struct Tableau {
  Basis family = Basis::s;  // s or sbar
  std::vector<SuperPartition> chain;  // chain[i] after i letters; chain[0] = inner shape
  std::vector<Letter> weight;
  int sign = 1;
};

/// All tableaux of shape lambda/omega and the given weight, depth-first in
/// the deterministic Pieri term order.  The sign of every tableau is
/// checked against the inversion count of its circle reading word.
std::vector<Tableau> enumerate_tableaux(const SuperPartition& lambda,
                                        const SuperPartition& omega,
                                        const std::vector<Letter>& weight, Basis family);

/// Signed tableau generating function: sum over superpartition weights
/// Gamma of (signed count) m_Gamma.
SymSuperFunc generating_function(const SuperPartition& lambda, const SuperPartition& omega,
                                 Basis family);

/// Derived filling of a tableau: letters on the cells of the final star
/// plus circled letters.
struct Filling {
  Partition inner;                          // star of the inner shape
  std::vector<std::vector<int>> letters;    // letters[r-1][c-1], 0 for inner cells
  std::vector<std::array<int, 3>> circles;  // {row, col, letter}
};

Filling filling_of(const Tableau& t);

enum class RenderFormat { plain, latex };
std::string render(const Tableau& t, RenderFormat fmt = RenderFormat::plain);

/// Rebuilds the chain from a filling by stripping the largest letter
/// repeatedly (the reconstruction rules are family-specific).
std::vector<SuperPartition> reconstruct_chain(const Filling& f, Basis family, int nletters);

}  // namespace superschur
