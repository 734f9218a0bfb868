#pragma once

#include <span>
#include <vector>

#include "platcover/plat.hpp"

namespace platcover {

// Symmetric integer matrix of pairwise linking numbers between components.
// Diagonal entries are fixed to 0: self-crossings are not invariant under
// move II and carry no oracle value.
struct LinkingMatrix {
  int mu = 0;
  std::vector<std::vector<int>> entries;

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;
};

// Sign of one crossing: letter.sign * d_L * d_R with Descending -> +1 and
// Ascending -> -1, where d_L, d_R are the directions of the strands in
// columns (index, index+1) immediately above the letter.
int crossing_sign(const BraidLetter& letter, StrandDirection dir_left,
                  StrandDirection dir_right);

// Walks the word top to bottom tracking column occupants; accumulates
// crossing signs between strands of distinct components and halves the
// totals. An odd accumulator raises InternalCheckError.
LinkingMatrix linking_matrix(const OrientedPlat& oriented);

// True iff b equals a after relabeling components by `matching` (1-based,
// matching[j-1] = component of a corresponding to component j of b) and
// reorienting some subset of components, i.e. b[j][k] == e_j e_k *
// a[m(j)][m(k)] for some sign vector e. An empty matching means identity.
bool linking_equivalent(const LinkingMatrix& a, const LinkingMatrix& b,
                        std::span<const int> matching = {});

}  // namespace platcover
