#pragma once

#include <string>
#include <vector>

namespace rhp {

// A permutation of {1..k}; images[i-1] = sigma(i).
struct PermutationK {
  std::vector<int> images;

  int k() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[static_cast<std::size_t>(i - 1)]; }

  static PermutationK identity(int k);
  // Parses one-line notation such as "231" (k <= 9).
  static PermutationK parse(const std::string& one_line);

  bool is_identity() const;
  bool is_valid() const;
  int inversion_count() const;
  int moved_points() const;
  int nontrivial_cycle_count() const;
  std::string to_string() const;

  friend bool operator==(const PermutationK&, const PermutationK&) = default;
};

// (-1)^(number of inversions)
int inversion_sign(const PermutationK& sigma);

// All of S_k in lexicographic order of one-line notation.
std::vector<PermutationK> all_permutations(int k);

}  // namespace rhp
