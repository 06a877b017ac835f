#include "rhp/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "rhp/errors.hpp"

namespace rhp {

PermutationK PermutationK::identity(int k) {
  PermutationK p;
  p.images.resize(static_cast<std::size_t>(k));
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

PermutationK PermutationK::parse(const std::string& one_line) {
  PermutationK p;
  for (char c : one_line) {
    if (c < '1' || c > '9') throw ParseError("bad permutation '" + one_line + "'");
    p.images.push_back(c - '0');
  }
  if (!p.is_valid()) throw ParseError("not a permutation: '" + one_line + "'");
  return p;
}

bool PermutationK::is_identity() const {
  for (int i = 1; i <= k(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

bool PermutationK::is_valid() const {
  std::vector<int> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < k(); ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

int PermutationK::inversion_count() const {
  int count = 0;
  for (std::size_t a = 0; a < images.size(); ++a) {
    for (std::size_t b = a + 1; b < images.size(); ++b) {
      if (images[a] > images[b]) ++count;
    }
  }
  return count;
}

int PermutationK::moved_points() const {
  int count = 0;
  for (int i = 1; i <= k(); ++i) {
    if ((*this)(i) != i) ++count;
  }
  return count;
}

int PermutationK::nontrivial_cycle_count() const {
  std::vector<bool> seen(static_cast<std::size_t>(k()) + 1, false);
  int cycles = 0;
  for (int i = 1; i <= k(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) seen[static_cast<std::size_t>(j)] = true;
  }
  return cycles;
}

std::string PermutationK::to_string() const {
  std::string s;
  for (int v : images) s += std::to_string(v);
  return s;
}

int inversion_sign(const PermutationK& sigma) { return sigma.inversion_count() % 2 == 0 ? +1 : -1; }

std::vector<PermutationK> all_permutations(int k) {
  std::vector<PermutationK> result;
  auto p = PermutationK::identity(k);
  do {
    result.push_back(p);
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  return result;
}

}  // namespace rhp
