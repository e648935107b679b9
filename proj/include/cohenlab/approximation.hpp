#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohenlab/binseq.hpp"

namespace cohenlab {

using SetMask = std::uint32_t;

std::vector<int> mask_to_set(SetMask m);
SetMask set_to_mask(const std::vector<int>& s, int universe);
// characteristic bits: position i is element i
SetMask bits_to_mask(const BinSeq& g);

// subset families over universe 0..u-1; the small-intersection checker's
// working model
struct FiniteModelPair {
  int universe = 0;
  std::size_t delta = 1;
  std::vector<SetMask> w_family;  // sorted, unique
  std::vector<SetMask> v_family;  // sorted, unique, contains w_family

  static FiniteModelPair make(int universe, std::size_t delta,
                              std::vector<SetMask> w, std::vector<SetMask> v);
  bool in_w(SetMask a) const;
  bool in_v(SetMask a) const;
};

struct ApproxVerdict {
  bool holds = true;
  std::optional<SetMask> counterexample;
};

// first A in V minus W, by lexicographic order of characteristic vectors,
// whose every intersection with a W-set smaller than delta stays in W
ApproxVerdict check_approximation(const FiniteModelPair& m);

// true iff g lies outside the family while all its small approximations lie
// inside: the shape a fresh generic over the inner families would have
bool generic_shape_violation(SetMask g, const std::vector<SetMask>& w_family,
                             std::size_t delta);
bool generic_shape_violation(const BinSeq& g,
                             const std::vector<SetMask>& w_family,
                             std::size_t delta);

}  // namespace cohenlab
