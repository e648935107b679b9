#include "cohenlab/approximation.hpp"

#include <algorithm>
#include <bit>

#include "cohenlab/errors.hpp"

namespace cohenlab {

std::vector<int> mask_to_set(SetMask m) {
  std::vector<int> out;
  for (int i = 0; m >> i; ++i)
    if (m >> i & 1u) out.push_back(i);
  return out;
}

SetMask set_to_mask(const std::vector<int>& s, int universe) {
  SetMask m = 0;
  for (int x : s) {
    if (x < 0 || x >= universe)
      throw MalformedCondition("set element " + std::to_string(x) +
                               " outside universe 0.." +
                               std::to_string(universe - 1));
    m |= SetMask{1} << x;
  }
  return m;
}

SetMask bits_to_mask(const BinSeq& g) {
  require_binseq(g);
  if (g.size() > 31)
    throw BoundExceeded("characteristic vector longer than 31 positions");
  SetMask m = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] == '1') m |= SetMask{1} << i;
  return m;
}

namespace {

std::vector<SetMask> normalized_family(std::vector<SetMask> f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

// lexicographic order of characteristic vectors: position 0 weighs most
std::uint32_t charvec_key(SetMask a, int universe) {
  std::uint32_t key = 0;
  for (int i = 0; i < universe; ++i)
    if (a >> i & 1u) key |= std::uint32_t{1} << (universe - 1 - i);
  return key;
}

}  // namespace

FiniteModelPair FiniteModelPair::make(int universe, std::size_t delta,
                                      std::vector<SetMask> w,
                                      std::vector<SetMask> v) {
  if (universe < 0 || universe > 31)
    throw MalformedCondition("universe size must lie in 0..31");
  if (delta == 0) throw MalformedCondition("delta must be positive");
  FiniteModelPair m;
  m.universe = universe;
  m.delta = delta;
  m.w_family = normalized_family(std::move(w));
  m.v_family = normalized_family(std::move(v));
  const SetMask full = (SetMask{1} << universe) - 1u;
  for (SetMask a : m.w_family)
    if (a & ~full)
      throw MalformedCondition("W-family member leaves the universe");
  for (SetMask a : m.v_family)
    if (a & ~full)
      throw MalformedCondition("V-family member leaves the universe");
  for (SetMask a : m.w_family)
    if (!std::binary_search(m.v_family.begin(), m.v_family.end(), a))
      throw MalformedCondition("W-family member missing from V-family");
  return m;
}

bool FiniteModelPair::in_w(SetMask a) const {
  return std::binary_search(w_family.begin(), w_family.end(), a);
}

bool FiniteModelPair::in_v(SetMask a) const {
  return std::binary_search(v_family.begin(), v_family.end(), a);
}

ApproxVerdict check_approximation(const FiniteModelPair& m) {
  std::vector<SetMask> candidates;
  for (SetMask a : m.v_family)
    if (!m.in_w(a)) candidates.push_back(a);
  std::sort(candidates.begin(), candidates.end(), [&](SetMask a, SetMask b) {
    return charvec_key(a, m.universe) < charvec_key(b, m.universe);
  });
  for (SetMask a : candidates) {
    bool small_apx_inside = true;
    for (SetMask b : m.w_family) {
      if (static_cast<std::size_t>(std::popcount(b)) >= m.delta) continue;
      if (!m.in_w(a & b)) {
        small_apx_inside = false;
        break;
      }
    }
    if (small_apx_inside) return ApproxVerdict{false, a};
  }
  return ApproxVerdict{true, std::nullopt};
}

bool generic_shape_violation(SetMask g, const std::vector<SetMask>& w_family,
                             std::size_t delta) {
  const std::vector<SetMask> w = normalized_family(w_family);
  if (std::binary_search(w.begin(), w.end(), g)) return false;
  for (SetMask b : w) {
    if (static_cast<std::size_t>(std::popcount(b)) >= delta) continue;
    if (!std::binary_search(w.begin(), w.end(), g & b)) return false;
  }
  return true;
}

bool generic_shape_violation(const BinSeq& g,
                             const std::vector<SetMask>& w_family,
                             std::size_t delta) {
  return generic_shape_violation(bits_to_mask(g), w_family, delta);
}

}  // namespace cohenlab
