#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocnet/element_set.hpp"

namespace ocnet {

inline constexpr std::size_t kDefaultFamilyCap = std::size_t{1} << 16;

// A closure system grew past its configured cap. Enumeration never
// truncates silently.
class FamilyOverflow : public std::runtime_error {
 public:
  explicit FamilyOverflow(std::size_t cap)
      : std::runtime_error("closed-set family exceeds cap of " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

// Ganter's NextClosure: visits every fixed point of `close` over the
// universe {0..n-1} exactly once, in lectic order. `close` must be a closure
// operator whose value on the full universe is the full universe.
// Returns the number of closed sets visited.
template <class Close, class Visit>
std::size_t next_closure(std::size_t n, Close&& close, Visit&& visit,
                         std::size_t cap = kDefaultFamilyCap) {
  std::size_t count = 0;
  auto emit = [&](const ElementSet& s) {
    if (++count > cap) throw FamilyOverflow(cap);
    visit(s);
  };

  ElementSet current = close(ElementSet(n));
  emit(current);
  while (!current.is_full()) {
    bool advanced = false;
    for (std::size_t k = n; k-- > 0;) {
      if (current.contains(k)) {
        current.erase(k);
        continue;
      }
      ElementSet candidate = close(current.with(k));
      // Canonicity: the closure adds nothing below k.
      if (candidate.agrees_below(current, k)) {
        current = std::move(candidate);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("next_closure: operator is not a closure on the universe");
    emit(current);
  }
  return count;
}

template <class Close>
std::vector<ElementSet> closed_family(std::size_t n, Close&& close, std::size_t cap = kDefaultFamilyCap) {
  std::vector<ElementSet> out;
  next_closure(n, close, [&](const ElementSet& s) { out.push_back(s); }, cap);
  return out;
}

}  // namespace ocnet
