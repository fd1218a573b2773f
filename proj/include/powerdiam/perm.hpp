#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powerdiam/error.hpp"

namespace powerdiam {

// Permutation of {1..degree}, stored 0-based. Composition is left to right:
// (p * q) applies p first, then q.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);                       // identity
  explicit Permutation(std::vector<std::uint16_t> images);

  int degree() const { return static_cast<int>(images_.size()); }
  std::uint16_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  std::uint64_t order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint16_t> images_;
};

// Cycle notation, 1-based points, e.g. "(1 2 3)(4 5)". Whitespace between
// tokens is free-form. Rejects out-of-range and repeated points with the
// offending character position. "()" is accepted as the identity.
Permutation parse_cycles(const std::string& text, int degree);

// Canonical form: cycles ordered by smallest moved point, each cycle written
// from its smallest point; fixed points omitted; identity prints as "()".
std::string format_cycles(const Permutation& p);

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace powerdiam
