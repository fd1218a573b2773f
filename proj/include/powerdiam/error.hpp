#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace powerdiam {

// Budgets for anything that enumerates. Every cap is adjustable from the CLI;
// blowing one raises ResourceError naming the cap and the flag that lifts it.
struct Limits {
  std::uint64_t max_states = 10'000'000;   // elements visited by closures and BFS
  std::uint64_t max_subsets = 1'000'000;   // candidate subsets in rank/diameter searches
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& cap_name, std::uint64_t limit, const std::string& flag)
      : std::runtime_error(cap_name + " cap of " + std::to_string(limit) +
                           " exceeded; raise it with " + flag),
        cap_name_(cap_name),
        limit_(limit),
        flag_(flag) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::uint64_t limit() const noexcept { return limit_; }
  const std::string& flag() const noexcept { return flag_; }

 private:
  std::string cap_name_;
  std::uint64_t limit_;
  std::string flag_;
};

class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace powerdiam
