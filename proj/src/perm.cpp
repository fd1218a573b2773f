#include "powerdiam/perm.hpp"

#include <cctype>
#include <limits>
#include <numeric>

namespace powerdiam {

Permutation::Permutation(int degree) {
  images_.resize(static_cast<std::size_t>(degree));
  for (std::size_t i = 0; i < images_.size(); ++i)
    images_[i] = static_cast<std::uint16_t>(i);
}

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size());
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("image vector is not a permutation");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  std::vector<std::uint16_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[i] = rhs.images_[images_[i]];
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[images_[i]] = static_cast<std::uint16_t>(i);
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size());
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation parse_cycles(const std::string& text, int degree) {
  if (degree < 0 || degree > std::numeric_limits<std::uint16_t>::max())
    throw std::invalid_argument("degree out of range");
  std::vector<std::uint16_t> images(static_cast<std::size_t>(degree));
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = static_cast<std::uint16_t>(i);
  std::vector<bool> used(static_cast<std::size_t>(degree));

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  bool any = false;
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation", i);
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected a point or ')'", i);
      std::size_t start = i;
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) throw ParseError("point exceeds degree " + std::to_string(degree), start);
        ++i;
      }
      if (v < 1) throw ParseError("points are 1-based", start);
      if (used[static_cast<std::size_t>(v - 1)])
        throw ParseError("point " + std::to_string(v) + " repeated", start);
      used[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(static_cast<int>(v));
    }
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      int from = cycle[j] - 1;
      int to = cycle[(j + 1) % cycle.size()] - 1;
      images[static_cast<std::size_t>(from)] = static_cast<std::uint16_t>(to);
    }
    any = true;
    skip_ws();
  }
  if (!any) throw ParseError("empty permutation", 0);
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      seen[j] = true;
      j = p[j];
      first = false;
    } while (j != i);
    out += ')';
  }
  if (out.empty()) return "()";
  return out;
}

std::size_t PermHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto v : p.images()) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace powerdiam
