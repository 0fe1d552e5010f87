// Permutations on {0, ..., n-1}, the element type of every group.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monochar {

/// Raised for malformed input and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Point = std::uint32_t;

/**
 * A permutation stored by its image array. Products apply the left operand
 * first: (a * b)(i) = b(a(i)).
 */
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<char> hit(images_.size(), 0);
    for (Point p : images_) {
      if (p >= images_.size() || hit[p])
        throw Error("permutation images are not a bijection");
      hit[p] = 1;
    }
  }

  static Perm identity(std::size_t degree) {
    Perm p;
    p.images_.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<Point>(i);
    return p;
  }

  /// Parses cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
  static Perm from_cycles(std::size_t degree, std::string_view text) {
    Perm p = identity(degree);
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ','))
        ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
      if (text[pos] != '(') throw Error("expected '(' in cycle notation: " + std::string(text));
      ++pos;
      std::vector<Point> cycle;
      for (;;) {
        skip_ws();
        if (pos >= text.size()) throw Error("unterminated cycle: " + std::string(text));
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (start == pos) throw Error("bad point in cycle notation: " + std::string(text));
        unsigned long v = std::stoul(std::string(text.substr(start, pos - start)));
        if (v >= degree) throw Error("point " + std::to_string(v) + " exceeds degree");
        cycle.push_back(static_cast<Point>(v));
      }
      std::vector<Point> sorted = cycle;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("repeated point in cycle: " + std::string(text));
      // Cycles compose left to right.
      Perm c = identity(degree);
      for (std::size_t i = 0; i < cycle.size(); ++i)
        c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
      p = p * c;
      skip_ws();
    }
    return p;
  }

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Perm inverse() const {
    Perm q;
    q.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) q.images_[images_[i]] = static_cast<Point>(i);
    return q;
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw Error("permutation degrees differ");
    Perm c;
    c.images_.resize(a.images_.size());
    for (std::size_t i = 0; i < a.images_.size(); ++i) c.images_[i] = b.images_[a.images_[i]];
    return c;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  std::string to_cycles() const {
    std::string out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = 1;
        if (!first) out += ' ';
        out += std::to_string(j);
        first = false;
        j = images_[j];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (Point p : images_) {
      h ^= p;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace monochar
