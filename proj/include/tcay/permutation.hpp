#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcay {

/// An unordered pair {lo, hi} over {1..n} with lo < hi. Doubles as the
/// transposition (lo hi) and as an edge of a simple graph.
struct Transposition {
  int lo = 1;
  int hi = 2;

  Transposition() = default;
  /// Normalizes the pair; throws DomainError if i == j or either is < 1.
  Transposition(int i, int j);

  bool disjoint_from(const Transposition& other) const noexcept {
    return lo != other.lo && lo != other.hi && hi != other.lo && hi != other.hi;
  }
  bool contains(int x) const noexcept { return x == lo || x == hi; }
  /// Endpoint other than x. Undefined when x is not an endpoint.
  int other(int x) const noexcept { return x == lo ? hi : lo; }

  auto operator<=>(const Transposition&) const = default;
};

std::string to_string(const Transposition& t);

/// A permutation of {1..n} stored as its image table. Values are compared by
/// image table; composition is right-to-left.
class Permutation {
 public:
  /// Identity on {1..n}.
  explicit Permutation(int n = 1);

  /// From a one-line image table over {1..n}. Throws DomainError unless the
  /// table is a bijection.
  static Permutation from_images(std::span<const int> one_based_images);
  static Permutation from_images(std::initializer_list<int> one_based_images);

  /// Product of disjoint or overlapping cycles, applied right-to-left,
  /// e.g. from_cycles(4, {{1, 2, 3}}) maps 1->2->3->1.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  /// Parses "(1 2 3)(4 5)" or "id".
  static Permutation parse_cycles(int n, std::string_view text);

  static Permutation transposition(int n, const Transposition& t);

  int size() const noexcept { return static_cast<int>(images_.size()); }

  /// Image of x, 1-based.
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)] + 1; }

  /// Zero-based image table.
  std::span<const std::uint8_t> table() const noexcept { return images_; }

  std::vector<int> one_line() const;
  bool is_identity() const noexcept;
  bool is_even() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  friend Permutation compose(const Permutation& f, const Permutation& g);
  friend Permutation inverse(const Permutation& f);
  friend Permutation unrank(std::uint64_t r, int n);

  std::vector<std::uint8_t> images_;
};

/// compose(f, g)(x) = f(g(x)): g is applied first.
Permutation compose(const Permutation& f, const Permutation& g);

Permutation inverse(const Permutation& f);

/// Position of f in the lexicographic order of one-line notations.
/// Throws DomainError above kMaxRankDegree.
std::uint64_t rank(const Permutation& f);

/// Inverse of rank. Throws RangeError unless r < n!.
Permutation unrank(std::uint64_t r, int n);

/// n! for 0 <= n <= 20.
std::uint64_t factorial(int n);

/// All n(n-1)/2 pairs in lexicographic order. Throws DomainError for n < 2.
std::vector<Transposition> all_transpositions(int n);

/// Cycle notation with fixed points omitted; the identity renders as "id".
std::string to_cycle_string(const Permutation& f);

/// Largest degree a Permutation can hold. Ranking needs n <= 20.
inline constexpr int kMaxDegree = 64;
inline constexpr int kMaxRankDegree = 20;

}  // namespace tcay
