#include "tcay/permutation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

#include "tcay/error.hpp"

namespace tcay {

namespace {

void check_degree(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw DomainError("permutation degree " + std::to_string(n) + " outside [1, " +
                      std::to_string(kMaxDegree) + "]");
  }
}

}  // namespace

Transposition::Transposition(int i, int j) : lo(std::min(i, j)), hi(std::max(i, j)) {
  if (i == j) throw DomainError("transposition needs two distinct points, got " + std::to_string(i));
  if (lo < 1) throw DomainError("transposition points are 1-based, got " + std::to_string(lo));
}

std::string to_string(const Transposition& t) {
  return "(" + std::to_string(t.lo) + " " + std::to_string(t.hi) + ")";
}

Permutation::Permutation(int n) {
  check_degree(n);
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), std::uint8_t{0});
}

Permutation Permutation::from_images(std::span<const int> one_based_images) {
  const int n = static_cast<int>(one_based_images.size());
  check_degree(n);
  Permutation p(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    const int v = one_based_images[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("image table is not a bijection on {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    p.images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::from_images(std::initializer_list<int> one_based_images) {
  return from_images(std::span<const int>(one_based_images.begin(), one_based_images.size()));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation result(n);
  for (const auto& cycle : cycles) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int x = cycle[k];
      if (x < 1 || x > n) {
        throw RangeError("cycle point " + std::to_string(x) + " outside {1.." + std::to_string(n) + "}");
      }
      if (used[static_cast<std::size_t>(x - 1)]) {
        throw DomainError("cycle repeats point " + std::to_string(x));
      }
      used[static_cast<std::size_t>(x - 1)] = true;
      images[static_cast<std::size_t>(x - 1)] = cycle[(k + 1) % cycle.size()];
    }
    result = compose(result, from_images(images));
  }
  return result;
}

Permutation Permutation::parse_cycles(int n, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (text.substr(pos) == "id" || pos == text.size()) return Permutation(n);
  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw DomainError("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (pos == text.size()) throw DomainError("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw DomainError("unexpected character in cycle notation: " + std::string(text));
      }
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      cycle.push_back(value);
    }
    cycles.push_back(std::move(cycle));
  }
  return from_cycles(n, cycles);
}

Permutation Permutation::transposition(int n, const Transposition& t) {
  if (t.hi > n) {
    throw RangeError("transposition " + to_string(t) + " outside {1.." + std::to_string(n) + "}");
  }
  Permutation p(n);
  std::swap(p.images_[static_cast<std::size_t>(t.lo - 1)], p.images_[static_cast<std::size_t>(t.hi - 1)]);
  return p;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(), [](std::uint8_t v) { return v + 1; });
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_even() const noexcept {
  // Parity from the cycle count: sign = (-1)^(n - #cycles).
  std::vector<bool> seen(images_.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return (images_.size() - cycles) % 2 == 0;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) {
    throw SizeMismatchError("cannot compose permutations of degree " + std::to_string(f.size()) +
                            " and " + std::to_string(g.size()));
  }
  Permutation out(f.size());
  for (std::size_t x = 0; x < g.images_.size(); ++x) out.images_[x] = f.images_[g.images_[x]];
  return out;
}

Permutation inverse(const Permutation& f) {
  Permutation out(f.size());
  for (std::size_t x = 0; x < f.images_.size(); ++x) out.images_[f.images_[x]] = static_cast<std::uint8_t>(x);
  return out;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw DomainError("factorial argument " + std::to_string(n) + " outside [0, 20]");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t rank(const Permutation& f) {
  // Lehmer code: digit i counts later entries smaller than entry i.
  const auto table = f.table();
  const int n = f.size();
  if (n > kMaxRankDegree) throw DomainError("cannot rank permutations of degree " + std::to_string(n));
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t v = table[static_cast<std::size_t>(i)];
    const auto smaller_unused = static_cast<std::uint64_t>(v - static_cast<std::uint32_t>(std::popcount(used & ((1u << v) - 1u))));
    r = r * static_cast<std::uint64_t>(n - i) + smaller_unused;
    used |= 1u << v;
  }
  return r;
}

Permutation unrank(std::uint64_t r, int n) {
  check_degree(n);
  if (n > kMaxRankDegree) throw DomainError("cannot unrank permutations of degree " + std::to_string(n));
  if (r >= factorial(n)) {
    throw RangeError("rank " + std::to_string(r) + " outside [0, " + std::to_string(n) + "!)");
  }
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(r % base);
    r /= base;
  }
  Permutation p(n);
  std::vector<std::uint8_t> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), std::uint8_t{0});
  for (int i = 0; i < n; ++i) {
    const auto it = pool.begin() + digits[static_cast<std::size_t>(i)];
    p.images_[static_cast<std::size_t>(i)] = *it;
    pool.erase(it);
  }
  return p;
}

std::vector<Transposition> all_transpositions(int n) {
  if (n < 2) throw DomainError("need n >= 2 for transpositions, got " + std::to_string(n));
  std::vector<Transposition> out;
  out.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::string to_cycle_string(const Permutation& f) {
  if (f.is_identity()) return "id";
  std::ostringstream os;
  const int n = f.size();
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)] || f(start) == start) continue;
    os << '(';
    int x = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      if (!first) os << ' ';
      os << x;
      first = false;
      x = f(x);
    }
    os << ')';
  }
  return os.str();
}

}  // namespace tcay
