#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "cobordia/algebra.hpp"

namespace cobordia {

/// A bijection on {1..n} in one-line notation; objects of the free symmetric
/// monoidal category on one generator, skeletally presented.
class Permutation {
 public:
  Permutation() = default;

  /// One-line notation: entry i-1 is the image of i. Throws ValidationError
  /// unless the entries are a bijection on {1..n}.
  explicit Permutation(std::vector<std::uint32_t> one_line);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }

  /// 1-based application.
  std::uint32_t image(std::uint32_t i) const { return images_[i - 1]; }

  const std::vector<std::uint32_t>& one_line() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Apply `q` first, then `p`. Throws SizeMismatchError on unequal sizes.
Permutation compose(const Permutation& p, const Permutation& q);

/// Block sum: p on {1..n}, then q shifted onto {n+1..n+m}.
Permutation block_sum(const Permutation& p, const Permutation& q);

/// The inclusion into the diagram category: identity boundary words of
/// all-plus orientation, strand d(i)-c(p(i)) for each i, zero circles.
/// A faithful strict monoidal functor.
DiagMorphism include(const Permutation& p);

/// All n! permutations of size n, in lexicographic one-line order.
std::vector<Permutation> all_permutations(std::size_t n);

/// One-line notation as a JSON array, e.g. [2,1,3].
nlohmann::ordered_json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& j);

}  // namespace cobordia
