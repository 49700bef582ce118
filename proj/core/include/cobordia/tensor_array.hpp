#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cobordia/errors.hpp"
#include "cobordia/semiring.hpp"
#include "cobordia/word.hpp"

namespace cobordia {

/// Variance of one array leg: Plain for the d-dimensional space, Dual for its
/// dual. Both share the array's dimension.
enum class Variance : std::uint8_t { Plain, Dual };

constexpr Variance variance_of(Orientation o) noexcept {
  return o == Orientation::Plus ? Variance::Plain : Variance::Dual;
}

constexpr Variance flip(Variance v) noexcept {
  return v == Variance::Plain ? Variance::Dual : Variance::Plain;
}

constexpr Orientation orientation_of(Variance v) noexcept {
  return v == Variance::Plain ? Orientation::Plus : Orientation::Minus;
}

struct Leg {
  Variance variance;

  friend constexpr bool operator==(const Leg&, const Leg&) = default;
};

inline std::vector<Leg> legs_of(const ObjWord& w) {
  std::vector<Leg> legs;
  legs.reserve(w.length());
  for (Orientation o : w) legs.push_back({variance_of(o)});
  return legs;
}

inline ObjWord word_of(const std::vector<Leg>& legs) {
  std::vector<Orientation> os;
  os.reserve(legs.size());
  for (Leg l : legs) os.push_back(orientation_of(l.variance));
  return ObjWord(std::move(os));
}

/// Reversed with every variance flipped, mirroring duals of words.
inline std::vector<Leg> dual_legs(const std::vector<Leg>& legs) {
  std::vector<Leg> out(legs.rbegin(), legs.rend());
  for (Leg& l : out) l.variance = flip(l.variance);
  return out;
}

/// Hard cap on dense storage, independent of the leg-count bound.
inline constexpr std::size_t kMaxTensorEntries = std::size_t{1} << 26;

/// A dense multidimensional array over a commutative semiring, indexed by one
/// 0-based index in {0..dim-1} per leg. Codomain legs come first, then domain
/// legs; the flat layout is row-major over that leg list (first leg slowest).
template <Semiring S>
class TensorArray {
 public:
  using Value = typename S::Value;

  TensorArray(std::vector<Leg> cod_legs, std::vector<Leg> dom_legs, std::uint32_t dim)
      : cod_legs_(std::move(cod_legs)), dom_legs_(std::move(dom_legs)), dim_(dim) {
    if (dim_ < 1) throw ValidationError("array dimension must be at least 1");
    std::size_t count = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
      count = checked_mul(static_cast<std::uint64_t>(count), static_cast<std::uint64_t>(dim_));
      if (count > kMaxTensorEntries)
        throw ResourceLimitError("dense array of " + std::to_string(rank()) + " legs at dimension " +
                                 std::to_string(dim_) + " exceeds the entry cap");
    }
    entries_.assign(count, S::zero());
  }

  static TensorArray identity(const std::vector<Leg>& legs, std::uint32_t dim) {
    TensorArray out(legs, legs, dim);
    const std::size_t n = legs.size();
    std::vector<std::uint32_t> idx(n, 0);
    for (;;) {
      out.at(idx, idx) = S::one();
      std::size_t k = n;
      while (k > 0 && ++idx[k - 1] == dim) idx[--k] = 0;
      if (k == 0) break;
    }
    return out;
  }

  static TensorArray scalar(std::uint32_t dim, Value v) {
    TensorArray out({}, {}, dim);
    out.entries_[0] = std::move(v);
    return out;
  }

  const std::vector<Leg>& cod_legs() const noexcept { return cod_legs_; }
  const std::vector<Leg>& dom_legs() const noexcept { return dom_legs_; }
  std::uint32_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return cod_legs_.size() + dom_legs_.size(); }
  bool is_scalar() const noexcept { return rank() == 0; }

  const std::vector<Value>& entries() const noexcept { return entries_; }
  std::vector<Value>& entries() noexcept { return entries_; }

  std::size_t flat_index(std::span<const std::uint32_t> cod_idx,
                         std::span<const std::uint32_t> dom_idx) const {
    std::size_t flat = 0;
    for (std::uint32_t i : cod_idx) flat = flat * dim_ + i;
    for (std::uint32_t i : dom_idx) flat = flat * dim_ + i;
    return flat;
  }

  Value& at(std::span<const std::uint32_t> cod_idx, std::span<const std::uint32_t> dom_idx) {
    return entries_[flat_index(cod_idx, dom_idx)];
  }
  const Value& at(std::span<const std::uint32_t> cod_idx,
                  std::span<const std::uint32_t> dom_idx) const {
    return entries_[flat_index(cod_idx, dom_idx)];
  }

  friend bool operator==(const TensorArray& a, const TensorArray& b) {
    if (a.cod_legs_ != b.cod_legs_ || a.dom_legs_ != b.dom_legs_ || a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      if (!S::eq(a.entries_[i], b.entries_[i])) return false;
    }
    return true;
  }

 private:
  std::vector<Leg> cod_legs_;
  std::vector<Leg> dom_legs_;
  std::uint32_t dim_;
  std::vector<Value> entries_;
};

namespace detail {

/// Odometer over `rank` indices in {0..dim-1}; returns false after the last.
inline bool advance_indices(std::vector<std::uint32_t>& idx, std::uint32_t dim) {
  std::size_t k = idx.size();
  while (k > 0 && ++idx[k - 1] == dim) idx[--k] = 0;
  return k != 0;
}

}  // namespace detail

/// Composition in the matrix instance: sum over the shared boundary indices
/// of products of entries. Requires a.cod_legs == b.dom_legs and equal
/// dimensions.
template <Semiring S>
TensorArray<S> array_compose(const TensorArray<S>& b, const TensorArray<S>& a) {
  if (a.dim() != b.dim())
    throw TypeMismatchError("cannot compose arrays of dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  if (a.cod_legs() != b.dom_legs())
    throw TypeMismatchError("leg mismatch: inner codomain legs do not equal outer domain legs");

  TensorArray<S> out(b.cod_legs(), a.dom_legs(), a.dim());
  std::vector<std::uint32_t> cod_idx(b.cod_legs().size(), 0);
  do {
    std::vector<std::uint32_t> dom_idx(a.dom_legs().size(), 0);
    do {
      typename S::Value acc = S::zero();
      std::vector<std::uint32_t> mid_idx(a.cod_legs().size(), 0);
      do {
        acc = S::add(acc, S::mul(b.at(cod_idx, mid_idx), a.at(mid_idx, dom_idx)));
      } while (detail::advance_indices(mid_idx, a.dim()));
      out.at(cod_idx, dom_idx) = std::move(acc);
    } while (detail::advance_indices(dom_idx, a.dim()));
  } while (detail::advance_indices(cod_idx, a.dim()));
  return out;
}

/// Outer product with concatenated legs: codomain legs a.cod ++ b.cod, domain
/// legs a.dom ++ b.dom, entries multiplied pointwise over the split indices.
template <Semiring S>
TensorArray<S> outer(const TensorArray<S>& a, const TensorArray<S>& b) {
  if (a.dim() != b.dim())
    throw TypeMismatchError("cannot tensor arrays of dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  std::vector<Leg> cod(a.cod_legs());
  cod.insert(cod.end(), b.cod_legs().begin(), b.cod_legs().end());
  std::vector<Leg> dom(a.dom_legs());
  dom.insert(dom.end(), b.dom_legs().begin(), b.dom_legs().end());
  TensorArray<S> out(std::move(cod), std::move(dom), a.dim());

  std::vector<std::uint32_t> cod_idx(out.cod_legs().size(), 0);
  do {
    const std::span<const std::uint32_t> ca(cod_idx.data(), a.cod_legs().size());
    const std::span<const std::uint32_t> cb(cod_idx.data() + a.cod_legs().size(),
                                            b.cod_legs().size());
    std::vector<std::uint32_t> dom_idx(out.dom_legs().size(), 0);
    do {
      const std::span<const std::uint32_t> da(dom_idx.data(), a.dom_legs().size());
      const std::span<const std::uint32_t> db(dom_idx.data() + a.dom_legs().size(),
                                              b.dom_legs().size());
      out.at(cod_idx, dom_idx) = S::mul(a.at(ca, da), b.at(cb, db));
    } while (detail::advance_indices(dom_idx, out.dim()));
  } while (detail::advance_indices(cod_idx, out.dim()));
  return out;
}

}  // namespace cobordia
