#include "cobordia/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cobordia/errors.hpp"

namespace cobordia {

Permutation::Permutation(std::vector<std::uint32_t> one_line) : images_(std::move(one_line)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v < 1 || v > images_.size() || seen[v - 1]) {
      throw ValidationError("one-line notation is not a bijection on {1.." +
                            std::to_string(images_.size()) + "}");
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 1u);
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw SizeMismatchError("cannot compose permutations of sizes " + std::to_string(p.size()) +
                            " and " + std::to_string(q.size()));
  }
  std::vector<std::uint32_t> images(p.size());
  for (std::uint32_t i = 1; i <= p.size(); ++i) images[i - 1] = p.image(q.image(i));
  return Permutation(std::move(images));
}

Permutation block_sum(const Permutation& p, const Permutation& q) {
  std::vector<std::uint32_t> images;
  images.reserve(p.size() + q.size());
  images.insert(images.end(), p.one_line().begin(), p.one_line().end());
  const auto shift = static_cast<std::uint32_t>(p.size());
  for (std::uint32_t v : q.one_line()) images.push_back(v + shift);
  return Permutation(std::move(images));
}

DiagMorphism include(const Permutation& p) {
  const ObjWord boundary(std::vector<Orientation>(p.size(), Orientation::Plus));
  std::vector<Strand> strands;
  strands.reserve(p.size());
  for (std::uint32_t i = 1; i <= p.size(); ++i)
    strands.emplace_back(Endpoint::dom(i), Endpoint::cod(p.image(i)));
  return DiagMorphism(boundary, boundary, Pairing(std::move(strands)), 0);
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::uint32_t> one_line(n);
  std::iota(one_line.begin(), one_line.end(), 1u);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(one_line));
  } while (std::next_permutation(one_line.begin(), one_line.end()));
  return out;
}

nlohmann::ordered_json permutation_to_json(const Permutation& p) {
  return nlohmann::ordered_json(p.one_line());
}

Permutation permutation_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw SchemaError("", "expected a one-line notation array like [2,1,3]");
  std::vector<std::uint32_t> images;
  images.reserve(j.size());
  std::size_t i = 0;
  for (const auto& entry : j) {
    if (!entry.is_number_unsigned())
      throw SchemaError("/" + std::to_string(i), "expected a positive integer");
    const auto v = entry.get<std::uint64_t>();
    if (v < 1 || v > j.size())
      throw SchemaError("/" + std::to_string(i), "entry out of range for size " +
                                                     std::to_string(j.size()));
    images.push_back(static_cast<std::uint32_t>(v));
    ++i;
  }
  try {
    return Permutation(std::move(images));
  } catch (const ValidationError& e) {
    throw SchemaError("", e.what());
  }
}

}  // namespace cobordia
