#include "cobordia/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "cobordia/errors.hpp"

namespace cobordia {

namespace {

struct Enumerator {
  const ObjWord& dom;
  const ObjWord& cod;
  std::vector<Endpoint> points;   // canonical order: d1..dn, c1..cm
  std::vector<bool> used;
  std::vector<Strand> current;
  std::vector<Pairing> out;

  void run() {
    std::size_t first = 0;
    while (first < points.size() && used[first]) ++first;
    if (first == points.size()) {
      out.emplace_back(current);
      return;
    }
    used[first] = true;
    for (std::size_t partner = first + 1; partner < points.size(); ++partner) {
      if (used[partner]) continue;
      const Strand s(points[first], points[partner]);
      if (!sign_compatible(dom, cod, s)) continue;
      used[partner] = true;
      current.push_back(s);
      run();
      current.pop_back();
      used[partner] = false;
    }
    used[first] = false;
  }
};

}  // namespace

std::vector<Pairing> enumerate_pairings(const ObjWord& dom, const ObjWord& cod,
                                        std::size_t max_points) {
  const std::size_t total = dom.length() + cod.length();
  if (total > max_points) {
    throw ResourceLimitError("enumeration over " + std::to_string(total) +
                             " points exceeds the bound of " + std::to_string(max_points));
  }
  if (total % 2 != 0) return {};

  Enumerator e{dom, cod, {}, {}, {}, {}};
  e.points.reserve(total);
  for (std::uint32_t i = 1; i <= dom.length(); ++i) e.points.push_back(Endpoint::dom(i));
  for (std::uint32_t j = 1; j <= cod.length(); ++j) e.points.push_back(Endpoint::cod(j));
  e.used.assign(total, false);
  e.run();

  // The recursion emits pairings in lexicographic strand order already; sort
  // to pin the canonical order independently of traversal details.
  std::sort(e.out.begin(), e.out.end());
  assert(std::adjacent_find(e.out.begin(), e.out.end()) == e.out.end());
  return e.out;
}

}  // namespace cobordia
