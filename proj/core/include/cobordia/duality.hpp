#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cobordia/tensor_array.hpp"

namespace cobordia {

/// Chosen duality data for one object of the matrix instance: its dual object
/// and the unit/counit witnessing the duality,
///   unit   : [] -> object ++ dual_object
///   counit : dual_object ++ object -> [].
/// Arbitrary (including twisted) data is constructible; whether it satisfies
/// the zig-zag identities is checked by zigzag_identities_hold.
template <Semiring S>
struct DualityData {
  std::vector<Leg> object;
  std::vector<Leg> dual_object;
  TensorArray<S> unit;
  TensorArray<S> counit;
};

/// The standard duality at dimension `dim`: the dual object reverses and
/// flips the legs, the unit and counit are nested Kronecker deltas (leg i
/// couples with leg 2n+1-i).
template <Semiring S>
DualityData<S> standard_duality(const std::vector<Leg>& object, std::uint32_t dim) {
  const std::vector<Leg> dual_obj = dual_legs(object);
  const std::size_t n = object.size();

  std::vector<Leg> unit_cod(object);
  unit_cod.insert(unit_cod.end(), dual_obj.begin(), dual_obj.end());
  TensorArray<S> unit(unit_cod, {}, dim);

  std::vector<Leg> counit_dom(dual_obj);
  counit_dom.insert(counit_dom.end(), object.begin(), object.end());
  TensorArray<S> counit({}, counit_dom, dim);

  std::vector<std::uint32_t> idx(2 * n, 0);
  do {
    bool nested = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (idx[i] != idx[2 * n - 1 - i]) {
        nested = false;
        break;
      }
    }
    if (nested) {
      unit.at(idx, {}) = S::one();
      counit.at({}, idx) = S::one();
    }
  } while (detail::advance_indices(idx, dim));

  return DualityData<S>{object, dual_obj, std::move(unit), std::move(counit)};
}

/// Both zig-zag composites built from the supplied unit and counit evaluate
/// to identity arrays. The defining requirement on duality data.
template <Semiring S>
bool zigzag_identities_hold(const DualityData<S>& dd) {
  const std::uint32_t dim = dd.unit.dim();
  const TensorArray<S> id_obj = TensorArray<S>::identity(dd.object, dim);
  const TensorArray<S> id_dual = TensorArray<S>::identity(dd.dual_object, dim);
  // object -> object ++ dual ++ object -> object
  const TensorArray<S> zig =
      array_compose(outer(id_obj, dd.counit), outer(dd.unit, id_obj));
  // dual -> dual ++ object ++ dual -> dual
  const TensorArray<S> zag =
      array_compose(outer(dd.counit, id_dual), outer(id_dual, dd.unit));
  return zig == id_obj && zag == id_dual;
}

/// The dual of f : C -> D in the matrix instance, as the literal composite
/// (counit_D ++ id) . (id ++ f ++ id) . (id ++ unit_C) : dual(D) -> dual(C).
template <Semiring S>
TensorArray<S> dual_morphism_generic(const TensorArray<S>& f, const DualityData<S>& dom_duality,
                                     const DualityData<S>& cod_duality) {
  if (f.dom_legs() != dom_duality.object || f.cod_legs() != cod_duality.object)
    throw TypeMismatchError("duality data does not match the boundary objects of f");
  const std::uint32_t dim = f.dim();
  const TensorArray<S> id_dual_cod = TensorArray<S>::identity(cod_duality.dual_object, dim);
  const TensorArray<S> id_dual_dom = TensorArray<S>::identity(dom_duality.dual_object, dim);

  const TensorArray<S> bend_in = outer(id_dual_cod, dom_duality.unit);
  const TensorArray<S> through = outer(outer(id_dual_cod, f), id_dual_dom);
  const TensorArray<S> bend_out = outer(cod_duality.counit, id_dual_dom);
  return array_compose(bend_out, array_compose(through, bend_in));
}

/// g : dual(C) -> dual(D) respects f : C -> D when both squares hold exactly:
///   counit_D . (g ++ f) == counit_C   and   (f ++ g) . unit_C == unit_D.
template <Semiring S>
bool respects(const TensorArray<S>& g, const TensorArray<S>& f,
              const DualityData<S>& dom_duality, const DualityData<S>& cod_duality) {
  if (f.dom_legs() != dom_duality.object || f.cod_legs() != cod_duality.object)
    throw TypeMismatchError("duality data does not match the boundary objects of f");
  if (g.dom_legs() != dom_duality.dual_object || g.cod_legs() != cod_duality.dual_object)
    throw TypeMismatchError("g must be typed dual(C) -> dual(D) under the supplied duality data");

  const bool counit_square =
      array_compose(cod_duality.counit, outer(g, f)) == dom_duality.counit;
  const bool unit_square = array_compose(outer(f, g), dom_duality.unit) == cod_duality.unit;
  return counit_square && unit_square;
}

struct RespectReport {
  bool precondition_ok = false;  // respects(g, f) held
  bool left_identity_ok = false;  // g . dual(f) == id on dual(D)
  bool right_identity_ok = false;  // dual(f) . g == id on dual(C)
  std::vector<std::string> deviations;

  bool ok() const noexcept { return precondition_ok && left_identity_ok && right_identity_ok; }
};

/// When g respects f, both composites with the dual of f are identities.
/// Reports any entry-level deviation; a failed precondition is reported
/// distinctly and the composites are not checked.
template <Semiring S>
RespectReport check_lemma_respect(const TensorArray<S>& g, const TensorArray<S>& f,
                                  const DualityData<S>& dom_duality,
                                  const DualityData<S>& cod_duality) {
  RespectReport report;
  report.precondition_ok = respects(g, f, dom_duality, cod_duality);
  if (!report.precondition_ok) {
    report.deviations.push_back("precondition violated: g does not respect f");
    return report;
  }

  const std::uint32_t dim = f.dim();
  const TensorArray<S> f_dual = dual_morphism_generic(f, dom_duality, cod_duality);
  const TensorArray<S> id_dual_cod = TensorArray<S>::identity(cod_duality.dual_object, dim);
  const TensorArray<S> id_dual_dom = TensorArray<S>::identity(dom_duality.dual_object, dim);

  const TensorArray<S> left = array_compose(g, f_dual);
  const TensorArray<S> right = array_compose(f_dual, g);
  report.left_identity_ok = left == id_dual_cod;
  report.right_identity_ok = right == id_dual_dom;
  if (!report.left_identity_ok) report.deviations.push_back("g . dual(f) is not the identity");
  if (!report.right_identity_ok) report.deviations.push_back("dual(f) . g is not the identity");
  return report;
}

namespace detail {

/// Exact determinant over the rationals, for carriers embeddable in them.
template <Semiring S>
std::optional<Rational> determinant_as_rational(const TensorArray<S>& square) {
  const std::size_t d = square.dim();
  if (square.cod_legs().size() != 1 || square.dom_legs().size() != 1) return std::nullopt;
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (std::uint32_t r = 0; r < d; ++r) {
    for (std::uint32_t c = 0; c < d; ++c) {
      const std::uint32_t ci[] = {r};
      const std::uint32_t di[] = {c};
      if constexpr (std::is_same_v<S, RationalSemiring>) {
        m[r][c] = square.at(ci, di);
      } else if constexpr (std::is_same_v<S, IntSemiring> || std::is_same_v<S, NaturalSemiring>) {
        m[r][c] = Rational(square.at(ci, di));
      } else {
        return std::nullopt;
      }
    }
  }
  Rational det(1);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && m[pivot][col] == 0) ++pivot;
    if (pivot == d) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < d; ++row) {
      const Rational factor = m[row][col] / m[col][col];
      for (std::size_t c = col; c < d; ++c) m[row][c] -= factor * m[col][c];
    }
  }
  return det;
}

}  // namespace detail

struct InvertnatReport {
  bool counit_square_ok = false;  // forces transpose(alpha_minus) . alpha_plus == id
  bool unit_square_ok = false;    // forces alpha_plus . transpose(alpha_minus) == id
  bool invertible_witnessed = false;
  std::string obstruction;  // empty when the squares hold

  bool ok() const noexcept { return invertible_witnessed; }
};

/// Monoidal-naturality check for a transformation between two standard
/// evaluations of the same dimension, determined by its components on the
/// generator and its dual. Both squares against the standard unit and counit
/// must commute; when they do, alpha_plus is invertible with the inverse
/// witnessed by alpha_minus. When they fail and alpha_plus is singular, the
/// obstruction (no left inverse at all) is reported exactly.
template <Semiring S>
InvertnatReport check_invertnat(const TensorArray<S>& alpha_plus,
                                const TensorArray<S>& alpha_minus) {
  const std::vector<Leg> plain{Leg{Variance::Plain}};
  const std::vector<Leg> dual_leg{Leg{Variance::Dual}};
  if (alpha_plus.dim() != alpha_minus.dim())
    throw TypeMismatchError("alpha components must share one dimension");
  if (alpha_plus.cod_legs() != plain || alpha_plus.dom_legs() != plain)
    throw TypeMismatchError("alpha_plus must be a square array on Plain legs");
  if (alpha_minus.cod_legs() != dual_leg || alpha_minus.dom_legs() != dual_leg)
    throw TypeMismatchError("alpha_minus must be a square array on Dual legs");

  const std::uint32_t dim = alpha_plus.dim();
  const DualityData<S> dd = standard_duality<S>(plain, dim);

  InvertnatReport report;
  report.counit_square_ok =
      array_compose(dd.counit, outer(alpha_minus, alpha_plus)) == dd.counit;
  report.unit_square_ok = array_compose(outer(alpha_plus, alpha_minus), dd.unit) == dd.unit;
  report.invertible_witnessed = report.counit_square_ok && report.unit_square_ok;

  if (!report.invertible_witnessed) {
    const auto det = detail::determinant_as_rational<S>(alpha_plus);
    if (det && *det == 0) {
      report.obstruction = "alpha_plus is singular: no left inverse exists";
    } else {
      report.obstruction = "naturality squares fail for the supplied alpha_minus";
    }
  }
  return report;
}

}  // namespace cobordia
