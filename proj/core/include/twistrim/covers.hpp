#pragma once

#include <optional>
#include <string>

#include "twistrim/group_engine.hpp"
#include "twistrim/laurent_poly.hpp"
#include "twistrim/presentation.hpp"

namespace twistrim {

/// Order of H1 of a cyclic branched cover: a positive integer or infinite.
struct CoverOrder {
  bool infinite = false;
  Integer order = 1;

  static CoverOrder finite(Integer n) { return {false, std::move(n)}; }
  static CoverOrder unbounded() { return {true, 0}; }
  /// Decimal order, or "infinite".
  std::string to_string() const;
  bool operator==(const CoverOrder&) const = default;
};

/// H1 of the d-fold cyclic branched cover.
struct CoverHomology {
  int d = 1;
  CoverOrder order;
  std::optional<AbelianInvariants> structure;
};

/// |Res(t^d - 1, delta)| when nonzero, otherwise infinite.
CoverOrder branched_cover_order(const LaurentPoly& delta, int d);

/// Smith invariants of A(C), where A is the Alexander matrix with the
/// meridian column removed and C is the (d-1)x(d-1) companion matrix of
/// 1 + t + ... + t^{d-1}.
AbelianInvariants branched_cover_structure(const GroupPresentation& p, int d);

/// The d-fold unbranched cover of the knot exterior has H1 = Z exactly
/// when the branched cover is a homology sphere, i.e. its order is 1.
bool unbranched_cover_is_homology_circle(const LaurentPoly& delta, int d);

CoverHomology cover_homology(const GroupPresentation& p, int d, bool with_structure);

}  // namespace twistrim
