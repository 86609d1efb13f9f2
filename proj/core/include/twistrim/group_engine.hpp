#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "twistrim/laurent_poly.hpp"
#include "twistrim/matrix.hpp"
#include "twistrim/presentation.hpp"

namespace twistrim {

/// Finitely generated abelian group Z^free_rank + Z/t1 + ... + Z/tk with
/// t1 | t2 | ... | tk and every ti > 1.
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Product of the torsion coefficients.
  Integer torsion_order() const;
  /// "0", "Z", "Z/3", "Z/2 ⊕ Z/2", "Z ⊕ Z/5", ...
  std::string to_string() const;
  bool operator==(const AbelianInvariants&) const = default;
};

/// Nonzero diagonal entries of the Smith normal form, in divisibility order
/// (units included). The matrix rank is the size of the result.
std::vector<Integer> smith_diagonal(IntMatrix m);

/// Cokernel of the integer relation matrix (rows are relations among
/// `m.cols()` generators).
AbelianInvariants cokernel_invariants(const IntMatrix& m);

/// Relator exponent-sum matrix, one row per relator.
IntMatrix exponent_matrix(const GroupPresentation& p);

AbelianInvariants abelianization(const GroupPresentation& p);

inline constexpr std::size_t kDefaultCosetBudget = 1'000'000;

enum class EnumerationStatus { Complete, Exhausted };

/// Result of coset enumeration over the trivial subgroup.
struct CosetTable {
  EnumerationStatus status = EnumerationStatus::Exhausted;
  /// Live cosets at termination; the group order when Complete.
  std::size_t order = 0;
  std::size_t budget = 0;
  /// Total cosets ever defined.
  std::size_t defined = 0;
  int generators = 0;
  /// When Complete: row c, column 2i (g_{i+1}) or 2i+1 (g_{i+1}^-1) holds
  /// the 0-based image coset. Empty when Exhausted.
  std::vector<std::uint32_t> table;

  bool complete() const { return status == EnumerationStatus::Complete; }
  std::uint32_t act(std::size_t coset, int letter) const;
};

/// HLT coset enumeration with coincidence processing. At most `budget`
/// cosets are live at any time; running out yields Exhausted. Deterministic.
CosetTable todd_coxeter(const GroupPresentation& p, std::size_t budget = kDefaultCosetBudget);

/// Tietze simplification: free and cyclic reduction, duplicate relator
/// removal, and elimination of generators that occur exactly once in some
/// relator. The meridian is never eliminated. `budget` bounds the number of
/// elimination passes.
GroupPresentation tietze_simplify(const GroupPresentation& p, int budget = 64);

enum class Verdict { Yes, No, Unknown };

std::string to_string(Verdict v);

/// Evidence gathered by is_cyclic_of_order.
struct CyclicCheck {
  Verdict verdict = Verdict::Unknown;
  AbelianInvariants abelian;
  CosetTable enumeration;
  /// False when the abelianization alone settled the answer.
  bool enumerated = false;
};

/// Yes iff coset enumeration completes with order d and the abelianization
/// is exactly Z/d. No only on a finite certificate. Unknown otherwise.
CyclicCheck check_cyclic_of_order(const GroupPresentation& p, int d,
                                  std::size_t budget = kDefaultCosetBudget);

inline Verdict is_cyclic_of_order(const GroupPresentation& p, int d,
                                  std::size_t budget = kDefaultCosetBudget) {
  return check_cyclic_of_order(p, d, budget).verdict;
}

}  // namespace twistrim
