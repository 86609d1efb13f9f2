#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twistrim/covers.hpp"
#include "twistrim/group_engine.hpp"
#include "twistrim/knot_model.hpp"
#include "twistrim/laurent_poly.hpp"
#include "twistrim/presentation.hpp"

namespace twistrim {

enum class Pi1Kind { CyclicOfOrder, FiniteOfOrder, Undetermined };
enum class Pi1Certificate { Theorem, CosetEnumeration, None };

std::string to_string(Pi1Kind k);
std::string to_string(Pi1Certificate c);

/// What is known about pi1 of the surgered surface complement.
struct Pi1Verdict {
  Pi1Kind kind = Pi1Kind::Undetermined;
  /// Group order for CyclicOfOrder / FiniteOfOrder, otherwise 0.
  std::size_t order = 0;
  Pi1Certificate certificate = Pi1Certificate::None;
  bool operator==(const Pi1Verdict&) const = default;
};

struct SmoothVerdict {
  bool knotted = false;  // Yes(reason) vs NoEvidence
  std::string reason;
  bool operator==(const SmoothVerdict&) const = default;
};

enum class TopologicalKind { Yes, No, Unknown };
std::string to_string(TopologicalKind k);

/// Standardness up to pairwise homeomorphism. No lists what failed: a
/// hypothesis of the standardness criterion, or a pi1 obstruction.
struct TopologicalVerdict {
  TopologicalKind kind = TopologicalKind::Unknown;
  std::string reason;
  std::vector<std::string> failed;
  bool operator==(const TopologicalVerdict&) const = default;
};

enum class RibbonCertificate { Certified, Unknown };

struct SurgeryReport {
  KnotExpr knot;
  SurgeryParams params;
  LaurentPoly alexander;
  Pi1Verdict pi1;
  SmoothVerdict smoothly_knotted;
  TopologicalVerdict topologically_standard;
  bool pi1_obstruction = false;
  CoverOrder branched_cover;
  RibbonCertificate ribbon = RibbonCertificate::Unknown;
  std::optional<long> cp2_genus;
  bool operator==(const SurgeryReport&) const = default;
};

/// d = ±1 (mod |m|). m = 0 only admits d = 1.
bool congruent_to_pm1(int d, long m);

/// Appends g_mer^d and, for every other generator g_j,
/// g_j^-1 g_mer^-m g_j g_mer^m (tau^m acts by conjugation by the meridian).
GroupPresentation twist_rim_presentation(const GroupPresentation& p, int d, long m);

/// Certified when the summands, after flattening sums and pushing mirrors
/// to the leaves, pair off as E and mirror(E).
RibbonCertificate ribbon_certificate(const KnotExpr& k);

/// pi1 of the complement: the congruence shortcut when it applies and
/// `allow_theorem` is set, coset enumeration otherwise.
Pi1Verdict determine_pi1(const GroupPresentation& knot_group, int d, long m,
                         std::size_t budget, bool allow_theorem = true);

SurgeryReport classify(const KnotExpr& k, const SurgeryParams& params,
                       std::size_t budget = kDefaultCosetBudget);

struct ExampleRow {
  int p = 0;
  int q = 0;
  int d = 0;
  long m = 0;
  SurgeryReport report;
};

/// Rows for K = T(p,q) # mirror(T(p,q)) over coprime 2 <= p < q <= q_max,
/// p <= p_max, 2 <= d <= d_max coprime to p and q, 2 <= m <= m_max with
/// d = ±1 (mod m), keeping only rows whose branched cover order is 1.
/// Emitted in lexicographic (p, q, d, m) order.
void enumerate_examples(int p_max, int q_max, int d_max, int m_max,
                        const std::function<void(const ExampleRow&)>& sink);
std::vector<ExampleRow> enumerate_examples(int p_max, int q_max, int d_max, int m_max);

}  // namespace twistrim
