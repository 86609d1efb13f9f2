#include "twistrim/surgery_classifier.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

#include "twistrim/alexander.hpp"
#include "twistrim/wirtinger.hpp"

namespace twistrim {

std::string to_string(Pi1Kind k) {
  switch (k) {
    case Pi1Kind::CyclicOfOrder:
      return "cyclic";
    case Pi1Kind::FiniteOfOrder:
      return "finite";
    case Pi1Kind::Undetermined:
      break;
  }
  return "undetermined";
}

std::string to_string(Pi1Certificate c) {
  switch (c) {
    case Pi1Certificate::Theorem:
      return "theorem";
    case Pi1Certificate::CosetEnumeration:
      return "coset-enumeration";
    case Pi1Certificate::None:
      break;
  }
  return "none";
}

std::string to_string(TopologicalKind k) {
  switch (k) {
    case TopologicalKind::Yes:
      return "yes";
    case TopologicalKind::No:
      return "no";
    case TopologicalKind::Unknown:
      break;
  }
  return "unknown";
}

bool congruent_to_pm1(int d, long m) {
  const long mod = std::labs(m);
  if (mod == 0) return d == 1;
  const long r = d % mod;
  return r == 1 % mod || r == mod - 1;
}

GroupPresentation twist_rim_presentation(const GroupPresentation& p, int d, long m) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  p.validate();
  GroupPresentation out = p;
  const int mu = p.meridian;
  out.relators.push_back(power({mu}, d));
  const Word mu_m = power({mu}, m);
  const Word mu_minus_m = power({mu}, -m);
  for (int j = 1; j <= p.generator_count(); ++j) {
    if (j == mu) continue;
    out.relators.push_back(concat({{-j}, mu_minus_m, {j}, mu_m}));
  }
  return out;
}

namespace {

struct Leaf {
  std::string plain;
  std::string mirrored;
};

void collect_leaves(const KnotExpr& e, bool mirrored, std::vector<Leaf>& out) {
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Unknot>) {
          return;
        } else if constexpr (std::is_same_v<N, Mirror>) {
          collect_leaves(*n.child, !mirrored, out);
        } else if constexpr (std::is_same_v<N, ConnectedSum>) {
          collect_leaves(*n.left, mirrored, out);
          collect_leaves(*n.right, mirrored, out);
        } else {
          Leaf leaf;
          if constexpr (std::is_same_v<N, TorusKnot>) {
            const std::string t = render(KnotExpr::torus(std::min(n.p, n.q), std::max(n.p, n.q)));
            leaf = {t, "mirror(" + t + ")"};
          } else if constexpr (std::is_same_v<N, Braid>) {
            leaf = {render(KnotExpr::braid(n)), render(KnotExpr::braid(mirror_braid(n)))};
          } else {
            leaf = {render(KnotExpr::pd(n)), render(KnotExpr::pd(mirror_pd(n)))};
          }
          if (mirrored) std::swap(leaf.plain, leaf.mirrored);
          out.push_back(std::move(leaf));
        }
      },
      e.node());
}

SmoothVerdict smooth_verdict(const LaurentPoly& delta, const SurgeryParams& params) {
  if (delta.is_one()) return {false, "Alexander polynomial is 1; knot surgery leaves the relative Seiberg-Witten invariant unchanged"};
  if (!params.sw_asserted())
    return {false, "relative Seiberg-Witten invariant not asserted nontrivial"};
  std::string reason;
  if (params.cp2_degree)
    reason = "complex curve of degree " + std::to_string(*params.cp2_degree) +
             " in CP^2 has nontrivial relative Seiberg-Witten invariant";
  else
    reason = "relative Seiberg-Witten invariant nontrivial";
  reason += "; surgery multiplies it by Delta(r^2) with Delta = " + delta.to_string() +
            " != 1, so the pair is not pairwise diffeomorphic to the original";
  return {true, std::move(reason)};
}

SurgeryReport classify_with(const KnotExpr& k, const GroupPresentation& group,
                            const LaurentPoly& delta, const SurgeryParams& params,
                            std::size_t budget) {
  params.validate();
  SurgeryReport r;
  r.knot = k;
  r.params = params;
  r.alexander = delta;
  r.branched_cover = branched_cover_order(delta, params.d);
  r.ribbon = ribbon_certificate(k);
  const int d = params.d;
  const long m = params.m;
  const bool congruent = congruent_to_pm1(d, m);

  r.pi1 = determine_pi1(group, d, m, budget);
  const bool smith_obstruction = d == 2 && m % 2 == 0 && !delta.is_one();
  const bool order_obstruction =
      r.pi1.kind == Pi1Kind::FiniteOfOrder && r.pi1.order != static_cast<std::size_t>(d);
  r.pi1_obstruction = smith_obstruction || order_obstruction;

  r.smoothly_knotted = smooth_verdict(delta, params);

  const bool homology_circle = !r.branched_cover.infinite && r.branched_cover.order == 1;
  auto& top = r.topologically_standard;
  if (r.pi1_obstruction) top.failed.push_back("pi1");
  if (r.ribbon != RibbonCertificate::Certified) top.failed.push_back("ribbon");
  if (!homology_circle) top.failed.push_back("homology-circle");
  if (!congruent) top.failed.push_back("congruence");
  if (top.failed.empty()) {
    top.kind = TopologicalKind::Yes;
    top.reason = "ribbon knot, " + std::to_string(d) +
                 "-fold cover of the knot exterior is a homology circle, and d = ±1 (mod m)";
  } else if (r.pi1_obstruction) {
    top.kind = TopologicalKind::No;
    top.reason = "pi1 of the complement is not Z/" + std::to_string(d) +
                 ", so no pairwise homeomorphism exists";
  } else if (top.failed == std::vector<std::string>{"ribbon"}) {
    top.kind = TopologicalKind::Unknown;
    top.reason = "no syntactic ribbon certificate; ribbonness is not decided";
  } else {
    top.kind = TopologicalKind::No;
    top.reason = "standardness criterion does not apply";
  }

  if (params.cp2_degree) r.cp2_genus = static_cast<long>(d - 1) * (d - 2) / 2;
  return r;
}

}  // namespace

RibbonCertificate ribbon_certificate(const KnotExpr& k) {
  std::vector<Leaf> leaves;
  collect_leaves(k, false, leaves);
  std::map<std::string, int> count;
  for (const auto& l : leaves) ++count[l.plain];
  for (const auto& l : leaves) {
    const int here = count[l.plain];
    if (l.plain == l.mirrored) {
      if (here % 2 != 0) return RibbonCertificate::Unknown;
    } else if (count[l.mirrored] != here) {
      return RibbonCertificate::Unknown;
    }
  }
  return RibbonCertificate::Certified;
}

Pi1Verdict determine_pi1(const GroupPresentation& knot_group, int d, long m,
                         std::size_t budget, bool allow_theorem) {
  if (allow_theorem && congruent_to_pm1(d, m))
    return {Pi1Kind::CyclicOfOrder, static_cast<std::size_t>(d), Pi1Certificate::Theorem};
  const GroupPresentation g = twist_rim_presentation(knot_group, d, m);
  CyclicCheck check = check_cyclic_of_order(g, d, budget);
  if (check.verdict == Verdict::Yes)
    return {Pi1Kind::CyclicOfOrder, static_cast<std::size_t>(d), Pi1Certificate::CosetEnumeration};
  if (!check.enumerated) check.enumeration = todd_coxeter(g, budget);
  if (check.enumeration.complete())
    return {Pi1Kind::FiniteOfOrder, check.enumeration.order, Pi1Certificate::CosetEnumeration};
  return {};
}

SurgeryReport classify(const KnotExpr& k, const SurgeryParams& params, std::size_t budget) {
  params.validate();
  const GroupPresentation group = knot_presentation(k);
  return classify_with(k, group, alexander_polynomial(group), params, budget);
}

void enumerate_examples(int p_max, int q_max, int d_max, int m_max,
                        const std::function<void(const ExampleRow&)>& sink) {
  if (p_max < 2 || q_max < 2 || d_max < 2 || m_max < 2)
    throw std::invalid_argument("search bounds must be >= 2");
  for (int p = 2; p <= p_max; ++p) {
    for (int q = p + 1; q <= q_max; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const KnotExpr torus = KnotExpr::torus(p, q);
      const KnotExpr k = KnotExpr::sum(torus, KnotExpr::mirror(torus));
      std::optional<GroupPresentation> group;
      std::optional<LaurentPoly> delta;
      for (int d = 2; d <= d_max; ++d) {
        if (std::gcd(d, p) != 1 || std::gcd(d, q) != 1) continue;
        for (int m = 2; m <= m_max; ++m) {
          if (!congruent_to_pm1(d, m)) continue;
          if (!group) {
            group = knot_presentation(k);
            delta = alexander_polynomial(*group);
          }
          SurgeryParams params;
          params.d = d;
          params.m = m;
          params.sw_nontrivial = true;
          ExampleRow row{p, q, d, m, classify_with(k, *group, *delta, params, kDefaultCosetBudget)};
          const CoverOrder& o = row.report.branched_cover;
          if (o.infinite || o.order != 1) continue;
          sink(row);
        }
      }
    }
  }
}

std::vector<ExampleRow> enumerate_examples(int p_max, int q_max, int d_max, int m_max) {
  std::vector<ExampleRow> rows;
  enumerate_examples(p_max, q_max, d_max, m_max,
                     [&rows](const ExampleRow& r) { rows.push_back(r); });
  return rows;
}

}  // namespace twistrim
