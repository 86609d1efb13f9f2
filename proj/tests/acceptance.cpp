// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "twistrim/alexander.hpp"
#include "twistrim/cli.hpp"
#include "twistrim/covers.hpp"
#include "twistrim/json_io.hpp"
#include "twistrim/surgery_classifier.hpp"
#include "twistrim/wirtinger.hpp"

using namespace twistrim;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimit1 = 10;
constexpr double kLimit2 = 30;
constexpr double kLimit3 = 30;
constexpr double kLimit4 = 60;
constexpr double kLimit5 = 60;
constexpr double kLimit6 = 60;
constexpr double kLimit7 = 60;
constexpr double kLimit8 = 60;

constexpr std::size_t kCosetBudget = 1'000'000;
constexpr unsigned kPropertySeed = 20240611;
constexpr int kPropertySamples = 200;
constexpr int kPropertyMaxCrossings = 8;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int n, const char* title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs > limit) {
    std::ostringstream s;
    s << "took " << secs << " s, limit " << limit << " s";
    o.fail(s.str());
  }
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << n << ' ' << title << " (" << std::fixed
            << std::setprecision(2) << secs << " s)";
  if (!o.ok) std::cout << ": " << o.detail;
  std::cout << std::endl;
}

LaurentPoly fox_delta(const std::string& text) {
  return alexander_polynomial(knot_presentation(parse_knot(text)));
}

std::string torus(int p, int q) { return "T(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

}  // namespace

int main() {
  criterion(1, "torus-knot Alexander polynomials from braid closures", kLimit1, [](Outcome& o) {
    for (int p = 2; p <= 7; ++p)
      for (int q = p + 1; q <= 7; ++q) {
        if (std::gcd(p, q) != 1) continue;
        const LaurentPoly fox = alexander_polynomial(wirtinger_from_braid(torus_braid(p, q)));
        if (!equal_up_to_units(fox, torus_alexander(p, q)))
          o.fail(torus(p, q) + ": " + fox.to_string() + " vs " + torus_alexander(p, q).to_string());
      }
  });

  criterion(2, "resultant order equals Smith-form order of the cover", kLimit2, [](Outcome& o) {
    for (const char* text :
         {"T(2,3)", "braid(3; 1 -2 1 -2)", "T(2,5)", "T(3,4)", "T(2,3)#mirror(T(2,3))"}) {
      const GroupPresentation p = knot_presentation(parse_knot(text));
      const LaurentPoly delta = alexander_polynomial(p);
      for (int d = 1; d <= 5; ++d) {
        const Integer res = abs(resultant_with_cyclotomic(delta, d));
        const AbelianInvariants s = branched_cover_structure(p, d);
        const bool agree = res == 0 ? s.free_rank > 0 : (s.free_rank == 0 && s.torsion_order() == res);
        if (!agree)
          o.fail(std::string(text) + " d=" + std::to_string(d) + ": |Res|=" + res.get_str() +
                 " vs " + s.to_string());
      }
    }
  });

  criterion(3, "pairwise coprime torus knots and J#mirror(J) give homology spheres", kLimit3,
            [](Outcome& o) {
              for (int p = 2; p <= 7; ++p)
                for (int q = p + 1; q <= 7; ++q) {
                  if (std::gcd(p, q) != 1) continue;
                  const LaurentPoly j = fox_delta(torus(p, q));
                  const LaurentPoly k = fox_delta(torus(p, q) + "#mirror(" + torus(p, q) + ")");
                  for (int d = 1; d <= 11; ++d) {
                    if (std::gcd(p, d) != 1 || std::gcd(q, d) != 1) continue;
                    if (branched_cover_order(j, d) != CoverOrder::finite(1))
                      o.fail(torus(p, q) + " d=" + std::to_string(d));
                    if (branched_cover_order(k, d) != CoverOrder::finite(1))
                      o.fail(torus(p, q) + "#mirror d=" + std::to_string(d));
                  }
                }
            });

  criterion(4, "congruence cases enumerate to Z/d", kLimit4, [](Outcome& o) {
    const std::pair<int, int> cases[] = {{2, 3}, {3, 2}, {3, 4}, {5, 4}, {5, 6}, {7, 8}, {7, 6}};
    for (const char* text : {"T(2,3)", "braid(3; 1 -2 1 -2)", "T(2,5)"}) {
      const GroupPresentation k = knot_presentation(parse_knot(text));
      for (const auto& [d, m] : cases) {
        const CyclicCheck c = check_cyclic_of_order(twist_rim_presentation(k, d, m), d, kCosetBudget);
        if (c.verdict != Verdict::Yes || !c.enumeration.complete())
          o.fail(std::string(text) + " d=" + std::to_string(d) + " m=" + std::to_string(m) + ": " +
                 to_string(c.verdict));
      }
    }
  });

  criterion(5, "trefoil d=2 m=2 has order 6 and a nontrivial index 2 subgroup", kLimit5,
            [](Outcome& o) {
              const GroupPresentation g =
                  twist_rim_presentation(knot_presentation(KnotExpr::torus(2, 3)), 2, 2);
              const CosetTable t = todd_coxeter(g, kCosetBudget);
              if (!t.complete() || t.order != 6) o.fail("enumeration did not give 6");
              if (!oracle::coset_table_consistent(g, t)) o.fail("coset table inconsistent");
              if (is_cyclic_of_order(g, 2, kCosetBudget) != Verdict::No) o.fail("verdict not No");
              const AbelianInvariants ab = abelianization(g);
              if (!(ab.free_rank == 0 && ab.torsion == std::vector<Integer>{2}))
                o.fail("abelianization " + ab.to_string());
              // |G| = 6 > |G^ab| = 2: the kernel of G -> Z/2 has order 3
              if (t.order <= 2) o.fail("kernel trivial");
            });

  criterion(6, "trefoil d=6 cover homology is infinite", kLimit6, [](Outcome& o) {
    const CoverOrder c = branched_cover_order(fox_delta("T(2,3)"), 6);
    if (!c.infinite) o.fail("got " + c.to_string());
  });

  criterion(7, "property suites on random braids", kLimit7, [](Outcome& o) {
    std::mt19937 rng(kPropertySeed);
    std::vector<Braid> braids;
    for (int i = 0; i < kPropertySamples; ++i)
      braids.push_back(oracle::random_knot_braid(rng, kPropertyMaxCrossings));
    int bad = 0;
    for (std::size_t i = 0; i < braids.size(); ++i) {
      const Braid& b = braids[i];
      const std::string name = render(KnotExpr::braid(b));
      GroupPresentation p = wirtinger_from_braid(b);
      const LaurentPoly d = alexander_polynomial(p);
      const Integer at1 = d.evaluate(1);
      auto note = [&](const std::string& what) {
        ++bad;
        o.fail(name + ": " + what);
      };
      if (at1 != 1 && at1 != -1) note("Delta(1) = " + at1.get_str());
      if (!equal_up_to_units(d, d.reflected())) note("not symmetric");
      if (!equal_up_to_units(alexander_polynomial(wirtinger_from_braid(mirror_braid(b))), d.reflected()))
        note("mirror");
      const Braid& other = braids[(i + 1) % braids.size()];
      const GroupPresentation sum = presentation_connected_sum(p, wirtinger_from_braid(other));
      if (!equal_up_to_units(alexander_polynomial(sum),
                             d * alexander_polynomial(wirtinger_from_braid(other))))
        note("connected sum");
      for (int g = 1; g <= p.generator_count(); ++g) {
        p.meridian = g;
        if (!equal_up_to_units(alexander_polynomial(p), d)) {
          note("meridian g" + std::to_string(g));
          break;
        }
      }
    }
    if (bad) o.detail += " (" + std::to_string(bad) + " failures)";
  });

  criterion(8, "classify T(2,3)#mirror(T(2,3)), d=5, m=4 in CP^2 matches golden JSON", kLimit8,
            [](Outcome& o) {
              std::ostringstream out, err;
              const int code = cli::run({"classify", "T(2,3)#mirror(T(2,3))", "--d", "5", "--m",
                                         "4", "--cp2", "--json"},
                                        out, err);
              if (code != 0) o.fail("exit " + std::to_string(code) + ": " + err.str());
              std::ifstream in(std::string(TWISTRIM_GOLDEN_DIR) + "/classify_trefoil_sum_d5_m4.json");
              std::stringstream golden;
              golden << in.rdbuf();
              if (golden.str().empty()) o.fail("golden file missing");
              if (out.str() != golden.str()) o.fail("output differs from golden file");
              const Json j = Json::parse(out.str());
              if (j["smoothly_knotted"]["verdict"] != "yes") o.fail("smoothly_knotted");
              if (j["topologically_standard"]["verdict"] != "yes") o.fail("topologically_standard");
              if (j["cp2"]["genus"] != 6) o.fail("genus");
              if (j["alexander"]["coeffs"] != Json::array({1, -2, 3, -2, 1})) o.fail("alexander");
              if (j["branched_cover"]["order"] != 1) o.fail("branched cover");
            });

  std::cout << (failures ? "acceptance: FAILED" : "acceptance: all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
