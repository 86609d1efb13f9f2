#include "twistrim/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "twistrim/alexander.hpp"
#include "twistrim/covers.hpp"
#include "twistrim/json_io.hpp"
#include "twistrim/surgery_classifier.hpp"
#include "twistrim/wirtinger.hpp"

namespace twistrim::cli {

namespace {

struct Flags {
  std::string knot;
  int d = 1;
  long m = 0;
  std::size_t budget = kDefaultCosetBudget;
  bool json = false;
  bool strict = false;
  bool cp2 = false;
  bool sw = false;
  bool structure = false;
  bool enumerate = false;
  int pmax = 2, qmax = 3, dmax = 2, mmax = 2;
};

void add_output_flags(CLI::App* sub, Flags& f) {
  sub->add_flag("--json", f.json, "JSON output");
  sub->add_flag("--strict", f.strict, "exit 3 when pi1 is undetermined");
}

void add_knot(CLI::App* sub, Flags& f) {
  sub->add_option("knot", f.knot, "knot expression, e.g. \"T(2,3)#mirror(T(2,3))\"")->required();
}

std::string pi1_text(const Pi1Verdict& v) {
  switch (v.kind) {
    case Pi1Kind::CyclicOfOrder:
      return "Z/" + std::to_string(v.order) + " (" + to_string(v.certificate) + ")";
    case Pi1Kind::FiniteOfOrder:
      return "finite of order " + std::to_string(v.order) + " (" + to_string(v.certificate) + ")";
    case Pi1Kind::Undetermined:
      break;
  }
  return "undetermined (coset budget exhausted)";
}

void print_report(const SurgeryReport& r, std::ostream& out) {
  out << "knot: " << render(r.knot) << '\n'
      << "d: " << r.params.d << '\n'
      << "m: " << r.params.m << '\n'
      << "alexander: " << r.alexander.to_string() << '\n'
      << "pi1: " << pi1_text(r.pi1) << '\n'
      << "pi1_obstruction: " << (r.pi1_obstruction ? "yes" : "no") << '\n'
      << "branched_cover: " << r.branched_cover.to_string() << '\n'
      << "ribbon: " << (r.ribbon == RibbonCertificate::Certified ? "certified" : "unknown") << '\n'
      << "smoothly_knotted: " << (r.smoothly_knotted.knotted ? "yes" : "no-evidence") << " ("
      << r.smoothly_knotted.reason << ")\n"
      << "topologically_standard: " << to_string(r.topologically_standard.kind) << " ("
      << r.topologically_standard.reason << ")\n";
  if (!r.topologically_standard.failed.empty()) {
    out << "failed:";
    for (const auto& f : r.topologically_standard.failed) out << ' ' << f;
    out << '\n';
  }
  if (r.params.cp2_degree && r.cp2_genus)
    out << "cp2: degree " << *r.params.cp2_degree << ", genus " << *r.cp2_genus << '\n';
}

int strict_code(const Flags& f, const Pi1Verdict& v) {
  return f.strict && v.kind == Pi1Kind::Undetermined ? kExitUndetermined : kExitOk;
}

SurgeryParams params_from(const Flags& f) {
  SurgeryParams p;
  p.d = f.d;
  p.m = f.m;
  p.sw_nontrivial = f.sw;
  if (f.cp2) p.cp2_degree = f.d;
  p.validate();
  return p;
}

int cmd_alexander(const Flags& f, std::ostream& out) {
  const KnotExpr k = parse_knot(f.knot);
  const LaurentPoly delta = alexander_polynomial(knot_presentation(k));
  if (f.json) {
    Json j{{"knot", render(k)}, {"alexander", to_json(delta)}};
    j["alexander"]["text"] = delta.to_string();
    out << j.dump() << '\n';
  } else {
    out << delta.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_pi1(const Flags& f, std::ostream& out) {
  const KnotExpr k = parse_knot(f.knot);
  params_from(f);
  const Pi1Verdict v = determine_pi1(knot_presentation(k), f.d, f.m, f.budget, !f.enumerate);
  if (f.json)
    out << Json{{"knot", render(k)}, {"d", f.d}, {"m", f.m}, {"pi1", to_json(v)}}.dump() << '\n';
  else
    out << pi1_text(v) << '\n';
  return strict_code(f, v);
}

int cmd_cover(const Flags& f, std::ostream& out) {
  const KnotExpr k = parse_knot(f.knot);
  params_from(f);
  const CoverHomology h = cover_homology(knot_presentation(k), f.d, f.structure);
  if (f.json) {
    Json j{{"knot", render(k)}, {"d", f.d}, {"branched_cover", to_json(h.order)}};
    if (h.structure) j["structure"] = to_json(*h.structure);
    out << j.dump() << '\n';
  } else {
    out << "order " << h.order.to_string() << '\n';
    if (h.structure) out << "structure " << h.structure->to_string() << '\n';
  }
  return kExitOk;
}

int cmd_classify(const Flags& f, std::ostream& out) {
  const KnotExpr k = parse_knot(f.knot);
  const SurgeryParams params = params_from(f);
  const SurgeryReport r = classify(k, params, f.budget);
  if (f.json)
    out << to_json(r).dump(2) << '\n';
  else
    print_report(r, out);
  return strict_code(f, r.pi1);
}

int cmd_search(const Flags& f, std::ostream& out) {
  int code = kExitOk;
  enumerate_examples(f.pmax, f.qmax, f.dmax, f.mmax, [&](const ExampleRow& row) {
    const SurgeryReport& r = row.report;
    if (f.json) {
      Json j{{"p", row.p}, {"q", row.q}};
      const Json report = to_json(r);
      for (const auto& [key, value] : report.items()) j[key] = value;
      out << j.dump() << '\n';
    } else {
      out << "p=" << row.p << " q=" << row.q << " d=" << row.d << " m=" << row.m
          << " alexander=\"" << r.alexander.to_string() << "\""
          << " branched_cover=" << r.branched_cover.to_string()
          << " smoothly_knotted=" << (r.smoothly_knotted.knotted ? "yes" : "no-evidence")
          << " topologically_standard=" << to_string(r.topologically_standard.kind) << '\n';
    }
    out.flush();
    code = std::max(code, strict_code(f, r.pi1));
  });
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants for twist rim surgery on embedded surfaces", "twistrim"};
  app.require_subcommand(1);
  Flags f;

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial of a knot");
  add_knot(alexander, f);
  add_output_flags(alexander, f);

  auto* pi1 = app.add_subcommand("pi1", "pi1 of the surgered surface complement");
  add_knot(pi1, f);
  pi1->add_option("--d", f.d, "order of pi1 of the ambient complement")->required()
      ->check(CLI::PositiveNumber);
  pi1->add_option("--m", f.m, "twist parameter")->required();
  pi1->add_option("--budget", f.budget, "coset budget")->check(CLI::PositiveNumber);
  pi1->add_flag("--enumerate", f.enumerate, "skip the congruence shortcut");
  add_output_flags(pi1, f);

  auto* cover = app.add_subcommand("cover", "homology of the d-fold cyclic branched cover");
  add_knot(cover, f);
  cover->add_option("--d", f.d, "cover degree")->required()->check(CLI::PositiveNumber);
  cover->add_flag("--structure", f.structure, "also print the invariant factors");
  add_output_flags(cover, f);

  auto* cls = app.add_subcommand("classify", "full surgery report");
  add_knot(cls, f);
  cls->add_option("--d", f.d, "order of pi1 of the ambient complement")->required()
      ->check(CLI::PositiveNumber);
  cls->add_option("--m", f.m, "twist parameter")->required();
  cls->add_option("--budget", f.budget, "coset budget")->check(CLI::PositiveNumber);
  cls->add_flag("--cp2", f.cp2, "surface is a degree-d complex curve in CP^2");
  cls->add_flag("--sw", f.sw, "assert the relative Seiberg-Witten invariant is nontrivial");
  add_output_flags(cls, f);

  auto* search = app.add_subcommand("search", "stream T(p,q)#mirror(T(p,q)) examples");
  const auto bound = CLI::Range(2, 1000);
  search->add_option("--pmax", f.pmax)->required()->check(bound);
  search->add_option("--qmax", f.qmax)->required()->check(bound);
  search->add_option("--dmax", f.dmax)->required()->check(bound);
  search->add_option("--mmax", f.mmax)->required()->check(bound);
  add_output_flags(search, f);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "twistrim: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*alexander) return cmd_alexander(f, out);
    if (*pi1) return cmd_pi1(f, out);
    if (*cover) return cmd_cover(f, out);
    if (*cls) return cmd_classify(f, out);
    return cmd_search(f, out);
  } catch (const KnotSyntaxError& e) {
    err << "twistrim: syntax error: " << e.what() << '\n';
  } catch (const KnotSemanticError& e) {
    err << "twistrim: invalid knot: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "twistrim: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace twistrim::cli
