#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace twistrim {

class KnotExpr;

struct Unknot {
  bool operator==(const Unknot&) const = default;
};

struct TorusKnot {
  int p = 2;
  int q = 3;
  bool operator==(const TorusKnot&) const = default;
};

/// Braid word on `strands` strands; letter k stands for sigma_|k| with the
/// sign of k. A Braid value need not close to a knot; KnotExpr checks that.
struct Braid {
  int strands = 1;
  std::vector<int> word;
  bool operator==(const Braid&) const = default;
};

/// Planar diagram code. Each tuple lists arc labels counterclockwise,
/// starting from the incoming under-strand.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  bool operator==(const PDCode&) const = default;
};

struct Mirror {
  std::shared_ptr<const KnotExpr> child;
  bool operator==(const Mirror& rhs) const;
};

struct ConnectedSum {
  std::shared_ptr<const KnotExpr> left;
  std::shared_ptr<const KnotExpr> right;
  bool operator==(const ConnectedSum& rhs) const;
};

/// Immutable, validated knot expression.
class KnotExpr {
 public:
  using Node = std::variant<Unknot, TorusKnot, Mirror, ConnectedSum, Braid, PDCode>;

  KnotExpr() : node_(Unknot{}) {}

  static KnotExpr unknot() { return KnotExpr(); }
  /// T(1,q) and T(p,1) normalize to the unknot; non-coprime pairs throw.
  static KnotExpr torus(int p, int q);
  static KnotExpr mirror(KnotExpr child);
  static KnotExpr sum(KnotExpr left, KnotExpr right);
  static KnotExpr braid(Braid b);
  static KnotExpr pd(PDCode code);

  const Node& node() const { return node_; }
  template <typename T>
  bool is() const { return std::holds_alternative<T>(node_); }
  template <typename T>
  const T& as() const { return std::get<T>(node_); }

  bool operator==(const KnotExpr& rhs) const { return node_ == rhs.node_; }

 private:
  explicit KnotExpr(Node n) : node_(std::move(n)) {}
  Node node_;
};

/// Parameters of an m-twist rim surgery on a surface whose complement has
/// fundamental group Z/d.
struct SurgeryParams {
  int d = 1;
  long m = 0;
  /// Hypothesis flag: the relative Seiberg-Witten invariant is nontrivial.
  bool sw_nontrivial = false;
  /// Degree of a complex plane curve in CP^2; must equal d and be >= 3.
  std::optional<int> cp2_degree;

  /// Throws std::invalid_argument on d < 1 or an inconsistent cp2_degree.
  void validate() const;
  /// sw_nontrivial, or implied by a complex curve in CP^2.
  bool sw_asserted() const { return sw_nontrivial || cp2_degree.has_value(); }
  bool operator==(const SurgeryParams&) const = default;
};

/// Malformed input text; `offset` is the byte position of the problem.
class KnotSyntaxError : public std::runtime_error {
 public:
  KnotSyntaxError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Well-formed text that does not describe a knot.
class KnotSemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// expr := term ('#' term)*
/// term := 'unknot' | 'T(p,q)' | 'mirror(expr)' | 'braid(s; w1 w2 ...)'
///       | 'pd((a,b,c,d),...)' | '(' expr ')'
KnotExpr parse_knot(std::string_view text);

/// Canonical text form; parse_knot(render(e)) == e.
std::string render(const KnotExpr& e);

/// Braid on p strands with word (s_1 s_2 ... s_{p-1})^q.
Braid torus_braid(int p, int q);
Braid mirror_braid(const Braid& b);
/// Number of components of the braid closure.
int closure_components(const Braid& b);

/// Orientation data recovered from a PD code by walking the knot once.
struct PDOrientation {
  /// +1 or -1 per crossing.
  std::vector<int> sign;
  /// Edge labels in the order the single component visits them.
  std::vector<int> traversal;
};

/// Walks the diagram; throws KnotSemanticError on malformed codes,
/// inconsistent orientations and multi-component diagrams.
PDOrientation analyze_pd(const PDCode& code);

/// Mirror image of a PD code (every crossing switched).
PDCode mirror_pd(const PDCode& code);

}  // namespace twistrim
