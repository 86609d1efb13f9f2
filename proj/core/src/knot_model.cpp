#include "twistrim/knot_model.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace twistrim {

bool Mirror::operator==(const Mirror& rhs) const { return *child == *rhs.child; }

bool ConnectedSum::operator==(const ConnectedSum& rhs) const {
  return *left == *rhs.left && *right == *rhs.right;
}

void SurgeryParams::validate() const {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (cp2_degree) {
    if (*cp2_degree < 3)
      throw std::invalid_argument("cp2 degree must be >= 3 (degrees 1 and 2 are open)");
    if (*cp2_degree != d)
      throw std::invalid_argument("cp2 degree must equal d");
  }
}

KnotSyntaxError::KnotSyntaxError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

KnotExpr KnotExpr::torus(int p, int q) {
  if (p < 1 || q < 1) throw KnotSemanticError("torus knot parameters must be positive");
  if (std::gcd(p, q) != 1)
    throw KnotSemanticError("T(" + std::to_string(p) + "," + std::to_string(q) +
                            ") is not a knot (gcd=" + std::to_string(std::gcd(p, q)) + ")");
  if (p == 1 || q == 1) return unknot();
  return KnotExpr(TorusKnot{p, q});
}

KnotExpr KnotExpr::mirror(KnotExpr child) {
  return KnotExpr(Mirror{std::make_shared<const KnotExpr>(std::move(child))});
}

KnotExpr KnotExpr::sum(KnotExpr left, KnotExpr right) {
  return KnotExpr(ConnectedSum{std::make_shared<const KnotExpr>(std::move(left)),
                               std::make_shared<const KnotExpr>(std::move(right))});
}

KnotExpr KnotExpr::braid(Braid b) {
  if (b.strands < 1) throw KnotSemanticError("braid needs at least one strand");
  for (int k : b.word) {
    if (k == 0 || std::abs(k) > b.strands - 1)
      throw KnotSemanticError("braid letter " + std::to_string(k) + " out of range for " +
                              std::to_string(b.strands) + " strands");
  }
  const int comps = closure_components(b);
  if (comps != 1)
    throw KnotSemanticError("braid closure has " + std::to_string(comps) +
                            " components, not a knot");
  return KnotExpr(std::move(b));
}

KnotExpr KnotExpr::pd(PDCode code) {
  analyze_pd(code);
  return KnotExpr(std::move(code));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  KnotExpr parse() {
    KnotExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  KnotExpr expr() {
    KnotExpr acc = term();
    while (consume('#')) acc = KnotExpr::sum(std::move(acc), term());
    return acc;
  }

  KnotExpr term() {
    skip_ws();
    if (consume('(')) {
      KnotExpr inner = expr();
      expect(')');
      return inner;
    }
    const std::size_t start = pos_;
    const std::string_view word = identifier();
    if (word == "unknot") return KnotExpr::unknot();
    if (word == "T") {
      expect('(');
      const int p = integer();
      expect(',');
      const int q = integer();
      expect(')');
      if (p < 1 || q < 1) fail("torus parameters must be positive", start);
      return KnotExpr::torus(p, q);
    }
    if (word == "mirror") {
      expect('(');
      KnotExpr child = expr();
      expect(')');
      return KnotExpr::mirror(std::move(child));
    }
    if (word == "braid") {
      expect('(');
      Braid b;
      b.strands = integer();
      expect(';');
      while (!peek(')')) b.word.push_back(integer());
      expect(')');
      return KnotExpr::braid(std::move(b));
    }
    if (word == "pd") {
      expect('(');
      PDCode code;
      if (!peek(')')) {
        do {
          expect('(');
          std::array<int, 4> x{};
          for (int i = 0; i < 4; ++i) {
            if (i) expect(',');
            x[static_cast<std::size_t>(i)] = integer();
          }
          expect(')');
          code.crossings.push_back(x);
        } while (consume(','));
      }
      expect(')');
      return KnotExpr::pd(std::move(code));
    }
    fail(word.empty() ? "expected a knot term" : "unknown term '" + std::string(word) + "'",
         start);
  }

  std::string_view identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first != last && *first == '+') ++first;
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail("integer out of range", start);
    if (ec != std::errc()) fail("expected an integer", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw KnotSyntaxError(msg, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_to(std::ostringstream& os, const KnotExpr& e) {
  std::visit(
      [&os](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Unknot>) {
          os << "unknot";
        } else if constexpr (std::is_same_v<N, TorusKnot>) {
          os << "T(" << n.p << ',' << n.q << ')';
        } else if constexpr (std::is_same_v<N, Mirror>) {
          os << "mirror(";
          render_to(os, *n.child);
          os << ')';
        } else if constexpr (std::is_same_v<N, ConnectedSum>) {
          render_to(os, *n.left);
          os << '#';
          // '#' associates to the left, so a right-nested sum needs parentheses.
          const bool wrap = n.right->template is<ConnectedSum>();
          if (wrap) os << '(';
          render_to(os, *n.right);
          if (wrap) os << ')';
        } else if constexpr (std::is_same_v<N, Braid>) {
          os << "braid(" << n.strands << ';';
          for (int k : n.word) os << ' ' << k;
          os << ')';
        } else {
          os << "pd(";
          for (std::size_t i = 0; i < n.crossings.size(); ++i) {
            const auto& x = n.crossings[i];
            if (i) os << ',';
            os << '(' << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
          }
          os << ')';
        }
      },
      e.node());
}

}  // namespace

KnotExpr parse_knot(std::string_view text) { return Parser(text).parse(); }

std::string render(const KnotExpr& e) {
  std::ostringstream os;
  render_to(os, e);
  return os.str();
}

// ---------------------------------------------------------------------------
// Braids

Braid torus_braid(int p, int q) {
  if (p < 2) throw std::invalid_argument("torus_braid needs p >= 2; T(1,q) is the unknot");
  if (q < 1 || std::gcd(p, q) != 1)
    throw std::invalid_argument("torus_braid needs coprime p, q");
  Braid b;
  b.strands = p;
  b.word.reserve(static_cast<std::size_t>((p - 1) * q));
  for (int r = 0; r < q; ++r)
    for (int k = 1; k < p; ++k) b.word.push_back(k);
  return b;
}

Braid mirror_braid(const Braid& b) {
  Braid out = b;
  for (int& k : out.word) k = -k;
  return out;
}

int closure_components(const Braid& b) {
  const auto n = static_cast<std::size_t>(b.strands);
  // perm[i] is the strand position at the bottom reached from position i at the top.
  std::vector<std::size_t> at(n);  // at[pos] = starting strand currently at pos
  std::iota(at.begin(), at.end(), 0);
  for (int k : b.word) {
    const auto i = static_cast<std::size_t>(std::abs(k) - 1);
    std::swap(at[i], at[i + 1]);
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t pos = 0; pos < n; ++pos) perm[at[pos]] = pos;
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t x = s; !seen[x]; x = perm[x]) seen[x] = true;
  }
  return cycles;
}

// ---------------------------------------------------------------------------
// PD codes

PDOrientation analyze_pd(const PDCode& code) {
  PDOrientation out;
  const std::size_t n = code.crossings.size();
  if (n == 0) return out;

  struct Slot {
    std::size_t crossing;
    int index;
  };
  std::map<int, std::vector<Slot>> where;
  for (std::size_t x = 0; x < n; ++x)
    for (int s = 0; s < 4; ++s)
      where[code.crossings[x][static_cast<std::size_t>(s)]].push_back({x, s});
  for (const auto& [label, slots] : where) {
    if (slots.size() != 2)
      throw KnotSemanticError("PD label " + std::to_string(label) + " appears " +
                              std::to_string(slots.size()) + " times, expected 2");
  }

  // over_dir: +1 when the over-strand enters at slot 1 (b) and leaves at 3 (d).
  std::vector<int> over_dir(n, 0);
  std::vector<bool> under_seen(n, false);
  std::size_t passages = 0;
  Slot cur{0, 0};
  for (;;) {
    const auto& x = code.crossings[cur.crossing];
    int out_slot = 0;
    switch (cur.index) {
      case 0:
        if (under_seen[cur.crossing])
          throw KnotSemanticError("PD under-strand traversed twice");
        under_seen[cur.crossing] = true;
        out_slot = 2;
        break;
      case 1:
      case 3:
        if (over_dir[cur.crossing] != 0)
          throw KnotSemanticError("PD over-strand traversed twice");
        over_dir[cur.crossing] = cur.index == 1 ? 1 : -1;
        out_slot = cur.index == 1 ? 3 : 1;
        break;
      default:
        throw KnotSemanticError("inconsistent PD orientation at crossing " +
                                std::to_string(cur.crossing + 1));
    }
    ++passages;
    const int label = x[static_cast<std::size_t>(out_slot)];
    out.traversal.push_back(label);
    const auto& pair = where.at(label);
    const Slot next = (pair[0].crossing == cur.crossing && pair[0].index == out_slot)
                          ? pair[1]
                          : pair[0];
    if (next.crossing == 0 && next.index == 0) break;
    cur = next;
  }
  if (passages != 2 * n)
    throw KnotSemanticError("PD code has more than one component");

  out.sign.resize(n);
  // Under-strand runs a -> c; an over-strand running d -> b crosses it positively.
  for (std::size_t x = 0; x < n; ++x) out.sign[x] = over_dir[x] == -1 ? 1 : -1;
  return out;
}

PDCode mirror_pd(const PDCode& code) {
  const PDOrientation o = analyze_pd(code);
  PDCode out;
  out.crossings.reserve(code.crossings.size());
  for (std::size_t x = 0; x < code.crossings.size(); ++x) {
    const auto& [a, b, c, d] = code.crossings[x];
    // The old over-strand becomes the under-strand; start from its entry.
    if (o.sign[x] > 0)
      out.crossings.push_back({d, a, b, c});
    else
      out.crossings.push_back({b, c, d, a});
  }
  return out;
}

}  // namespace twistrim
