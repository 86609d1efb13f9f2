#include <cstdlib>
#include <stdexcept>

#include "twistrim/group_engine.hpp"

namespace twistrim {

std::uint32_t CosetTable::act(std::size_t coset, int letter) const {
  const auto col = static_cast<std::size_t>(2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0));
  return table.at(coset * static_cast<std::size_t>(2 * generators) + col);
}

namespace {

// Cosets are numbered from 1; entry 0 means "undefined". Column 2i is
// generator i, column 2i+1 its inverse, so col ^ 1 is the inverse column.
class Enumerator {
 public:
  Enumerator(const GroupPresentation& p, std::size_t budget)
      : cols_(static_cast<std::size_t>(2 * p.generator_count())), budget_(budget) {
    for (const auto& r : p.relators) {
      const Word w = cyclic_reduce(r);
      if (w.empty()) continue;
      std::vector<std::size_t> cw;
      cw.reserve(w.size());
      for (int x : w) cw.push_back(static_cast<std::size_t>(2 * (std::abs(x) - 1) + (x < 0)));
      relators_.push_back(std::move(cw));
    }
    table_.assign(2 * cols_, 0);  // row 0 is a sentinel
    forward_ = {0, 1};
    allocated_ = 1;
    live_ = 1;
    defined_ = 1;
  }

  CosetTable run() {
    CosetTable out;
    out.budget = budget_;
    out.generators = static_cast<int>(cols_ / 2);
    std::uint32_t c = 1;
    while (c <= allocated_) {
      if (is_live(c)) {
        for (const auto& r : relators_) {
          if (!scan_and_fill(c, r)) return exhausted(out);
          if (!is_live(c)) break;
        }
        if (is_live(c)) {
          for (std::size_t x = 0; x < cols_; ++x)
            if (at(c, x) == 0 && !define(c, x)) return exhausted(out);
        }
      }
      ++c;
      if (allocated_ - live_ > std::max<std::size_t>(live_, 4096)) c = compact(c);
    }
    compact(1);
    out.status = EnumerationStatus::Complete;
    out.order = live_;
    out.defined = defined_;
    out.table.reserve(live_ * cols_);
    for (std::uint32_t k = 1; k <= allocated_; ++k)
      for (std::size_t x = 0; x < cols_; ++x) out.table.push_back(at(k, x) - 1);
    return out;
  }

 private:
  std::uint32_t& at(std::uint32_t coset, std::size_t col) { return table_[coset * cols_ + col]; }
  bool is_live(std::uint32_t c) const { return forward_[c] == c; }

  CosetTable& exhausted(CosetTable& out) const {
    out.status = EnumerationStatus::Exhausted;
    out.order = live_;
    out.defined = defined_;
    return out;
  }

  bool define(std::uint32_t c, std::size_t x) {
    if (live_ >= budget_) return false;
    const auto d = static_cast<std::uint32_t>(++allocated_);
    table_.resize((allocated_ + 1) * cols_, 0);
    forward_.push_back(d);
    at(c, x) = d;
    at(d, x ^ 1) = c;
    ++live_;
    ++defined_;
    return true;
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t root = c;
    while (forward_[root] != root) root = forward_[root];
    while (forward_[c] != root) {
      const std::uint32_t next = forward_[c];
      forward_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    forward_[b] = a;
    queue_.push_back(b);
    --live_;
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t idx = 0; idx < queue_.size(); ++idx) {
      const std::uint32_t e = queue_[idx];
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::uint32_t f = at(e, x);
        if (f == 0) continue;
        at(f, x ^ 1) = 0;
        const std::uint32_t e1 = rep(e);
        const std::uint32_t f1 = rep(f);
        if (at(e1, x) != 0) {
          merge(f1, at(e1, x));
        } else if (at(f1, x ^ 1) != 0) {
          merge(e1, at(f1, x ^ 1));
        } else {
          at(e1, x) = f1;
          at(f1, x ^ 1) = e1;
        }
      }
    }
  }

  // Returns false when a needed definition would exceed the budget.
  bool scan_and_fill(std::uint32_t c, const std::vector<std::size_t>& w) {
    std::uint32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    auto letter = [&w](std::ptrdiff_t k) { return w[static_cast<std::size_t>(k)]; };
    for (;;) {
      while (i <= j && at(f, letter(i)) != 0) f = at(f, letter(i++));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && at(b, letter(j) ^ 1) != 0) b = at(b, letter(j--) ^ 1);
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        at(f, letter(i)) = b;
        at(b, letter(i) ^ 1) = f;
        return true;
      }
      if (!define(f, letter(i))) return false;
    }
  }

  // Renumbers live cosets 1..live in order; returns the new index of the
  // first live coset at or after `cursor`.
  std::uint32_t compact(std::uint32_t cursor) {
    std::vector<std::uint32_t> renum(allocated_ + 1, 0);
    std::uint32_t next = 0;
    std::uint32_t new_cursor = 0;
    for (std::uint32_t k = 1; k <= allocated_; ++k) {
      if (!is_live(k)) continue;
      renum[k] = ++next;
      if (new_cursor == 0 && k >= cursor) new_cursor = next;
    }
    if (new_cursor == 0) new_cursor = next + 1;
    std::vector<std::uint32_t> fresh((next + 1) * cols_, 0);
    for (std::uint32_t k = 1; k <= allocated_; ++k) {
      if (!is_live(k)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::uint32_t v = at(k, x);
        fresh[renum[k] * cols_ + x] = v == 0 ? 0 : renum[rep(v)];
      }
    }
    table_ = std::move(fresh);
    allocated_ = next;
    forward_.resize(next + 1);
    for (std::uint32_t k = 0; k <= next; ++k) forward_[k] = k;
    return new_cursor;
  }

  std::size_t cols_;
  std::size_t budget_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> forward_;
  std::vector<std::uint32_t> queue_;
  std::size_t allocated_ = 0;
  std::size_t live_ = 0;
  std::size_t defined_ = 0;
};

}  // namespace

CosetTable todd_coxeter(const GroupPresentation& p, std::size_t budget) {
  if (budget < 1) throw std::invalid_argument("coset budget must be >= 1");
  p.validate();
  return Enumerator(p, budget).run();
}

}  // namespace twistrim
