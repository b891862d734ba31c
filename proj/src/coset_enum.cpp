#include "fpg/coset_enum.hpp"

#include "fpg/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>

namespace fpg {

namespace {

using Coset = std::int32_t;
constexpr Coset kNone = -1;

struct TableFull {};

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup,
             std::size_t limit)
      : ncols_(2 * p.generators().size()), limit_(limit) {
    for (const auto& r : p.relators()) relators_.push_back(columns(p, r));
    for (const auto& h : subgroup) {
      if (!p.alphabet().covers(h)) {
        throw UndeclaredGenerator("subgroup word " + to_string(h) +
                                  " leaves the presentation's alphabet");
      }
      auto cols = columns(p, h);
      if (!cols.empty()) subgroup_.push_back(std::move(cols));
    }
    new_coset();
  }

  bool run() {
    for (const auto& h : subgroup_) {
      while (true) {
        try {
          scan_and_fill(0, h);
          break;
        } catch (const TableFull&) {
          std::size_t ignored = 0;
          if (!recover(ignored)) return false;
        }
      }
    }
    for (int pass = 0; pass < 4; ++pass) {
      std::size_t alpha = 0;
      while (alpha < rows_) {
        try {
          process(static_cast<Coset>(alpha));
          ++alpha;
        } catch (const TableFull&) {
          if (!recover(alpha)) return false;
        }
      }
      if (verified()) return true;
    }
    throw std::logic_error("coset enumeration failed to close its table");
  }

  CosetTable table(const std::vector<Generator>& gens) {
    compact();
    CosetTable out;
    out.generators = gens;
    out.status = TableStatus::Complete;
    out.max_cosets = limit_;
    out.action.assign(gens.size(), std::vector<std::size_t>(rows_));
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (std::size_t k = 0; k < rows_; ++k) {
        out.action[g][k] = static_cast<std::size_t>(at(static_cast<Coset>(k), 2 * g));
      }
    }
    return out;
  }

  std::size_t live() const { return live_; }
  std::size_t peak() const { return peak_; }
  std::size_t defined() const { return defined_; }

 private:
  std::vector<int> columns(const Presentation& p, const Word& w) const {
    std::vector<int> out;
    for (const auto& [g, sign] : letters(w)) {
      int col = 2 * static_cast<int>(p.alphabet().index_of(g));
      out.push_back(sign > 0 ? col : col + 1);
    }
    return out;
  }

  static int inverse(int col) { return col ^ 1; }

  Coset& at(Coset c, std::size_t col) {
    return table_[static_cast<std::size_t>(c) * ncols_ + col];
  }

  bool alive(Coset c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  Coset rep(Coset c) {
    Coset root = c;
    while (parent_[static_cast<std::size_t>(root)] != root) {
      root = parent_[static_cast<std::size_t>(root)];
    }
    while (parent_[static_cast<std::size_t>(c)] != root) {
      Coset next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  Coset new_coset() {
    if (rows_ >= limit_) throw TableFull{};
    Coset c = static_cast<Coset>(rows_++);
    table_.resize(rows_ * ncols_, kNone);
    parent_.push_back(c);
    live_ += 1;
    defined_ += 1;
    peak_ = std::max(peak_, live_);
    return c;
  }

  void define(Coset f, int col) {
    Coset n = new_coset();
    at(f, static_cast<std::size_t>(col)) = n;
    at(n, static_cast<std::size_t>(inverse(col))) = f;
  }

  void merge(Coset a, Coset b) {
    Coset x = rep(a);
    Coset y = rep(b);
    if (x == y) return;
    Coset lo = std::min(x, y);
    Coset hi = std::max(x, y);
    parent_[static_cast<std::size_t>(hi)] = lo;
    live_ -= 1;
    queue_.push_back(hi);
  }

  void coincidence(Coset a, Coset b) {
    if (a == b) return;
    merge(a, b);
    while (!queue_.empty()) {
      Coset g = queue_.front();
      queue_.pop_front();
      for (std::size_t x = 0; x < ncols_; ++x) {
        Coset d = at(g, x);
        if (d == kNone) continue;
        at(d, static_cast<std::size_t>(inverse(static_cast<int>(x)))) = kNone;
        Coset mu = rep(g);
        Coset nu = rep(d);
        if (at(mu, x) != kNone) {
          merge(nu, at(mu, x));
        } else if (at(nu, static_cast<std::size_t>(inverse(static_cast<int>(x)))) != kNone) {
          merge(mu, at(nu, static_cast<std::size_t>(inverse(static_cast<int>(x)))));
        } else {
          at(mu, x) = nu;
          at(nu, static_cast<std::size_t>(inverse(static_cast<int>(x)))) = mu;
        }
      }
    }
  }

  void scan_and_fill(Coset alpha, const std::vector<int>& w) {
    scan(alpha, w, true);
  }

  // Scans w from both ends at alpha, deducing when one entry is missing.
  // With fill set, defines cosets until the scan closes.
  void scan(Coset alpha, const std::vector<int>& w, bool fill) {
    if (w.empty()) return;
    Coset f = alpha;
    Coset b = alpha;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, static_cast<std::size_t>(w[static_cast<std::size_t>(i)])) != kNone) {
        f = at(f, static_cast<std::size_t>(w[static_cast<std::size_t>(i)]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i &&
             at(b, static_cast<std::size_t>(inverse(w[static_cast<std::size_t>(j)]))) != kNone) {
        b = at(b, static_cast<std::size_t>(inverse(w[static_cast<std::size_t>(j)])));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        const int x = w[static_cast<std::size_t>(i)];
        at(f, static_cast<std::size_t>(x)) = b;
        at(b, static_cast<std::size_t>(inverse(x))) = f;
        return;
      }
      if (!fill) return;
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  void process(Coset alpha) {
    if (!alive(alpha)) return;
    for (const auto& r : relators_) {
      scan_and_fill(alpha, r);
      if (!alive(alpha)) return;
    }
    for (std::size_t x = 0; x < ncols_; ++x) {
      if (!alive(alpha)) return;
      if (at(alpha, x) == kNone) define(alpha, static_cast<int>(x));
    }
  }

  void lookahead() {
    for (const auto& h : subgroup_) scan(0, h, false);
    for (std::size_t c = 0; c < rows_; ++c) {
      for (const auto& r : relators_) {
        if (!alive(static_cast<Coset>(c))) break;
        scan(static_cast<Coset>(c), r, false);
      }
    }
  }

  // Renumbers live cosets in order; returns the old → new map.
  std::vector<Coset> compact() {
    std::vector<Coset> map(rows_, kNone);
    std::size_t n = 0;
    for (std::size_t c = 0; c < rows_; ++c) {
      if (alive(static_cast<Coset>(c))) map[c] = static_cast<Coset>(n++);
    }
    std::vector<Coset> next(n * ncols_, kNone);
    for (std::size_t c = 0; c < rows_; ++c) {
      if (map[c] == kNone) continue;
      for (std::size_t x = 0; x < ncols_; ++x) {
        Coset d = at(static_cast<Coset>(c), x);
        next[static_cast<std::size_t>(map[c]) * ncols_ + x] =
            d == kNone ? kNone : map[static_cast<std::size_t>(d)];
      }
    }
    table_ = std::move(next);
    rows_ = n;
    parent_.resize(n);
    for (std::size_t c = 0; c < n; ++c) parent_[c] = static_cast<Coset>(c);
    return map;
  }

  bool recover(std::size_t& alpha) {
    const std::size_t before = live_;
    lookahead();
    const std::size_t freed_live = before - live_;
    const std::size_t dead_rows = rows_ - live_;
    auto map = compact();
    std::size_t next = rows_;
    for (std::size_t c = alpha; c < map.size(); ++c) {
      if (map[c] != kNone) {
        next = static_cast<std::size_t>(map[c]);
        break;
      }
    }
    alpha = next;
    const std::size_t threshold = std::max<std::size_t>(1, limit_ / 100);
    return freed_live + dead_rows >= threshold;
  }

  bool verified() {
    for (std::size_t c = 0; c < rows_; ++c) {
      if (!alive(static_cast<Coset>(c))) continue;
      for (std::size_t x = 0; x < ncols_; ++x) {
        if (at(static_cast<Coset>(c), x) == kNone) return false;
      }
      for (const auto& r : relators_) {
        Coset f = static_cast<Coset>(c);
        for (int x : r) f = at(f, static_cast<std::size_t>(x));
        if (f != static_cast<Coset>(c)) return false;
      }
    }
    return true;
  }

  std::size_t ncols_;
  std::size_t limit_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgroup_;
  std::vector<Coset> table_;
  std::vector<Coset> parent_;
  std::deque<Coset> queue_;
  std::size_t rows_ = 0;
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
  std::size_t defined_ = 0;
};

}  // namespace

EnumerationResult enumerate(const Presentation& p,
                            const std::vector<Word>& subgroup,
                            std::size_t max_cosets) {
  if (max_cosets < 1) throw LimitTooSmall("max_cosets must be at least 1");
  Enumerator e(p, subgroup, max_cosets);
  EnumerationResult out;
  out.limit = max_cosets;
  bool done = e.run();
  out.cosets_used = e.peak();
  out.total_defined = e.defined();
  if (!done) {
    out.table.generators = p.generators();
    out.table.status = TableStatus::Overflowed;
    out.table.max_cosets = max_cosets;
    return out;
  }
  out.outcome = EnumerationResult::Outcome::Completed;
  out.table = e.table(p.generators());
  out.index = out.table.size();
  if (!check_permutation_rep(p, subgroup, out.table)) {
    throw std::logic_error("completed coset table failed its certificate check");
  }
  return out;
}

EnumerationResult order(const Presentation& p, std::size_t max_cosets) {
  return enumerate(p, {}, max_cosets);
}

std::vector<Permutation> permutation_rep(const CosetTable& t) {
  if (t.status != TableStatus::Complete) {
    throw IncompleteTable("coset table is not complete");
  }
  return t.action;
}

namespace {

// Generator positions and inverse permutations, computed once per check.
struct Action {
  const CosetTable& t;
  std::vector<Permutation> forward;
  std::vector<Permutation> backward;

  Action(const CosetTable& table, std::vector<Permutation> perms)
      : t(table), forward(std::move(perms)) {
    for (const auto& perm : forward) {
      Permutation inv(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
      backward.push_back(std::move(inv));
    }
  }

  std::size_t apply(std::size_t point, const Word& w) const {
    for (const auto& s : w.syllables()) {
      auto it = std::find(t.generators.begin(), t.generators.end(), s.gen);
      if (it == t.generators.end()) {
        throw UndeclaredGenerator("generator '" + s.gen.name() +
                                  "' is not in the table");
      }
      const auto g = static_cast<std::size_t>(it - t.generators.begin());
      const Permutation& perm = s.exponent > 0 ? forward[g] : backward[g];
      for (BigInt k = abs(s.exponent); k > 0; --k) point = perm[point];
    }
    return point;
  }
};

}  // namespace

std::size_t act(const CosetTable& t, const std::vector<Permutation>& perms,
                std::size_t point, const Word& w) {
  return Action(t, perms).apply(point, w);
}

bool check_permutation_rep(const Presentation& p,
                           const std::vector<Word>& subgroup,
                           const CosetTable& t) {
  if (t.status != TableStatus::Complete) return false;
  const std::size_t n = t.size();
  if (n == 0) return false;
  auto perms = permutation_rep(t);
  for (const auto& perm : perms) {
    std::vector<bool> hit(n, false);
    for (std::size_t v : perm) {
      if (v >= n || hit[v]) return false;
      hit[v] = true;
    }
  }
  Action action(t, perms);
  for (const auto& r : p.relators()) {
    for (std::size_t k = 0; k < n; ++k) {
      if (action.apply(k, r) != k) return false;
    }
  }
  for (const auto& h : subgroup) {
    if (action.apply(0, h) != 0) return false;
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t k = stack.back();
    stack.pop_back();
    for (const auto& perm : perms) {
      if (!seen[perm[k]]) {
        seen[perm[k]] = true;
        reached += 1;
        stack.push_back(perm[k]);
      }
    }
  }
  return reached == n;
}

}  // namespace fpg
