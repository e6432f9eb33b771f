// Independent re-check of zero certificates. Descendant sets, twin classes and
// determinants are recomputed here from the structure matrix alone so that a
// bug in the graph or twin modules cannot validate its own output.

#include <algorithm>
#include <set>
#include <string>

#include "evoder/structural.hpp"

namespace evoder {

namespace {

using IndexSet = std::set<int>;

struct Facts {
  explicit Facts(const EvolutionAlgebra& a) : algebra(a), n(a.dimension()) {
    for (int i = 0; i < n; ++i) {
      IndexSet d;
      for (int k = 0; k < n; ++k) {
        if (!a.omega(i, k).is_zero()) d.insert(k);
      }
      non_degenerate = non_degenerate && !d.empty();
      desc.push_back(std::move(d));
    }
  }

  bool twins(int i, int j) const { return desc[i] == desc[j]; }
  bool loop(int i) const { return !algebra.omega(i, i).is_zero(); }

  IndexSet twin_class(int i) const {
    IndexSet out;
    for (int j = 0; j < n; ++j) {
      if (twins(i, j)) out.insert(j);
    }
    return out;
  }

  const EvolutionAlgebra& algebra;
  int n;
  bool non_degenerate = true;
  std::vector<IndexSet> desc;
};

std::string cell_text(Cell c) { return "(" + std::to_string(c.row + 1) + "," + std::to_string(c.col + 1) + ")"; }

class Checker {
 public:
  Checker(const Facts& f, const ZeroPattern& p, const ZeroCertificate& c) : f_(f), p_(p), c_(c) {}

  ReplayResult run() {
    const int r = c_.cell.row;
    const int col = c_.cell.col;
    if (r < 0 || col < 0 || r >= f_.n || col >= f_.n) return fail("cell outside the matrix");
    const auto& stored = p_.certificate(r, col);
    if (!stored || stored->step != c_.step) return fail("cell is not recorded with this step in the pattern");
    for (const Cell& premise : c_.witness.premises) {
      const auto& pc = p_.certificate(premise.row, premise.col);
      if (!pc) return fail("premise " + cell_text(premise) + " is not proven");
      if (pc->step >= c_.step) return fail("premise " + cell_text(premise) + " is not proven earlier");
    }
    if (!check_rule()) return fail(reason_.empty() ? std::string("rule conditions do not hold") : reason_);
    return {};
  }

 private:
  ReplayResult fail(std::string why) const {
    return {false, std::string(to_string(c_.rule)) + " at " + cell_text(c_.cell) + ": " + why};
  }

  bool reject(std::string why) {
    reason_ = std::move(why);
    return false;
  }

  const Rational& w(int i, int k) const { return f_.algebra.omega(i, k); }
  const std::vector<int>& idx() const { return c_.witness.indices; }
  bool valid_index(int v) const { return v >= 0 && v < f_.n; }

  bool indices_valid(std::size_t count) const {
    if (idx().size() != count) return false;
    return std::all_of(idx().begin(), idx().end(), [&](int v) { return valid_index(v); });
  }

  bool has_premises(const std::vector<Cell>& required) {
    const std::set<Cell> listed(c_.witness.premises.begin(), c_.witness.premises.end());
    for (const Cell& needed : required) {
      if (!listed.count(needed)) return reject("missing premise " + cell_text(needed));
    }
    return true;
  }

  bool check_rule() {
    const int r = c_.cell.row;
    const int col = c_.cell.col;
    switch (c_.rule) {
      case ZeroRule::TwinSeparation: {
        if (!f_.non_degenerate) return reject("algebra is degenerate");
        if (r == col || !indices_valid(1)) return reject("malformed witness");
        const int k = idx()[0];
        return f_.desc[r].count(k) != f_.desc[col].count(k) || reject("witness does not separate the rows");
      }
      case ZeroRule::Determinant2x2: {
        if (r == col || !indices_valid(3) || c_.witness.values.size() != 1) return reject("malformed witness");
        const int a = idx()[0], k = idx()[1], l = idx()[2];
        if (a != r && a != col) return reject("anchor is not a coordinate of the cell");
        const int b = a == r ? col : r;
        if (k >= l || !f_.desc[a].count(k) || !f_.desc[a].count(l)) return reject("columns not in D(anchor)");
        const Rational det = w(a, k) * w(b, l) - w(a, l) * w(b, k);
        if (det != c_.witness.values[0]) return reject("determinant value does not match");
        return !det.is_zero() || reject("determinant is zero");
      }
      case ZeroRule::GramDeterminant: {
        if (r == col || f_.n < 3 || c_.witness.values.size() != 1) return reject("malformed witness");
        Rational a, b, ab;
        for (int k = 0; k < f_.n; ++k) {
          a += w(r, k) * w(r, k);
          b += w(col, k) * w(col, k);
          ab += w(r, k) * w(col, k);
        }
        const Rational gram = a * b - ab * ab;
        if (gram != c_.witness.values[0]) return reject("Gram value does not match");
        return !gram.is_zero() || reject("Gram determinant is zero");
      }
      case ZeroRule::SingletonLoop: {
        if (r != col || !f_.loop(r) || f_.twin_class(r).size() != 1) return reject("not a singleton class with a loop");
        std::vector<Cell> required;
        for (int k : f_.desc[r]) {
          if (k != r) required.push_back({k, r});
        }
        return has_premises(required);
      }
      case ZeroRule::LoopSplitDiagonal:
      case ZeroRule::LoopSplitNonsingular:
        return check_loop_split();
      case ZeroRule::SoleTarget: {
        if (!indices_valid(1)) return reject("malformed witness");
        const int t = idx()[0];
        const IndexSet cls = f_.twin_class(r);
        if (!cls.count(col) || !cls.count(t)) return reject("cell or target outside the class");
        if (f_.desc[r] != IndexSet{t}) return reject("class descendants are not exactly the target");
        return r == col || r == t || col == t || reject("cell is not a conclusion of the rule");
      }
      case ZeroRule::RestrictedIntersection:
        return check_restricted_intersection();
      case ZeroRule::ContainedDescendants:
        return check_contained_descendants();
      case ZeroRule::LoopFreeClassPropagation: {
        if (r != col || !indices_valid(1)) return reject("malformed witness");
        const int j = idx()[0];
        const IndexSet cls = f_.twin_class(r);
        for (int m : cls) {
          if (f_.loop(m)) return reject("class has a loop");
        }
        const IndexSet& dt = f_.desc[r];
        if (!dt.count(j)) return reject("witness is not a class descendant");
        for (int x : dt) {
          for (int y : dt) {
            if (x < y && f_.twins(x, y)) return reject("class descendants share a twin class");
          }
        }
        std::vector<Cell> required{{j, j}};
        for (int h : dt) {
          if (h != j) required.push_back({h, j});
        }
        return has_premises(required);
      }
      case ZeroRule::TwinSymmetry: {
        if (r == col || !indices_valid(1) || !f_.twins(r, col)) return reject("cell does not lie in one class");
        if (!f_.desc[r].count(idx()[0])) return reject("witness is not a shared descendant");
        return has_premises({{col, r}});
      }
      case ZeroRule::DiagonalFromOffdiagonal: {
        if (!f_.non_degenerate) return reject("algebra is degenerate");
        if (r != col) return reject("cell is not diagonal");
        const auto& cyc = idx();
        if (cyc.empty()) return reject("empty cycle");
        std::set<int> seen;
        for (std::size_t t = 0; t < cyc.size(); ++t) {
          const int from = cyc[t];
          const int to = cyc[(t + 1) % cyc.size()];
          if (!valid_index(from) || !valid_index(to) || !seen.insert(from).second) return reject("invalid cycle");
          if (w(from, to).is_zero()) return reject("cycle uses a missing arrow");
        }
        for (int i = 0; i < f_.n; ++i) {
          for (int j = 0; j < f_.n; ++j) {
            if (i == j) continue;
            const auto& pc = p_.certificate(i, j);
            if (!pc || pc->step >= c_.step) return reject("off-diagonal " + cell_text({i, j}) + " not proven earlier");
          }
        }
        return true;
      }
    }
    return reject("unknown rule");
  }

  bool check_loop_split() {
    const int r = c_.cell.row;
    const int col = c_.cell.col;
    const IndexSet cls = f_.twin_class(r);
    if (!cls.count(col)) return reject("cell does not lie in one class");
    std::vector<int> wl, nl;
    for (int m : cls) (f_.loop(m) ? wl : nl).push_back(m);
    if (wl.empty() || idx() != wl) return reject("indices are not the loop members of the class");

    const bool diagonal = c_.rule == ZeroRule::LoopSplitDiagonal;
    if (diagonal && r != col) return reject("cell is not diagonal");
    const std::vector<int>& targets = diagonal ? wl : nl;

    std::vector<Cell> required;
    for (int a : wl) {
      for (int b : wl) {
        if (a != b) required.push_back({a, b});
      }
    }
    for (int k : f_.desc[r]) {
      if (cls.count(k)) continue;
      for (int t : targets) required.push_back({k, t});
    }
    if (!has_premises(required)) return false;
    if (diagonal) return true;

    const bool row_wl = f_.loop(r);
    const bool col_wl = f_.loop(col);
    if (row_wl == col_wl) return reject("cell must pair a loop member with a loop-free member");

    std::vector<std::vector<Rational>> sub;
    for (int a : wl) {
      auto& row = sub.emplace_back();
      for (int b : wl) row.push_back(w(a, b));
    }
    if (sub != c_.witness.matrix) return reject("witness matrix does not match the structure matrix");
    if (c_.witness.values.size() != 1) return reject("malformed witness");
    Rational det(1);
    auto m = sub;
    const std::size_t s = m.size();
    for (std::size_t c = 0; c < s && !det.is_zero(); ++c) {
      std::size_t p = c;
      while (p < s && m[p][c].is_zero()) ++p;
      if (p == s) {
        det = Rational(0);
        break;
      }
      if (p != c) {
        std::swap(m[p], m[c]);
        det = -det;
      }
      det *= m[c][c];
      for (std::size_t q = c + 1; q < s; ++q) {
        const Rational factor = m[q][c] / m[c][c];
        for (std::size_t x = c; x < s; ++x) m[q][x] -= factor * m[c][x];
      }
    }
    if (det != c_.witness.values[0]) return reject("determinant value does not match");
    return !det.is_zero() || reject("loop block is singular");
  }

  bool check_restricted_intersection() {
    const auto& ind = idx();
    if (!indices_valid(3)) return reject("malformed witness");
    const int k = ind[0], j = ind[1], l = ind[2];
    const IndexSet cls = f_.twin_class(j);
    if (!cls.count(l) || j == l) return reject("witness vertices not distinct class members");
    IndexSet meet;
    for (int h : f_.desc[k]) {
      if (cls.count(h)) meet.insert(h);
    }
    if (meet != IndexSet{j}) return reject("D(k) does not meet the class exactly in j");
    if (c_.cell != Cell{j, l}) return reject("cell is not the conclusion for this witness");
    std::vector<Cell> required;
    for (int h : f_.desc[k]) {
      if (h != j) required.push_back({h, l});
    }
    return has_premises(required);
  }

  bool check_contained_descendants() {
    if (!indices_valid(3)) return reject("malformed witness");
    const int k = idx()[0], a = idx()[1], b = idx()[2];
    const IndexSet cls = f_.twin_class(a);
    const IndexSet& dt = f_.desc[a];
    IndexSet inside;
    for (int v : dt) {
      if (cls.count(v)) inside.insert(v);
    }
    if (inside != IndexSet{a, b} || a >= b) return reject("class descendants do not meet the class in {a, b}");
    if (!dt.count(k) || k == a || k == b) return reject("k is not an outside class descendant");
    if (!f_.loop(k)) return reject("k has no loop");
    for (int h : f_.desc[k]) {
      if (h != k && !cls.count(h)) return reject("D(k) leaves the class");
    }
    const std::set<Cell> conclusions{{k, k}, {a, a}, {b, b}, {a, b}, {b, a}};
    if (!conclusions.count(c_.cell)) return reject("cell is not a conclusion of the rule");
    std::vector<Cell> required;
    for (int h : f_.desc[k]) {
      if (h != k) required.push_back({h, k});
    }
    for (int s : dt) {
      if (s == k) continue;
      required.push_back({s, k});
      required.push_back({k, s});
    }
    for (int h : dt) {
      if (h == a || h == b) continue;
      required.push_back({h, a});
      required.push_back({h, b});
    }
    return has_premises(required);
  }

  const Facts& f_;
  const ZeroPattern& p_;
  const ZeroCertificate& c_;
  std::string reason_;
};

}  // namespace

ReplayResult replay_certificate(const EvolutionAlgebra& algebra, const ZeroPattern& pattern,
                                const ZeroCertificate& certificate) {
  if (pattern.size() != algebra.dimension()) return {false, "pattern and algebra sizes differ"};
  const Facts facts(algebra);
  return Checker(facts, pattern, certificate).run();
}

}  // namespace evoder
