#include "brauercat/engine.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace brauercat {

namespace {

// Internal basis key with every endpoint on one row: position i is paired
// with partner[i-1]; a strand's dots sit at the larger of its two positions.
// Obtained from Hom(m,s) by bending the bottom row up on the right.
struct BentKey {
  std::vector<int> partner;
  std::vector<int> dots;
  BubbleMonomial bubbles;

  int width() const { return static_cast<int>(partner.size()); }
  int pair_of(int p) const { return partner[p - 1]; }
  int dots_at(int p) const { return dots[p - 1]; }

  int total_degree() const {
    int deg = 0;
    for (int d : dots) deg += d;
    for (auto [k, e] : bubbles) deg += k * e;
    return deg;
  }

  auto operator<=>(const BentKey&) const = default;
};

using BentTerms = std::map<BentKey, Rational>;

void add_term(BentTerms& acc, const BentKey& key, const Rational& c) {
  if (c == 0) return;
  auto it = acc.find(key);
  if (it == acc.end()) {
    acc.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

void add_scaled(BentTerms& acc, const BentTerms& terms, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [key, c] : terms) add_term(acc, key, c * scale);
}

// Guards the mutually recursive rewriting routines; the measure arguments
// (degree, chase distance, cap position) all decrease, so hitting this limit
// indicates a rule bug rather than a big input.
struct DepthGuard {
  static thread_local int depth;
  DepthGuard() {
    if (++depth > 200000) throw std::logic_error("rewriting recursion exceeded bound");
  }
  ~DepthGuard() { --depth; }
};
thread_local int DepthGuard::depth = 0;

class Engine {
 public:
  explicit Engine(CategoryConfig config) : config_(std::move(config)) {
    bound_ = config_.dot_bound();
  }

  const CategoryConfig& config() const { return config_; }

  // x_p composed onto the key; exact normal form.
  BentTerms dot(const BentKey& key, int p) { return cached(OpDot, p, key); }
  // Crossing at (p, p+1).
  BentTerms cross(const BentKey& key, int p) { return cached(OpCross, p, key); }
  // Cap at (p, p+1).
  BentTerms cap(const BentKey& key, int p) { return cached(OpCap, p, key); }
  // Cup inserted at (p, p+1).
  BentTerms cup(const BentKey& key, int p) { return cached(OpCup, p, key); }

  BentTerms apply(const BentTerms& terms, const Slice& slice) {
    BentTerms out;
    for (const auto& [key, c] : terms) {
      BentTerms piece;
      switch (slice.kind) {
        case Slice::Kind::Cup: piece = cup(key, slice.pos); break;
        case Slice::Kind::Cap: piece = cap(key, slice.pos); break;
        case Slice::Kind::Cross: piece = cross(key, slice.pos); break;
        case Slice::Kind::Dot: piece = dot(key, slice.pos); break;
      }
      add_scaled(out, piece, c);
    }
    return out;
  }

  BentTerms apply_over(const BentTerms& terms, int op, int p) {
    BentTerms out;
    for (const auto& [key, c] : terms) {
      BentTerms piece = cached(op, p, key);
      add_scaled(out, piece, c);
    }
    return out;
  }

  // Bent image of a bubble-free basis diagram, memoized.
  const BentTerms& bend_bare(const NormalDiagram& bare) {
    std::scoped_lock lock(bend_mu_);
    auto it = bend_cache_.find(bare);
    if (it != bend_cache_.end()) return it->second;

    const int m = bare.matching.m;
    BentKey seed;
    seed.partner.resize(2 * m);
    seed.dots.assign(2 * m, 0);
    for (int i = 1; i <= m; ++i) {
      seed.partner[i - 1] = 2 * m + 1 - i;
      seed.partner[2 * m - i] = i;
    }
    BentTerms cur{{seed, Rational(1)}};
    for (const Slice& s : diagram_word(bare).slices) cur = apply(cur, s);
    return bend_cache_.emplace(bare, std::move(cur)).first->second;
  }

  BentTerms bend_morphism(const Morphism& f) {
    BentTerms out;
    for (const auto& [key, c] : f.terms) {
      NormalDiagram bare = key;
      bare.bubbles.clear();
      for (const auto& [bkey, bc] : bend_bare(bare)) {
        BentKey shifted = bkey;
        for (auto [k, e] : key.bubbles) shifted.bubbles[k] += e;
        add_term(out, shifted, bc * c);
      }
    }
    return out;
  }

  // Translates a bent key straight into paper coordinates; valid as a
  // term-by-term basis identification only when m == 0.
  NormalDiagram transport(const BentKey& key, int m, int s) const {
    const int n = key.width();
    auto pub = [&](int pos) { return pos <= s ? m + pos : m + s + 1 - pos; };
    std::vector<std::pair<int, int>> pairs;
    NormalDiagram d;
    d.top_dots.assign(s, 0);
    d.bottom_dots.assign(m, 0);
    for (int i = 1; i <= n; ++i) {
      int j = key.pair_of(i);
      if (j < i) continue;
      pairs.emplace_back(pub(i), pub(j));
      int count = key.dots_at(j);
      if (count == 0) continue;
      int x = pub(i), y = pub(j);
      bool xt = x > m, yt = y > m;
      int home;
      if (xt && yt)
        home = std::max(x, y);
      else if (!xt && !yt)
        home = std::min(x, y);
      else
        home = xt ? x : y;
      if (home > m)
        d.top_dots[home - m - 1] = count;
      else
        d.bottom_dots[home - 1] = count;
    }
    d.matching = canonicalize(pairs, m, s);
    d.bubbles = key.bubbles;
    return d;
  }

  // Expresses a bent element in the Hom(m,s) basis. The bending map is
  // unitriangular for the total dot degree, so this is a back-substitution:
  // repeatedly match the highest-degree bent term against the bent image of
  // its strand-transported diagram.
  std::map<NormalDiagram, Rational> unbend(BentTerms work, int m, int s) {
    std::map<NormalDiagram, Rational> out;
    if (m == 0) {
      for (const auto& [key, c] : work) out.emplace(transport(key, 0, s), c);
      return out;
    }
    while (!work.empty()) {
      auto best = work.begin();
      int best_deg = best->first.total_degree();
      for (auto it = std::next(work.begin()); it != work.end(); ++it) {
        int deg = it->first.total_degree();
        if (deg > best_deg) {
          best = it;
          best_deg = deg;
        }
      }
      const BentKey lead_key = best->first;
      NormalDiagram pub = transport(lead_key, m, s);
      NormalDiagram bare = pub;
      bare.bubbles.clear();
      const BentTerms& image = bend_bare(bare);

      // The image's unique top-degree term must be the bubble-free part of
      // lead_key, with coefficient +-1.
      const BentKey* top = nullptr;
      int top_deg = -1;
      for (const auto& [k, c] : image) {
        int deg = k.total_degree();
        if (deg > top_deg) {
          top_deg = deg;
          top = &k;
        }
      }
      BentKey expect = lead_key;
      expect.bubbles.clear();
      BentKey got = *top;
      got.bubbles.clear();
      if (!(got == expect) || !top->bubbles.empty())
        throw std::logic_error("unbend: leading term mismatch");
      Rational eps = image.at(*top);
      Rational coef = best->second / eps;

      auto it = out.find(pub);
      if (it == out.end())
        out.emplace(pub, coef);
      else if ((it->second += coef) == 0)
        out.erase(it);

      for (const auto& [k, c] : image) {
        BentKey shifted = k;
        for (auto [bk, be] : pub.bubbles) shifted.bubbles[bk] += be;
        add_term(work, shifted, -coef * c);
      }
    }
    return out;
  }

 private:
  enum Op { OpDot = 0, OpCross = 1, OpCap = 2, OpCup = 3 };

  BentTerms cached(int op, int p, const BentKey& key) {
    {
      std::scoped_lock lock(op_mu_);
      auto it = op_cache_.find(std::tie(op, p, key));
      if (it != op_cache_.end()) return it->second;
    }
    BentTerms result;
    switch (op) {
      case OpDot: result = do_dot(key, p); break;
      case OpCross: result = do_cross(key, p); break;
      case OpCap: result = do_cap(key, p); break;
      case OpCup: result = do_cup(key, p); break;
    }
    std::scoped_lock lock(op_mu_);
    return op_cache_.emplace(std::make_tuple(op, p, key), std::move(result)).first->second;
  }

  BentTerms do_cup(const BentKey& key, int p) {
    const int n = key.width();
    if (p < 1 || p > n + 1) throw std::out_of_range("cup position");
    BentKey out;
    out.partner.assign(n + 2, 0);
    out.dots.assign(n + 2, 0);
    out.bubbles = key.bubbles;
    auto shift = [&](int i) { return i < p ? i : i + 2; };
    for (int i = 1; i <= n; ++i) {
      out.partner[shift(i) - 1] = shift(key.pair_of(i));
      out.dots[shift(i) - 1] = key.dots_at(i);
    }
    out.partner[p - 1] = p + 1;
    out.partner[p] = p;
    return {{out, Rational(1)}};
  }

  // Exact transposition of two dotless slots.
  BentKey swap_positions(const BentKey& key, int p) const {
    BentKey out = key;
    auto sigma = [&](int i) { return i == p ? p + 1 : (i == p + 1 ? p : i); };
    for (int i = 1; i <= key.width(); ++i) out.partner[sigma(i) - 1] = sigma(key.pair_of(i));
    out.dots[p - 1] = key.dots_at(p + 1);
    out.dots[p] = key.dots_at(p);
    return out;
  }

  // E_p = cup_p after cap_p (the cap-cup correction of the dot exchange law).
  BentTerms e_correction(const BentKey& key, int p) {
    return apply_over(cap(key, p), OpCup, p);
  }

  BentTerms do_cross(const BentKey& key, int p) {
    DepthGuard guard;
    const int n = key.width();
    if (p < 1 || p + 1 > n) throw std::out_of_range("cross position");
    const int a = key.dots_at(p), b = key.dots_at(p + 1);
    if (a == 0 && b == 0) return {{swap_positions(key, p), Rational(1)}};

    BentTerms out;
    if (b > 0) {
      // S_p x_{p+1} = x_p S_p - E_p + 1
      BentKey t = key;
      t.dots[p] -= 1;
      add_scaled(out, apply_over(cross(t, p), OpDot, p), Rational(1));
      add_scaled(out, e_correction(t, p), Rational(-1));
      add_term(out, t, Rational(1));
    } else {
      // S_p x_p = x_{p+1} S_p + E_p - 1
      BentKey t = key;
      t.dots[p - 1] -= 1;
      add_scaled(out, apply_over(cross(t, p), OpDot, p + 1), Rational(1));
      add_scaled(out, e_correction(t, p), Rational(1));
      add_term(out, t, Rational(-1));
    }
    return out;
  }

  // dots[p] has reached the cyclotomic bound a for the pair (e, p), e < p.
  BentTerms reduce_overflow(const BentKey& key, int p) {
    DepthGuard guard;
    const int a = *bound_;
    const int e = key.pair_of(p);
    BentTerms out;
    if (e == p - 1) {
      // On a generator cup, f(X) = 0 on the left leg turns into
      // X^a = -sum_j (-1)^{a-j} b_j X^j on the right leg.
      for (int j = 0; j < a; ++j) {
        BentKey t = key;
        t.dots[p - 1] = j;
        Rational c = -config_.b[j];
        if ((a - j) % 2 != 0) c = -c;
        add_term(out, t, c);
      }
      return out;
    }
    // Conjugate by the crossing at (e, e+1) to shorten the cup, then re-push.
    BentKey t0 = key;
    t0.dots[p - 1] = 0;
    BentTerms cur = cross(t0, e);
    for (int i = 0; i < a; ++i) cur = apply_over(cur, OpDot, p);
    return apply_over(cur, OpCross, e);
  }

  BentTerms do_dot(const BentKey& key, int p) {
    DepthGuard guard;
    const int n = key.width();
    if (p < 1 || p > n) throw std::out_of_range("dot position");
    if (!config_.dots_allowed()) throw std::logic_error("dots are not defined in this category");
    const int q = key.pair_of(p);
    if (q < p) {  // home position
      BentKey t = key;
      t.dots[p - 1] += 1;
      if (bound_ && t.dots[p - 1] == *bound_) return reduce_overflow(t, p);
      return {{t, Rational(1)}};
    }
    if (q == p + 1) {  // the cup is a generator: flip with a sign
      BentKey t = key;
      t.dots[p] += 1;
      if (bound_ && t.dots[p] == *bound_) {
        BentTerms reduced = reduce_overflow(t, p + 1);
        BentTerms out;
        add_scaled(out, reduced, Rational(-1));
        return out;
      }
      return {{t, Rational(-1)}};
    }
    // Distant cup-left: x_p = S_p x_{p+1} S_p + E_p - S_p.
    BentTerms m1 = cross(key, p);
    BentTerms m2 = apply_over(m1, OpDot, p + 1);
    BentTerms out = apply_over(m2, OpCross, p);
    add_scaled(out, e_correction(key, p), Rational(1));
    add_scaled(out, m1, Rational(-1));
    return out;
  }

  // Removes the adjacent pair (p, p+1); positions above shift down by two.
  BentKey drop_pair(const BentKey& key, int p) const {
    const int n = key.width();
    BentKey out;
    out.partner.assign(n - 2, 0);
    out.dots.assign(n - 2, 0);
    out.bubbles = key.bubbles;
    auto shift = [&](int i) { return i > p + 1 ? i - 2 : i; };
    for (int i = 1; i <= n; ++i) {
      if (i == p || i == p + 1) continue;
      int j = key.pair_of(i);
      out.partner[shift(i) - 1] = shift(j);
      out.dots[shift(i) - 1] = key.dots_at(i);
    }
    return out;
  }

  BentTerms bubble_multiply(const BubblePoly& poly, const BentKey& base) {
    BentTerms out;
    for (const auto& [mono, c] : poly.terms) {
      BentKey t = base;
      for (auto [k, e] : mono) t.bubbles[k] += e;
      add_term(out, t, c);
    }
    return out;
  }

  BentTerms do_cap(const BentKey& key, int p) {
    DepthGuard guard;
    const int n = key.width();
    if (p < 1 || p + 1 > n) throw std::out_of_range("cap position");
    const int a = key.dots_at(p), b = key.dots_at(p + 1);
    const int e1 = key.pair_of(p), e2 = key.pair_of(p + 1);

    if (e1 == p + 1) {
      // Closing one cup into a bubble with a+b dots pooled on it.
      BentKey bare = key;
      bare.dots[p - 1] = 0;
      bare.dots[p] = 0;
      BentKey base = drop_pair(bare, p);
      Rational sign = (b % 2 != 0) ? Rational(-1) : Rational(1);
      return bubble_multiply(reduce_bubble(a + b, config_) * sign, base);
    }

    BentKey t0 = key;
    t0.dots[p - 1] = 0;
    t0.dots[p] = 0;
    const int c = a + b;

    if (c == 0) {
      // Plain contraction; dots on the far ends of the merged strand may
      // need to travel to the new home.
      const int n2 = n - 2;
      BentKey merged;
      merged.partner.assign(n2, 0);
      merged.dots.assign(n2, 0);
      merged.bubbles = t0.bubbles;
      auto shift = [&](int i) { return i > p + 1 ? i - 2 : i; };
      for (int i = 1; i <= n; ++i) {
        if (i == p || i == p + 1) continue;
        int j = t0.pair_of(i);
        if (j == p) j = e2;
        if (j == p + 1) j = e1;
        merged.partner[shift(i) - 1] = shift(j);
        merged.dots[shift(i) - 1] = t0.dots_at(i);
      }
      int lo = std::min(shift(e1), shift(e2));
      int misplaced = merged.dots_at(lo);
      if (misplaced == 0) return {{merged, Rational(1)}};
      merged.dots[lo - 1] = 0;
      BentTerms cur{{merged, Rational(1)}};
      for (int i = 0; i < misplaced; ++i) cur = apply_over(cur, OpDot, lo);
      return cur;
    }

    if (e2 > p + 1) {
      // Pool the dots on the right leg (sign per crossing of the cap) and
      // chase them down the strand (p+1, e2) before contracting.
      Rational sign = (a % 2 != 0) ? Rational(-1) : Rational(1);
      BentTerms cur{{t0, sign}};
      for (int i = 0; i < c; ++i) cur = apply_over(cur, OpDot, p + 1);
      return apply_over(cur, OpCap, p);
    }
    if (e1 > p + 1) {
      Rational sign = (b % 2 != 0) ? Rational(-1) : Rational(1);
      BentTerms cur{{t0, sign}};
      for (int i = 0; i < c; ++i) cur = apply_over(cur, OpDot, p);
      return apply_over(cur, OpCap, p);
    }

    // Both partners lie left of the cap: slide the cap one step left using
    // A_p S_{p-1} = A_{p-1} S_p and recurse.
    Rational sign = (a % 2 != 0) ? Rational(-1) : Rational(1);
    BentTerms cur = cross(t0, p - 1);
    for (int i = 0; i < c; ++i) cur = apply_over(cur, OpDot, p + 1);
    cur = apply_over(cur, OpCross, p);
    BentTerms out;
    add_scaled(out, apply_over(cur, OpCap, p - 1), sign);
    return out;
  }

  CategoryConfig config_;
  std::optional<int> bound_;
  std::map<std::tuple<int, int, BentKey>, BentTerms> op_cache_;
  std::map<NormalDiagram, BentTerms> bend_cache_;
  std::mutex op_mu_;
  std::mutex bend_mu_;
};

Engine& engine_for(const CategoryConfig& config) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Engine>> registry;
  std::scoped_lock lock(mu);
  auto key = config.cache_key();
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::make_unique<Engine>(config)).first;
  return *it->second;
}

Morphism from_bent(const BentTerms& terms, int m, int s, const CategoryConfig& config) {
  Morphism out;
  out.source = m;
  out.target = s;
  out.config = config;
  out.terms = engine_for(config).unbend(terms, m, s);
  return out;
}

void require_same_config(const Morphism& f, const Morphism& g) {
  if (!(f.config == g.config)) throw std::invalid_argument("category configurations differ");
}

}  // namespace

bool operator==(const Morphism& a, const Morphism& b) {
  return a.source == b.source && a.target == b.target && a.config == b.config &&
         a.terms == b.terms;
}

std::string to_string(const Morphism& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : f.terms) {
    if (!first) os << "\n";
    os << to_string(c) << " * [" << to_string(key) << "]";
    first = false;
  }
  return os.str();
}

Morphism identity(int n, const CategoryConfig& config) {
  if (n < 0) throw std::invalid_argument("negative width");
  Morphism out;
  out.source = out.target = n;
  out.config = config;
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j <= n; ++j) pairs.emplace_back(j, n + j);
  out.terms.emplace(make_diagram(canonicalize(pairs, n, n)), Rational(1));
  return out;
}

Morphism zero_morphism(int m, int s, const CategoryConfig& config) {
  Morphism out;
  out.source = m;
  out.target = s;
  out.config = config;
  return out;
}

Morphism scalar_morphism(const BubblePoly& value, const CategoryConfig& config) {
  Morphism out = zero_morphism(0, 0, config);
  Matching empty = canonicalize({}, 0, 0);
  for (const auto& [mono, c] : value.terms) {
    BubblePoly normalized = normalize_monomial(mono, config) * c;
    for (const auto& [mono2, c2] : normalized.terms) {
      NormalDiagram d = make_diagram(empty, {}, {}, mono2);
      auto it = out.terms.find(d);
      if (it == out.terms.end())
        out.terms.emplace(d, c2);
      else if ((it->second += c2) == 0)
        out.terms.erase(it);
    }
  }
  return out;
}

Morphism generator(Generator kind, const CategoryConfig& config) {
  switch (kind) {
    case Generator::Cup: {
      Morphism out = zero_morphism(0, 2, config);
      out.terms.emplace(make_diagram(canonicalize({{1, 2}}, 0, 2)), Rational(1));
      return out;
    }
    case Generator::Cap: {
      Morphism out = zero_morphism(2, 0, config);
      out.terms.emplace(make_diagram(canonicalize({{1, 2}}, 2, 0)), Rational(1));
      return out;
    }
    case Generator::Cross: {
      Morphism out = zero_morphism(2, 2, config);
      out.terms.emplace(make_diagram(canonicalize({{1, 4}, {2, 3}}, 2, 2)), Rational(1));
      return out;
    }
    case Generator::Dot:
      // Built through the engine so that a degree-one quotient immediately
      // rewrites X as a scalar.
      return apply_slice(identity(1, config), {Slice::Kind::Dot, 1});
  }
  throw std::logic_error("unknown generator");
}

Morphism add(const Morphism& f, const Morphism& g) {
  require_same_config(f, g);
  if (f.source != g.source || f.target != g.target)
    throw std::invalid_argument("cannot add morphisms of different arity");
  Morphism out = f;
  for (const auto& [key, c] : g.terms) {
    auto it = out.terms.find(key);
    if (it == out.terms.end())
      out.terms.emplace(key, c);
    else if ((it->second += c) == 0)
      out.terms.erase(it);
  }
  return out;
}

Morphism scale(const Morphism& f, const Rational& c) {
  Morphism out = zero_morphism(f.source, f.target, f.config);
  if (c == 0) return out;
  for (const auto& [key, coeff] : f.terms) out.terms.emplace(key, coeff * c);
  return out;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  require_same_config(f, g);
  const int m = f.source + g.source, s = f.target + g.target;
  Morphism out = zero_morphism(m, s, f.config);
  for (const auto& [fk, fc] : f.terms) {
    for (const auto& [gk, gc] : g.terms) {
      std::vector<std::pair<int, int>> pairs;
      auto remap_f = [&](int e) { return e <= f.source ? e : e + g.source; };
      auto remap_g = [&](int e) {
        return e <= g.source ? f.source + e : f.source + f.target + e;
      };
      for (auto [x, y] : fk.matching.pairs) pairs.emplace_back(remap_f(x), remap_f(y));
      for (auto [x, y] : gk.matching.pairs) pairs.emplace_back(remap_g(x), remap_g(y));
      std::vector<int> top = fk.top_dots;
      top.insert(top.end(), gk.top_dots.begin(), gk.top_dots.end());
      std::vector<int> bot = fk.bottom_dots;
      bot.insert(bot.end(), gk.bottom_dots.begin(), gk.bottom_dots.end());
      BubbleMonomial bub = fk.bubbles;
      for (auto [k, e] : gk.bubbles) bub[k] += e;
      NormalDiagram d = make_diagram(canonicalize(pairs, m, s), std::move(top), std::move(bot),
                                     std::move(bub));
      auto it = out.terms.find(d);
      if (it == out.terms.end())
        out.terms.emplace(std::move(d), fc * gc);
      else if ((it->second += fc * gc) == 0)
        out.terms.erase(it);
    }
  }
  return out;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  require_same_config(f, g);
  if (f.target != g.source)
    throw std::invalid_argument("compose: inner widths differ (" + std::to_string(f.target) +
                                " vs " + std::to_string(g.source) + ")");
  Engine& engine = engine_for(f.config);
  if ((f.source + f.target) % 2 != 0 || (g.source + g.target) % 2 != 0)
    return zero_morphism(f.source, g.target, f.config);

  BentTerms bent_f = engine.bend_morphism(f);
  BentTerms acc;
  for (const auto& [gkey, gc] : g.terms) {
    NormalDiagram bare = gkey;
    bare.bubbles.clear();
    BentTerms cur = bent_f;
    for (const Slice& slice : diagram_word(bare).slices) cur = engine.apply(cur, slice);
    for (const auto& [key, c] : cur) {
      BentKey shifted = key;
      for (auto [k, e] : gkey.bubbles) shifted.bubbles[k] += e;
      add_term(acc, shifted, c * gc);
    }
  }
  return from_bent(acc, f.source, g.target, f.config);
}

Morphism apply_slice(const Morphism& f, const Slice& slice) {
  int s = f.target;
  int new_target = s;
  switch (slice.kind) {
    case Slice::Kind::Cup:
      if (slice.pos < 1 || slice.pos > s + 1) throw std::out_of_range("cup position");
      new_target = s + 2;
      break;
    case Slice::Kind::Cap:
      if (slice.pos < 1 || slice.pos + 1 > s) throw std::out_of_range("cap position");
      new_target = s - 2;
      break;
    case Slice::Kind::Cross:
      if (slice.pos < 1 || slice.pos + 1 > s) throw std::out_of_range("cross position");
      break;
    case Slice::Kind::Dot:
      if (slice.pos < 1 || slice.pos > s) throw std::out_of_range("dot position");
      break;
  }
  if ((f.source + f.target) % 2 != 0) return zero_morphism(f.source, new_target, f.config);
  Engine& engine = engine_for(f.config);
  BentTerms bent = engine.bend_morphism(f);
  bent = engine.apply(bent, slice);
  return from_bent(bent, f.source, new_target, f.config);
}

Morphism normal_form(const GeneratorWord& word, const CategoryConfig& config) {
  validate_word(word);
  Morphism cur = identity(word.input_width, config);
  Engine& engine = engine_for(config);
  BentTerms bent = engine.bend_morphism(cur);
  int target = word.input_width;
  for (const Slice& slice : word.slices) {
    bent = engine.apply(bent, slice);
    if (slice.kind == Slice::Kind::Cup) target += 2;
    if (slice.kind == Slice::Kind::Cap) target -= 2;
  }
  return from_bent(bent, word.input_width, target, config);
}

Morphism bend_up(const Morphism& f) {
  if (f.source < 1) throw std::invalid_argument("bend_up needs a positive source");
  Engine& engine = engine_for(f.config);
  return from_bent(engine.bend_morphism(f), 0, f.source + f.target, f.config);
}

Morphism bend_down(const Morphism& g, int m) {
  if (g.source != 0) throw std::invalid_argument("bend_down expects a Hom(0,2r) morphism");
  if (m < 0 || m > g.target) throw std::invalid_argument("bend_down: bad strand count");
  Engine& engine = engine_for(g.config);
  return from_bent(engine.bend_morphism(g), m, g.target - m, g.config);
}

int degree(const Morphism& f) {
  int deg = -1;
  for (const auto& [key, c] : f.terms) deg = std::max(deg, key.degree());
  return deg;
}

}  // namespace brauercat
