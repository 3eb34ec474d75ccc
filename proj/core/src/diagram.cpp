#include "brauercat/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace brauercat {

int Matching::partner(int endpoint) const {
  for (const auto& [a, b] : pairs) {
    if (a == endpoint) return b;
    if (b == endpoint) return a;
  }
  throw std::out_of_range("endpoint " + std::to_string(endpoint) + " not in matching");
}

Matching canonicalize(const std::vector<std::pair<int, int>>& raw_pairs, int m, int s) {
  if (m < 0 || s < 0) throw std::invalid_argument("negative arity");
  const int n = m + s;
  if (!raw_pairs.empty() && n % 2 != 0)
    throw std::invalid_argument("odd endpoint count with non-empty pairing");
  if (static_cast<int>(raw_pairs.size()) * 2 != n)
    throw std::invalid_argument("pairing does not cover all endpoints");

  std::vector<char> seen(n + 1, 0);
  Matching out{m, s, {}};
  out.pairs.reserve(raw_pairs.size());
  for (auto [a, b] : raw_pairs) {
    if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("endpoint out of range");
    if (a == b) throw std::invalid_argument("fixed point in pairing");
    if (seen[a] || seen[b]) throw std::invalid_argument("duplicated endpoint");
    seen[a] = seen[b] = 1;
    out.pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

EndpointRole role(const Matching& matching, int endpoint) {
  if (endpoint < 1 || endpoint > matching.total()) throw std::out_of_range("endpoint index");
  const int other = matching.partner(endpoint);
  const bool top = matching.is_top(endpoint);
  const bool other_top = matching.is_top(other);
  if (top != other_top) return top ? EndpointRole::VerticalTop : EndpointRole::VerticalBottom;
  if (top) return endpoint < other ? EndpointRole::CupLeft : EndpointRole::CupRight;
  return endpoint < other ? EndpointRole::CapLeft : EndpointRole::CapRight;
}

bool dots_allowed(const Matching& matching, int endpoint) {
  switch (role(matching, endpoint)) {
    case EndpointRole::VerticalTop:
    case EndpointRole::CupRight:
    case EndpointRole::CapLeft:
      return true;
    default:
      return false;
  }
}

int dot_home(const Matching& matching, int endpoint) {
  if (dots_allowed(matching, endpoint)) return endpoint;
  return matching.partner(endpoint);
}

int NormalDiagram::degree() const {
  int deg = 0;
  for (int d : top_dots) deg += d;
  for (int d : bottom_dots) deg += d;
  for (auto [k, e] : bubbles) deg += k * e;
  return deg;
}

NormalDiagram make_diagram(Matching matching, std::vector<int> top_dots,
                           std::vector<int> bottom_dots, BubbleMonomial bubbles) {
  NormalDiagram d;
  d.matching = std::move(matching);
  d.top_dots = std::move(top_dots);
  d.bottom_dots = std::move(bottom_dots);
  d.top_dots.resize(d.matching.s, 0);
  d.bottom_dots.resize(d.matching.m, 0);
  d.bubbles = std::move(bubbles);
  validate_diagram(d);
  return d;
}

void validate_diagram(const NormalDiagram& d) {
  const auto& mt = d.matching;
  if (static_cast<int>(d.top_dots.size()) != mt.s ||
      static_cast<int>(d.bottom_dots.size()) != mt.m)
    throw std::invalid_argument("dot vector length mismatch");
  for (int k = 1; k <= mt.s; ++k) {
    if (d.top_dots[k - 1] < 0) throw std::invalid_argument("negative dot count");
    if (d.top_dots[k - 1] > 0 && !dots_allowed(mt, mt.m + k))
      throw std::invalid_argument("top dot off its home endpoint");
  }
  for (int j = 1; j <= mt.m; ++j) {
    if (d.bottom_dots[j - 1] < 0) throw std::invalid_argument("negative dot count");
    if (d.bottom_dots[j - 1] > 0 && !dots_allowed(mt, j))
      throw std::invalid_argument("bottom dot off its home endpoint");
  }
  for (auto [k, e] : d.bubbles) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("bubble index must be even");
    if (e <= 0) throw std::invalid_argument("bubble exponent must be positive");
  }
}

bool equivalent(const NormalDiagram& a, const NormalDiagram& b) {
  if (a.matching.m != b.matching.m || a.matching.s != b.matching.s)
    throw std::invalid_argument("equivalent: (m,s) mismatch");
  return a == b;
}

std::string to_string(const Matching& matching) {
  std::ostringstream os;
  os << "pairs=[";
  bool first = true;
  for (const auto& [a, b] : matching.pairs) {
    if (!first) os << ",";
    os << "(" << a << "," << b << ")";
    first = false;
  }
  os << "]";
  return os.str();
}

std::string to_string(const NormalDiagram& d) {
  std::ostringstream os;
  bool need_space = false;
  auto sep = [&] {
    if (need_space) os << " ";
    need_space = true;
  };
  if (!d.matching.pairs.empty()) {
    sep();
    os << to_string(d.matching);
  }
  auto dump = [&os](const char* name, const std::vector<int>& v) {
    os << name << "=[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
  };
  if (d.matching.s > 0) {
    sep();
    dump("top", d.top_dots);
  }
  if (d.matching.m > 0) {
    sep();
    dump("bot", d.bottom_dots);
  }
  if (!d.bubbles.empty()) {
    sep();
    os << "bub {";
    bool first = true;
    for (auto [k, e] : d.bubbles) {
      if (!first) os << ",";
      os << k << ":" << e;
      first = false;
    }
    os << "}";
  }
  return os.str();
}

namespace {

void enumerate_pairings(std::vector<int>& free_points, std::vector<std::pair<int, int>>& acc,
                        std::vector<std::vector<std::pair<int, int>>>& out) {
  if (free_points.empty()) {
    out.push_back(acc);
    return;
  }
  // Always pair off the smallest free endpoint; this yields lexicographic order.
  int a = free_points.front();
  for (size_t i = 1; i < free_points.size(); ++i) {
    int b = free_points[i];
    std::vector<int> rest;
    rest.reserve(free_points.size() - 2);
    for (size_t j = 1; j < free_points.size(); ++j)
      if (j != i) rest.push_back(free_points[j]);
    acc.emplace_back(a, b);
    enumerate_pairings(rest, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(int m, int s) {
  const int n = m + s;
  if (n % 2 != 0) return {};
  std::vector<int> points(n);
  std::iota(points.begin(), points.end(), 1);
  std::vector<std::vector<std::pair<int, int>>> pairings;
  std::vector<std::pair<int, int>> acc;
  enumerate_pairings(points, acc, pairings);
  std::vector<Matching> out;
  out.reserve(pairings.size());
  for (auto& p : pairings) out.push_back(canonicalize(p, m, s));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Home endpoints of every strand of `mt`, sorted.
std::vector<int> strand_homes(const Matching& mt) {
  std::vector<int> homes;
  for (const auto& [a, b] : mt.pairs) homes.push_back(dot_home(mt, a));
  std::sort(homes.begin(), homes.end());
  return homes;
}

void assign_dots(const NormalDiagram& base, const std::vector<int>& homes, size_t idx, int bound,
                 std::optional<int> remaining_degree, std::vector<NormalDiagram>& out) {
  if (idx == homes.size()) {
    out.push_back(base);
    return;
  }
  int limit = bound - 1;
  if (remaining_degree) limit = std::min(limit, *remaining_degree);
  for (int c = 0; c <= limit; ++c) {
    NormalDiagram next = base;
    int home = homes[idx];
    if (next.matching.is_top(home))
      next.top_dots[next.matching.row_position(home) - 1] = c;
    else
      next.bottom_dots[home - 1] = c;
    assign_dots(next, homes, idx + 1, bound,
                remaining_degree ? std::optional<int>(*remaining_degree - c) : std::nullopt, out);
  }
}

}  // namespace

std::vector<NormalDiagram> enumerate_nd_basis(int m, int s, std::optional<int> dot_bound,
                                              bool with_bubbles,
                                              std::optional<int> degree_cutoff) {
  if (dot_bound && *dot_bound < 1) throw std::invalid_argument("dot bound must be >= 1");
  if (!dot_bound && !degree_cutoff)
    throw std::invalid_argument("unbounded dot enumeration requires a degree cutoff");
  if (with_bubbles && !degree_cutoff)
    throw std::invalid_argument("bubble enumeration requires a degree cutoff");

  std::vector<NormalDiagram> out;
  const int bound = dot_bound ? *dot_bound
                              : (degree_cutoff ? *degree_cutoff + 1 : 1);
  for (const Matching& mt : enumerate_matchings(m, s)) {
    NormalDiagram base = make_diagram(mt);
    assign_dots(base, strand_homes(mt), 0, bound, degree_cutoff, out);
  }
  if (with_bubbles) {
    // Multiply in monomials in Delta_2, Delta_4, ... within the degree budget
    // (Delta_0 powers are excluded: they are not bounded by any degree).
    std::vector<NormalDiagram> expanded;
    for (const auto& d : out) {
      int budget = *degree_cutoff - d.degree();
      std::vector<BubbleMonomial> monos{{}};
      for (int k = 2; k <= budget; k += 2) {
        std::vector<BubbleMonomial> next;
        for (const auto& mono : monos) {
          int used = 0;
          for (auto [i, e] : mono) used += i * e;
          for (int e = 0; used + k * e <= budget; ++e) {
            BubbleMonomial m2 = mono;
            if (e > 0) m2[k] = e;
            next.push_back(std::move(m2));
          }
        }
        monos = std::move(next);
      }
      for (auto& mono : monos) {
        NormalDiagram d2 = d;
        d2.bubbles = mono;
        expanded.push_back(std::move(d2));
      }
    }
    out = std::move(expanded);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int GeneratorWord::output_width() const {
  int w = input_width;
  for (const auto& s : slices) {
    if (s.kind == Slice::Kind::Cup) w += 2;
    if (s.kind == Slice::Kind::Cap) w -= 2;
  }
  return w;
}

void GeneratorWord::append(Slice slice) { slices.push_back(slice); }

void validate_word(const GeneratorWord& word) {
  int w = word.input_width;
  if (w < 0) throw std::invalid_argument("negative input width");
  for (const auto& s : word.slices) {
    switch (s.kind) {
      case Slice::Kind::Cup:
        if (s.pos < 1 || s.pos > w + 1) throw std::invalid_argument("cup position out of range");
        w += 2;
        break;
      case Slice::Kind::Cap:
      case Slice::Kind::Cross:
        if (s.pos < 1 || s.pos + 1 > w) throw std::invalid_argument("slice position out of range");
        if (s.kind == Slice::Kind::Cap) w -= 2;
        break;
      case Slice::Kind::Dot:
        if (s.pos < 1 || s.pos > w) throw std::invalid_argument("dot position out of range");
        break;
    }
  }
}

namespace {

// Shared cap/cross/cup scheduler. `caps_inner_first` and `cups_desc` pick the
// processing order; any choice satisfies the replay contract.
GeneratorWord slice_matching_impl(const Matching& mt, bool caps_inner_first, bool cups_desc) {
  GeneratorWord word;
  word.input_width = mt.m;

  std::vector<std::pair<int, int>> caps, cups;
  std::vector<std::pair<int, int>> verticals;  // (bottom, top)
  for (const auto& [a, b] : mt.pairs) {
    if (!mt.is_top(a) && !mt.is_top(b))
      caps.emplace_back(a, b);
    else if (mt.is_top(a) && mt.is_top(b))
      cups.emplace_back(a, b);
    else
      verticals.emplace_back(a, b);
  }
  auto inner_first = [](const std::pair<int, int>& x, const std::pair<int, int>& y) {
    return (x.second - x.first) < (y.second - y.first);
  };
  if (caps_inner_first)
    std::sort(caps.begin(), caps.end(), inner_first);
  else
    std::sort(caps.rbegin(), caps.rend(), inner_first);

  // Current row content, bottom-up: strand tags. Tag = top endpoint for
  // verticals/cups, or ~0 for doomed cap legs.
  struct Tag {
    int top = 0;  // top endpoint this strand must reach (0 for cap legs)
    int cap_id = -1;
  };
  std::vector<Tag> row(mt.m);
  for (int j = 1; j <= mt.m; ++j) row[j - 1] = Tag{0, -1};
  for (auto [b, t] : verticals) row[b - 1] = Tag{t, -1};
  for (size_t i = 0; i < caps.size(); ++i) {
    row[caps[i].first - 1] = Tag{0, static_cast<int>(i)};
    row[caps[i].second - 1] = Tag{0, static_cast<int>(i)};
  }

  auto swap_at = [&](int p) {  // 1-based
    word.append({Slice::Kind::Cross, p});
    std::swap(row[p - 1], row[p]);
  };

  // Phase 1: caps. Bring each pair adjacent, then cap.
  for (size_t i = 0; i < caps.size(); ++i) {
    int lo = -1, hi = -1;
    for (int p = 0; p < static_cast<int>(row.size()); ++p) {
      if (row[p].cap_id != static_cast<int>(i)) continue;
      if (lo < 0)
        lo = p;
      else
        hi = p;
    }
    for (int p = hi; p > lo + 1; --p) swap_at(p);
    word.append({Slice::Kind::Cap, lo + 1});
    row.erase(row.begin() + lo, row.begin() + lo + 2);
  }

  // Phase 2: sort surviving verticals into top order (bubble sort => crossings).
  for (bool moved = true; moved;) {
    moved = false;
    for (int p = 0; p + 1 < static_cast<int>(row.size()); ++p) {
      if (row[p].top > row[p + 1].top) {
        swap_at(p + 1);
        moved = true;
      }
    }
  }

  // Phase 3: cups, inserted adjacently then spread by crossings. Insert so the
  // row stays sorted by target top endpoint; processing order is configurable.
  std::sort(cups.begin(), cups.end());
  if (cups_desc) std::reverse(cups.begin(), cups.end());
  for (auto [l, r] : cups) {
    int at = 0;
    while (at < static_cast<int>(row.size()) && row[at].top < l) ++at;
    word.append({Slice::Kind::Cup, at + 1});
    row.insert(row.begin() + at, {Tag{l, -1}, Tag{r, -1}});
    // Walk the right leg rightwards to its slot.
    int p = at + 1;
    while (p + 1 < static_cast<int>(row.size()) && row[p + 1].top < r) {
      swap_at(p + 1);
      ++p;
    }
  }
  return word;
}

}  // namespace

GeneratorWord slice_matching(const Matching& matching) {
  return slice_matching_impl(matching, true, false);
}

GeneratorWord slice_matching_alt(const Matching& matching) {
  return slice_matching_impl(matching, false, true);
}

GeneratorWord diagram_word(const NormalDiagram& d) {
  GeneratorWord word;
  word.input_width = d.matching.m;
  for (int j = 1; j <= d.matching.m; ++j)
    for (int c = 0; c < d.bottom_dots[j - 1]; ++c) word.append({Slice::Kind::Dot, j});
  GeneratorWord mw = slice_matching(d.matching);
  for (const auto& s : mw.slices) word.append(s);
  for (int k = 1; k <= d.matching.s; ++k)
    for (int c = 0; c < d.top_dots[k - 1]; ++c) word.append({Slice::Kind::Dot, k});
  return word;
}

}  // namespace brauercat
