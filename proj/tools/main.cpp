#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brauercat/admissible.hpp"
#include "brauercat/engine.hpp"
#include "brauercat/expr.hpp"
#include "brauercat/lie_oracle.hpp"
#include "brauercat/nw.hpp"

using namespace brauercat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty entry in rational list");
    out.push_back(parse_rational(item));
  }
  if (out.empty()) throw UsageError("empty rational list");
  return out;
}

CategoryConfig config_from_flags(const std::string& category, const std::string& omega0,
                                 const std::string& u) {
  auto need_omega0 = [&] {
    if (omega0.empty()) throw UsageError("--omega0 required for category " + category);
    return parse_rational(omega0);
  };
  auto need_u = [&] {
    if (u.empty()) throw UsageError("--u required for category " + category);
    return RootList{parse_rational_list(u)};
  };
  if (category == "b") return CategoryConfig::brauer();
  if (category == "b0") return CategoryConfig::brauer_specialized(need_omega0());
  if (category == "ab") return CategoryConfig::affine();
  if (category == "ab0") return CategoryConfig::affine_specialized(need_omega0());
  if (category == "abw") return CategoryConfig::affine_omega(omega_from_u(need_u()));
  if (category == "cbf") return CategoryConfig::cyclotomic(need_u());
  if (category == "cbfw") return CategoryConfig::cyclotomic_specialized(need_u());
  throw UsageError("unknown category '" + category + "'");
}

std::string morphism_to_json(const Morphism& f) {
  std::ostringstream os;
  os << "{\"source\":" << f.source << ",\"target\":" << f.target << ",\"terms\":[";
  bool first = true;
  for (const auto& [key, c] : f.terms) {
    if (!first) os << ",";
    first = false;
    os << "{\"coeff\":\"" << to_string(c) << "\",\"bubbles\":{";
    bool fb = true;
    for (auto [k, e] : key.bubbles) {
      if (!fb) os << ",";
      fb = false;
      os << "\"" << k << "\":" << e;
    }
    os << "},\"pairs\":[";
    bool fp = true;
    for (auto [a, b] : key.matching.pairs) {
      if (!fp) os << ",";
      fp = false;
      os << "[" << a << "," << b << "]";
    }
    os << "],\"top_dots\":[";
    for (size_t i = 0; i < key.top_dots.size(); ++i) os << (i ? "," : "") << key.top_dots[i];
    os << "],\"bottom_dots\":[";
    for (size_t i = 0; i < key.bottom_dots.size(); ++i)
      os << (i ? "," : "") << key.bottom_dots[i];
    os << "]}";
  }
  os << "]}";
  return os.str();
}

LieData lie_from_flag(const std::string& flag) {
  auto colon = flag.find(':');
  if (colon == std::string::npos) throw UsageError("--lie expects so:N or sp:N");
  std::string fam = flag.substr(0, colon);
  int N = 0;
  try {
    N = std::stoi(flag.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("--lie expects so:N or sp:N");
  }
  if (fam == "so") return build_lie(LieFamily::So, N);
  if (fam == "sp") return build_lie(LieFamily::Sp, N);
  throw UsageError("--lie expects so:N or sp:N");
}

int cmd_normalize(const std::string& category, const std::string& omega0, const std::string& u,
                  bool json, const std::string& text) {
  CategoryConfig config = config_from_flags(category, omega0, u);
  Morphism result = evaluate(parse(text), config);
  std::cout << (json ? morphism_to_json(result) : to_string(result)) << "\n";
  return kExitOk;
}

int cmd_count_basis(const std::string& category, const std::string& omega0, const std::string& u,
                    int m, int s) {
  CategoryConfig config = config_from_flags(category, omega0, u);
  std::size_t count = 0;
  switch (config.kind) {
    case CategoryKind::B0:
    case CategoryKind::ABW:
      count = enumerate_matchings(m, s).size();
      break;
    case CategoryKind::CBF:
    case CategoryKind::CBFW:
      count = enumerate_nd_basis(m, s, config.roots.degree(), false).size();
      break;
    default:
      throw UsageError("category " + category +
                       " has an infinite basis; use b0, abw, cbf or cbfw");
  }
  std::cout << count << "\n";
  return kExitOk;
}

int cmd_verify_nw(const std::string& category, const std::string& omega0, const std::string& u,
                  int r) {
  CategoryConfig config = config_from_flags(category, omega0, u);
  NWReport report = verify_nw_relations(r, config);
  for (const auto& res : report.results) {
    std::cout << res.name << ": " << (res.holds ? "pass" : "fail");
    if (!res.holds && res.expected) std::cout << "  difference: " << res.detail;
    std::cout << "\n";
  }
  std::cout << "triple-e resolution: " << report.triple_e_resolution << "\n";
  std::cout << (report.all_expected_hold ? "all expected relations hold"
                                         : "some expected relations FAILED")
            << "\n";
  return report.all_expected_hold ? kExitOk : kExitCheckFailed;
}

int cmd_check_omega(const std::string& u, int depth) {
  if (u.empty()) throw UsageError("--u required");
  RootList roots{parse_rational_list(u)};
  auto omega = omega_from_u(roots);
  bool ok = check_admissible(*omega, depth) && check_weakly_admissible(*omega, roots, depth) &&
            check_u_admissible_series(roots, *omega, depth);
  std::cout << "u-admissible: " << (ok ? "true" : "false") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_lie_params(const std::string& g, const std::string& q, const std::string& c,
                   const std::string& which, bool json) {
  LieKind kind;
  if (g == "so_even")
    kind = LieKind::SoEven;
  else if (g == "so_odd")
    kind = LieKind::SoOdd;
  else if (g == "sp")
    kind = LieKind::Sp;
  else
    throw UsageError("--g expects so_even, so_odd or sp");
  ParabolicFamily family;
  if (which == "I1")
    family = ParabolicFamily::I1;
  else if (which == "I2")
    family = ParabolicFamily::I2;
  else
    throw UsageError("--which expects I1 or I2");

  std::vector<int> qs;
  for (const Rational& r : parse_rational_list(q)) {
    if (denominator(r) != 1 || r <= 0) throw UsageError("--q expects positive integers");
    qs.push_back(static_cast<int>(numerator(r)));
  }
  std::vector<Rational> cs = parse_rational_list(c);
  RootList roots;
  try {
    roots = lie_parameters(kind, qs, cs, family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (json) {
    std::cout << roots_to_json(roots) << "\n";
  } else {
    for (size_t i = 0; i < roots.u.size(); ++i)
      std::cout << (i ? "," : "") << to_string(roots.u[i]);
    std::cout << "\n";
  }
  return kExitOk;
}

// Matrix evaluation of a raw expression, bypassing the diagram engine.
ExactMatrix psi_raw(const Expr& x, const LieData& L) {
  auto pow_n = [&](int w) {
    int out = 1;
    for (int i = 0; i < w; ++i) out *= L.dim();
    return out;
  };
  auto one_slice = [&](Slice::Kind kind, int input_width) {
    GeneratorWord w;
    w.input_width = input_width;
    w.append({kind, 1});
    return psi_word(w, L);
  };
  switch (x.kind) {
    case Expr::Kind::U: return one_slice(Slice::Kind::Cup, 0);
    case Expr::Kind::A: return one_slice(Slice::Kind::Cap, 2);
    case Expr::Kind::S: return one_slice(Slice::Kind::Cross, 2);
    case Expr::Kind::X: return x_matrix(1, 1, L);
    case Expr::Kind::Id: return ExactMatrix::identity(pow_n(x.id_width));
    case Expr::Kind::Tensor: return psi_raw(*x.lhs, L).kron(psi_raw(*x.rhs, L));
    case Expr::Kind::Seq: return psi_raw(*x.rhs, L).mul(psi_raw(*x.lhs, L));
    case Expr::Kind::Power: {
      auto [m, s] = arity(*x.lhs);
      ExactMatrix acc = ExactMatrix::identity(pow_n(m));
      ExactMatrix base = psi_raw(*x.lhs, L);
      for (int i = 0; i < x.exponent; ++i) acc = base.mul(acc);
      return acc;
    }
  }
  throw std::logic_error("bad expression node");
}

int cmd_functor_check(const std::string& lie, const std::string& expr1,
                      const std::string& expr2) {
  LieData L = lie_from_flag(lie);
  CategoryConfig config = CategoryConfig::affine();
  bool ok = false;
  if (expr2.empty()) {
    // The normal form and the raw expression must have the same matrix.
    Expr e = parse(expr1);
    arity(e);
    ok = psi(evaluate(e, config), L) == psi_raw(e, L);
  } else {
    Morphism f = evaluate(parse(expr1), config);
    Morphism g = evaluate(parse(expr2), config);
    if (f.target != g.source) throw UsageError("expressions are not composable");
    ok = functor_check_compose(g, f, L);
  }
  std::cout << "functor-check: " << (ok ? "ok" : "mismatch") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for dotted Brauer diagram categories"};
  app.require_subcommand(1);

  std::string category = "ab", omega0, u, expr_text, expr_text2;
  std::string g, q, c, which = "I1", lie;
  int depth = 15, m = 0, s = 0, r = 3;
  bool json = false;

  auto add_category_flags = [&](CLI::App* cmd) {
    cmd->add_option("--category", category, "b, b0, ab, ab0, abw, cbf or cbfw");
    cmd->add_option("--omega0", omega0, "value of the undotted bubble (p/q)");
    cmd->add_option("--u", u, "comma-separated roots of f (p/q entries)");
  };

  auto* normalize = app.add_subcommand("normalize", "rewrite an expression to the diagram basis");
  add_category_flags(normalize);
  normalize->add_flag("--json", json);
  normalize->add_option("expr", expr_text)->required();

  auto* count = app.add_subcommand("count-basis", "basis cardinality of Hom(m,s)");
  add_category_flags(count);
  count->add_option("m", m)->required();
  count->add_option("s", s)->required();

  auto* nw = app.add_subcommand("verify-nw", "check the endomorphism algebra relations");
  add_category_flags(nw);
  nw->add_option("-r,--strands", r, "strand count");

  auto* omega_cmd = app.add_subcommand("check-omega", "admissibility of the sequence from u");
  omega_cmd->add_option("--u", u)->required();
  omega_cmd->add_option("--depth", depth);

  auto* lie_cmd = app.add_subcommand("lie-params", "root lists of the parabolic families");
  lie_cmd->add_option("--g", g, "so_even, so_odd or sp")->required();
  lie_cmd->add_option("--q", q, "comma-separated block sizes")->required();
  lie_cmd->add_option("--c", c, "comma-separated weights")->required();
  lie_cmd->add_option("--which", which, "I1 or I2");
  lie_cmd->add_flag("--json", json);

  auto* functor = app.add_subcommand("functor-check", "compare against the matrix functor");
  functor->add_option("--lie", lie, "so:N or sp:N")->required();
  functor->add_option("expr", expr_text)->required();
  functor->add_option("expr2", expr_text2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (normalize->parsed()) return cmd_normalize(category, omega0, u, json, expr_text);
    if (count->parsed()) return cmd_count_basis(category, omega0, u, m, s);
    if (nw->parsed()) return cmd_verify_nw(category, omega0, u, r);
    if (omega_cmd->parsed()) return cmd_check_omega(u, depth);
    if (lie_cmd->parsed()) return cmd_lie_params(g, q, c, which, json);
    if (functor->parsed()) return cmd_functor_check(lie, expr_text, expr_text2);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ArityError& e) {
    std::cerr << "arity error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
