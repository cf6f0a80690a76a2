// nccat: compute noncommutative Catalan objects and verify identities.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nccat/binomial.hpp"
#include "nccat/catalan.hpp"
#include "nccat/hankel.hpp"
#include "nccat/qspec.hpp"
#include "nccat/serialize.hpp"
#include "nccat/verify.hpp"

namespace {

using namespace nccat;

enum class Format { Text, Json, Latex };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  Format format = Format::Text;
  std::optional<unsigned> max_n;
  unsigned jobs = 1;
};

std::string render(const NCPoly& p, Format f) {
  switch (f) {
    case Format::Json: return to_json(p).dump();
    case Format::Latex: return to_latex(p);
    default: return to_string(p);
  }
}

std::string render(const QPoly& p, Format f) {
  if (f == Format::Json) return to_json(p).dump();
  return to_string(p);
}

nlohmann::json matrix_json(const NCMatrix& a, Format f) {
  if (f == Format::Text) return to_json(a);
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      row.push_back(f == Format::Json ? to_json(a(i, j)) : nlohmann::json(to_latex(a(i, j))));
    rows.push_back(std::move(row));
  }
  return rows;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

// ---- catalan ------------------------------------------------------------

struct CatalanArgs {
  unsigned n = 0;
  std::optional<unsigned> k;
  bool tilde = false;
  bool sigma = false;
  bool dbl = false;
};

NCPoly catalan_object(const CatalanArgs& a) {
  if (a.k) require(*a.k <= a.n, "catalan: requires k <= n");
  require(!(a.tilde && a.dbl), "catalan: --tilde and --double are exclusive");
  require(!a.tilde || a.k, "catalan: --tilde needs --k");
  require(!a.dbl || a.k, "catalan: --double needs --k");
  if (a.dbl) return dd_truncated(a.n, *a.k);
  NCPoly p;
  if (a.tilde) p = truncated_tilde(a.n, *a.k);
  else if (a.k) p = truncated(a.n, *a.k);
  else p = a.sigma ? underline_catalan(a.n) : catalan(a.n);
  if (a.sigma && (a.k || a.tilde)) p = sigma(p);
  return p;
}

// ---- special ------------------------------------------------------------

struct SpecialArgs {
  std::string map;
  std::string object = "catalan";
  unsigned n = 0;
  unsigned k = 0;
  std::string poly;
};

NCPoly named_object(const SpecialArgs& a) {
  const std::string& o = a.object;
  if (o == "poly") {
    require(!a.poly.empty(), "special: --object poly needs --poly");
    return parse_ncpoly(a.poly);
  }
  if (o == "catalan") return catalan(a.n);
  if (o == "binom-first") return binom_first(a.n, a.k);
  if (o == "binom-second") return binom_second(a.n, a.k);
  require(a.k <= a.n, "special: requires k <= n");
  if (o == "truncated") return truncated(a.n, a.k);
  return truncated_tilde(a.n, a.k);
}

std::string special(const SpecialArgs& a, Format f) {
  const NCPoly p = named_object(a);
  if (a.map == "eps") return f == Format::Json ? integer_to_json(eps(p)).dump() : eps(p).get_str();
  if (a.map == "chi-q") return render(chi_q(p), f);
  if (a.map == "sigma") return render(sigma(p), f);
  if (a.map == "pi") return render(pi(p), f);
  return render(bar(p), f);
}

// ---- hankel -------------------------------------------------------------

int hankel_cmd(unsigned m, unsigned n, const std::vector<std::string>& action, Format f) {
  const std::string& what = action.front();
  if (what == "quasidet") {
    require(action.size() == 3, "hankel: quasidet takes two indices i j");
    unsigned i = 0;
    unsigned j = 0;
    try {
      i = static_cast<unsigned>(std::stoul(action[1]));
      j = static_cast<unsigned>(std::stoul(action[2]));
    } catch (const std::exception&) {
      throw UsageError("hankel: quasidet indices must be non-negative integers");
    }
    require(m <= 1, "hankel: quasidet needs m in {0,1}");
    require(i <= j, "hankel: quasidet needs i <= j");
    std::cout << render(quasidet_bordered(m, i, j), f) << '\n';
    return 0;
  }
  require(action.size() == 1, "hankel: only quasidet takes extra arguments");
  if (what == "show") {
    std::cout << matrix_json(hankel(m, n), f).dump() << '\n';
    return 0;
  }
  if (what == "factor") {
    const NCMatrix l = gauss_L(m, n);
    const NCMatrix up = gauss_U(m, n);
    const bool ok = mat_mul(l, up) == hankel(m, n);
    nlohmann::json out = {{"L", matrix_json(l, f)}, {"U", matrix_json(up, f)}, {"LU_equals_H", ok}};
    std::cout << out.dump() << '\n';
    return ok ? 0 : 1;
  }
  require(m <= 1, "hankel: inverse needs m in {0,1}");
  std::cout << matrix_json(hankel_inverse(m, n), f).dump() << '\n';
  return 0;
}

// ---- verify -------------------------------------------------------------

int verify_cmd(const std::string& suite, const Globals& g) {
  if (suite != "all" && !find_identity(suite)) throw UsageError("verify: unknown suite id " + suite);
  const auto reports = run_suite(suite, g.max_n, g.jobs);
  bool ok = true;
  if (g.format == Format::Json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) out.push_back(to_json(r));
    std::cout << out.dump(2) << '\n';
  }
  std::size_t passed = 0;
  for (const auto& r : reports) {
    ok = ok && r.passed;
    passed += r.passed ? 1 : 0;
    if (g.format == Format::Json) continue;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << "  N=" << r.max_n << " (" << r.range << ")  cells=" << r.cells
              << "  " << static_cast<long>(r.millis + 0.5) << " ms\n";
    if (!r.passed) {
      std::cout << "  at " << (r.failing ? r.failing->to_string() : std::string("?"));
      if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
      std::cout << "\n  lhs: " << r.lhs << "\n  rhs: " << r.rhs << '\n';
    }
  }
  if (g.format != Format::Json)
    std::cout << passed << "/" << reports.size() << " identities passed\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative Catalan numbers in the group ring of a free group"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"latex", Format::Latex}};
  app.add_option("--format", g.format, "Output format")->transform(CLI::CheckedTransformer(formats));
  app.add_option("--max-n", g.max_n, "Size bound for verify (default: per identity)");
  app.add_option("--jobs", g.jobs, "Worker threads for verify")->check(CLI::Range(1u, 256u));

  CatalanArgs ca;
  auto* cat = app.add_subcommand("catalan", "C_n, C_n^k, C~_n^k and their sigma images");
  cat->add_option("--n", ca.n)->required();
  cat->add_option("--k", ca.k, "Truncation level (C_n^k)");
  cat->add_flag("--tilde", ca.tilde, "C~_n^k = C_n^k x_{n-k}^-1");
  cat->add_flag("--sigma", ca.sigma, "Apply sigma (underline C_n)");
  cat->add_flag("--double", ca.dbl, "double-underline C_n^k");

  unsigned bn = 0;
  unsigned bk = 0;
  std::string kind = "first";
  auto* bin = app.add_subcommand("binom", "Noncommutative binomial coefficients");
  bin->add_option("--n", bn)->required();
  bin->add_option("--k", bk)->required();
  bin->add_option("--kind", kind)->check(CLI::IsMember({"first", "second"}));

  unsigned hm = 0;
  unsigned hn = 0;
  std::vector<std::string> action{"show"};
  auto* han = app.add_subcommand("hankel", "Hankel matrices of C_n, their factorization and inverse");
  han->add_option("--m", hm)->required();
  han->add_option("--n", hn);
  han->add_option("--action", action, "show | factor | inverse | quasidet i j")->expected(1, 3);

  SpecialArgs sa;
  auto* spe = app.add_subcommand("special", "Apply eps, chi-q, sigma, pi or bar to an object");
  spe->add_option("--map", sa.map)->required()->check(CLI::IsMember({"eps", "chi-q", "sigma", "pi", "bar"}));
  spe->add_option("--object", sa.object)
      ->check(CLI::IsMember({"catalan", "truncated", "tilde", "binom-first", "binom-second", "poly"}));
  spe->add_option("--n", sa.n);
  spe->add_option("--k", sa.k);
  spe->add_option("--poly", sa.poly, "Polynomial text for --object poly");

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "Run the identity registry");
  ver->add_option("--suite", suite, "Identity id or 'all'");
  ver->add_flag_callback("--list", [] {
    for (const auto& d : identity_registry()) std::cout << d.id << "  " << d.reference << '\n';
    std::exit(0);
  }, "List identity ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cat) {
      std::cout << render(catalan_object(ca), g.format) << '\n';
    } else if (*bin) {
      std::cout << render(kind == "first" ? binom_first(bn, bk) : binom_second(bn, bk), g.format) << '\n';
    } else if (*han) {
      const std::string& a = action.front();
      if (a != "show" && a != "factor" && a != "inverse" && a != "quasidet")
        throw UsageError("hankel: unknown action " + a);
      return hankel_cmd(hm, hn, action, g.format);
    } else if (*spe) {
      std::cout << special(sa, g.format) << '\n';
    } else if (*ver) {
      return verify_cmd(suite, g);
    }
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 0;
}
