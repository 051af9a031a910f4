// ndga: command-line front end. Exit codes: 0 ok, 1 input error, 2 usage error.

#include "ndga/chern_simons.hpp"
#include "ndga/depth_forms.hpp"
#include "ndga/error.hpp"
#include "ndga/io.hpp"
#include "ndga/kn_flat.hpp"
#include "ndga/n_complex.hpp"
#include "ndga/riemannian.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace ndga;

namespace {

struct Options {
  std::uint64_t seed = ZeroTest{}.seed;
  int max_N = 8;

  int K = 0;
  std::string path;
  int N = 3;
  bool infinitesimal = false;
  std::vector<int> vertex;
  std::vector<int> profile;
  std::string monomial = "1";
  std::string coefficient = "1";
  int power = 1;
};

ZeroTest zero_test(const Options& o) {
  ZeroTest t;
  t.seed = o.seed;
  return t;
}

void print_flatness(std::optional<int> order, int max_N) {
  if (order)
    std::cout << *order << "-flat\n";
  else
    std::cout << "not flat up to " << max_N << "\n";
}

void cs_lagrangian(const Options& o) {
  for (const auto& line : render_lines(chern_simons_lagrangian(o.K))) std::cout << line << "\n";
}

void flatness(const Options& o) {
  const auto w = parse_connection(read_text_file(o.path));
  print_flatness(minimal_flatness(w, o.max_N, zero_test(o)), o.max_N);
}

void riemann(const Options& o) {
  const auto in = parse_metric(read_text_file(o.path));
  const Metric g(in.g, in.inverse, zero_test(o));
  const int n = g.dimension();
  const auto gamma = christoffel(g);
  bool any = false;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j; k <= n; ++k)
        if (!gamma(i, j, k).is_structurally_zero()) {
          std::cout << "Gamma^" << i << "_" << j << k << " = " << render(gamma(i, j, k)) << "\n";
          any = true;
        }
  if (!any) std::cout << "Gamma = 0\n";
  const auto R = riemann_form(g);
  if (R.is_structurally_zero()) std::cout << "R = 0\n";
  for (const auto& [idx, block] : R.components()) std::cout << "R[" << idx.str() << "] = " << block.str() << "\n";
  print_flatness(minimal_flatness(levi_civita_connection(g), o.max_N, zero_test(o)), o.max_N);
}

void knflat_expand(const Options& o) {
  const auto e = o.infinitesimal ? infinitesimal_expansion(o.N, o.K) : nabla_power_expansion(o.N, o.K);
  for (std::size_t k = 0; k < e.size(); ++k) std::cout << "c" << k << " = " << render_delta_word(e[k]) << "\n";
}

void knflat_paths(const Options& o) {
  const VertexS s(o.vertex.begin(), o.vertex.end());
  for (const auto& p : enumerate_paths(o.N, s)) {
    for (std::size_t i = 0; i < p.vertices.size(); ++i) std::cout << (i ? " -> " : "") << render_vertex(p.vertices[i]);
    std::cout << "  " << (p.weight > 0 ? "+1" : "-1") << "\n";
  }
  std::cout << "c" << render_vertex(s) << " = " << c_coefficient(s, o.N) << "\n";
}

void depth_nilpotency(const Options& o) { std::cout << minimal_nilpotency(o.profile) << "\n"; }

void depth_table(const Options& o) {
  validate_profile(o.profile);
  const std::size_t k = o.profile.size();
  std::vector<DepthIndex> gens;
  for (std::size_t s = 0; s < k; ++s)
    for (int i = 1; i < o.profile[s]; ++i) {
      DepthIndex g{std::vector<int>(k, 0)};
      g.depth[s] = i;
      gens.push_back(g);
    }
  std::size_t width = 4;
  for (const auto& g : gens) width = std::max(width, g.str().size() + 1);
  std::cout << std::setw(static_cast<int>(width)) << "";
  for (const auto& g : gens) std::cout << std::setw(static_cast<int>(width)) << g.str();
  std::cout << "\n";
  for (const auto& a : gens) {
    std::cout << std::left << std::setw(static_cast<int>(width)) << a.str() << std::right;
    for (const auto& b : gens) {
      const int s = depth_product_sign(a, b);
      std::cout << std::setw(static_cast<int>(width)) << (s > 0 ? "+" : s < 0 ? "-" : "0");
    }
    std::cout << "\n";
  }
}

void depth_d(const Options& o) {
  const auto a = DepthForm::monomial(o.profile, parse_depth_index(o.profile, o.monomial), parse(o.coefficient));
  std::cout << d_power(a, o.power).str() << "\n";
}

void ncomplex_cohomology(const Options& o) {
  const auto c = parse_complex(read_text_file(o.path));
  if (!validate(c)) throw ValidationError("d^" + std::to_string(c.order()) + " is not zero");
  std::cout << "degree p dim\n";
  for (int i = c.lo(); i <= c.hi(); ++i)
    for (int p = 1; p < c.order(); ++p) std::cout << i << " " << p << " " << p_cohomology_dim(c, p, i) << "\n";
  std::cout << "total m dim\n";
  for (int m = 2 * c.lo() - (c.order() - 1); m <= 2 * c.hi() - 1; ++m) {
    const auto t = total_cohomology_dims(c, m);
    if (t.total) std::cout << m << " " << t.total << "\n";
  }
}

void ncomplex_validate(const Options& o) {
  const auto c = parse_complex(read_text_file(o.path));
  std::cout << (validate(c) ? "valid" : "invalid") << " N=" << c.order() << " minimal order " << minimal_order(c) << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for N-differential graded algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Seed for the sampled zero test")->capture_default_str();
  app.add_option("--max-N", o.max_N, "Largest flatness order searched")->check(CLI::Range(2, 64))->capture_default_str();

  std::function<void(const Options&)> action;
  std::string tag;
  auto bind = [&](CLI::App* sub, std::function<void(const Options&)> fn) {
    sub->callback([&, sub, fn] {
      action = fn;
      tag = sub->get_parent() == &app ? sub->get_name() : sub->get_parent()->get_name();
    });
  };

  auto* cs = app.add_subcommand("cs-lagrangian", "Chern-Simons Lagrangian, one cyclic class per line");
  cs->add_option("K", o.K, "Power of the curvature, 1..6")->required()->check(CLI::Range(1, 6));
  bind(cs, cs_lagrangian);

  auto* fl = app.add_subcommand("flatness", "Minimal flatness order of a connection file");
  fl->add_option("file", o.path)->required()->check(CLI::ExistingFile);
  bind(fl, flatness);

  auto* rm = app.add_subcommand("riemann", "Christoffel symbols, curvature and flatness of a metric file");
  rm->add_option("file", o.path)->required()->check(CLI::ExistingFile);
  bind(rm, riemann);

  auto* kn = app.add_subcommand("knflat", "Expansion of (delta + w)^N");
  kn->require_subcommand(1);
  auto* ex = kn->add_subcommand("expand", "Coefficients c_k of delta^k");
  ex->add_option("--N", o.N)->required()->check(CLI::Range(1, 12));
  ex->add_option("--K", o.K)->required()->check(CLI::Range(2, 64));
  ex->add_flag("--infinitesimal", o.infinitesimal, "Keep only single-letter terms");
  bind(ex, knflat_expand);
  auto* pa = kn->add_subcommand("paths", "Weighted paths to a vertex");
  pa->add_option("--N", o.N)->required()->check(CLI::Range(1, 12));
  pa->add_option("--s", o.vertex, "Vertex entries, comma separated")->delimiter(',');
  bind(pa, knflat_paths);

  auto* df = app.add_subcommand("depth-forms", "Depth-N differential forms");
  df->add_option("--profile", o.profile, "N_1,...,N_k")->required()->delimiter(',');
  df->require_subcommand(1);
  bind(df->add_subcommand("nilpotency", "Measured minimal nilpotency order"), depth_nilpotency);
  bind(df->add_subcommand("table", "Generator multiplication sign table"), depth_table);
  auto* dd = df->add_subcommand("d", "Apply d^power to coefficient * monomial");
  dd->add_option("--monomial", o.monomial, "e.g. d2x1*dx2")->capture_default_str();
  dd->add_option("--coefficient", o.coefficient, "Scalar expression")->capture_default_str();
  dd->add_option("--power", o.power)->check(CLI::Range(1, 64))->capture_default_str();
  bind(dd, depth_d);

  auto* nc = app.add_subcommand("ncomplex", "Finite N-complexes");
  nc->require_subcommand(1);
  auto* co = nc->add_subcommand("cohomology", "Dimensions of pH^i and their totals");
  co->add_option("file", o.path)->required()->check(CLI::ExistingFile);
  bind(co, ncomplex_cohomology);
  auto* va = nc->add_subcommand("validate", "Check d^N = 0");
  va->add_option("file", o.path)->required()->check(CLI::ExistingFile);
  bind(va, ncomplex_validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    action(o);
  } catch (const Error& e) {
    std::cerr << tag << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
