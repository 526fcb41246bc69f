#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "linsyz/corpus.hpp"
#include "linsyz/io.hpp"
#include "linsyz/koszul.hpp"
#include "linsyz/linforms.hpp"
#include "linsyz/points.hpp"
#include "linsyz/verify.hpp"

using namespace linsyz;

namespace {

constexpr int kUsage = 3;

struct Globals {
  std::string field = "Fp:10007";
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  std::uint64_t budget = 10'000'000;
  std::string qlist = "5,7,11";
  std::string out;
  bool timings = false;

  RunConfig config() const {
    RunConfig c;
    c.field = Field::parse(field);
    c.seed = seed;
    c.trials = trials;
    c.budget = budget;
    c.q_list = parse_qlist(qlist);
    c.timings = timings;
    return c;
  }
};

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
  return s;
}

template <class Read>
auto read_file(const std::string& path, Read read) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read(in);
}

/// One class of ∧^pV ⊗ M_q as "c*x1^x2 (x) m3 + ...".
std::string format_class(const KoszulClass& c, int n, std::size_t mdim) {
  const ExteriorBasis eb(n, c.p);
  const VSpace v{n, false};
  std::string out;
  for (std::size_t s = 0; s < eb.size(); ++s) {
    ExtElement e = ExtElement::basis(c.value.front().field(), v, eb.subset(s));
    for (std::size_t i = 0; i < mdim; ++i) {
      const Scalar& x = c.value[s * mdim + i];
      if (x.is_zero()) continue;
      e.coords[eb.index_of(eb.subset(s))] = x;
      std::string term = format_exterior(e);
      if (c.p == 0) term = x.to_string();
      out += (out.empty() ? "" : " + ") + std::string("(") + term + ") (x) m" + std::to_string(i + 1);
    }
  }
  return out.empty() ? "0" : out;
}

int cmd_minors(std::ostream& os, const std::string& file, int k, const std::string& kind) {
  const auto m = read_file(file, read_linform_matrix);
  const MinorKind mk = kind == "symmetric" ? MinorKind::symmetric : MinorKind::exterior;
  const auto mm = minor_map(m, k, mk);
  const auto basis = image_basis(mm.matrix);
  os << "kind " << kind << " k=" << k << " a=" << m.a() << " b=" << m.b() << " n=" << m.n() << "\n";
  os << "image rank " << basis.size() << "\n";
  for (const auto& col : basis) {
    if (mk == MinorKind::exterior) {
      os << "  " << format_exterior(ExtElement{m.field(), VSpace{m.n(), false}, k, col}) << "\n";
    } else {
      os << "  " << format_symmetric(SymElement{m.field(), m.n(), k, col}) << "\n";
    }
  }
  return 0;
}

int cmd_koszul(std::ostream& os, const std::string& file, int p, int q, bool basis) {
  const auto m = read_file(file, read_graded_module);
  const auto coh = koszul_cohomology(m, p, q);
  os << "n=" << m.n() << " degrees " << m.q_min() << ".." << m.q_max() << "\n";
  os << "dim K_{" << p << "," << q << "} = " << coh.dim << "\n";
  if (basis)
    for (const auto& c : coh.basis) os << "  " << format_class(c, m.n(), m.dim(q)) << "\n";
  return 0;
}

void np_line(std::ostream& os, const PointSet& z, int p) {
  const auto np = np_check(z, p);
  os << "N_" << p << ": " << (np.holds ? "holds" : "fails");
  if (!np.holds) os << " (" << np.certificate << ")";
  os << "\n";
}

int cmd_betti(std::ostream& os, const std::string& file, const std::vector<int>& ps) {
  const auto z = read_file(file, read_pointset);
  write_betti_tsv(os, betti_table(z));
  for (int p : ps) np_line(os, z, p);
  return 0;
}

int cmd_npcheck(std::ostream& os, const std::string& file, int p) {
  const auto z = read_file(file, read_pointset);
  np_line(os, z, p);
  return 0;
}

int cmd_witness(std::ostream& os, const std::string& file, int p) {
  const auto z = read_file(file, read_pointset);
  const auto res = theorem6_witness(z, p);
  if (!res.hypothesis_size)
    os << "warning: " << z.size() << " points, the theorem needs 2r+1-p = " << (2 * z.r() + 1 - p) << "\n";
  if (res.np_holds) {
    os << "N_" << p << " holds for Z\n";
  } else if (!res.z_prime.empty()) {
    os << "witness Z' =";
    for (auto i : res.z_prime) os << " " << (i + 1);
    os << "\nsize " << res.z_prime.size() << ", dim L = " << res.l_dim << ", bound 2 dim L + 2 - p = " << (2 * res.l_dim + 2 - p)
       << "\nN_" << p << " fails for Z' in L: " << res.proof.certificate << "\n";
  }
  os << "subsets checked " << res.subsets_checked << "\n";
  os << "verdict " << to_string(res.verdict) << "\n";
  if (!res.note.empty()) os << "note " << res.note << "\n";
  return exit_code(res.verdict);
}

int cmd_rnc(std::ostream& os, const Field& f, int r, int m) {
  std::vector<std::optional<Scalar>> params;
  for (int i = 0; i < m; ++i) params.emplace_back(f.from_int(i));
  write_pointset(os, rnc_points(f, r, params));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linsyz: exterior minors, Koszul cohomology and syzygies of points"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "Fp:<p> or Q")->capture_default_str();
  app.add_option("--seed", g.seed)->capture_default_str();
  app.add_option("--trials", g.trials)->capture_default_str();
  app.add_option("--budget", g.budget, "enumeration cap")->capture_default_str();
  app.add_option("--qlist", g.qlist, "primes for dimension estimates")->capture_default_str();
  app.add_option("--out", g.out, "write the report here instead of stdout");
  app.add_flag("--timings", g.timings, "include wall-clock timings");

  std::string file, kind = "exterior", suite;
  int k = 1, p = 0, q = 0, r = 2, m = 1;
  std::vector<int> ps;
  bool basis = false;

  auto* minors = app.add_subcommand("minors", "basis of the k x k minors of a linform-matrix file");
  minors->add_option("file", file)->required();
  minors->add_option("--k", k)->required();
  minors->add_option("--kind", kind)->check(CLI::IsMember({"exterior", "symmetric"}))->capture_default_str();

  auto* koszul = app.add_subcommand("koszul", "dim K_{p,q} of a graded-module file");
  koszul->add_option("file", file)->required();
  koszul->add_option("--p", p)->required();
  koszul->add_option("--q", q)->required();
  koszul->add_flag("--basis", basis, "print a basis of cocycle representatives");

  auto* points = app.add_subcommand("points", "point sets in P^r");
  points->require_subcommand(1);
  auto* betti = points->add_subcommand("betti", "Betti table TSV and N_p lines");
  betti->add_option("file", file)->required();
  betti->add_option("--p", ps, "N_p verdicts to print");
  auto* npcheck = points->add_subcommand("npcheck", "property N_p");
  npcheck->add_option("file", file)->required();
  npcheck->add_option("--p", p)->required();
  auto* witness = points->add_subcommand("witness", "N_p witness subset for a few points");
  witness->add_option("file", file)->required();
  witness->add_option("--p", p)->required();
  auto* rnc = points->add_subcommand("rnc", "points t = 0..m-1 on the rational normal curve");
  rnc->add_option("--r", r)->required();
  rnc->add_option("--m", m)->required();

  auto* verify = app.add_subcommand("verify", "seeded verification suites");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(choices));

  auto* gen = app.add_subcommand("gen", "seeded random input files");
  gen->require_subcommand(1);
  std::size_t ga = 2, gb = 2, gcount = 5, grel = 2;
  int gn = 3, gtop = 2;
  auto* gen_lf = gen->add_subcommand("linforms", "random linform-matrix");
  gen_lf->add_option("--a", ga)->capture_default_str();
  gen_lf->add_option("--b", gb)->capture_default_str();
  gen_lf->add_option("--n", gn)->capture_default_str();
  auto* gen_mod = gen->add_subcommand("module", "random quotient of a free module by degree-1 relations");
  gen_mod->add_option("--n", gn)->capture_default_str();
  gen_mod->add_option("--g", gb, "generators")->capture_default_str();
  gen_mod->add_option("--relations", grel)->capture_default_str();
  gen_mod->add_option("--top", gtop, "highest degree")->capture_default_str();
  auto* gen_pts = gen->add_subcommand("points", "random points in P^r");
  gen_pts->add_option("--r", r)->capture_default_str();
  gen_pts->add_option("--count", gcount)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    const RunConfig cfg = g.config();
    std::ofstream file_out;
    if (!g.out.empty()) {
      file_out.open(g.out);
      if (!file_out) throw std::runtime_error("cannot write '" + g.out + "'");
    }
    std::ostream& os = g.out.empty() ? std::cout : file_out;
    const std::string command = join_args(argc, argv);

    if (*verify) {
      const auto reports = run_suites(suite == "all" ? suite_names() : std::vector<std::string>{suite}, cfg);
      write_report(os, command, cfg, reports);
      Verdict v = Verdict::pass;
      for (const auto& rep : reports) v = merge(v, rep.verdict());
      return exit_code(v);
    }
    if (*minors) return cmd_minors(os, file, k, kind);
    if (*koszul) return cmd_koszul(os, file, p, q, basis);
    if (*betti) return cmd_betti(os, file, ps);
    if (*npcheck) return cmd_npcheck(os, file, p);
    if (*witness) return cmd_witness(os, file, p);
    if (*rnc) {
      os << "# command: " << command << "\n";
      return cmd_rnc(os, cfg.field, r, m);
    }
    Rng rng(cfg.seed);
    os << "# command: " << command << "\n# config: " << config_echo(cfg) << "\n";
    if (*gen_lf) write_linform_matrix(os, random_linear_form_matrix(cfg.field, gb, ga, gn, rng));
    if (*gen_mod) write_graded_module(os, random_quotient_module(cfg.field, gn, gb, grel, gtop, rng));
    if (*gen_pts) write_pointset(os, random_points(cfg.field, r, gcount, rng));
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidModule& e) {
    std::cerr << "invalid module: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
