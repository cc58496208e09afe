#include "ubckit/complex.hpp"
#include "ubckit/errors.hpp"
#include "ubckit/finitegroup.hpp"
#include "ubckit/formats.hpp"
#include "ubckit/freegroup.hpp"
#include "ubckit/glue.hpp"
#include "ubckit/nerve.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace ubckit;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Rational rational_option(const std::string& text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const InputError& e) {
    throw InputError(what + ": " + e.what());
  }
}

void maybe_write(const std::string& out_dir, const std::string& file, const std::string& text) {
  if (!out_dir.empty()) write_text_file(fs::path(out_dir) / file, text);
}

std::string witnesses_csv(const ConstantEstimate& est) {
  std::ostringstream out;
  out << "index,boundary_norm,fill_norm,ratio\n";
  for (std::size_t i = 0; i < est.witnesses.size(); ++i) {
    const auto& w = est.witnesses[i];
    out << i << ',' << to_string(w.boundary_norm) << ',' << to_string(w.fill_norm) << ',' << to_string(w.ratio())
        << '\n';
  }
  return out.str();
}

void print_estimate(const ConstantEstimate& est) {
  std::cout << "K = " << to_string(est.value) << '\n';
  std::cout << "mode "
            << (est.mode == EstimateMode::ExactOnFiniteComplex ? "exact" : "sampled lower bound") << '\n';
  std::cout << "witnesses " << est.witnesses.size() << '\n';
  if (est.best) {
    const auto& w = est.witnesses[*est.best];
    std::cout << "best boundary:";
    for (const auto& [label, v] : w.boundary) std::cout << ' ' << label << '=' << to_string(v);
    std::cout << "\nbest |b| = " << to_string(w.boundary_norm) << ", fill = " << to_string(w.fill_norm) << '\n';
  }
}

struct UbcFlags {
  bool exact = false;
  bool sampled = false;
  bool automatic = false;
  int samples = 200;
  std::uint64_t seed = 0;

  UbcOptions options() const {
    if (exact + sampled + automatic > 1) throw InputError("choose at most one of --exact, --sampled, --auto");
    UbcOptions o;
    o.mode = sampled ? UbcMode::Sampled : automatic ? UbcMode::Auto : UbcMode::Exact;
    o.samples = samples;
    o.seed = seed;
    return o;
  }

  void attach(CLI::App* app) {
    app->add_flag("--exact", exact, "Exact vertex enumeration (default)");
    app->add_flag("--sampled", sampled, "Sampled lower bound");
    app->add_flag("--auto", automatic, "Exact when the image is small, else sampled");
    app->add_option("--samples", samples, "Sample count")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "Sampling seed");
  }
};

std::string detect_kind(const std::string& text) {
  std::istringstream in(text);
  int complexes = 0;
  for (std::string line; std::getline(in, line);) {
    std::istringstream words(line);
    std::string head;
    if (!(words >> head) || head.front() == '#') continue;
    if (head == "identify" || head == "cycle" || head == "glue:" || head == "free:") return "instance";
    if (head == "simplex" || head == "member" || head == "subspace:") return "cover";
    if (head == "complex") ++complexes;
  }
  if (complexes > 1) return "instance";
  if (complexes == 1) return "complex";
  return "chain";
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Exact filling norms, uniform boundary constants, nerves and glueing estimates"};
  app.require_subcommand(1);
  std::function<int()> action;

  // validate
  std::string v_file, v_kind = "auto";
  bool v_canonical = false;
  auto* validate = app.add_subcommand("validate", "Check a complex, cover, glueing instance or chain file");
  validate->add_option("file", v_file)->required();
  validate->add_option("--kind", v_kind)->check(CLI::IsMember({"auto", "complex", "cover", "instance", "chain"}));
  validate->add_flag("--canonical", v_canonical, "Print the canonical form instead of OK");
  validate->callback([&] {
    action = [&] {
      const std::string text = read_text_file(v_file);
      const std::string kind = v_kind == "auto" ? detect_kind(text) : v_kind;
      std::string canonical;
      if (kind == "complex") {
        const NormedComplex C = parse_complex(text);
        try {
          validate_complex(C);
        } catch (const NonComplexError& e) {
          std::cout << "NOT A COMPLEX: " << e.what() << '\n';
          return kNegative;
        }
        canonical = write_complex(C);
      } else if (kind == "cover") {
        canonical = write_cover(parse_cover(text));
      } else if (kind == "instance") {
        canonical = write_instance(parse_instance(text));
      } else {
        canonical = write_chain(parse_chain(text));
      }
      std::cout << (v_canonical ? canonical : "OK\n");
      return kOk;
    };
  });

  // fill / seminorm
  std::string f_complex, f_chain, f_out;
  int f_degree = 0;
  auto* fill = app.add_subcommand("fill", "Minimal-norm filling of a boundary");
  fill->add_option("complex", f_complex)->required();
  fill->add_option("--degree", f_degree, "Degree of the boundary")->required();
  fill->add_option("--chain", f_chain, "Chain file with the boundary")->required();
  fill->add_option("--out", f_out, "Output directory");
  fill->callback([&] {
    action = [&] {
      const NormedComplex C = parse_complex(read_text_file(f_complex));
      const SparseVec b = parse_chain(read_text_file(f_chain));
      const FillResult r = fill_norm(C, f_degree, b);
      const bool ok = verify_fill(C.into(f_degree), b, r, C.fill_norm_kind());
      std::cout << "status " << (r.optimal() ? "Optimal" : "Infeasible") << '\n';
      if (r.optimal()) std::cout << "fill_norm " << to_string(r.objective) << '\n';
      std::cout << "certificate " << (ok ? "verified" : "FAILED") << '\n';
      if (r.optimal()) maybe_write(f_out, "fill.txt", write_chain(r.solution));
      maybe_write(f_out, "certificate.txt", write_chain(r.dual_certificate));
      if (!ok) return kInternalError;
      return r.optimal() ? kOk : kNegative;
    };
  });

  std::string s_complex, s_chain;
  int s_degree = 0;
  auto* seminorm = app.add_subcommand("seminorm", "Seminorm of the homology class of a cycle");
  seminorm->add_option("complex", s_complex)->required();
  seminorm->add_option("--degree", s_degree)->required();
  seminorm->add_option("--chain", s_chain, "Chain file with the cycle")->required();
  seminorm->callback([&] {
    action = [&] {
      const NormedComplex C = parse_complex(read_text_file(s_complex));
      std::cout << "seminorm = " << to_string(homology_seminorm(C, s_degree, parse_chain(read_text_file(s_chain))))
                << '\n';
      return kOk;
    };
  });

  // ubc / uubc
  std::string u_complex, u_out;
  int u_degree = 0;
  UbcFlags u_flags;
  auto* ubc = app.add_subcommand("ubc", "Uniform boundary constant of one complex");
  ubc->add_option("complex", u_complex)->required();
  ubc->add_option("--degree", u_degree)->required();
  ubc->add_option("--out", u_out, "Output directory");
  u_flags.attach(ubc);
  ubc->callback([&] {
    action = [&] {
      const NormedComplex C = parse_complex(read_text_file(u_complex));
      const ConstantEstimate est = ubc_constant(C, u_degree, u_flags.options());
      print_estimate(est);
      maybe_write(u_out, "ubc_witnesses.csv", witnesses_csv(est));
      return kOk;
    };
  });

  std::vector<std::string> uu_complexes;
  std::string uu_out;
  int uu_degree = 0;
  UbcFlags uu_flags;
  auto* uubc = app.add_subcommand("uubc", "One constant for a family of complexes");
  uubc->add_option("complexes", uu_complexes)->required();
  uubc->add_option("--degree", uu_degree)->required();
  uubc->add_option("--out", uu_out, "Output directory");
  uu_flags.attach(uubc);
  uubc->callback([&] {
    action = [&] {
      std::vector<NormedComplex> family;
      for (const auto& f : uu_complexes) family.push_back(parse_complex(read_text_file(f)));
      const ConstantEstimate est = uubc_constant(family, uu_degree, uu_flags.options());
      print_estimate(est);
      maybe_write(uu_out, "uubc_witnesses.csv", witnesses_csv(est));
      return kOk;
    };
  });

  // nerve / check-cover / collar-bound
  std::string n_cover, n_out;
  auto* nerve = app.add_subcommand("nerve", "Nerve pair and multiplicities of a cover");
  nerve->add_option("cover", n_cover)->required();
  nerve->add_option("--out", n_out, "Output directory");
  nerve->callback([&] {
    action = [&] {
      const CoverData cover = parse_cover(read_text_file(n_cover));
      const NervePair np = nerve_pair(cover);
      std::cout << "mult " << np.mult << "\nmult_A " << np.mult_A << "\ndimension " << np.dimension()
                << "\nrelative_dimension " << np.relative_dimension() << '\n';
      std::ostringstream file;
      for (const auto& s : np.nerve.simplices()) {
        std::string names;
        for (int i : s) names += " " + np.nerve.vertices()[i];
        file << (np.relative.count(s) ? "relative" : "simplex") << names << '\n';
      }
      std::cout << file.str();
      maybe_write(n_out, "nerve.txt", file.str());
      return kOk;
    };
  });

  std::string c_cover;
  bool c_rc2 = false;
  auto* check = app.add_subcommand("check-cover", "Relative cover conditions");
  check->add_option("cover", c_cover)->required();
  check->add_flag("--rc2", c_rc2, "Assert the fundamental group condition (not checked)");
  check->callback([&] {
    action = [&] {
      const RelativeCoverReport r = check_relative_cover(parse_cover(read_text_file(c_cover)), c_rc2);
      std::cout << "rc1 " << yes_no(r.rc1) << "\nweakly_convex " << yes_no(r.weakly_convex) << "\nconvex "
                << yes_no(r.convex) << "\nrc2 " << (r.rc2_user_asserted ? "asserted" : "not asserted") << '\n';
      for (const auto& w : r.witnesses) {
        std::cout << "witness " << w.property << " members";
        for (const auto& m : w.members) std::cout << ' ' << m;
        std::cout << " component";
        for (const auto& v : w.component) std::cout << ' ' << v;
        std::cout << '\n';
      }
      return r.rc1 && r.weakly_convex ? kOk : kNegative;
    };
  });

  int cb_mult = 0, cb_boundary = 0;
  auto* collar = app.add_subcommand("collar-bound", "Multiplicity bound after adding a collar");
  collar->add_option("--mult", cb_mult)->required();
  collar->add_option("--mult-boundary", cb_boundary)->required();
  collar->callback([&] {
    action = [&] {
      std::cout << "bound = " << collar_multiplicity_bound(cb_mult, cb_boundary) << '\n';
      return kOk;
    };
  });

  // glueing
  std::string g_K = "0";
  int g_n = 0;
  std::vector<std::string> g_volumes;
  auto* gbound = app.add_subcommand("glue-bound", "Upper glueing estimate");
  gbound->add_option("--K", g_K)->required();
  gbound->add_option("--n", g_n)->required();
  gbound->add_option("--volumes", g_volumes)->required();
  gbound->callback([&] {
    action = [&] {
      std::vector<Rational> vols;
      for (const auto& v : g_volumes) vols.push_back(rational_option(v, "--volumes"));
      const Rational bound = glue_upper_bound(rational_option(g_K, "--K"), g_n, vols);
      std::cout << "bound = " << to_string(bound) << '\n';
      return kOk;
    };
  });

  std::string i_K = "0", i_volume = "0";
  int i_n = 0;
  auto* ibound = app.add_subcommand("interior-bound", "Locally finite volume of the interior");
  ibound->add_option("--K", i_K)->required();
  ibound->add_option("--n", i_n)->required();
  ibound->add_option("--relative-volume", i_volume)->required();
  ibound->callback([&] {
    action = [&] {
      const Rational bound =
          interior_bound(rational_option(i_K, "--K"), i_n, rational_option(i_volume, "--relative-volume"));
      std::cout << "bound = " << to_string(bound) << '\n';
      return kOk;
    };
  });

  std::string gc_file, gc_K = "0", gc_out;
  auto* gcycle = app.add_subcommand("glue-cycle", "Glue relative cycles along identified faces");
  gcycle->add_option("instance", gc_file)->required();
  gcycle->add_option("--K", gc_K, "Declared constant of the glue locus");
  gcycle->add_option("--out", gc_out, "Output directory");
  gcycle->callback([&] {
    action = [&] {
      const GlueingInstance inst = parse_instance(read_text_file(gc_file));
      const GlueResult r = glue_cycle(inst, rational_option(gc_K, "--K"));
      std::cout << "status " << (r.optimal() ? "Optimal" : "Infeasible") << '\n'
                << "sum |z_i| " << to_string(r.sum_cycle_norms) << '\n'
                << "|b| " << to_string(r.b_norm) << '\n'
                << "certificate " << (r.certificate_ok ? "verified" : "FAILED") << '\n'
                << "relative_cycle " << yes_no(r.relative_cycle) << '\n'
                << "boundary_chain " << yes_no(r.boundary_chain_ok) << '\n';
      if (r.optimal()) {
        std::cout << "|c| " << to_string(r.filler_norm) << '\n'
                  << "K_measured " << to_string(r.k_measured) << '\n'
                  << "measured_bound " << yes_no(r.measured_bound_ok) << '\n'
                  << "declared_bound " << yes_no(r.declared_bound_ok) << '\n';
      }
      if (r.optimal() && !inst.identifications.empty()) {
        UbcOptions o;
        o.mode = UbcMode::Auto;
        const ConstantEstimate K_N = ubc_constant(glue_locus(inst), inst.degree - 1, o);
        std::cout << "K_N " << to_string(K_N.value)
                  << (K_N.mode == EstimateMode::ExactOnFiniteComplex ? " exact" : " sampled lower bound") << '\n'
                  << "K_N_bound " << yes_no(r.within(K_N.value, inst.degree)) << '\n';
      }
      if (!r.optimal()) {
        std::cout << "farkas:";
        for (const auto& [label, v] : r.farkas) std::cout << ' ' << label << '=' << to_string(v);
        std::cout << '\n';
      }
      maybe_write(gc_out, "glued_cycle.txt", write_chain(r.z));
      maybe_write(gc_out, "glue_boundary.txt", write_chain(r.b));
      if (r.optimal()) maybe_write(gc_out, "filler.txt", write_chain(r.filler));
      else maybe_write(gc_out, "farkas.txt", write_chain(r.farkas));
      if (!r.certificate_ok) return kInternalError;
      return r.optimal() ? kOk : kNegative;
    };
  });

  // f2-experiment
  ExperimentConfig fx;
  std::string fx_out = ".";
  auto* f2 = app.add_subcommand("f2-experiment", "Filling ratios of random cycles in the free group bar complex");
  f2->add_option("--seed", fx.seed);
  f2->add_option("--rank", fx.rank);
  f2->add_option("--k", fx.k);
  f2->add_option("--l-cycle", fx.l_cycle);
  f2->add_option("--l-fill", fx.l_fill);
  f2->add_option("--trials", fx.trials);
  f2->add_option("--support", fx.support);
  f2->add_option("--threads", fx.threads);
  f2->add_option("--out", fx_out, "Output directory");
  f2->callback([&] {
    action = [&] {
      const auto records = f2_experiment(fx);
      std::ostringstream csv;
      write_experiment_csv(csv, records);
      const std::string name = "f2_seed" + std::to_string(fx.seed) + "_r" + std::to_string(fx.rank) + "_k" +
                               std::to_string(fx.k) + "_lc" + std::to_string(fx.l_cycle) + "_lf" +
                               std::to_string(fx.l_fill) + ".csv";
      write_text_file(fs::path(fx_out) / name, csv.str());
      int optimal = 0;
      bool certified = true;
      Rational max_ratio = 0;
      for (const auto& r : records) {
        certified = certified && r.certificate_ok;
        if (r.status != FillStatus::Optimal) continue;
        ++optimal;
        if (r.ratio && *r.ratio > max_ratio) max_ratio = *r.ratio;
      }
      std::cout << "trials " << records.size() << "\noptimal " << optimal << "\nmax_ratio " << to_string(max_ratio)
                << "\ncertificates " << (certified ? "verified" : "FAILED") << "\ncsv "
                << (fs::path(fx_out) / name).string() << '\n';
      return certified ? kOk : kInternalError;
    };
  });

  // shapiro
  std::string sh_group;
  std::vector<std::string> sh_gens;
  int sh_kmax = 3;
  auto* shapiro = app.add_subcommand("shapiro", "Explicit Shapiro maps for a subgroup of Z/m or S_n");
  shapiro->add_option("--group", sh_group, "Z<m> or S<n>")->required();
  shapiro->add_option("--subgroup", sh_gens, "Generators of the subgroup, by element name");
  shapiro->add_option("--k-max", sh_kmax);
  shapiro->callback([&] {
    action = [&] {
      if (sh_group.size() < 2 || (sh_group[0] != 'Z' && sh_group[0] != 'S'))
        throw InputError("group must be Z<m> or S<n>");
      int order = 0;
      try {
        order = std::stoi(sh_group.substr(1));
      } catch (const std::exception&) {
        throw InputError("bad group '" + sh_group + "'");
      }
      const FiniteGroupData G =
          sh_group[0] == 'Z' ? FiniteGroupData::cyclic(order) : FiniteGroupData::symmetric(order);
      std::vector<int> gens;
      for (const auto& g : sh_gens) gens.push_back(G.index_of(g));
      const std::vector<int> H = G.generated(gens);
      const ShapiroMaps maps = shapiro_maps(G, H, sh_kmax);
      std::cout << "|G| " << G.order() << "\n|H| " << H.size() << '\n';
      std::cout << "k,phi_norm,psi_norm,h_norm,psi_phi_id,homotopy\n";
      bool ok = maps.phi.commutes() && maps.psi.commutes();
      for (const auto& d : check_shapiro(maps, sh_kmax)) {
        std::cout << d.k << ',' << to_string(d.phi_norm) << ',' << to_string(d.psi_norm) << ','
                  << to_string(d.homotopy_norm) << ',' << yes_no(d.retraction) << ',' << yes_no(d.homotopy) << '\n';
        ok = ok && d.retraction && d.homotopy && d.phi_norm <= 1 && d.psi_norm <= 1 && d.homotopy_norm <= d.k;
      }
      std::cout << "identities and norm bounds " << (ok ? "hold" : "FAIL") << '\n';
      return ok ? kOk : kNegative;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }
  try {
    return action();
  } catch (const NonComplexError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

int main(int argc, char** argv) { return run(argc, argv); }
