// Command line front end for the so3radon library.
#include <CLI11.hpp>

#include <iostream>

#include "so3radon/io.hpp"
#include "so3radon/parallel.hpp"
#include "so3radon/quadrature.hpp"
#include "so3radon/radon.hpp"
#include "so3radon/random.hpp"
#include "so3radon/sampling.hpp"
#include "so3radon/sphere3.hpp"
#include "so3radon/verify.hpp"

using namespace so3radon;

namespace {

constexpr int kExitTolerance = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitIo = 4;

struct ToleranceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text(path, text);
}

void emit_json(const std::string& path, const Json& j) { emit(path, j.dump(1) + "\n"); }

// Pole-figure grid: x over an n x 2n colatitude/longitude grid, y fixed.
std::vector<PairSample> pole_figure(const PairSpectrum& G, const Vec3& y, int n) {
  std::vector<PairSample> rows;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < 2 * n; ++b) {
      const Vec3 x = from_spherical(kPi * (a + 0.5) / n, kPi * b / n);
      rows.push_back({x, y, eval_pair(G, x, y)});
    }
  return rows;
}

Vec3 parse_direction(const std::vector<double>& v) {
  if (v.size() != 2) throw DomainError("direction needs theta,phi");
  return from_spherical(v[0], v[1]);
}

ProductCubature load_or_build_cubature(const std::string& lattice_path, int degree) {
  const Json j = read_json(lattice_path);
  if (j.at("factors")[0].contains("weights")) {
    ProductCubature c = cubature_from_json(j);
    if (degree >= 0 && c.degree < degree)
      throw BandwidthError("lattice file weights are exact only to degree " + std::to_string(c.degree));
    return c;
  }
  return cubature_weights(lattice_from_json(j), degree);
}

Json dimension_json(const DimensionReport& d) {
  return {{"K", d.K},
          {"omega", d.omega},
          {"samples", d.samples},
          {"dim_per_sphere_degree_2K", d.per_sphere_dimension},
          {"dim_E_24omega", d.laplacian_dimension}};
}

// Stages of the pipeline command; each returns its JSON record and whether it met tolerance.
struct StageResult {
  Json record;
  bool passed;
};

StageResult stage_forward(int K, std::uint64_t seed) {
  const SO3Spectrum f = generate_odf(K, seed, false);
  const double err = max_block_error(radon_invert(radon_forward_spectral(f)), f);
  return {{{"stage", "forward"}, {"bandwidth", K}, {"max_error", err}, {"tolerance", 1e-12}}, err < 1e-12};
}

StageResult stage_xray(int K, std::uint64_t seed) {
  const SO3Spectrum f = generate_odf(K, seed, false);
  const SO3Spectrum back = radon_invert(xray_forward(f));
  const double err = max_block_error(back, even_part(f));
  const double lost = std::sqrt(l2_norm_squared(odd_part(f)));
  return {{{"stage", "xray"},
           {"bandwidth", K},
           {"odd_degrees_lost", true},
           {"odd_part_norm", lost},
           {"returned", "even part"},
           {"max_error_vs_even_part", err},
           {"tolerance", 1e-12}},
          err < 1e-12};
}

StageResult stage_discrete(int K, std::uint64_t seed, double C) {
  const double rho = rho_for_bandwidth(K, C);
  const ProductCubature cub = cubature_weights(product_lattice(rho), required_product_degree(K));
  const SO3Spectrum f = generate_odf(K, seed, false);
  const SO3Spectrum g = discrete_invert(sample_radon(f, cub.lattice), cub, K);
  const double err = max_block_error(g, f);
  const bool ok = err < 1e-8 && cub.residual < kCubatureTolerance && cub.min_weight() > 0.0;
  return {{{"stage", "discrete"},
           {"bandwidth", K},
           {"rho", rho},
           {"lattice", certificate_to_json(cub.lattice.certificate)},
           {"cubature_residual", cub.residual},
           {"min_weight", cub.min_weight()},
           {"dimensions", dimension_json(dimension_report(cub, K))},
           {"max_error", err},
           {"tolerance", 1e-8}},
          ok};
}

StageResult stage_sphere3(std::uint64_t seed) {
  const int K = 2;
  Rng rng(seed);
  SO3Spectrum f = random_spectrum(K, rng, true);
  for (auto& b : f.blocks) b *= 0.1;
  f[0](0, 0) = 1.0;
  const LiftedFunction F(f);
  const InversionControls c = InversionControls::for_bandwidth(K);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const UnitQuaternion q = random_unit_quaternion(rng);
    const Complex truth = synth_so3(f, tau(q));
    worst = std::max(worst, std::abs(matthies_invert(F, tau(q), c).value - truth) / std::abs(truth));
    worst = std::max(worst, std::abs(helgason_invert(circle_average_oracle(F, c.circle_nodes), q.q(), c).value - truth) /
                                std::abs(truth));
  }
  return {{{"stage", "sphere3"}, {"bandwidth", K}, {"max_relative_error", worst}, {"tolerance", 1e-2}}, worst < 1e-2};
}

template <class Body>
int guarded(const char* command, Body body) {
  try {
    return body();
  } catch (const IoError& e) {
    std::cerr << command << ": " << e.what() << "\n";
    return kExitIo;
  } catch (const InfeasibleCubatureError& e) {
    std::cerr << command << ": " << e.what() << " (residual " << e.residual() << ")\n";
    return kExitInfeasible;
  } catch (const CertificationError& e) {
    std::cerr << command << ": " << e.what() << " (separation " << e.separation() << ", covering " << e.covering()
              << ")\n";
    return kExitTolerance;
  } catch (const ToleranceFailure& e) {
    std::cerr << command << ": " << e.what() << "\n";
    return kExitTolerance;
  } catch (const std::exception& e) {
    std::cerr << command << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radon transform on SO(3): forward, inversion, X-ray, sampling and S^3 inversion"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: SO3RADON_THREADS or 1)")->check(CLI::NonNegativeNumber);

  int K = 4;
  std::uint64_t seed = 1;
  std::string in, out, csv, lattice_path, samples_path, truth_path;
  double tol = -1.0;

  auto* gen = app.add_subcommand("generate", "random ODF spectrum");
  bool nonneg = false;
  gen->add_option("-K,--bandwidth", K)->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed);
  gen->add_flag("--nonneg", nonneg, "square on a Haar grid so that f >= 0 (bandwidth doubles)");
  gen->add_option("-o,--out", out);

  auto* radon = app.add_subcommand("radon", "forward Radon transform of an SO3 spectrum");
  int grid = 0;
  std::vector<double> pole{0.0, 0.0};
  radon->add_option("-i,--in", in)->required();
  radon->add_option("-o,--out", out);
  radon->add_option("--csv", csv, "pole-figure CSV");
  radon->add_option("--grid", grid, "pole-figure colatitude count")->check(CLI::NonNegativeNumber);
  radon->add_option("--pole", pole, "fixed y as theta phi")->expected(2);

  auto* inv = app.add_subcommand("invert", "invert a S2xS2 spectrum");
  inv->add_option("-i,--in", in)->required();
  inv->add_option("-o,--out", out);
  inv->add_option("--truth", truth_path, "SO3 spectrum to compare against");
  inv->add_option("--tol", tol);

  auto* xray = app.add_subcommand("xray", "crystallographic X-ray transform; odd degrees are lost");
  xray->add_option("-i,--in", in)->required();
  xray->add_option("-o,--out", out);
  xray->add_option("--csv", csv);
  xray->add_option("--grid", grid)->check(CLI::NonNegativeNumber);
  xray->add_option("--pole", pole)->expected(2);

  auto* lat = app.add_subcommand("lattice", "certified product lattice on S2xS2");
  double rho = 0.5;
  lat->add_option("--rho", rho)->required();
  lat->add_option("-o,--out", out);

  auto* cub = app.add_subcommand("cubature", "positive cubature weights on a lattice");
  int degree = 0;
  cub->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);
  cub->add_option("--lattice", lattice_path);
  cub->add_option("--rho", rho, "build the lattice instead of reading one");
  cub->add_option("-o,--out", out);

  auto* smp = app.add_subcommand("sample", "Radon samples of an SO3 spectrum at lattice nodes");
  int circle_nodes = 0;
  smp->add_option("-i,--in", in)->required();
  smp->add_option("--lattice", lattice_path)->required();
  smp->add_option("--circle-nodes", circle_nodes, "use the circle integral with this many nodes");
  smp->add_option("-o,--out", out);

  auto* dinv = app.add_subcommand("discrete-invert", "reconstruct f from lattice samples");
  dinv->add_option("-K,--bandwidth", K)->required()->check(CLI::NonNegativeNumber);
  dinv->add_option("--samples", samples_path)->required();
  dinv->add_option("--lattice", lattice_path)->required();
  dinv->add_option("-o,--out", out);
  dinv->add_option("--truth", truth_path);
  dinv->add_option("--tol", tol);

  auto* mat = app.add_subcommand("matthies", "pointwise S^3 inversion of a lifted ODF");
  int count = 10;
  mat->add_option("-i,--in", in)->required();
  mat->add_option("--count", count)->check(CLI::PositiveNumber);
  mat->add_option("--seed", seed);
  mat->add_option("-o,--out", out);
  mat->add_option("--tol", tol, "relative tolerance; exit 2 when exceeded");

  auto* ver = app.add_subcommand("verify", "invariant suites");
  std::vector<std::string> suites;
  bool as_json = false;
  double tamper = 1.0;
  ver->add_option("--suite", suites)->check(CLI::IsMember(suite_names()));
  ver->add_flag("--json", as_json);
  ver->add_option("--seed", seed);
  ver->add_option("--tamper-four-pi", tamper, "test hook: scale 4 pi in the isometry suite")->group("");

  auto* pipe = app.add_subcommand("pipeline", "chained stages with a JSON report");
  std::vector<std::string> stages{"forward", "xray", "discrete", "sphere3"};
  int discrete_K = 3;
  double C = 0.7;
  pipe->add_option("--stages", stages)->delimiter(',')->check(CLI::IsMember({"forward", "xray", "discrete", "sphere3"}));
  pipe->add_option("-K,--bandwidth", K)->check(CLI::NonNegativeNumber);
  pipe->add_option("--discrete-bandwidth", discrete_K)->check(CLI::NonNegativeNumber);
  pipe->add_option("--lattice-constant", C)->check(CLI::PositiveNumber);
  pipe->add_option("--seed", seed);
  pipe->add_option("-o,--out", out);

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) set_thread_count(threads);

  if (*gen) return guarded("generate", [&] {
      emit_json(out, spectrum_to_json(generate_odf(K, seed, nonneg)));
      return 0;
    });

  if (*radon || *xray) return guarded(*radon ? "radon" : "xray", [&] {
      const SO3Spectrum f = so3_spectrum_from_json(read_json(in));
      const PairSpectrum G = *radon ? radon_forward_spectral(f) : xray_forward(f);
      if (*xray) std::cerr << "xray: odd degrees are annihilated; inversion returns the even part of f\n";
      emit_json(out, spectrum_to_json(G));
      if (!csv.empty()) emit(csv, samples_to_csv(pole_figure(G, parse_direction(pole), grid > 0 ? grid : 18)));
      return 0;
    });

  if (*inv) return guarded("invert", [&] {
      const SO3Spectrum f = radon_invert(pair_spectrum_from_json(read_json(in)));
      emit_json(out, spectrum_to_json(f));
      if (!truth_path.empty()) {
        const double err = max_block_error(f, so3_spectrum_from_json(read_json(truth_path)));
        std::cerr << "invert: max block error " << err << "\n";
        if (tol >= 0 && err > tol) throw ToleranceFailure("error above tolerance");
      }
      return 0;
    });

  if (*lat) return guarded("lattice", [&] {
      const ProductLattice L = product_lattice(rho);
      emit_json(out, lattice_to_json(L));
      return 0;
    });

  if (*cub) return guarded("cubature", [&] {
      ProductCubature c;
      if (!lattice_path.empty())
        c = cubature_weights(lattice_from_json(read_json(lattice_path)), degree);
      else
        c = cubature_weights(product_lattice(rho), degree);
      emit_json(out, cubature_to_json(c));
      return 0;
    });

  if (*smp) return guarded("sample", [&] {
      const SO3Spectrum f = so3_spectrum_from_json(read_json(in));
      const ProductLattice L = lattice_from_json(read_json(lattice_path));
      emit(out, samples_to_csv(lattice_samples(L, sample_radon(f, L, circle_nodes))));
      return 0;
    });

  if (*dinv) return guarded("discrete-invert", [&] {
      const ProductCubature c = load_or_build_cubature(lattice_path, required_product_degree(K));
      const auto values = match_samples(samples_from_csv(read_text(samples_path)), c.lattice);
      const SO3Spectrum f = discrete_invert(values, c, K);
      emit_json(out, spectrum_to_json(f));
      const DimensionReport d = dimension_report(c, K);
      std::cerr << "discrete-invert: " << d.samples << " samples, dim(per-sphere degree 2K) = " << d.per_sphere_dimension
                << ", dim E_24omega = " << d.laplacian_dimension << "\n";
      if (!truth_path.empty()) {
        const double err = max_block_error(f, so3_spectrum_from_json(read_json(truth_path)));
        std::cerr << "discrete-invert: max block error " << err << "\n";
        if (tol >= 0 && err > tol) throw ToleranceFailure("error above tolerance");
      }
      return 0;
    });

  if (*mat) return guarded("matthies", [&] {
      const SO3Spectrum f = so3_spectrum_from_json(read_json(in));
      const LiftedFunction F(f);
      const InversionControls c = InversionControls::for_bandwidth(f.bandwidth());
      Rng rng(seed);
      std::vector<MatthiesRow> rows;
      double worst = 0.0;
      for (int i = 0; i < count; ++i) {
        const UnitQuaternion q = random_unit_quaternion(rng).canonical();
        const double truth = synth_so3(f, tau(q)).real();
        const InversionResult m = matthies_invert(F, tau(q), c);
        const InversionResult h = helgason_invert(circle_average_oracle(F, c.circle_nodes), q.q(), c);
        rows.push_back({q, truth, m.value.real(), h.value.real(), std::max(m.estimated_error, h.estimated_error)});
        const double scale = std::max(std::abs(truth), 1e-300);
        worst = std::max({worst, std::abs(m.value.real() - truth) / scale, std::abs(h.value.real() - truth) / scale});
      }
      emit(out, matthies_to_csv(rows));
      std::cerr << "matthies: max relative error " << worst << "\n";
      if (tol >= 0 && worst > tol) throw ToleranceFailure("relative error above tolerance");
      return 0;
    });

  if (*ver) return guarded("verify", [&] {
      SuiteOptions o;
      o.seed = ver->count("--seed") ? seed : o.seed;
      o.four_pi_scale = tamper;
      const VerifyReport r = run_verify(suites, o);
      if (as_json)
        std::cout << r.to_json().dump(1) << "\n";
      else
        std::cout << r.summary();
      return r.passed() ? 0 : kExitTolerance;
    });

  if (*pipe) return guarded("pipeline", [&] {
      Json report = {{"seed", seed}, {"stages", Json::array()}};
      bool ok = true;
      for (const std::string& s : stages) {
        StageResult r;
        try {
          if (s == "forward") r = stage_forward(K, seed);
          if (s == "xray") r = stage_xray(K, seed);
          if (s == "discrete") r = stage_discrete(discrete_K, seed, C);
          if (s == "sphere3") r = stage_sphere3(seed);
        } catch (const std::exception&) {
          std::cerr << "pipeline: stage " << s << " failed\n";
          throw;
        }
        r.record["passed"] = r.passed;
        ok = ok && r.passed;
        report["stages"].push_back(r.record);
        std::cout << (r.passed ? "ok   " : "FAIL ") << s;
        for (const char* key : {"max_error", "max_error_vs_even_part", "max_relative_error"})
          if (r.record.contains(key)) std::cout << "  " << key << " = " << r.record[key].get<double>();
        if (s == "xray") std::cout << "  (odd degrees lost, even part returned)";
        if (s == "discrete")
          std::cout << "  samples = " << r.record["dimensions"]["samples"] << ", dim(2K) = "
                    << r.record["dimensions"]["dim_per_sphere_degree_2K"] << ", dim E_24omega = "
                    << r.record["dimensions"]["dim_E_24omega"];
        std::cout << "\n";
      }
      report["passed"] = ok;
      if (!out.empty()) emit_json(out, report);
      return ok ? 0 : kExitTolerance;
    });

  return 1;
}
