#include "so3radon/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>

#include "so3radon/quadrature.hpp"
#include "so3radon/radon.hpp"
#include "so3radon/random.hpp"
#include "so3radon/sphere3.hpp"

namespace so3radon {

namespace {

class Suite {
 public:
  Suite(std::string name, VerifyReport& report) : name_(std::move(name)), report_(report) {}
  void check(const std::string& what, double measured, double tolerance) {
    report_.checks.push_back({name_, what, measured, tolerance, measured <= tolerance});
  }

 private:
  std::string name_;
  VerifyReport& report_;
};

double max_over(int n, const std::function<double(int)>& f) {
  double m = 0.0;
  for (int i = 0; i < n; ++i) m = std::max(m, f(i));
  return m;
}

void harmonics_suite(Suite& s, Rng& rng) {
  const int K = 8;
  s.check("addition theorem", max_over(100, [&](int) {
            const Vec3 x = random_unit_vector(rng), y = random_unit_vector(rng);
            const auto a = sph_harm_table(K, x), b = sph_harm_table(K, y);
            double e = 0.0;
            for (int k = 0; k <= K; ++k) {
              Complex sum = 0.0;
              for (int m = -k; m <= k; ++m) sum += a[harm_slot(k, m)] * std::conj(b[harm_slot(k, m)]);
              e = std::max(e, std::abs(sum - (2.0 * k + 1.0) / kFourPi * legendre(k, x.dot(y))));
            }
            return e;
          }),
          1e-12);
  s.check("parity", max_over(100, [&](int) {
            const Vec3 x = random_unit_vector(rng);
            const auto a = sph_harm_table(K, x), b = sph_harm_table(K, -x);
            double e = 0.0;
            for (int k = 0; k <= K; ++k)
              for (int m = -k; m <= k; ++m)
                e = std::max(e, std::abs(b[harm_slot(k, m)] - (k % 2 ? -1.0 : 1.0) * a[harm_slot(k, m)]));
            return e;
          }),
          1e-12);
  {
    // h(t) = t^3 + t/2: lambda_k = 2 pi int h P_k
    const auto h = [](double t) { return t * t * t + 0.5 * t; };
    const GaussLegendre gl = gauss_legendre(8);
    const int k = 3;
    double lambda = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) lambda += kTwoPi * gl.weights[i] * h(gl.nodes[i]) * legendre(k, gl.nodes[i]);
    const SphereQuadrature q = sphere_quadrature(3 + k);
    s.check("Funk-Hecke", max_over(20, [&](int) {
              const Vec3 x = random_unit_vector(rng);
              double e = 0.0;
              for (int m = -k; m <= k; ++m) {
                Complex sum = 0.0;
                for (std::size_t a = 0; a < q.nodes.size(); ++a) sum += q.weights[a] * h(x.dot(q.nodes[a])) * sph_harm(k, m, q.nodes[a]);
                e = std::max(e, std::abs(sum - lambda * sph_harm(k, m, x)));
              }
              return e;
            }),
            1e-12);
  }
  s.check("Wigner expansion Y(gx) = T(g) Y(x)", max_over(100, [&](int) {
            const RotationMatrix g = random_rotation(rng);
            const Vec3 x = random_unit_vector(rng);
            const auto T = wigner_matrices(K, g);
            const auto a = sph_harm_table(K, g.matrix() * x), b = sph_harm_table(K, x);
            double e = 0.0;
            for (int k = 0; k <= K; ++k)
              for (int i = -k; i <= k; ++i) {
                Complex sum = 0.0;
                for (int j = -k; j <= k; ++j) sum += T[static_cast<std::size_t>(k)](i + k, j + k) * b[harm_slot(k, j)];
                e = std::max(e, std::abs(sum - a[harm_slot(k, i)]));
              }
            return e;
          }),
          1e-12);
  s.check("Wigner unitarity, K = 16", max_over(10, [&](int) {
            const auto T = wigner_matrices(16, random_rotation(rng));
            double e = 0.0;
            for (const CMatrix& t : T)
              e = std::max(e, (t * t.adjoint() - CMatrix::Identity(t.rows(), t.cols())).cwiseAbs().maxCoeff());
            return e;
          }),
          1e-12);
  {
    const SO3Spectrum f = random_spectrum(4, rng);
    const HaarQuadrature rule = haar_quadrature(4);
    s.check("Haar analysis round trip, K = 4", max_block_error(analyze_so3(synth_on_rule(f, rule), rule, 4), f), 1e-12);
  }
}

void rotations_suite(Suite& s, Rng& rng) {
  s.check("tau homomorphism", max_over(200, [&](int) {
            const UnitQuaternion q = random_unit_quaternion(rng), p = random_unit_quaternion(rng);
            return (tau(q * p).matrix() - tau(q).matrix() * tau(p).matrix()).cwiseAbs().maxCoeff();
          }),
          1e-12);
  s.check("Euler round trip", max_over(200, [&](int) {
            const EulerAngles e = random_euler(rng);
            return (euler_matrix(euler_from_quat(quat_from_euler(e))) - euler_matrix(e)).cwiseAbs().maxCoeff();
          }),
          1e-10);
  s.check("circle maps y to x", max_over(200, [&](int i) {
            const Vec3 x = random_unit_vector(rng), y = random_unit_vector(rng);
            const GreatCirclePair c = circle_from_pair(x, y);
            return (tau(circle_point(c, 0.1 * i)).matrix() * y - x).norm();
          }),
          1e-10);
  s.check("antipodal pair rejected", [&] {
    try {
      circle_from_pair(Vec3::UnitZ(), -Vec3::UnitZ());
      return 1.0;
    } catch (const AntipodalPairError&) {
      return 0.0;
    }
  }(), 0.0);
}

void radon_suite(Suite& s, Rng& rng) {
  s.check("spectral round trip, K = 8", max_over(10, [&](int) {
            const SO3Spectrum f = random_spectrum(8, rng);
            return max_block_error(radon_invert(radon_forward_spectral(f)), f);
          }),
          1e-12);
  s.check("circle integral matches 4pi/(2k+1) law, K = 4", max_over(20, [&](int) {
            const SO3Spectrum f = random_spectrum(4, rng);
            const Vec3 x = random_unit_vector(rng), y = random_unit_vector(rng);
            return std::abs(radon_forward_numeric(f, x, y, 10) - eval_pair(radon_forward_spectral(f), x, y));
          }),
          1e-10);
  s.check("X-ray kernel holds odd degrees", max_over(10, [&](int) {
            const SO3Spectrum f = random_spectrum(7, rng);
            return max_block_error(radon_invert(xray_forward(f)), even_part(f));
          }),
          1e-12);
  s.check("Friedel symmetry of X-ray data", max_over(20, [&](int) {
            const SO3Spectrum f = random_spectrum(5, rng);
            const Vec3 x = random_unit_vector(rng), y = random_unit_vector(rng);
            const PairSpectrum P = xray_forward(f);
            return std::abs(eval_pair(P, x, y) - eval_pair(P, -x, y));
          }),
          1e-12);
}

void isometry_suite(Suite& s, Rng& rng, double four_pi) {
  s.check("Sobolev isometry, K = 6", max_over(20, [&](int) {
            const SO3Spectrum f = random_spectrum(6, rng);
            const double t = 0.5;
            return std::abs(sobolev_norm_pair(radon_forward_spectral(f), t + 0.5) / four_pi - sobolev_norm_so3(f, t)) /
                   sobolev_norm_so3(f, t);
          }),
          1e-10);
  s.check("adjoint identity (1/4pi) R*R = I, K = 6", max_over(20, [&](int) {
            const SO3Spectrum f = random_spectrum(6, rng);
            SO3Spectrum g = radon_adjoint(radon_forward_spectral(f), four_pi);
            for (auto& b : g.blocks) b /= four_pi;
            return max_block_error(g, f);
          }),
          1e-10);
}

void sphere3_suite(Suite& s, Rng& rng) {
  const InversionControls c = InversionControls::for_bandwidth(2);
  SO3Spectrum one(0);
  one[0](0, 0) = 1.0;
  const LiftedFunction F1(one);
  const UnitQuaternion q0 = random_unit_quaternion(rng);
  s.check("Helgason on f = 1", std::abs(helgason_invert(circle_average_oracle(F1, c.circle_nodes), q0.q(), c).value - 1.0), 1e-10);
  s.check("Matthies on f = 1", std::abs(matthies_invert(F1, tau(q0), c).value - 1.0), 1e-10);

  SO3Spectrum f = random_spectrum(2, rng, true);
  for (auto& b : f.blocks) b *= 0.1;
  f[0](0, 0) = 1.0;
  const LiftedFunction F(f);
  double eh = 0.0, em = 0.0, r0 = 0.0, r1 = 0.0;
  for (int i = 0; i < 2; ++i) {
    const UnitQuaternion q = random_unit_quaternion(rng);
    const Complex truth = synth_so3(f, tau(q));
    eh = std::max(eh, std::abs(helgason_invert(circle_average_oracle(F, c.circle_nodes), q.q(), c).value - truth) / std::abs(truth));
    em = std::max(em, std::abs(matthies_invert(F, tau(q), c).value - truth) / std::abs(truth));
    r0 = std::max(r0, matthies_identity_r0(F, q.q(), c).error());
    r1 = std::max(r1, matthies_identity_r1(F, q.q(), kPi / 3, c).error());
  }
  s.check("Helgason inversion, K = 2 (relative)", eh, 1e-2);
  s.check("Matthies inversion, K = 2 (relative)", em, 1e-2);
  s.check("identity R0", r0, 1e-4);
  s.check("identity R1 at pi/3", r1, 1e-4);
}

void sampling_suite(Suite& s, Rng& rng) {
  const SphereLattice lat = build_lattice_s2(0.5);
  s.check("S2 lattice separation deficit", std::max(0.0, 0.25 - lat.certificate.min_separation), 0.0);
  s.check("S2 lattice covering excess", std::max(0.0, lat.certificate.covering_radius - 0.25), 0.0);
  s.check("independent recheck disagreement", recheck_s2(lat, rng()).agrees ? 0.0 : 1.0, 0.0);
  const int K = 1;
  const ProductCubature cub = cubature_weights(product_lattice(rho_for_bandwidth(K)), required_product_degree(K));
  s.check("cubature residual", cub.residual, kCubatureTolerance);
  s.check("weights positive (negated min)", -cub.min_weight(), 0.0);
  const SO3Spectrum f = random_spectrum(K, rng);
  s.check("discrete inversion, K = 1", max_block_error(discrete_invert(sample_radon(f, cub.lattice), cub, K), f), 1e-8);
  s.check("2K degree within 24 omega cut, K <= 64", max_over(64, [&](int i) {
            const int k = i + 1, D = required_product_degree(k);
            return std::max(0.0, 2.0 * D * (D + 1) - 24.0 * k * (k + 1));
          }),
          0.0);
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Json VerifyReport::to_json() const {
  Json out = Json::array();
  for (const CheckResult& c : checks)
    out.push_back({{"suite", c.suite}, {"check", c.name}, {"measured", c.measured}, {"tolerance", c.tolerance}, {"passed", c.passed}});
  return {{"passed", passed()}, {"checks", out}};
}

std::string VerifyReport::summary() const {
  std::string out;
  char line[256];
  for (const CheckResult& c : checks) {
    std::snprintf(line, sizeof line, "%-4s %-10s %-48s %.3e (tol %.1e)\n", c.passed ? "ok" : "FAIL", c.suite.c_str(),
                  c.name.c_str(), c.measured, c.tolerance);
    out += line;
  }
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; });
  out += std::to_string(checks.size() - static_cast<std::size_t>(failed)) + "/" + std::to_string(checks.size()) + " checks passed\n";
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"harmonics", "rotations", "radon", "isometry", "sphere3", "sampling"};
  return names;
}

VerifyReport run_verify(const std::vector<std::string>& suites, const SuiteOptions& options) {
  for (const std::string& s : suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw DomainError("unknown suite '" + s + "'");
  VerifyReport report;
  for (std::size_t i = 0; i < suite_names().size(); ++i) {
    const std::string& name = suite_names()[i];
    if (!suites.empty() && std::find(suites.begin(), suites.end(), name) == suites.end()) continue;
    // each suite draws from its own stream, so selections do not shift each other's samples
    Rng rng(options.seed + 7919 * i);
    Suite s(name, report);
    if (name == "harmonics") harmonics_suite(s, rng);
    if (name == "rotations") rotations_suite(s, rng);
    if (name == "radon") radon_suite(s, rng);
    if (name == "isometry") isometry_suite(s, rng, kFourPi * options.four_pi_scale);
    if (name == "sphere3") sphere3_suite(s, rng);
    if (name == "sampling") sampling_suite(s, rng);
  }
  return report;
}

}  // namespace so3radon
