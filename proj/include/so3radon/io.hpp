#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "so3radon/harmonics.hpp"
#include "so3radon/rotations.hpp"
#include "so3radon/sampling.hpp"

namespace so3radon {

using Json = nlohmann::json;

// {"space": "SO3" | "S2xS2", "bandwidth": K, "blocks": [{"k", "re", "im"}]}; re[i-1][j-1] holds entry (i, j).
Json spectrum_to_json(const SO3Spectrum& f);
Json spectrum_to_json(const PairSpectrum& G);
SO3Spectrum so3_spectrum_from_json(const Json& j);
PairSpectrum pair_spectrum_from_json(const Json& j);
std::string spectrum_space(const Json& j);

// Quaternion [a0, a1, a2, a3] out; on input also {"convention": "ZXZ", "euler": [alpha, beta, gamma]}
// and {"convention": "ZXZ", "matrix": [[...], [...], [...]]}.
Json rotation_to_json(const UnitQuaternion& q);
UnitQuaternion rotation_from_json(const Json& j);

Json certificate_to_json(const LatticeCertificate& c);
Json lattice_to_json(const ProductLattice& lattice);
Json cubature_to_json(const ProductCubature& cub);
ProductLattice lattice_from_json(const Json& j);
// Throws IoError when the file carries no weights.
ProductCubature cubature_from_json(const Json& j);

struct PairSample {
  Vec3 x;
  Vec3 y;
  Complex value;
};

// Columns x_theta, x_phi, y_theta, y_phi, value, value_im.
std::string samples_to_csv(const std::vector<PairSample>& rows);
std::vector<PairSample> samples_from_csv(const std::string& text);
std::vector<PairSample> lattice_samples(const ProductLattice& lattice, const std::vector<Complex>& values);
// Values in lattice order; throws DomainError when a row is not at its node.
std::vector<Complex> match_samples(const std::vector<PairSample>& rows, const ProductLattice& lattice);

struct MatthiesRow {
  UnitQuaternion g;
  double f_true;
  double f_matthies;
  double f_helgason;
  double estimated_error;
};
std::string matthies_to_csv(const std::vector<MatthiesRow>& rows);

std::string format_double(double v);

// Whole-file helpers; failures raise IoError.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);
Json read_json(const std::string& path);
void write_json(const std::string& path, const Json& j);

}  // namespace so3radon
