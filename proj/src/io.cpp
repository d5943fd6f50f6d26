#include "so3radon/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace so3radon {

namespace {

Json blocks_to_json(const BlockSpectrum& s, const char* space) {
  Json blocks = Json::array();
  for (int k = 0; k <= s.bandwidth(); ++k) {
    const CMatrix& b = s[k];
    Json re = Json::array(), im = Json::array();
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
      Json rr = Json::array(), ri = Json::array();
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        rr.push_back(b(i, j).real());
        ri.push_back(b(i, j).imag());
      }
      re.push_back(rr);
      im.push_back(ri);
    }
    blocks.push_back({{"k", k}, {"re", re}, {"im", im}});
  }
  return {{"space", space}, {"bandwidth", s.bandwidth()}, {"blocks", blocks}};
}

template <class Spectrum>
Spectrum blocks_from_json(const Json& j, const char* space) {
  try {
    if (j.at("space").get<std::string>() != space)
      throw IoError(std::string("spectrum file is not in space ") + space);
    const int K = j.at("bandwidth").get<int>();
    if (K < 0) throw IoError("negative bandwidth in spectrum file");
    Spectrum s(K);
    std::vector<char> seen(static_cast<std::size_t>(K + 1), 0);
    for (const Json& b : j.at("blocks")) {
      const int k = b.at("k").get<int>();
      if (k < 0 || k > K) throw IoError("block degree outside the bandwidth");
      const Json& re = b.at("re");
      const Json& im = b.at("im");
      const int n = 2 * k + 1;
      if (static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n)
        throw IoError("block " + std::to_string(k) + " has the wrong shape");
      for (int r = 0; r < n; ++r) {
        if (static_cast<int>(re[static_cast<std::size_t>(r)].size()) != n || static_cast<int>(im[static_cast<std::size_t>(r)].size()) != n)
          throw IoError("block " + std::to_string(k) + " has the wrong shape");
        for (int c = 0; c < n; ++c)
          s[k](r, c) = Complex(re[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>(),
                               im[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>());
      }
      seen[static_cast<std::size_t>(k)] = 1;
    }
    for (int k = 0; k <= K; ++k)
      if (!seen[static_cast<std::size_t>(k)]) throw IoError("missing block " + std::to_string(k));
    return s;
  } catch (const Json::exception& e) {
    throw IoError(std::string("malformed spectrum file: ") + e.what());
  }
}

Json points_to_json(const std::vector<Vec3>& p) {
  Json out = Json::array();
  for (const Vec3& v : p) out.push_back({v.x(), v.y(), v.z()});
  return out;
}

std::vector<Vec3> points_from_json(const Json& j) {
  std::vector<Vec3> out;
  for (const Json& v : j) {
    const Vec3 p(v.at(0).get<double>(), v.at(1).get<double>(), v.at(2).get<double>());
    if (std::abs(p.norm() - 1.0) > 1e-9) throw IoError("lattice point is not a unit vector");
    out.push_back(p);
  }
  if (out.empty()) throw IoError("lattice factor has no points");
  return out;
}

LatticeCertificate certificate_from_json(const Json& j) {
  LatticeCertificate c;
  c.rho = j.at("rho").get<double>();
  c.min_separation = j.at("min_separation").get<double>();
  c.covering_radius = j.at("covering_radius").get<double>();
  c.max_multiplicity = j.at("max_multiplicity").get<int>();
  return c;
}

double parse_double(const std::string& field) {
  double v = 0.0;
  const char* b = field.data();
  const char* e = b + field.size();
  while (b < e && *b == ' ') ++b;
  const auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e) throw IoError("bad number in CSV: '" + field + "'");
  return v;
}

}  // namespace

Json spectrum_to_json(const SO3Spectrum& f) { return blocks_to_json(f, "SO3"); }
Json spectrum_to_json(const PairSpectrum& G) { return blocks_to_json(G, "S2xS2"); }
SO3Spectrum so3_spectrum_from_json(const Json& j) { return blocks_from_json<SO3Spectrum>(j, "SO3"); }
PairSpectrum pair_spectrum_from_json(const Json& j) { return blocks_from_json<PairSpectrum>(j, "S2xS2"); }

std::string spectrum_space(const Json& j) {
  if (!j.is_object() || !j.contains("space") || !j["space"].is_string()) throw IoError("spectrum file has no space tag");
  return j["space"].get<std::string>();
}

Json rotation_to_json(const UnitQuaternion& q) { return {q.a0(), q.a1(), q.a2(), q.a3()}; }

UnitQuaternion rotation_from_json(const Json& j) {
  try {
    if (j.is_array()) {
      if (j.size() != 4) throw IoError("quaternion needs four components");
      return UnitQuaternion(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>());
    }
    if (j.contains("quaternion")) return rotation_from_json(j["quaternion"]);
    if (!j.contains("convention") || j["convention"] != "ZXZ")
      throw IoError("Euler and matrix rotations need \"convention\": \"ZXZ\"");
    if (j.contains("euler")) {
      const Json& e = j["euler"];
      if (e.size() != 3) throw IoError("Euler angles need three components");
      return quat_from_euler({e[0].get<double>(), e[1].get<double>(), e[2].get<double>()});
    }
    if (j.contains("matrix")) {
      const Json& m = j["matrix"];
      Mat3 r;
      if (m.size() != 3) throw IoError("rotation matrix needs three rows");
      for (int a = 0; a < 3; ++a) {
        if (m[static_cast<std::size_t>(a)].size() != 3) throw IoError("rotation matrix needs three columns");
        for (int b = 0; b < 3; ++b) r(a, b) = m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].get<double>();
      }
      return quat_from_matrix(RotationMatrix(r));
    }
    throw IoError("rotation object has no quaternion, euler or matrix field");
  } catch (const Json::exception& e) {
    throw IoError(std::string("malformed rotation: ") + e.what());
  }
}

Json certificate_to_json(const LatticeCertificate& c) {
  return {{"rho", c.rho},
          {"min_separation", c.min_separation},
          {"covering_radius", c.covering_radius},
          {"max_multiplicity", c.max_multiplicity},
          {"certified", c.certified()}};
}

Json lattice_to_json(const ProductLattice& lattice) {
  Json j;
  j["space"] = "S2xS2";
  j["metric"] = "max";
  j["rho"] = lattice.certificate.rho;
  j["size"] = lattice.size();
  j["certification"] = certificate_to_json(lattice.certificate);
  j["certification"]["euclidean_covering"] = lattice.euclidean_covering;
  j["factors"] = Json::array();
  for (const SphereLattice* f : {&lattice.first, &lattice.second})
    j["factors"].push_back({{"points", points_to_json(f->points)}, {"certification", certificate_to_json(f->certificate)}});
  return j;
}

Json cubature_to_json(const ProductCubature& cub) {
  Json j = lattice_to_json(cub.lattice);
  j["degree"] = cub.degree;
  j["residual"] = cub.residual;
  j["factors"][0]["weights"] = cub.first_weights;
  j["factors"][1]["weights"] = cub.second_weights;
  j["weights"] = {{"min", cub.min_weight()}, {"median", cub.median_weight()}, {"max", cub.max_weight()}};
  return j;
}

ProductLattice lattice_from_json(const Json& j) {
  try {
    if (j.at("space") != "S2xS2") throw IoError("lattice file is not on S2xS2");
    const Json& f = j.at("factors");
    if (f.size() != 2) throw IoError("lattice file needs two factors");
    SphereLattice a, b;
    a.points = points_from_json(f[0].at("points"));
    a.certificate = certificate_from_json(f[0].at("certification"));
    b.points = points_from_json(f[1].at("points"));
    b.certificate = certificate_from_json(f[1].at("certification"));
    return make_product(a, b, j.at("rho").get<double>());
  } catch (const Json::exception& e) {
    throw IoError(std::string("malformed lattice file: ") + e.what());
  }
}

ProductCubature cubature_from_json(const Json& j) {
  ProductCubature c;
  c.lattice = lattice_from_json(j);
  try {
    const Json& f = j.at("factors");
    if (!f[0].contains("weights") || !f[1].contains("weights") || !j.contains("degree"))
      throw IoError("lattice file carries no cubature weights");
    c.first_weights = f[0]["weights"].get<std::vector<double>>();
    c.second_weights = f[1]["weights"].get<std::vector<double>>();
    c.degree = j["degree"].get<int>();
    c.residual = j.at("residual").get<double>();
  } catch (const Json::exception& e) {
    throw IoError(std::string("malformed cubature file: ") + e.what());
  }
  if (c.first_weights.size() != c.lattice.first.points.size() || c.second_weights.size() != c.lattice.second.points.size())
    throw IoError("weight count does not match the lattice");
  for (double w : c.first_weights)
    if (!(w > 0.0)) throw IoError("cubature weights must be positive");
  for (double w : c.second_weights)
    if (!(w > 0.0)) throw IoError("cubature weights must be positive");
  return c;
}

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string samples_to_csv(const std::vector<PairSample>& rows) {
  std::string out = "x_theta,x_phi,y_theta,y_phi,value,value_im\n";
  for (const PairSample& r : rows) {
    const SphericalCoords x = to_spherical(r.x), y = to_spherical(r.y);
    for (double v : {x.theta, x.phi, y.theta, y.phi, r.value.real()}) out += format_double(v) + ",";
    out += format_double(r.value.imag()) + "\n";
  }
  return out;
}

std::vector<PairSample> samples_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("x_theta,x_phi,y_theta,y_phi,value", 0) != 0)
    throw IoError("sample file needs the header x_theta,x_phi,y_theta,y_phi,value");
  std::vector<PairSample> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (line.back() == '\r') line.pop_back();
    std::vector<double> f;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      f.push_back(parse_double(line.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (f.size() != 5 && f.size() != 6) throw IoError("sample row needs five or six columns");
    rows.push_back({from_spherical(f[0], f[1]), from_spherical(f[2], f[3]), Complex(f[4], f.size() == 6 ? f[5] : 0.0)});
  }
  return rows;
}

std::vector<PairSample> lattice_samples(const ProductLattice& lattice, const std::vector<Complex>& values) {
  if (values.size() != lattice.size()) throw DomainError("sample count does not match the lattice");
  std::vector<PairSample> rows(values.size());
  for (std::size_t nu = 0; nu < values.size(); ++nu) rows[nu] = {lattice.x(nu), lattice.y(nu), values[nu]};
  return rows;
}

std::vector<Complex> match_samples(const std::vector<PairSample>& rows, const ProductLattice& lattice) {
  if (rows.size() != lattice.size())
    throw DomainError("sample file has " + std::to_string(rows.size()) + " rows, lattice has " +
                      std::to_string(lattice.size()) + " nodes");
  std::vector<Complex> v(rows.size());
  for (std::size_t nu = 0; nu < rows.size(); ++nu) {
    if ((rows[nu].x - lattice.x(nu)).norm() > 1e-9 || (rows[nu].y - lattice.y(nu)).norm() > 1e-9)
      throw DomainError("sample row " + std::to_string(nu + 1) + " is not at its lattice node");
    v[nu] = rows[nu].value;
  }
  return v;
}

std::string matthies_to_csv(const std::vector<MatthiesRow>& rows) {
  std::string out = "a0,a1,a2,a3,f_true,f_matthies,f_helgason,est_error\n";
  for (const MatthiesRow& r : rows) {
    for (double v : r.g.array()) out += format_double(v) + ",";
    out += format_double(r.f_true) + "," + format_double(r.f_matthies) + "," + format_double(r.f_helgason) + "," +
           format_double(r.estimated_error) + "\n";
  }
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write " + path);
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const Json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const Json& j) { write_text(path, j.dump(1) + "\n"); }

}  // namespace so3radon
