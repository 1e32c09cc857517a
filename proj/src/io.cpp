#include "adjalg/io.hpp"

#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>

namespace adjalg {

namespace {

Rat parse_rat(const std::string& s, const char* where) {
  static const std::regex form(R"(^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$)");
  std::smatch m;
  if (!std::regex_match(s, m, form))
    throw InputError(std::string(where) + ": not a rational: \"" + s + "\"");
  Rat num(m[1].str());
  Rat den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw InputError(std::string(where) + ": zero denominator in \"" + s + "\"");
  Rat r = num / den;
  r.canonicalize();
  return r;
}

std::string rat_part(const Json& j, const char* where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError(std::string(where) + ": rational parts must be strings or integers");
}

Cyc scalar_from_string(const std::string& s) {
  static const std::regex zform(
      R"(^\s*(?:([+-]?\d+(?:\s*/\s*\d+)?)\s*\*\s*|(-)\s*)?zeta\(\s*(\d+)\s*,\s*([+-]?\d+)\s*\)\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, zform)) {
    int n = std::stoi(m[3].str());
    if (n <= 0) throw InputError("scalar: zeta order must be positive in \"" + s + "\"");
    long k = std::stol(m[4].str());
    Cyc z = Cyc::root_of_unity(n, k);
    if (m[1].matched) return Cyc(parse_rat(m[1].str(), "scalar")) * z;
    if (m[2].matched) return -z;
    return z;
  }
  return Cyc(parse_rat(s, "scalar"));
}

int checked_dim(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw InputError(std::string("missing integer field \"") + key + "\"");
  int d = j[key].get<int>();
  if (d <= 0) throw InputError(std::string("field \"") + key + "\" must be positive");
  return d;
}

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return j[key];
}

std::vector<std::string> label_list(const Json& j, const char* key) {
  const Json& arr = field(j, key);
  if (!arr.is_array())
    throw InputError(std::string("field \"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const Json& e : arr) {
    if (!e.is_string())
      throw InputError(std::string("field \"") + key + "\" must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

/* two-sided unit of an algebra given by its structure tensor */
Vec solve_unit(const Mat& mult, int d) {
  Mat sys = zeros(d * d, d);
  Vec rhs = Vec::Constant(d * d, Cyc(0));
  for (int j = 0; j < d; ++j)
    for (int r = 0; r < d; ++r) {
      for (int i = 0; i < d; ++i) sys(pidx(j, r, d), i) = mult(r, pidx(i, j, d));
      rhs(pidx(j, r, d)) = (r == j) ? Cyc(1) : Cyc(0);
    }
  std::optional<Vec> u = solve(sys, rhs);
  if (!u) throw CheckError("algebra file: no left unit exists");
  for (int j = 0; j < d; ++j) {
    Vec e = Vec::Constant(d, Cyc(0));
    for (int r = 0; r < d; ++r)
      for (int i = 0; i < d; ++i) e(r) += mult(r, pidx(j, i, d)) * (*u)(i);
    for (int r = 0; r < d; ++r)
      if (e(r) != ((r == j) ? Cyc(1) : Cyc(0)))
        throw CheckError("algebra file: the left unit is not a right unit");
  }
  return *u;
}

}  // namespace

Json scalar_to_json(const Cyc& c) {
  Cyc s = c.shrunk();
  Json coeffs = Json::array();
  for (const Rat& r : s.coeffs())
    coeffs.push_back(Json::array({r.get_num().get_str(), r.get_den().get_str()}));
  Json out;
  out["order"] = s.order();
  out["coeffs"] = coeffs;
  return out;
}

Cyc scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Cyc(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return scalar_from_string(j.get<std::string>());
  if (j.is_object()) {
    int n = checked_dim(j, "order");
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array())
      throw InputError("scalar: \"coeffs\" must be an array of pairs");
    std::vector<Rat> poly;
    for (const Json& pair : coeffs) {
      if (pair.is_array() && pair.size() == 2) {
        Rat num = parse_rat(rat_part(pair[0], "scalar"), "scalar");
        Rat den = parse_rat(rat_part(pair[1], "scalar"), "scalar");
        if (den == 0) throw InputError("scalar: zero denominator");
        Rat r = num / den;
        r.canonicalize();
        poly.push_back(r);
      } else if (pair.is_string() || pair.is_number_integer()) {
        poly.push_back(parse_rat(rat_part(pair, "scalar"), "scalar"));
      } else {
        throw InputError("scalar: each coefficient must be a [num, den] pair");
      }
    }
    return Cyc(n, poly);
  }
  throw InputError("scalar: expected object, string, or integer");
}

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw InputError("matrix: expected a nonempty array of nonempty rows");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  Mat out = zeros(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      throw InputError("matrix: ragged rows");
    for (int c = 0; c < cols; ++c) out(i, c) = scalar_from_json(j[i][c]);
  }
  return out;
}

Json matrix_to_triples(const Mat& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero())
        out.push_back(Json::array({i, j, scalar_to_json(m(i, j))}));
  return out;
}

Mat matrix_from_triples(const Json& j, int rows, int cols) {
  if (!j.is_array()) throw InputError("triples: expected an array");
  Mat out = zeros(rows, cols);
  std::vector<bool> seen(static_cast<size_t>(rows) * cols, false);
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
        !t[1].is_number_integer())
      throw InputError("triples: each entry must be [row, col, scalar]");
    int r = t[0].get<int>(), c = t[1].get<int>();
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      throw InputError("triples: index (" + std::to_string(r) + ", " +
                       std::to_string(c) + ") outside " + std::to_string(rows) +
                       " x " + std::to_string(cols));
    size_t flat = static_cast<size_t>(r) * cols + c;
    if (seen[flat])
      throw InputError("triples: duplicate entry at (" + std::to_string(r) +
                       ", " + std::to_string(c) + ")");
    seen[flat] = true;
    out(r, c) = scalar_from_json(t[2]);
  }
  return out;
}

Json vector_to_json(const Vec& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(v(i)));
  return out;
}

Vec vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("vector: expected an array");
  Vec out = Vec::Constant(static_cast<int>(j.size()), Cyc(0));
  for (int i = 0; i < out.size(); ++i) out(i) = scalar_from_json(j[i]);
  return out;
}

Json group_to_json(const FiniteGroup& g) {
  Json out;
  out["labels"] = g.labels();
  Json table = Json::array();
  for (int i = 0; i < g.order(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < g.order(); ++j) row.push_back(g.mul(i, j));
    table.push_back(row);
  }
  out["cayley"] = table;
  return out;
}

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("group: expected an object");
  if (j.contains("cayley")) {
    std::vector<std::string> labels = label_list(j, "labels");
    const Json& table = field(j, "cayley");
    if (!table.is_array() || table.size() != labels.size())
      throw InputError("group: \"cayley\" must be a square table matching \"labels\"");
    std::vector<std::vector<int>> cayley;
    for (const Json& row : table) {
      if (!row.is_array() || row.size() != labels.size())
        throw InputError("group: ragged cayley table");
      std::vector<int> r;
      for (const Json& e : row) {
        if (!e.is_number_integer()) throw InputError("group: cayley entries must be integers");
        r.push_back(e.get<int>());
      }
      cayley.push_back(r);
    }
    return FiniteGroup(labels, cayley);
  }
  if (j.contains("generators")) {
    int degree = checked_dim(j, "degree");
    const Json& gens = field(j, "generators");
    if (!gens.is_array() || gens.empty())
      throw InputError("group: \"generators\" must be a nonempty array of permutations");
    std::vector<std::vector<int>> perms;
    for (const Json& p : gens) {
      if (!p.is_array() || static_cast<int>(p.size()) != degree)
        throw InputError("group: each generator must list the images of 0..degree-1");
      std::vector<int> perm;
      for (const Json& e : p) {
        if (!e.is_number_integer()) throw InputError("group: permutation entries must be integers");
        perm.push_back(e.get<int>());
      }
      perms.push_back(perm);
    }
    return FiniteGroup::from_permutations(degree, perms);
  }
  throw InputError("group: need either \"labels\"+\"cayley\" or \"degree\"+\"generators\"");
}

Json cocycle_to_json(const TwoCocycle& psi) {
  Json out;
  Json labels = Json::array();
  for (int e : psi.subgroup()) labels.push_back(psi.group().label(e));
  out["subgroup"] = labels;
  out["values"] = matrix_to_json(psi.values());
  return out;
}

TwoCocycle cocycle_from_json(const Json& j, const FiniteGroup& g) {
  if (!j.is_object()) throw InputError("cocycle: expected an object");
  std::vector<int> elems = g.subgroup(label_list(j, "subgroup"));
  const Json& vals = field(j, "values");
  if (vals.is_string()) {
    if (vals.get<std::string>() != "trivial")
      throw InputError("cocycle: the only string form of \"values\" is \"trivial\"");
    return TwoCocycle::trivial(g, elems);
  }
  Mat m = matrix_from_json(vals);
  if (m.rows() != static_cast<int>(elems.size()) || m.cols() != m.rows())
    throw InputError("cocycle: value table size does not match the subgroup");
  return TwoCocycle(g, elems, m);
}

Json rep_to_json(const ProjectiveRep& v, const TwoCocycle& psi) {
  int order = 1;
  for (const Mat& m : v.rho)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        order = std::lcm(order, m(i, j).shrunk().order());
  Json out;
  out["field_order"] = order;
  Json mats;
  for (size_t p = 0; p < v.rho.size(); ++p)
    mats[psi.group().label(psi.subgroup()[p])] = matrix_to_json(v.rho[p]);
  out["matrices"] = mats;
  return out;
}

ProjectiveRep rep_from_json(const Json& j, const FiniteGroup& g,
                            const std::vector<int>& subgroup_elems) {
  if (!j.is_object()) throw InputError("representation: expected an object");
  const Json& mats = field(j, "matrices");
  if (!mats.is_object())
    throw InputError("representation: \"matrices\" must map labels to matrices");
  std::vector<Mat> rho;
  int dim = -1;
  for (int e : subgroup_elems) {
    const std::string& lab = g.label(e);
    if (!mats.contains(lab))
      throw InputError("representation: missing matrix for element \"" + lab + "\"");
    Mat m = matrix_from_json(mats[lab]);
    if (m.rows() != m.cols())
      throw InputError("representation: matrix for \"" + lab + "\" is not square");
    if (dim < 0) dim = static_cast<int>(m.rows());
    if (m.rows() != dim)
      throw InputError("representation: matrix sizes disagree at \"" + lab + "\"");
    rho.push_back(m);
  }
  return ProjectiveRep{rho};
}

Json hopf_to_json(const HopfData& h) {
  Json out;
  out["dim"] = h.dim;
  out["labels"] = h.labels;
  out["mult"] = matrix_to_triples(h.mult);
  out["unit"] = vector_to_json(h.unit);
  out["comult"] = matrix_to_triples(h.comult);
  Json counit = Json::array();
  for (int i = 0; i < h.dim; ++i) counit.push_back(scalar_to_json(h.counit(0, i)));
  out["counit"] = counit;
  out["antipode"] = matrix_to_json(h.antipode);
  return out;
}

HopfData hopf_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("hopf: expected an object");
  HopfData h;
  h.dim = checked_dim(j, "dim");
  h.labels = label_list(j, "labels");
  if (static_cast<int>(h.labels.size()) != h.dim)
    throw InputError("hopf: \"labels\" must have exactly \"dim\" entries");
  h.mult = matrix_from_triples(field(j, "mult"), h.dim, h.dim * h.dim);
  h.comult = matrix_from_triples(field(j, "comult"), h.dim * h.dim, h.dim);
  Vec cu = vector_from_json(field(j, "counit"));
  if (cu.size() != h.dim) throw InputError("hopf: \"counit\" must have \"dim\" entries");
  h.counit = cu.transpose();
  h.antipode = matrix_from_json(field(j, "antipode"));
  if (h.antipode.rows() != h.dim || h.antipode.cols() != h.dim)
    throw InputError("hopf: \"antipode\" must be dim x dim");
  std::optional<Mat> sinv = inverse(h.antipode);
  if (!sinv) throw CheckError("hopf file: the antipode is singular");
  h.antipode_inv = *sinv;
  h.unit = j.contains("unit") ? vector_from_json(j["unit"]) : solve_unit(h.mult, h.dim);
  if (h.unit.size() != h.dim) throw InputError("hopf: \"unit\" must have \"dim\" entries");
  return h;
}

Json comodule_algebra_to_json(const ComoduleAlgebra& k) {
  Json out;
  out["dim"] = k.dim;
  out["labels"] = k.labels;
  out["mult"] = matrix_to_triples(k.mult);
  out["unit"] = vector_to_json(k.unit);
  out["coaction"] = matrix_to_triples(k.coact);
  return out;
}

ComoduleAlgebra comodule_algebra_from_json(const Json& j, const HopfData& h) {
  if (!j.is_object()) throw InputError("comodule algebra: expected an object");
  ComoduleAlgebra k;
  k.hopf = &h;
  k.dim = checked_dim(j, "dim");
  k.labels = label_list(j, "labels");
  if (static_cast<int>(k.labels.size()) != k.dim)
    throw InputError("comodule algebra: \"labels\" must have exactly \"dim\" entries");
  k.mult = matrix_from_triples(field(j, "mult"), k.dim, k.dim * k.dim);
  k.coact = matrix_from_triples(field(j, "coaction"), h.dim * k.dim, k.dim);
  k.unit = j.contains("unit") ? vector_from_json(j["unit"]) : solve_unit(k.mult, k.dim);
  if (k.unit.size() != k.dim)
    throw InputError("comodule algebra: \"unit\" must have \"dim\" entries");
  return k;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw InputError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out.is_open()) throw InputError("cannot open file for writing: " + path);
  out << dump_canonical(j);
  if (!out.good()) throw InputError("failed writing file: " + path);
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace adjalg
