#include "fintriple/json_io.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

namespace fintriple {

namespace {

std::string field_name(FieldKind f) {
  switch (f) {
    case FieldKind::Real: return "R";
    case FieldKind::Complex: return "C";
    case FieldKind::Quaternion: return "H";
  }
  return "C";
}

FieldKind field_from(const std::string& s) {
  if (s == "R") return FieldKind::Real;
  if (s == "C") return FieldKind::Complex;
  if (s == "H") return FieldKind::Quaternion;
  throw Error(ErrorCode::FieldBaseMismatch, "unknown field " + s);
}

}  // namespace

Json to_json(const AlgebraSpec& spec) {
  Json j;
  j["base"] = spec.base() == BaseField::Complex ? "C" : "R";
  j["summands"] = Json::array();
  for (const auto& s : spec.summands())
    j["summands"].push_back({{"n", s.n}, {"field", field_name(s.field)}});
  return j;
}

AlgebraSpec algebra_from_json(const Json& j) {
  const std::string base = j.at("base").get<std::string>();
  if (base != "C" && base != "R")
    throw Error(ErrorCode::FieldBaseMismatch, "base must be C or R");
  std::vector<Summand> summands;
  for (const auto& s : j.at("summands"))
    summands.push_back(
        {s.at("n").get<int>(), field_from(s.at("field").get<std::string>())});
  return make_algebra(base == "C" ? BaseField::Complex : BaseField::Real,
                      std::move(summands));
}

Json to_json(const IMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

IMatrix imatrix_from_json(const Json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows > 0 ? static_cast<int>(j.at(0).size()) : 0;
  IMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j.at(r).size()) != cols)
      throw Error(ErrorCode::SizeMismatch, "ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<int>();
  }
  return m;
}

Json to_json(const TripleSpace& space) {
  Json j;
  j["algebra"] = to_json(space.algebra());
  j["q"] = to_json(space.q());
  return j;
}

TripleSpace triple_from_json(const Json& j) {
  return TripleSpace::build(algebra_from_json(j.at("algebra")),
                            imatrix_from_json(j.at("q")));
}

Json to_json(const FiniteGroup& group) {
  Json j;
  j["elements"] = group.names();
  Json table = Json::array();
  for (const auto& row : group.table()) table.push_back(row);
  j["table"] = table;
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  return FiniteGroup::make(
      j.at("elements").get<std::vector<std::string>>(),
      j.at("table").get<std::vector<std::vector<int>>>());
}

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

CMatrix cmatrix_from_json(const Json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows > 0 ? static_cast<int>(j.at(0).size()) : 0;
  CMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const auto& e = j.at(r).at(c);
      m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  return m;
}

Json dirac_params_to_json(const std::vector<CMatrix>& params) {
  Json j;
  j["params"] = Json::array();
  for (const auto& t : params) j["params"].push_back(to_json(t));
  return j;
}

std::vector<CMatrix> dirac_params_from_json(const Json& j) {
  std::vector<CMatrix> params;
  for (const auto& t : j.at("params")) params.push_back(cmatrix_from_json(t));
  return params;
}

Json fixture_to_json(const Fixture& f) {
  Json j;
  j["name"] = f.name;
  j["description"] = f.description;
  if (f.algebra) j["algebra"] = to_json(*f.algebra);
  if (f.q) j["q"] = to_json(*f.q);
  if (!f.dirac_params.empty())
    j["dirac_params"] = dirac_params_to_json(f.dirac_params)["params"];
  if (f.group) j["group"] = to_json(*f.group);
  if (!f.reps.empty()) {
    Json reps = Json::array();
    for (const auto& rep : f.reps) {
      Json r;
      r["dim"] = rep.dim;
      r["matrices"] = Json::array();
      for (const auto& m : rep.mats) r["matrices"].push_back(to_json(m));
      reps.push_back(r);
    }
    j["irreps"] = reps;
  }
  if (!f.iso.empty()) {
    Json iso = Json::array();
    for (const auto& e : f.iso) {
      Json blocks = Json::array();
      for (int b = 0; b < e.num_blocks(); ++b) blocks.push_back(to_json(e.block(b)));
      iso.push_back(blocks);
    }
    j["iso"] = iso;
  }
  return j;
}

std::string input_digest(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0') << std::setw(16) << hash;
  return out.str();
}

}  // namespace fintriple
