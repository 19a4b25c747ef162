#include "hf/json_io.hpp"

#include <json.hpp>

namespace hf {

namespace {

using Json = nlohmann::ordered_json;

Json functional_to_json(const SparseVec& v) {
  Json arr = Json::array();
  for (const auto& [i, c] : v.entries()) arr.push_back(Json::array({i, c.str()}));
  return arr;
}

Json column_to_json(const SparseVec& v) { return functional_to_json(v); }

Json pair_column_to_json(const SparseVec& v, Index dim_second) {
  Json arr = Json::array();
  for (const auto& [t, c] : v.entries()) {
    auto [j, k] = tensor_split(t, dim_second);
    arr.push_back(Json::array({j, k, c.str()}));
  }
  return arr;
}

Scalar parse_scalar(const Json& j) {
  if (!j.is_string()) throw Error("hopf json: scalar must be a string");
  auto s = Scalar::parse(j.get<std::string>());
  if (!s) throw Error("hopf json: malformed scalar '" + j.get<std::string>() + "'");
  return *s;
}

Index checked_index(const Json& j, Index dim, const char* what) {
  if (!j.is_number_integer()) throw Error(std::string("hopf json: ") + what + " must be integers");
  long long v = j.get<long long>();
  if (v < 0 || v >= dim) throw Error(std::string("hopf json: ") + what + " out of range");
  return static_cast<Index>(v);
}

SparseVec functional_from_json(const Json& arr, Index dim) {
  if (!arr.is_array()) throw Error("hopf json: expected an array of [index, scalar] pairs");
  SparseVec v(dim);
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2) throw Error("hopf json: expected [index, scalar]");
    v.add(checked_index(e[0], dim, "indices"), parse_scalar(e[1]));
  }
  return v;
}

}  // namespace

std::string hopf_to_json(const HopfAlgebra& h) {
  const Index d = h.dim();
  Json out;
  out["format"] = "hopf-forge/v1";
  out["dim"] = d;
  out["basis"] = h.alg.labels;
  out["unit"] = functional_to_json(h.alg.unit);
  out["counit"] = functional_to_json(h.counit);
  Json mult = Json::array();
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const SparseVec& p = h.alg.mul_basis(i, j);
      if (!p.is_zero()) mult.push_back(Json::array({i, j, column_to_json(p)}));
    }
  out["mult"] = std::move(mult);
  Json comult = Json::array();
  for (Index i = 0; i < d; ++i)
    if (!h.comult.column(i).is_zero())
      comult.push_back(Json::array({i, pair_column_to_json(h.comult.column(i), d)}));
  out["comult"] = std::move(comult);
  Json star = Json::array();
  for (Index i = 0; i < d; ++i)
    if (!h.alg.star.column(i).is_zero())
      star.push_back(Json::array({i, column_to_json(h.alg.star.column(i))}));
  out["star"] = std::move(star);
  Json antipode = Json::array();
  for (Index i = 0; i < d; ++i)
    if (!h.antipode.column(i).is_zero())
      antipode.push_back(Json::array({i, column_to_json(h.antipode.column(i))}));
  out["antipode"] = std::move(antipode);
  return out.dump() + "\n";
}

HopfAlgebra hopf_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("hopf json: parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("format") || j["format"] != "hopf-forge/v1")
    throw Error("hopf json: missing or unsupported format tag");
  for (const char* key : {"dim", "basis", "unit", "counit", "mult", "comult", "star", "antipode"})
    if (!j.contains(key)) throw Error(std::string("hopf json: missing field '") + key + "'");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
    throw Error("hopf json: dim must be a positive integer");
  const Index d = j["dim"].get<Index>();

  HopfAlgebra h;
  h.alg.dim = d;
  if (!j["basis"].is_array() || static_cast<Index>(j["basis"].size()) != d)
    throw Error("hopf json: basis must list exactly dim labels");
  for (const auto& l : j["basis"]) {
    if (!l.is_string()) throw Error("hopf json: basis labels must be strings");
    h.alg.labels.push_back(l.get<std::string>());
  }
  h.alg.unit = functional_from_json(j["unit"], d);
  h.counit = functional_from_json(j["counit"], d);

  h.alg.mult.assign(d * d, SparseVec(d));
  for (const auto& e : j["mult"]) {
    if (!e.is_array() || e.size() != 3) throw Error("hopf json: mult rows are [i, j, entries]");
    Index i = checked_index(e[0], d, "mult indices");
    Index jj = checked_index(e[1], d, "mult indices");
    h.alg.mult[i * d + jj] = functional_from_json(e[2], d);
  }
  h.comult = SparseMatrix(d * d, d);
  for (const auto& e : j["comult"]) {
    if (!e.is_array() || e.size() != 2) throw Error("hopf json: comult rows are [i, entries]");
    Index i = checked_index(e[0], d, "comult indices");
    SparseVec col(d * d);
    for (const auto& t : e[1]) {
      if (!t.is_array() || t.size() != 3)
        throw Error("hopf json: comult entries are [j, k, scalar]");
      col.add(tensor_index(checked_index(t[0], d, "comult indices"),
                           checked_index(t[1], d, "comult indices"), d),
              parse_scalar(t[2]));
    }
    h.comult.set_column(i, std::move(col));
  }
  h.alg.star = SparseMatrix(d, d);
  for (const auto& e : j["star"]) {
    if (!e.is_array() || e.size() != 2) throw Error("hopf json: star rows are [i, entries]");
    h.alg.star.set_column(checked_index(e[0], d, "star indices"),
                          functional_from_json(e[1], d));
  }
  h.antipode = SparseMatrix(d, d);
  for (const auto& e : j["antipode"]) {
    if (!e.is_array() || e.size() != 2) throw Error("hopf json: antipode rows are [i, entries]");
    h.antipode.set_column(checked_index(e[0], d, "antipode indices"),
                          functional_from_json(e[1], d));
  }
  return h;
}

}  // namespace hf
