#pragma once

#include "hyperfac/factorization.hpp"
#include "hyperfac/field.hpp"
#include "hyperfac/geometry.hpp"
#include "hyperfac/lattice.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hyperfac {

using json = nlohmann::json;

/// Malformed input file; the message names the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyArrangement = std::variant<Arrangement<RationalField>, Arrangement<CyclotomicField>>;
using AnySubspace = std::variant<Subspace<RationalField>, Subspace<CyclotomicField>>;

namespace io {

// ---- scalars ---------------------------------------------------------------

inline json to_json(const Rational& q) { return q.str(); }

inline json to_json(const Cyclotomic& z) {
  json arr = json::array();
  for (const auto& c : z.coefficients()) arr.push_back(c.str());
  return arr;
}

inline Rational rational_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a rational as \"p/q\" string or integer");
}

inline Rational scalar_from_json(const RationalField&, const json& j, const std::string& where) {
  return rational_from_json(j, where);
}

/// A coefficient list in the basis 1, zeta, ..., zeta^(phi(r)-1); a bare
/// rational is accepted as a constant.
inline Cyclotomic scalar_from_json(const CyclotomicField& field, const json& j, const std::string& where) {
  if (!j.is_array()) return field.from_rational(rational_from_json(j, where));
  if (j.size() != field.degree())
    throw InputError(where + ": expected " + std::to_string(field.degree()) + " coefficients for Q(zeta_" +
                     std::to_string(field.order()) + "), got " + std::to_string(j.size()));
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return field.from_coefficients(std::move(c));
}

// ---- fields ----------------------------------------------------------------

inline json to_json(const RationalField&) { return json{{"kind", "rational"}}; }
inline json to_json(const CyclotomicField& f) { return json{{"kind", "cyclotomic"}, {"r", f.order()}}; }

template <ExactField F>
json vector_json(const std::vector<typename F::Element>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

// ---- arrangements ----------------------------------------------------------

template <ExactField F>
json to_json(const Arrangement<F>& arr, const std::string& name = "") {
  json hs = json::array();
  for (const auto& h : arr.hyperplanes()) hs.push_back(vector_json<F>(h.coefficients()));
  json out{{"field", to_json(arr.field())}, {"dim", arr.dim()}, {"hyperplanes", hs}};
  if (!name.empty()) out["name"] = name;
  return out;
}

template <ExactField F>
std::vector<typename F::Element> vector_from_json(const F& field, const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of " + std::to_string(dim) + " scalars");
  if (j.size() != dim)
    throw InputError(where + ": expected " + std::to_string(dim) + " coefficients, got " + std::to_string(j.size()));
  std::vector<typename F::Element> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from_json(field, j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline std::size_t dim_from_json(const json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() < 0)
    throw InputError("dim: expected a nonnegative integer");
  return j["dim"].get<std::size_t>();
}

/// Calls fn(field) with the field named by j["field"].
template <class Fn>
auto with_field(const json& j, Fn&& fn) {
  if (!j.contains("field") || !j["field"].is_object() || !j["field"].contains("kind"))
    throw InputError("field: expected {\"kind\": \"rational\"} or {\"kind\": \"cyclotomic\", \"r\": <int>}");
  const json& f = j["field"];
  const std::string kind = f["kind"].is_string() ? f["kind"].get<std::string>() : "";
  if (kind == "rational") return fn(RationalField{});
  if (kind == "cyclotomic") {
    if (!f.contains("r") || !f["r"].is_number_integer() || f["r"].get<long>() < 1)
      throw InputError("field.r: expected a positive integer");
    return fn(CyclotomicField(f["r"].get<int>()));
  }
  throw InputError("field.kind: unknown field kind '" + kind + "'");
}

struct LoadedArrangement {
  AnyArrangement arrangement;
  std::string name;
};

inline LoadedArrangement arrangement_from_json(const json& j) {
  if (!j.is_object()) throw InputError("arrangement: expected a JSON object");
  const std::size_t dim = dim_from_json(j);
  if (!j.contains("hyperplanes") || !j["hyperplanes"].is_array()) throw InputError("hyperplanes: expected an array");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  return with_field(j, [&](auto field) -> LoadedArrangement {
    using F = decltype(field);
    std::vector<std::vector<typename F::Element>> rows;
    const json& hs = j["hyperplanes"];
    for (std::size_t i = 0; i < hs.size(); ++i)
      rows.push_back(vector_from_json(field, hs[i], dim, "hyperplanes[" + std::to_string(i) + "]"));
    try {
      return {Arrangement<F>::from_rows(field, dim, std::move(rows)), name};
    } catch (const GeometryError& e) {
      throw InputError(std::string("hyperplanes: ") + e.what());
    }
  });
}

// ---- subspaces -------------------------------------------------------------

template <ExactField F>
json to_json(const Subspace<F>& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(vector_json<F>(b));
  return json{{"field", to_json(s.field())}, {"dim", s.ambient_dim()}, {"basis", basis}};
}

inline AnySubspace subspace_from_json(const json& j) {
  if (!j.is_object()) throw InputError("subspace: expected a JSON object");
  const std::size_t dim = dim_from_json(j);
  if (!j.contains("basis") || !j["basis"].is_array()) throw InputError("basis: expected an array");
  return with_field(j, [&](auto field) -> AnySubspace {
    using F = decltype(field);
    std::vector<std::vector<typename F::Element>> rows;
    for (std::size_t i = 0; i < j["basis"].size(); ++i)
      rows.push_back(vector_from_json(field, j["basis"][i], dim, "basis[" + std::to_string(i) + "]"));
    return Subspace<F>(field, dim, std::move(rows));
  });
}

// ---- partitions and certificates --------------------------------------------

inline json to_json(const Partition& pi) {
  json arr = json::array();
  for (const auto& b : pi.blocks) arr.push_back(b);
  return arr;
}

/// Either a bare [[indices]...] list or an object with a "partition" member.
inline Partition partition_from_json(const json& j) {
  const json& p = j.is_object() && j.contains("partition") ? j["partition"] : j;
  if (!p.is_array()) throw InputError("partition: expected an array of blocks");
  Partition out;
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (!p[b].is_array()) throw InputError("partition[" + std::to_string(b) + "]: expected an array of indices");
    std::vector<int> block;
    for (std::size_t k = 0; k < p[b].size(); ++k) {
      if (!p[b][k].is_number_integer())
        throw InputError("partition[" + std::to_string(b) + "][" + std::to_string(k) + "]: expected an integer");
      block.push_back(p[b][k].get<int>());
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

inline json to_json(const Certificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back(json{{"pivot", s.pivot}, {"pivot_block", s.pivot_block}, {"bijective", s.bijective}});
  return json{{"order", c.order}, {"partition", to_json(c.partition)}, {"steps", steps}};
}

inline Certificate certificate_from_json(const json& j) {
  const json& c = j.is_object() && j.contains("certificate") ? j["certificate"] : j;
  if (!c.is_object()) throw InputError("certificate: expected a JSON object");
  for (const char* key : {"order", "partition", "steps"})
    if (!c.contains(key) || !c[key].is_array()) throw InputError(std::string("certificate.") + key + ": expected an array");
  Certificate out;
  for (std::size_t i = 0; i < c["order"].size(); ++i) {
    if (!c["order"][i].is_number_integer()) throw InputError("certificate.order[" + std::to_string(i) + "]: expected an integer");
    out.order.push_back(c["order"][i].get<int>());
  }
  out.partition = partition_from_json(c["partition"]);
  for (std::size_t i = 0; i < c["steps"].size(); ++i) {
    const json& s = c["steps"][i];
    const std::string where = "certificate.steps[" + std::to_string(i) + "]";
    if (!s.is_object() || !s.contains("pivot") || !s.contains("pivot_block") || !s.contains("bijective") ||
        !s["pivot"].is_number_integer() || !s["pivot_block"].is_number_integer() || !s["bijective"].is_boolean())
      throw InputError(where + ": expected {\"pivot\": int, \"pivot_block\": int, \"bijective\": bool}");
    out.steps.push_back(CertificateStep{s["pivot"].get<int>(), s["pivot_block"].get<int>(), s["bijective"].get<bool>()});
  }
  return out;
}

// ---- lattices --------------------------------------------------------------

inline json to_json(const IntersectionLattice& lat) {
  json flats = json::array();
  for (const auto& f : lat.flats()) flats.push_back(json{{"members", f.members.elements()}, {"rank", f.rank}});
  return json{{"flats", flats}, {"charpoly", characteristic_polynomial(lat)}};
}

// ---- files -----------------------------------------------------------------

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace io
}  // namespace hyperfac
