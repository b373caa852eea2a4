#pragma once

// JSON documents for complexes, subdivisions, polynomials and verdicts.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "flagsub/complex.hpp"
#include "flagsub/enumeration.hpp"
#include "flagsub/error.hpp"
#include "flagsub/homology.hpp"
#include "flagsub/polynomial.hpp"
#include "flagsub/subdivision.hpp"

namespace flagsub::io {

using json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
inline json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error(Errc::InvalidArgument, "expected an integer, got " + j.dump());
}

inline json to_json(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

inline IntPolynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::InvalidArgument, "polynomial must be an integer array");
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.push_back(bigint_from_json(c));
  return IntPolynomial(std::move(coeffs));
}

inline json to_json(const GammaVector& g) {
  json gammas = json::array();
  for (const auto& c : g.gammas) gammas.push_back(to_json(c));
  return json{{"d", g.d}, {"gamma", gammas}};
}

inline json face_json(const SimplicialComplex& k, Face f) { return k.names(f); }

inline json to_json(const SimplicialComplex& k) {
  json facets = json::array();
  for (Face f : k.facets()) facets.push_back(face_json(k, f));
  return json{{"labels", k.labels()}, {"facets", facets}};
}

inline SimplicialComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("labels") || !j.contains("facets"))
    throw Error(Errc::InvalidArgument, "complex document needs \"labels\" and \"facets\"");
  try {
    return SimplicialComplex::from_facets(j.at("labels").get<std::vector<std::string>>(),
                                          j.at("facets").get<std::vector<NameSet>>());
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed complex document: ") + e.what());
  }
}

/// Upper bound on the number of faces a complex document expands to.
inline double face_count_bound(const json& j) {
  double total = 0;
  if (j.is_object() && j.contains("facets") && j.at("facets").is_array())
    for (const auto& f : j.at("facets")) total += std::ldexp(1.0, static_cast<int>(f.size()));
  return total;
}

inline json to_json(const SubdivisionMap& s) {
  json carrier = json::object();
  const auto& fs = s.total().faces();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].empty()) continue;
    carrier[s.total().key(fs[i])] = face_json(s.base(), s.carriers()[i]);
  }
  return json{{"base", to_json(s.base())}, {"total", to_json(s.total())}, {"carrier", carrier}};
}

inline NameSet split_key(const std::string& key) {
  NameSet out;
  std::size_t start = 0;
  while (start <= key.size()) {
    std::size_t comma = key.find(',', start);
    if (comma == std::string::npos) comma = key.size();
    if (comma > start) out.push_back(key.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

inline SubdivisionMap subdivision_from_json(const json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("total") || !j.contains("carrier"))
    throw Error(Errc::InvalidArgument, "subdivision document needs \"base\", \"total\" and \"carrier\"");
  SimplicialComplex base = complex_from_json(j.at("base"));
  SimplicialComplex total = complex_from_json(j.at("total"));
  std::unordered_map<Face, Face, FaceHash> carrier;
  for (const auto& [key, value] : j.at("carrier").items()) {
    const Face e = total.face_of(split_key(key));
    carrier[e] = base.face_of(value.get<NameSet>());
  }
  return SubdivisionMap(total, base, [&](Face e) {
    if (e.empty()) return Face{};
    auto it = carrier.find(e);
    if (it == carrier.end()) throw Error(Errc::InvalidCarrier, "no carrier given for {" + total.key(e) + "}");
    return it->second;
  });
}

inline json to_json(const BettiVector& b) {
  json out = json::object();
  for (int i = -1; i <= b.top_index(); ++i) out[std::to_string(i)] = b.at(i);
  return out;
}

inline json to_json(const HomologyClass& c) {
  json bfacets = json::array();
  if (c.boundary)
    for (Face f : c.boundary->facets()) bfacets.push_back(face_json(*c.boundary, f));
  json out{{"verdict", to_string(c.verdict)},
           {"dimension", c.dimension},
           {"boundary_facets", bfacets},
           {"betti", to_json(c.betti)}};
  if (!c.reason.empty()) out["reason"] = c.reason;
  return out;
}

inline json to_json(const SubdivisionVerdict& v) {
  json failures = json::array();
  for (const auto& f : v.failures) failures.push_back(json{{"face", f.face}, {"reason", f.reason}});
  return json{{"is_homology_subdivision", v.is_homology_subdivision},
              {"is_quasi_geometric", v.is_quasi_geometric},
              {"is_vertex_induced", v.is_vertex_induced},
              {"is_flag_subdivision", v.is_flag_subdivision},
              {"homology_checked", v.homology_checked},
              {"failures", failures}};
}

inline json to_json(const InteriorStats& s) {
  return json{{"f0_interior", s.f0_interior}, {"f1_interior", s.f1_interior}, {"f0_codim1_relint", s.f0_codim1_relint}};
}

}  // namespace flagsub::io
