#pragma once

#include "braidcryst/bieberbach.hpp"
#include "braidcryst/group.hpp"
#include "braidcryst/int_matrix.hpp"
#include "braidcryst/invariants.hpp"
#include "braidcryst/mixed.hpp"
#include "braidcryst/verdict.hpp"

#include "json.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace braidcryst {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
inline Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

inline Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw DomainError(Errc::InvalidArgument, "expected an integer, got " + j.dump());
}

inline Json ints_to_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

inline Json coeffs_to_json(const CoeffVector& v) {
  Json rows = Json::array();
  for (int i = 1; i <= v.strands(); ++i) {
    Json row = Json::array();
    for (int r = 1; r <= v.handles(); ++r) row.push_back(int_to_json(v.at(i, r)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline CoeffVector coeffs_from_json(const Json& j, int strands, int handles) {
  if (!j.is_array() || static_cast<int>(j.size()) != strands)
    throw DomainError(Errc::InvalidArgument, "coeffs must have " + std::to_string(strands) + " rows");
  CoeffVector v(strands, handles);
  for (int i = 1; i <= strands; ++i) {
    const Json& row = j[static_cast<std::size_t>(i - 1)];
    if (!row.is_array() || static_cast<int>(row.size()) != handles)
      throw DomainError(Errc::InvalidArgument, "coeffs rows must have " + std::to_string(handles) + " entries");
    for (int r = 1; r <= handles; ++r) v.at(i, r) = int_from_json(row[static_cast<std::size_t>(r - 1)]);
  }
  return v;
}

inline Permutation perm_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError(Errc::InvalidArgument, "perm must be an array");
  std::vector<int> images;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw DomainError(Errc::InvalidArgument, "perm entries must be integers");
    images.push_back(x.get<int>());
  }
  return Permutation::from_images(std::move(images));
}

inline void check_header(const GroupDescriptor& G, const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("g") || !j.contains("perm") || !j.contains("coeffs"))
    throw DomainError(Errc::InvalidArgument, "element JSON needs n, g, perm, coeffs");
  if (j.at("n").get<int>() != G.n || j.at("g").get<int>() != G.genus)
    throw DomainError(Errc::Mismatch, "element JSON does not belong to " + G.name());
}

/// {"n":2,"g":1,"perm":[2,1],"coeffs":[[1,0],[0,0]]}
inline Json to_json(const GroupDescriptor& G, const Element& x) {
  Json j;
  j["n"] = G.n;
  j["g"] = G.genus;
  j["perm"] = x.perm.images();
  j["coeffs"] = coeffs_to_json(x.coeffs);
  return j;
}

inline Element element_from_json(const GroupDescriptor& G, const Json& j) {
  detail::require_orientable(G);
  check_header(G, j);
  Element x{coeffs_from_json(j.at("coeffs"), G.n, G.handles()), perm_from_json(j.at("perm"))};
  detail::require_member(G, x);
  return x;
}

/// Non-orientable form: coeffs is the n x (g-1) free part.
inline Json to_json(const GroupDescriptor& G, const MixedElement& x) {
  Json j;
  j["n"] = G.n;
  j["g"] = G.genus;
  j["perm"] = x.perm.images();
  Json bits = Json::array();
  for (auto b : x.torsion_bits) bits.push_back(static_cast<int>(b));
  j["torsion_bits"] = bits;
  j["coeffs"] = coeffs_to_json(x.free_part);
  return j;
}

inline MixedElement mixed_from_json(const GroupDescriptor& G, const Json& j) {
  detail::require_nonorientable(G);
  check_header(G, j);
  MixedElement x;
  x.perm = perm_from_json(j.at("perm"));
  if (!j.contains("torsion_bits") || !j.at("torsion_bits").is_array())
    throw DomainError(Errc::InvalidArgument, "non-orientable element JSON needs torsion_bits");
  for (const auto& b : j.at("torsion_bits")) x.torsion_bits.push_back(static_cast<std::uint8_t>(b.get<int>()));
  x.free_part = coeffs_from_json(j.at("coeffs"), G.n, G.genus - 1);
  detail::require_mixed_member(G, x);
  return x;
}

inline Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_rows()) rows.push_back(ints_to_json(row));
  return rows;
}

inline Json conjugacy_to_json(const GroupDescriptor& G, const std::optional<Element>& c) {
  Json j;
  j["conjugate"] = c.has_value();
  j["witness"] = c ? to_json(G, *c) : Json(nullptr);
  return j;
}

inline Json to_json(const InvariantReport& r) {
  Json j;
  j["char_poly"] = ints_to_json(r.char_poly.coeffs());
  j["det"] = int_to_json(r.det);
  j["betti"] = ints_to_json(r.betti);
  j["anosov"] = r.anosov;
  j["kahler"] = r.kahler;
  j["orientable"] = r.orientable;
  Json cyc = Json::object();
  for (const auto& [d, m] : r.cyclotomic) cyc[std::to_string(d)] = m;
  j["cyclotomic"] = cyc;
  return j;
}

inline Json to_json(const GroupDescriptor& G, const FiniteNormalSubgroup& T) {
  Json j;
  j["generators"] = T.generator_names;
  if (!T.generators.empty()) {
    Json els = Json::array();
    for (const auto& t : T.generators) els.push_back(to_json(G, t));
    j["elements"] = els;
  }
  j["order"] = int_to_json(T.order);
  j["normality_computed"] = T.normality_computed;
  j["normality_verified"] = T.normality_verified;
  return j;
}

inline Json to_json(const GroupDescriptor& G, const Verdict& v) {
  Json j;
  j["is_crystallographic"] = v.is_crystallographic;
  j["dimension"] = v.dimension ? Json(*v.dimension) : Json(nullptr);
  j["holonomy_order"] = v.is_crystallographic ? int_to_json(v.holonomy_order) : Json(nullptr);
  Json w;
  if (v.faithfulness) {
    w["kind"] = "faithful_holonomy";
    Json moves = Json::array();
    for (const auto& m : v.faithfulness->moves) {
      Json mv;
      mv["tau"] = m.transposition;
      mv["moves"] = "a[" + std::to_string(m.strand) + "," + std::to_string(m.handle) + "] -> a[" +
                    std::to_string(m.image_strand) + "," + std::to_string(m.handle) + "]";
      moves.push_back(mv);
    }
    w["moves"] = moves;
  } else if (v.finite_normal_subgroup) {
    w = to_json(G, *v.finite_normal_subgroup);
    w["kind"] = "finite_normal_subgroup";
  }
  j["witness"] = w;
  j["justification"] = v.justification;
  return j;
}

inline Json to_json(const GnMembership& m) {
  Json j;
  j["in_group"] = m.in_group;
  j["j"] = m.in_group ? Json(m.j) : Json(nullptr);
  j["L_coords"] = m.in_group ? ints_to_json(m.lattice_coords) : Json(nullptr);
  return j;
}

}  // namespace braidcryst
