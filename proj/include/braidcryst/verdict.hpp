#pragma once

#include "braidcryst/group.hpp"
#include "braidcryst/mixed.hpp"

#include <optional>
#include <string>

namespace braidcryst {

struct Verdict {
  bool is_crystallographic = false;
  std::optional<int> dimension;
  Int holonomy_order = 0;  // |S_n| when crystallographic
  std::optional<FaithfulnessWitness> faithfulness;
  std::optional<FiniteNormalSubgroup> finite_normal_subgroup;
  std::string justification;
};

/// Orientable: Z^{2ng} x| S_n with faithful phi, so crystallographic of
/// dimension 2ng with holonomy S_n. Sphere and non-orientable: a nontrivial
/// finite normal subgroup is exhibited instead.
inline Verdict verify_crystallographic(const GroupDescriptor& G) {
  Verdict v;
  if (G.is_orientable()) {
    v.faithfulness = faithfulness_witness(G);
    v.is_crystallographic = v.faithfulness->faithful;
    v.dimension = G.free_rank();
    v.holonomy_order = factorial(G.n);
    v.justification = "split extension of S_n by Z^" + std::to_string(G.free_rank()) +
                      " whose holonomy representation is faithful";
    return v;
  }
  v.finite_normal_subgroup = finite_normal_subgroup(G);
  v.is_crystallographic = false;
  v.justification = v.finite_normal_subgroup->justification;
  return v;
}

inline Verdict crystallographic_verdict(const GroupDescriptor& G) { return verify_crystallographic(G); }

}  // namespace braidcryst
