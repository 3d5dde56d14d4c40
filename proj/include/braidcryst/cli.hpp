#pragma once

#include "braidcryst/braidcryst.hpp"
#include "braidcryst/json_io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace braidcryst::cli {

enum ExitCode : int { Success = 0, Usage = 1, Domain = 2, SelftestFailure = 3 };

struct CliConfig {
  std::string surface = "torus";
  int n = 0;
  int genus = -1;  // -1 means not given
  std::string format = "text";
  int bound = 1;
};

/// Thrown for flag combinations that CLI11 cannot reject on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline GroupDescriptor group_of(const CliConfig& c) {
  if (c.n == 0) throw UsageError("--n is required");
  if (c.surface == "sphere") {
    if (c.genus > 0) throw UsageError("--genus is not used for the sphere");
    return GroupDescriptor::sphere(c.n);
  }
  if (c.surface == "torus") {
    if (c.genus != -1 && c.genus != 1) throw UsageError("the torus has genus 1");
    return GroupDescriptor::torus(c.n);
  }
  if (c.genus == -1) throw UsageError("--genus is required for surface " + c.surface);
  if (c.surface == "orientable") return GroupDescriptor::orientable(c.genus, c.n);
  return GroupDescriptor::nonorientable(c.genus, c.n);
}

namespace detail {

inline bool looks_like_json(const std::string& s) {
  const auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string::npos && s[p] == '{';
}

inline Element read_element(const GroupDescriptor& G, const std::string& s) {
  braidcryst::detail::require_orientable(G);
  return looks_like_json(s) ? element_from_json(G, Json::parse(s)) : normalize(G, s);
}

inline MixedElement read_mixed(const GroupDescriptor& G, const std::string& s) {
  return looks_like_json(s) ? mixed_from_json(G, Json::parse(s)) : ns_normalize(G, s);
}

inline std::string word_text(const BraidWord& w) {
  const std::string s = to_string(w);
  return s.empty() ? "1" : s;
}

inline std::string ints_text(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "]";
}

inline std::string matrix_text(const IntMatrix& m) {
  std::string s;
  for (const auto& row : m.to_rows()) s += ints_text(row) + "\n";
  return s;
}

inline void check_sphere_elements(const GroupDescriptor& G) {
  if (G.surface == SurfaceKind::Sphere)
    throw DomainError(Errc::Unsupported, "element arithmetic is not available for the sphere");
}

inline CoeffVector random_coeffs(std::mt19937_64& rng, int strands, int handles, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  CoeffVector v(strands, handles);
  for (int i = 1; i <= strands; ++i)
    for (int r = 1; r <= handles; ++r) v.at(i, r) = d(rng);
  return v;
}

inline FrobeniusEmbedding read_blocks(const std::string& text, int genus) {
  FrobeniusEmbedding F;
  if (text.empty()) {
    F.blocks.assign(static_cast<std::size_t>(2 * genus), {0, 0, 0, 0});
    return F;
  }
  const Json j = Json::parse(text);
  if (!j.is_array()) throw DomainError(Errc::InvalidArgument, "--blocks must be a JSON array");
  for (const auto& b : j) {
    if (!b.is_array() || b.size() != 4)
      throw DomainError(Errc::InvalidArgument, "each Frobenius block has four integers");
    F.blocks.push_back({int_from_json(b[0]), int_from_json(b[1]), int_from_json(b[2]), int_from_json(b[3])});
  }
  if (static_cast<int>(F.blocks.size()) != 2 * genus)
    throw DomainError(Errc::InvalidArgument, "--blocks needs 2g = " + std::to_string(2 * genus) + " blocks");
  return F;
}

}  // namespace detail

/// One named property suite; selftest prints a TAP line per suite.
struct Suite {
  std::string name;
  std::function<bool()> check;
};

inline std::vector<Suite> selftest_suites() {
  std::vector<Suite> s;
  s.push_back({"presentation relations (n<=4, g<=2)", [] {
                 for (int g = 1; g <= 2; ++g)
                   for (int n = 1; n <= 4; ++n)
                     if (!check_relations(GroupDescriptor::orientable(g, n)).ok()) return false;
                 return true;
               }});
  s.push_back({"non-orientable relations (n<=3, g<=3)", [] {
                 for (int g = 1; g <= 3; ++g)
                   for (int n = 1; n <= 3; ++n)
                     if (!ns_check_relations(GroupDescriptor::nonorientable(g, n)).ok()) return false;
                 return true;
               }});
  s.push_back({"power formula matches repeated multiplication", [] {
                 std::mt19937_64 rng(7);
                 for (int n = 2; n <= 5; ++n) {
                   const auto G = GroupDescriptor::orientable(2, n);
                   const Element z{detail::random_coeffs(rng, n, 4, 3),
                                   normalize(G, classical_words(G).alpha_word()).perm};
                   Element acc = identity(G);
                   for (int k = 1; k <= 3 * n; ++k) {
                     acc = mul(G, acc, z);
                     if (k % n == 0 && cycle_power_coeffs(G, z, k) != acc.coeffs) return false;
                   }
                 }
                 return true;
               }});
  s.push_back({"conjugacy witnesses verify", [] {
                 const auto G = GroupDescriptor::torus(3);
                 std::mt19937_64 rng(11);
                 for (int t = 0; t < 50; ++t) {
                   Element x{detail::random_coeffs(rng, 3, 2, 1), Permutation::from_cycles(3, {{1, 2, 3}})};
                   Element y{detail::random_coeffs(rng, 3, 2, 1), Permutation::from_cycles(3, {{1, 3, 2}})};
                   if (!order(G, x).finite || !order(G, y).finite) continue;
                   const auto c = conjugacy_test(G, x, y);
                   if (!c || conjugate(G, x, *c) != y) return false;
                 }
                 return true;
               }});
  s.push_back({"Frobenius conjugator", [] {
                 const auto F = FrobeniusEmbedding::single_block(1, 1, {1, -2, 3, 0});
                 const auto [v1, v2] = frobenius_embed(F);
                 const auto G = GroupDescriptor::orientable(1, 5);
                 const Element l = frobenius_conjugator(F);
                 return conjugate(G, section_psi(G, frobenius_w1()), l) == v1 &&
                        conjugate(G, section_psi(G, frobenius_w2()), l) == v2;
               }});
  s.push_back({"Bieberbach holonomy and invariants (n<=4, g<=2)", [] {
                 for (int g = 1; g <= 2; ++g)
                   for (int n = 2; n <= 4; ++n) {
                     const auto B = make_bieberbach(n, g);
                     const auto rep = invariant_report(CyclicRep(holonomy_matrix(B), n));
                     if (rep.char_poly != IntPoly::x_pow_minus_one(n).pow(2 * g)) return false;
                     if (rep.det != 1 || !rep.anosov || !rep.kahler) return false;
                     if (rep.betti.size() < 2 || rep.betti[1] != 2 * g) return false;
                   }
                 return true;
               }});
  s.push_back({"Frobenius torsion has order p", [] {
                 std::mt19937_64 rng(13);
                 const auto G = GroupDescriptor::torus(5);
                 const auto t = frobenius_torsion_element(G, 5, 4, detail::random_coeffs(rng, 5, 2, 2),
                                                          detail::random_coeffs(rng, 5, 2, 2));
                 const auto o = order(G, t.v);
                 return o.finite && o.k == 5;
               }});
  s.push_back({"crystallographic verdicts", [] {
                 if (!crystallographic_verdict(GroupDescriptor::orientable(2, 3)).is_crystallographic) return false;
                 for (int n = 3; n <= 5; ++n)
                   if (crystallographic_verdict(GroupDescriptor::sphere(n)).is_crystallographic) return false;
                 for (int g = 1; g <= 3; ++g) {
                   const auto v = crystallographic_verdict(GroupDescriptor::nonorientable(g, 3));
                   if (v.is_crystallographic || !v.finite_normal_subgroup->normality_verified) return false;
                 }
                 return true;
               }});
  return s;
}

/// Runs the command line in args (without the program name). Results go to
/// out, diagnostics to err; the return value is the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact computation in crystallographic quotients of surface braid groups", "braidcryst"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--surface", cfg.surface, "torus, orientable, sphere or nonorientable")
      ->check(CLI::IsMember({"torus", "orientable", "sphere", "nonorientable"}));
  app.add_option("--n", cfg.n, "number of strands");
  app.add_option("--genus,-g", cfg.genus, "genus of the surface");
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string x_text, y_text, matrix_text, blocks_text, lift1_text, lift2_text;
  std::vector<std::string> images;
  std::int64_t exponent = 1, power_j = 1, prime = 5, multiplier = 4;
  std::uint64_t seed = 1;
  int order_n = 0, lift_range = 3;

  auto* normalize_cmd = app.add_subcommand("normalize", "normal form of a word");
  normalize_cmd->add_option("word", x_text, "braid word")->required();
  auto* mul_cmd = app.add_subcommand("mul", "product x*y");
  mul_cmd->add_option("x", x_text)->required();
  mul_cmd->add_option("y", y_text)->required();
  auto* inv_cmd = app.add_subcommand("inv", "inverse");
  inv_cmd->add_option("x", x_text)->required();
  auto* pow_cmd = app.add_subcommand("pow", "power x^k");
  pow_cmd->add_option("x", x_text)->required();
  pow_cmd->add_option("--exponent,-k", exponent)->required();
  auto* order_cmd = app.add_subcommand("order", "order of an element");
  order_cmd->add_option("x", x_text)->required();
  auto* conj_cmd = app.add_subcommand("conjugacy", "conjugacy test for finite-order elements");
  conj_cmd->add_option("x", x_text)->required();
  conj_cmd->add_option("y", y_text)->required();
  auto* sub_cmd = app.add_subcommand("subgroup-conjugator",
                                     "conjugator of a copy of S_n to the standard section");
  sub_cmd->add_option("images", images, "images of sigma_1..sigma_{n-1}")->required();

  auto* frob_cmd = app.add_subcommand("frobenius", "Frobenius subgroups");
  frob_cmd->require_subcommand(1);
  frob_cmd->add_option("--blocks", blocks_text, "JSON array of 2g blocks [a1,a2,a3,a4]");
  auto* frob_embed = frob_cmd->add_subcommand("embed", "images of w1, w2 for the given blocks");
  auto* frob_conj = frob_cmd->add_subcommand("conjugator", "conjugator to the standard section");
  auto* frob_tors = frob_cmd->add_subcommand("torsion", "element of order p over Z_p x| Z_{(p-1)/2}");
  frob_tors->add_option("--p", prime, "prime p >= 5");
  frob_tors->add_option("--l", multiplier, "multiplier of order (p-1)/2 mod p");
  frob_tors->add_option("--lift1", lift1_text, "JSON coefficient rows for the lift of w1");
  frob_tors->add_option("--lift2", lift2_text, "JSON coefficient rows for the lift of w2");
  frob_tors->add_option("--seed", seed, "seed for random lifts");
  frob_tors->add_option("--range", lift_range, "random lift coefficients lie in [-range, range]");

  auto* bieb_cmd = app.add_subcommand("bieberbach", "the Bieberbach subgroup");
  bieb_cmd->require_subcommand(1);
  auto* bieb_info = bieb_cmd->add_subcommand("info", "generators and lattice basis");
  auto* bieb_member = bieb_cmd->add_subcommand("membership", "membership and L-coordinates");
  bieb_member->add_option("x", x_text)->required();
  auto* bieb_hol = bieb_cmd->add_subcommand("holonomy", "holonomy matrix");
  bieb_hol->add_option("--power", power_j, "power of the generator");
  auto* bieb_centre = bieb_cmd->add_subcommand("centre", "centre generators");
  auto* bieb_scan = bieb_cmd->add_subcommand("torsion-scan", "exhaustive torsion scan");
  bieb_scan->add_option("--bound", cfg.bound, "L-coordinates range over [-bound, bound]");

  auto* inv_rep_cmd = app.add_subcommand("invariants", "invariants of a cyclic holonomy representation");
  inv_rep_cmd->add_option("--matrix", matrix_text, "JSON integer matrix (default: Bieberbach holonomy)");
  inv_rep_cmd->add_option("--order", order_n, "order of the matrix");
  auto* verdict_cmd = app.add_subcommand("verdict", "crystallographic verdict");
  auto* selftest_cmd = app.add_subcommand("selftest", "run property suites");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Success : Usage;
  }

  const bool json = cfg.format == "json";
  try {
    if (selftest_cmd->parsed()) {
      const auto suites = selftest_suites();
      bool all = true;
      out << "1.." << suites.size() << "\n";
      for (std::size_t i = 0; i < suites.size(); ++i) {
        bool ok = false;
        try {
          ok = suites[i].check();
        } catch (const std::exception& e) {
          err << suites[i].name << ": " << e.what() << "\n";
        }
        all = all && ok;
        out << (ok ? "ok " : "not ok ") << i + 1 << " - " << suites[i].name << "\n";
      }
      return all ? Success : SelftestFailure;
    }

    if (inv_rep_cmd->parsed()) {
      std::optional<CyclicRep> R;
      if (!matrix_text.empty()) {
        if (order_n <= 0) throw UsageError("--matrix needs --order");
        const Json j = Json::parse(matrix_text);
        std::vector<std::vector<Int>> rows;
        for (const auto& row : j) {
          std::vector<Int> r;
          for (const auto& e : row) r.push_back(int_from_json(e));
          rows.push_back(std::move(r));
        }
        R.emplace(IntMatrix::from_rows(rows), order_n);
      } else {
        const GroupDescriptor G = group_of(cfg);
        braidcryst::detail::require_orientable(G);
        const auto B = make_bieberbach(G.n, G.genus);
        R.emplace(holonomy_matrix(B), B.n);
      }
      const auto rep = invariant_report(*R);
      if (json) {
        out << to_json(rep).dump() << "\n";
      } else {
        out << "char_poly " << rep.char_poly.to_string() << "\n"
            << "det " << rep.det << "\n"
            << "betti " << detail::ints_text(rep.betti) << "\n"
            << "anosov " << std::boolalpha << rep.anosov << "\n"
            << "kahler " << rep.kahler << "\n"
            << "orientable " << rep.orientable << "\n";
      }
      return Success;
    }

    const GroupDescriptor G = group_of(cfg);

    if (verdict_cmd->parsed()) {
      const auto v = crystallographic_verdict(G);
      if (json) {
        out << to_json(G, v).dump() << "\n";
      } else {
        out << G.name() << ": " << (v.is_crystallographic ? "crystallographic" : "not crystallographic")
            << "\n" << v.justification << "\n";
        if (v.finite_normal_subgroup)
          for (const auto& name : v.finite_normal_subgroup->generator_names) out << "  T generator " << name << "\n";
      }
      return Success;
    }

    if (!G.is_orientable() && (normalize_cmd->parsed() || mul_cmd->parsed() || inv_cmd->parsed() ||
                               pow_cmd->parsed())) {
      detail::check_sphere_elements(G);
      MixedElement r;
      if (normalize_cmd->parsed()) r = ns_normalize(G, x_text);
      if (mul_cmd->parsed()) r = ns_mul(G, detail::read_mixed(G, x_text), detail::read_mixed(G, y_text));
      if (inv_cmd->parsed()) r = ns_inverse(G, detail::read_mixed(G, x_text));
      if (pow_cmd->parsed()) r = ns_power(G, detail::read_mixed(G, x_text), exponent);
      out << (json ? to_json(G, r).dump() : detail::word_text(ns_to_word(G, r))) << "\n";
      return Success;
    }

    auto emit = [&](const Element& e) {
      out << (json ? to_json(G, e).dump() : detail::word_text(to_word(G, e))) << "\n";
    };

    if (normalize_cmd->parsed()) {
      detail::check_sphere_elements(G);
      emit(normalize(G, x_text));
    } else if (mul_cmd->parsed()) {
      emit(mul(G, detail::read_element(G, x_text), detail::read_element(G, y_text)));
    } else if (inv_cmd->parsed()) {
      emit(inverse(G, detail::read_element(G, x_text)));
    } else if (pow_cmd->parsed()) {
      emit(power(G, detail::read_element(G, x_text), exponent));
    } else if (order_cmd->parsed()) {
      const auto o = order(G, detail::read_element(G, x_text));
      if (json) {
        Json j;
        j["finite"] = o.finite;
        j["order"] = o.finite ? Json(o.k) : Json(nullptr);
        out << j.dump() << "\n";
      } else {
        out << (o.finite ? std::to_string(o.k) : std::string("infinite")) << "\n";
      }
    } else if (conj_cmd->parsed()) {
      const auto c = conjugacy_test(G, detail::read_element(G, x_text), detail::read_element(G, y_text));
      if (json)
        out << conjugacy_to_json(G, c).dump() << "\n";
      else
        out << (c ? "conjugate by " + detail::word_text(to_word(G, *c)) : std::string("not conjugate")) << "\n";
    } else if (sub_cmd->parsed()) {
      std::vector<Element> imgs;
      for (const auto& t : images) imgs.push_back(detail::read_element(G, t));
      emit(symmetric_copy_conjugator(G, imgs));
    } else if (frob_cmd->parsed()) {
      braidcryst::detail::require_orientable(G);
      if (frob_tors->parsed()) {
        CoeffVector l1(G.n, G.handles()), l2(G.n, G.handles());
        std::mt19937_64 rng(seed);
        l1 = lift1_text.empty() ? detail::random_coeffs(rng, G.n, G.handles(), lift_range)
                                : coeffs_from_json(Json::parse(lift1_text), G.n, G.handles());
        l2 = lift2_text.empty() ? detail::random_coeffs(rng, G.n, G.handles(), lift_range)
                                : coeffs_from_json(Json::parse(lift2_text), G.n, G.handles());
        const auto t = frobenius_torsion_element(G, prime, multiplier, l1, l2);
        const auto o = order(G, t.v);
        if (json) {
          Json j;
          j["w1"] = t.w1.images();
          j["w2"] = t.w2.images();
          j["v1"] = to_json(G, t.v1);
          j["v2"] = to_json(G, t.v2);
          j["v"] = to_json(G, t.v);
          j["order"] = o.finite ? Json(o.k) : Json(nullptr);
          Json aug = Json::array();
          for (int r = 1; r <= G.handles(); ++r) aug.push_back(int_to_json(t.v.coeffs.augmentation(r)));
          j["augmentation"] = aug;
          out << j.dump() << "\n";
        } else {
          out << "v " << detail::word_text(to_word(G, t.v)) << "\n"
              << "order " << (o.finite ? std::to_string(o.k) : std::string("infinite")) << "\n";
        }
        return Success;
      }
      if (G.n != 5) throw DomainError(Errc::Mismatch, "Frobenius embeddings live in the 5-strand group");
      const auto F = detail::read_blocks(blocks_text, G.genus);
      if (frob_embed->parsed()) {
        const auto [v1, v2] = frobenius_embed(F);
        if (json) {
          Json j;
          j["v1"] = to_json(G, v1);
          j["v2"] = to_json(G, v2);
          out << j.dump() << "\n";
        } else {
          out << "v1 " << detail::word_text(to_word(G, v1)) << "\n"
              << "v2 " << detail::word_text(to_word(G, v2)) << "\n";
        }
      } else if (frob_conj->parsed()) {
        emit(frobenius_conjugator(F));
      }
    } else if (bieb_cmd->parsed()) {
      braidcryst::detail::require_orientable(G);
      const auto B = make_bieberbach(G.n, G.genus);
      if (bieb_info->parsed()) {
        if (json) {
          Json j;
          j["n"] = B.n;
          j["g"] = B.genus;
          j["rank"] = B.rank();
          j["holonomy_permutation"] = B.holonomy_permutation().images();
          j["generator"] = to_json(G, B.generator);
          Json basis = Json::array();
          for (const auto& v : B.basis) basis.push_back(coeffs_to_json(v));
          j["lattice_basis"] = basis;
          out << j.dump() << "\n";
        } else {
          out << "rank " << B.rank() << "\n"
              << "holonomy " << B.holonomy_permutation().to_cycle_string() << "\n"
              << "generator " << detail::word_text(to_word(G, B.generator)) << "\n";
          for (std::size_t k = 1; k < B.X.size(); ++k)
            out << "X" << k << " " << detail::word_text(to_word(G, B.X[k])) << "\n";
        }
      } else if (bieb_member->parsed()) {
        const auto m = membership(B, detail::read_element(G, x_text));
        if (json)
          out << to_json(m).dump() << "\n";
        else if (m.in_group)
          out << "member j=" << m.j << " L=" << detail::ints_text(m.lattice_coords) << "\n";
        else
          out << "not a member\n";
      } else if (bieb_hol->parsed()) {
        const auto M = holonomy_matrix(B, power_j);
        out << (json ? to_json(M).dump() + "\n" : detail::matrix_text(M));
      } else if (bieb_centre->parsed()) {
        const auto Z = centre(B);
        Json arr = Json::array();
        for (const auto& z : Z) {
          if (json)
            arr.push_back(to_json(G, z));
          else
            out << detail::word_text(to_word(G, z)) << "\n";
        }
        if (json) out << arr.dump() << "\n";
      } else if (bieb_scan->parsed()) {
        if (cfg.bound < 0) throw UsageError("--bound must be nonnegative");
        const auto rep = torsion_free_evidence(B, cfg.bound);
        if (json) {
          Json j;
          j["scanned"] = rep.scanned;
          j["torsion"] = rep.torsion.size();
          j["obstruction_failures"] = rep.obstruction_failures;
          j["torsion_free"] = rep.torsion_free();
          out << j.dump() << "\n";
        } else {
          out << "scanned " << rep.scanned << " torsion " << rep.torsion.size() << " obstruction_failures "
              << rep.obstruction_failures << "\n";
        }
      }
    }
    return Success;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return Domain;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return Domain;
  }
}

}  // namespace braidcryst::cli
