#pragma once

// JSON forms of the library's values. Rationals and circle exponents are strings
// "p/q"; matrices are [a, b, c, d] with entries as numbers (strings when they do
// not fit in 64 bits).

#include <string>
#include <vector>

#include <json.hpp>

#include "gamma0/character_lab.hpp"
#include "gamma0/dirichlet.hpp"
#include "gamma0/farey.hpp"
#include "gamma0/generators.hpp"
#include "gamma0/modular_group.hpp"
#include "gamma0/rational.hpp"
#include "gamma0/verifiers.hpp"

namespace gamma0 {

using Json = nlohmann::ordered_json;

inline Json integer_json(const Integer& x) {
  if (fits_int64(x)) return x.convert_to<std::int64_t>();
  return x.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw DomainError("expected an integer, got " + j.dump());
}

inline Json to_json(const Rational& x) { return x.str(); }
inline Json to_json(const CircleExponent& x) { return x.str(); }

inline Json to_json(const UniModular& m) {
  return Json::array({integer_json(m.a()), integer_json(m.b()), integer_json(m.c()), integer_json(m.d())});
}

inline UniModular unimodular_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw DomainError("matrix must be [a, b, c, d]");
  return UniModular(integer_from_json(j[0]), integer_from_json(j[1]), integer_from_json(j[2]),
                    integer_from_json(j[3]));
}

inline Json to_json(const std::vector<UniModular>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

inline Json to_json(const FareySymbol& fs) {
  Json vertices = Json::array();
  for (const auto& v : fs.vertices()) vertices.push_back(Json::array({v.p, v.q}));
  Json pairings = Json::array();
  for (const auto& s : fs.pairings()) {
    switch (s.kind) {
      case SideKind::Even:
        pairings.push_back("even");
        break;
      case SideKind::Odd:
        pairings.push_back("odd");
        break;
      case SideKind::Free:
        pairings.push_back(s.pair_id);
        break;
    }
  }
  return Json{{"level", fs.level()}, {"vertices", vertices}, {"pairings", pairings}};
}

inline FareySymbol farey_from_json(const Json& j) {
  std::vector<Cusp> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back({v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>()});
  std::vector<SidePairing> pairings;
  for (const auto& s : j.at("pairings")) {
    if (s.is_string()) {
      const auto tag = s.get<std::string>();
      if (tag == "even") {
        pairings.push_back({SideKind::Even, 0});
      } else if (tag == "odd") {
        pairings.push_back({SideKind::Odd, 0});
      } else {
        throw DomainError("unknown pairing label '" + tag + "'");
      }
    } else {
      pairings.push_back({SideKind::Free, s.get<std::size_t>()});
    }
  }
  return FareySymbol(j.at("level").get<std::int64_t>(), std::move(vertices), std::move(pairings));
}

/// The on-disk cache layout.
inline Json to_json(const GeneratorSet& gs) {
  Json j{{"level", gs.level},
         {"free", to_json(gs.free)},
         {"elliptic2", to_json(gs.elliptic2)},
         {"elliptic3", to_json(gs.elliptic3)}};
  j["farey"] = gs.farey ? to_json(*gs.farey) : Json(nullptr);
  return j;
}

/// Parses a cached generator set and checks it against its own Farey symbol.
inline GeneratorSet generator_set_from_json(const Json& j) {
  const auto level = j.at("level").get<std::int64_t>();
  GeneratorSet gs;
  if (level == 1) {
    gs = generators(1);
  } else {
    gs = generators_from_farey(farey_from_json(j.at("farey")));
  }
  auto read = [&](const char* key) {
    std::vector<UniModular> out;
    for (const auto& m : j.at(key)) out.push_back(unimodular_from_json(m));
    return out;
  };
  if (gs.level != level || read("free") != gs.free || read("elliptic2") != gs.elliptic2 ||
      read("elliptic3") != gs.elliptic3) {
    throw DomainError("cached generator set for level " + std::to_string(level) +
                      " disagrees with its Farey symbol");
  }
  return gs;
}

inline Json to_json(const GeneratorRef& g) {
  const char* kind = g.kind == GeneratorKind::Free ? "free" : (g.kind == GeneratorKind::Elliptic2 ? "elliptic2" : "elliptic3");
  return Json{{"kind", kind}, {"index", g.index}};
}

inline Json to_json(const Word& w) {
  Json letters = Json::array();
  for (const auto& l : w.letters) {
    Json lj = to_json(l.gen);
    lj["exponent"] = l.exponent;
    letters.push_back(lj);
  }
  return Json{{"sign", w.sign}, {"letters", letters}};
}

inline Json to_json(const DirichletCharacter& chi) {
  return Json{{"modulus", chi.modulus()}, {"exponents", chi.exponents()}};
}

inline Json to_json(const SigmaMatrix& sm) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < sm.entries.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < sm.entries.cols; ++j) row.push_back(integer_json(sm.entries(i, j)));
    rows.push_back(row);
  }
  return Json{{"level", sm.level}, {"columns", sm.columns}, {"rows", rows}};
}

inline Json to_json(const SurjectivityReport& rep) {
  Json j{{"ok", true},
         {"level", rep.level},
         {"verdict", to_string(rep.verdict)},
         {"reason", rep.reason},
         {"r", rep.r},
         {"e2", rep.e2},
         {"e3", rep.e3},
         {"t", rep.t},
         {"rank", rep.rank},
         {"r_exceeds_t_minus_1", rep.r_exceeds_t_minus_1},
         {"character_pairs", rep.character_pairs},
         {"torsion_total", rep.torsion_total},
         {"torsion_hit", rep.torsion_hit}};
  if (rep.missing_torsion) {
    Json t = Json::array();
    for (int v : *rep.missing_torsion) t.push_back(Rational(v, 12).str());
    j["missing_torsion"] = t;
  }
  Json sols = Json::array();
  for (const auto& x : rep.free_part_solutions) {
    Json row = Json::array();
    for (const auto& v : x) row.push_back(v.str());
    sols.push_back(row);
  }
  j["free_part_solutions"] = sols;
  return j;
}

inline Json to_json(const Conjecture1Report& rep) {
  Json ce = Json::array();
  for (const auto& f : rep.counterexamples) {
    ce.push_back({{"N", f.n}, {"l", f.l}, {"beta_N_l", integer_json(f.beta_n_l)}, {"beta_l_l", integer_json(f.beta_l_l)}});
  }
  return Json{{"ok", rep.ok}, {"max_n", rep.max_n}, {"checked", rep.checked}, {"counterexamples", ce}};
}

inline Json to_json(const BetaTableReport& rep) {
  Json mm = Json::array();
  for (const auto& m : rep.mismatches) {
    mm.push_back({{"N", m.n},
                  {"R", m.expected.residue},
                  {"listed", m.expected.listed},
                  {"predicted", m.expected.predicted},
                  {"square_rule", m.expected.square_rule},
                  {"actual", integer_json(m.actual)}});
  }
  return Json{{"ok", rep.ok},
              {"max_n", rep.max_n},
              {"checked", rep.checked},
              {"square_rule_applied", rep.square_rule_applied},
              {"square_rule_rows", rep.square_rule_rows},
              {"mismatches", mm}};
}

inline Json to_json(const Conjecture3Report& rep) {
  Json ff = Json::array();
  for (const auto& f : rep.failures) {
    ff.push_back({{"N", f.n}, {"rank", f.rank}, {"t_minus_1", f.t_minus_1}, {"r", f.r}});
  }
  return Json{{"ok", rep.ok}, {"max_n", rep.max_n}, {"checked", rep.checked}, {"failures", ff}};
}

inline Json to_json(const CocycleLawReport& rep) {
  Json j{{"ok", rep.ok},
         {"trials", rep.trials},
         {"seed", rep.seed},
         {"omega_plus12", rep.plus12},
         {"omega_zero", rep.zero},
         {"omega_minus12", rep.minus12},
         {"failures", rep.failures}};
  if (rep.witness) j["witness"] = Json::array({to_json(rep.witness->first), to_json(rep.witness->second)});
  return j;
}

inline Json to_json(const DedekindIdentityReport& rep) {
  Json j{{"ok", rep.ok},     {"trials_per_level", rep.trials}, {"seed", rep.seed},
         {"max_c", rep.max_c}, {"checked", rep.checked},         {"failures", rep.failures}};
  if (rep.witness) j["witness"] = Json::parse(*rep.witness);
  return j;
}

inline Json to_json(const KernelReport& rep) {
  Json j{{"ok", rep.ok},
         {"level", rep.level},
         {"trials", rep.trials},
         {"seed", rep.seed},
         {"distinguished_generator", rep.distinguished},
         {"in_kernel", rep.in_kernel},
         {"failures", rep.failures}};
  if (rep.witness) j["witness"] = Json::parse(*rep.witness);
  return j;
}

}  // namespace gamma0
