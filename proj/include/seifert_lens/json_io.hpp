#pragma once

#include <json.hpp>

#include "abelianization.hpp"
#include "covering_tower.hpp"
#include "orbifold.hpp"
#include "s3_isometry.hpp"
#include "seifert.hpp"
#include "todd_coxeter.hpp"

namespace seifert_lens {

inline void to_json(nlohmann::json& j, Orbifold2D const& o) { j = to_string(o); }

inline void to_json(nlohmann::json& j, LensSpace const& l) {
  j = {{"p", l.p}, {"q", l.q}, {"q_oriented", l.q_oriented}};
}

inline void to_json(nlohmann::json& j, PhaseMap const& f) { j = to_string(f); }

inline void to_json(nlohmann::json& j, AbelianInvariants const& a) {
  nlohmann::json torsion = nlohmann::json::array();
  for (auto const& d : a.torsion) torsion.push_back(d.str());
  j = {{"rank", a.rank}, {"torsion", torsion}};
}

/// Schema: { lens: {p, q, q_oriented}, base, fiber: {n, beta}, pi1: {order, cyclic, presentation} }.
inline void to_json(nlohmann::json& j, Fibration const& f) {
  auto const& fiber = f.invariants.fibers.at(0);
  auto const pres = pi1_presentation(fiber.alpha, fiber.beta);
  j = {{"lens", f.total_space},
       {"base", f.base},
       {"fiber", {{"n", fiber.alpha}, {"beta", fiber.beta}}},
       {"pi1",
        {{"order", 4 * fiber.alpha},
         {"cyclic", true},
         {"presentation", to_string(pres.two_generator)}}}};
}

inline void to_json(nlohmann::json& j, CoveringStep const& s) {
  j = {{"cover", s.cover},
       {"base", s.base},
       {"degree", s.degree},
       {"branch", to_string(s.branch)},
       {"chi_cover", to_string(euler_characteristic(s.cover))},
       {"chi_base", to_string(euler_characteristic(s.base))}};
}

/// Row-major array of rows.
inline nlohmann::json matrix_json(Isometry4 const& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 4; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 4; ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

/// Coset table for audit. Cosets are numbered from 1 (coset 1 is the
/// subgroup); undefined entries are 0.
inline nlohmann::json coset_table_json(CosetTable const& t, GroupPresentation const& p) {
  nlohmann::json columns = nlohmann::json::array();
  for (auto const& g : p.generators()) {
    columns.push_back(g);
    columns.push_back(g + "^-1");
  }
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t c = 0; c < t.size() && t.columns() > 0; ++c) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t x = 0; x < t.columns(); ++x) row.push_back(t.image(c, x) + 1);
    rows.push_back(row);
  }
  return {{"status", t.complete() ? "complete" : "exceeded-limit"},
          {"coset_limit", t.coset_limit()},
          {"cosets", t.size()},
          {"columns", columns},
          {"rows", rows}};
}

}  // namespace seifert_lens
