#pragma once

#include <cstdint>
#include <cstdlib>
#include <future>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abelianization.hpp"
#include "covering_tower.hpp"
#include "error.hpp"
#include "json_io.hpp"
#include "s3_isometry.hpp"
#include "seifert.hpp"
#include "todd_coxeter.hpp"

namespace seifert_lens::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  bool json = false;
  bool certify = false;
  std::size_t limit = kDefaultCosetLimit;
};

/// Default coset limit, overridable by SEIFERT_LENS_COSET_LIMIT.
inline std::size_t default_coset_limit() {
  if (char const* env = std::getenv("SEIFERT_LENS_COSET_LIMIT")) {
    try {
      auto const v = std::stoull(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (std::exception const&) {
    }
  }
  return kDefaultCosetLimit;
}

/// End-to-end certificate for one fibration: group order and cyclicity by
/// coset enumeration, then order, freeness, conjugation and quotient of the
/// isometries realizing it.
struct FibrationCertificate {
  bool ok = false;
  std::size_t group_order = 0;
  bool cyclic = false;
  std::int64_t action_order = 0;
  bool free = false;
  double conjugation_deviation = 0;
  LensSpace quotient;
};

inline FibrationCertificate certify_fibration(Fibration const& f, std::size_t limit) {
  FibrationCertificate c;
  auto const [n, beta] = f.invariants.fibers.at(0);
  auto const pres = pi1_presentation(n, beta).two_generator;
  auto const order = group_order(pres, limit);
  if (!order) throw CosetLimitExceeded(limit);
  c.group_order = *order;
  c.cyclic = is_cyclic(pres, limit);

  PhaseMap const action = beta > 0 ? a_plus(n) : a_minus(n);
  c.action_order = order_of(action).value_or(0);
  c.free = is_free_action(action, c.action_order).free;
  c.conjugation_deviation = beta > 0 ? verify_conjugation(n) : verify_conjugation_minus(n);
  c.quotient = quotient_lens(beta > 0 ? a_qtilde(n, 2 * n - 1) : a_minus_diagonal_model(n));

  c.ok = c.group_order == static_cast<std::size_t>(4 * n) && c.cyclic &&
         c.action_order == 4 * n && c.free && c.conjugation_deviation < kMatrixTolerance &&
         c.quotient == f.total_space;
  return c;
}

inline nlohmann::json certificate_json(FibrationCertificate const& c) {
  return {{"ok", c.ok},
          {"group_order", c.group_order},
          {"cyclic", c.cyclic},
          {"action_order", c.action_order},
          {"free", c.free},
          {"conjugation_deviation", c.conjugation_deviation},
          {"quotient", to_string(c.quotient)}};
}

inline std::string fibration_line(Fibration const& f) {
  auto const& fiber = f.invariants.fibers.at(0);
  return to_string(f.invariants) + " over " + to_string(f.base) + "  |pi1| = " +
         std::to_string(4 * fiber.alpha) + " (cyclic)";
}

inline int cmd_classify(std::string const& text, Options const& opt, std::ostream& out) {
  auto const lens = parse_lens(text);
  auto const fibrations = classify_fibrations(lens);
  std::vector<FibrationCertificate> certs;
  bool ok = true;
  if (opt.certify) {
    for (auto const& f : fibrations) {
      certs.push_back(certify_fibration(f, opt.limit));
      ok = ok && certs.back().ok;
    }
  }
  if (opt.json) {
    nlohmann::json j = {{"query", lens}, {"fibrations", fibrations}};
    if (opt.certify) {
      nlohmann::json arr = nlohmann::json::array();
      for (auto const& c : certs) arr.push_back(certificate_json(c));
      j["certificates"] = arr;
    }
    out << j.dump(2) << '\n';
  } else {
    out << to_string(lens) << ": " << fibrations.size()
        << (fibrations.size() == 1 ? " Seifert fibration" : " Seifert fibrations")
        << " over a non-orientable base\n";
    for (std::size_t i = 0; i < fibrations.size(); ++i) {
      auto const& f = fibrations[i];
      out << "  " << fibration_line(f) << '\n';
      out << "  presentation: "
          << to_string(pi1_presentation(f.invariants.fibers[0].alpha, f.invariants.fibers[0].beta)
                           .two_generator)
          << '\n';
      if (opt.certify) {
        auto const& c = certs[i];
        out << "  certified: " << (c.ok ? "yes" : "NO") << "  (|G| = " << c.group_order
            << ", cyclic = " << (c.cyclic ? "yes" : "no") << ", action order " << c.action_order
            << ", free = " << (c.free ? "yes" : "no") << ", conjugation deviation "
            << c.conjugation_deviation << ", quotient " << to_string(c.quotient) << ")\n";
      }
    }
  }
  return ok ? kExitOk : kExitNegative;
}

inline int cmd_recognize(std::string const& text, Options const& opt, std::ostream& out) {
  auto const input = parse_seifert(text);
  auto const r = recognize_lens(input);
  std::optional<std::size_t> certified_order;
  if (opt.certify && r.pi1_order) {
    auto const& fiber = r.normalized.fibers.at(0);
    certified_order = group_order(pi1_presentation(fiber.alpha, fiber.beta).two_generator, opt.limit);
    if (!certified_order) throw CosetLimitExceeded(opt.limit);
  }
  if (opt.json) {
    nlohmann::json j = {{"input", to_string(input)},
                        {"normalized", to_string(r.normalized)},
                        {"lens_space", r.is_lens()},
                        {"reason", to_string(r.reason)}};
    j["lens"] = r.lens ? nlohmann::json(*r.lens) : nlohmann::json(nullptr);
    if (r.pi1_order) {
      auto const& fiber = r.normalized.fibers.at(0);
      j["pi1"] = {{"order", *r.pi1_order},
                  {"cyclic", r.is_lens()},
                  {"presentation", to_string(pi1_presentation(fiber.alpha, fiber.beta).two_generator)}};
      if (certified_order) j["pi1"]["certified_order"] = *certified_order;
    }
    out << j.dump(2) << '\n';
  } else {
    out << to_string(input);
    if (!(r.normalized == input)) out << " = " << to_string(r.normalized);
    if (r.lens) {
      out << ": lens space " << to_string(*r.lens);
      if (r.lens->q != r.lens->q_oriented) out << " (oriented L(" << r.lens->p << "," << r.lens->q_oriented << "))";
      out << "\n";
    } else {
      out << ": not a lens space (" << to_string(r.reason) << ")";
      switch (r.reason) {
        case NotLensReason::InfiniteBaseGroup:
          out << "; two or more singular fibers make the base orbifold group infinite";
          break;
        case NotLensReason::InfinitePi1: out << "; pi1 is infinite"; break;
        case NotLensReason::NonCyclicPi1: out << "; pi1 is metacyclic and not cyclic"; break;
        case NotLensReason::None: break;
      }
      out << "\n";
    }
    if (r.pi1_order) out << "  |pi1| = " << *r.pi1_order << "\n";
    if (certified_order) out << "  certified |pi1| = " << *certified_order << " by coset enumeration\n";
  }
  bool const cert_ok = !certified_order || static_cast<std::int64_t>(*certified_order) == *r.pi1_order;
  return r.is_lens() && cert_ok ? kExitOk : kExitNegative;
}

inline int cmd_group(std::string const& text, std::vector<std::string> const& subgroup_text,
                     bool table, Options const& opt, std::ostream& out) {
  auto const p = parse_presentation(text);
  std::vector<Word> subgroup;
  for (auto const& s : subgroup_text) subgroup.push_back(p.parse_word(s));
  auto const t = todd_coxeter(p, subgroup, opt.limit);
  auto const ab = abelianization(p);
  bool const verified = t.complete() && t.verify(p, subgroup);
  std::optional<bool> cyclic;
  if (t.complete() && subgroup.empty()) {
    auto const ab_order = ab.order();
    cyclic = ab_order && *ab_order == t.size() && ab.torsion.size() <= 1;
  }
  if (opt.json) {
    nlohmann::json j = {{"presentation", to_string(p)},
                        {"status", t.complete() ? "complete" : "exceeded-limit"},
                        {"abelianization", ab},
                        {"verified", verified}};
    if (t.complete()) j[subgroup.empty() ? "order" : "index"] = t.size();
    if (cyclic) j["cyclic"] = *cyclic;
    if (table) j["coset_table"] = coset_table_json(t, p);
    out << j.dump(2) << '\n';
  } else {
    out << to_string(p) << '\n';
    if (t.complete()) {
      out << (subgroup.empty() ? "  order: " : "  index: ") << t.size() << '\n';
    } else {
      out << "  enumeration exceeded " << opt.limit << " cosets\n";
    }
    out << "  abelianization: " << to_string(ab) << '\n';
    if (cyclic) out << "  cyclic: " << (*cyclic ? "yes" : "no") << '\n';
    if (t.complete()) out << "  table verified: " << (verified ? "yes" : "no") << '\n';
    if (table) out << coset_table_json(t, p).dump() << '\n';
  }
  return t.complete() && verified ? kExitOk : kExitNegative;
}

inline int cmd_verify_action(std::int64_t n, Options const& opt, std::ostream& out) {
  if (n < 1) throw std::invalid_argument("verify-action needs n >= 1");
  auto const ap = a_plus(n);
  auto const order = order_of(ap).value_or(0);
  auto const freeness = is_free_action(ap, order);
  double const deviation = verify_conjugation(n);
  double const deviation_minus = verify_conjugation_minus(n);
  auto const scan = trace_scan(n);
  auto const plus_quotient = quotient_lens(a_qtilde(n, 2 * n - 1));
  auto const minus_quotient = quotient_lens(a_minus_diagonal_model(n));
  bool const ok = order == 4 * n && freeness.free && deviation < kMatrixTolerance &&
                  deviation_minus < kMatrixTolerance &&
                  scan == std::vector<std::int64_t>{2 * n - 1, 2 * n + 1} &&
                  plus_quotient == normalize_lens(4 * n, 2 * n - 1) &&
                  minus_quotient == normalize_lens(4 * n, 2 * n + 1);
  if (opt.json) {
    nlohmann::json j = {{"n", n},
                        {"a_plus", ap},
                        {"a_minus", a_minus(n)},
                        {"order", order},
                        {"free", freeness.free},
                        {"conjugation_deviation", deviation},
                        {"conjugation_deviation_minus", deviation_minus},
                        {"trace_scan", scan},
                        {"quotient_plus", plus_quotient},
                        {"quotient_minus", minus_quotient},
                        {"phi", matrix_json(phi_matrix())},
                        {"a_plus_matrix", matrix_json(a_plus_matrix(n))},
                        {"ok", ok}};
    if (freeness.first_fixed_power) j["first_fixed_power"] = *freeness.first_fixed_power;
    out << j.dump(2) << '\n';
  } else {
    out << "A+ = " << to_string(ap) << "  order " << order << ", free: " << (freeness.free ? "yes" : "no")
        << '\n';
    out << "A- = " << to_string(a_minus(n)) << '\n';
    out << "conjugation deviation |Phi A+ - A_" << 2 * n - 1 << " Phi| = " << deviation << '\n';
    out << "conjugation deviation (A- route) = " << deviation_minus << '\n';
    out << "trace scan: {";
    for (std::size_t i = 0; i < scan.size(); ++i) out << (i ? "," : "") << scan[i];
    out << "}\n";
    out << "quotients: " << to_string(plus_quotient) << ", " << to_string(minus_quotient) << '\n';
    out << "verified: " << (ok ? "yes" : "no") << '\n';
  }
  return ok ? kExitOk : kExitNegative;
}

inline int cmd_tower(std::int64_t n1, std::int64_t n2, std::int64_t depth, Options const& opt,
                     std::ostream& out) {
  auto const steps = build_tower(n1, n2, depth);
  bool ok = !is_finite_pi1orb_rp2(std::vector<std::int64_t>{std::min(n1, n2), std::max(n1, n2)}).finite;
  for (auto const& s : steps) ok = ok && certify_step(s);
  if (opt.json) {
    out << nlohmann::json(steps).dump(2) << '\n';
  } else {
    auto const base = steps.front().base;
    out << "tower over " << to_string(base) << ", chi = " << to_string(euler_characteristic(base))
        << '\n';
    for (auto const& s : steps) {
      auto const cover = to_string(s.cover);
      out << "  " << (cover.size() > 60 ? "S2(" + std::to_string(s.cover.cone_orders().front()) +
                                              " x " + std::to_string(s.cover.cone_orders().size()) + ")"
                                        : cover)
          << "  --" << s.degree << "-->  chi " << to_string(euler_characteristic(s.cover)) << "  ["
          << to_string(s.branch) << ", " << (certify_step(s) ? "certified" : "FAILED") << "]\n";
    }
  }
  return ok ? kExitOk : kExitNegative;
}

struct ScanRow {
  LensSpace lens;
  std::vector<Fibration> fibrations;
  std::optional<FibrationCertificate> certificate;
};

inline std::vector<ScanRow> scan_rows(std::int64_t p_max) {
  std::vector<ScanRow> rows;
  for (std::int64_t p = 1; p <= p_max; ++p) {
    for (auto const& l : lens_classes(p)) rows.push_back({l, classify_fibrations(l), std::nullopt});
  }
  return rows;
}

/// Count-1 rows are exactly p = 4n with q in {2n-1, 2n+1}, and no row has more than one fibration.
inline bool scan_cross_check(std::vector<ScanRow> const& rows) {
  for (auto const& r : rows) {
    bool const expected = r.lens.p % 4 == 0 &&
                          (r.lens.q == r.lens.p / 2 - 1 || r.lens.q == r.lens.p / 2 + 1);
    if (r.fibrations.size() > 1) return false;
    if ((r.fibrations.size() == 1) != expected) return false;
  }
  return true;
}

inline int cmd_scan(std::int64_t p_max, Options const& opt, std::ostream& out) {
  if (p_max < 1) throw std::invalid_argument("scan needs p_max >= 1");
  auto rows = scan_rows(p_max);
  bool ok = scan_cross_check(rows);
  if (opt.certify) {
    std::vector<std::future<FibrationCertificate>> jobs;
    std::vector<std::size_t> which;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].fibrations.empty()) continue;
      which.push_back(i);
      jobs.push_back(std::async(std::launch::async, certify_fibration, rows[i].fibrations[0], opt.limit));
    }
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      rows[which[k]].certificate = jobs[k].get();
      ok = ok && rows[which[k]].certificate->ok;
    }
  }
  std::size_t hits = 0;
  for (auto const& r : rows) hits += r.fibrations.size();
  if (opt.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto const& r : rows) {
      nlohmann::json row = {{"lens", r.lens}, {"count", r.fibrations.size()}, {"fibrations", r.fibrations}};
      if (r.certificate) row["certificate"] = certificate_json(*r.certificate);
      arr.push_back(row);
    }
    out << nlohmann::json{{"p_max", p_max}, {"rows", arr}, {"hits", hits}, {"cross_check", ok}}.dump(2)
        << '\n';
  } else {
    for (auto const& r : rows) {
      out << to_string(r.lens) << "  " << r.fibrations.size();
      if (!r.fibrations.empty()) out << "  " << fibration_line(r.fibrations[0]);
      if (r.certificate) out << "  certified: " << (r.certificate->ok ? "yes" : "NO");
      out << '\n';
    }
    out << "classes: " << rows.size() << ", hits: " << hits
        << ", cross-check: " << (ok ? "pass" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitNegative;
}

/// Entry point of the command-line tool. Returns the process exit code:
/// 0 on success, 1 on a negative mathematical verdict, 2 on usage or parse errors.
inline int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seifert fibrations of lens spaces over non-orientable bases", "seifert-lens"};
  app.require_subcommand(1);
  Options opt;
  opt.limit = default_coset_limit();
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_flag("--certify", opt.certify, "Run group and isometry certificates");
  app.add_option("--limit", opt.limit, "Coset enumeration limit")->check(CLI::PositiveNumber);
  app.fallthrough();

  std::string lens_text, seifert_text, group_text;
  std::vector<std::string> subgroup;
  bool table = false;
  std::int64_t n = 0, n1 = 0, n2 = 0, depth = 4, p_max = 0;

  auto* classify = app.add_subcommand("classify", "Seifert fibrations of L(p,q) over RP2(n)");
  classify->add_option("lens", lens_text, "Lens space, e.g. L(8,3)")->required();
  auto* recognize = app.add_subcommand("recognize", "Decide whether M(-1; ...) is a lens space");
  recognize->add_option("invariants", seifert_text, "Seifert invariants, e.g. \"M(-1;(5,2))\"")->required();
  auto* group = app.add_subcommand("group", "Coset enumeration and abelianization");
  group->add_option("presentation", group_text, "e.g. \"< a, h | a^-1 h a h, a^4 h^-3 >\"")->required();
  group->add_option("--subgroup", subgroup, "Subgroup generator word (repeatable)");
  group->add_flag("--table", table, "Include the coset table");
  auto* verify = app.add_subcommand("verify-action", "Check the isometries A+, A-, Phi for one n");
  verify->add_option("n", n, "Cone order n >= 1")->required();
  auto* tower = app.add_subcommand("tower", "Covering tower over RP2(n1,n2)");
  tower->add_option("n1", n1)->required();
  tower->add_option("n2", n2)->required();
  tower->add_option("--depth", depth, "Number of covering steps")->check(CLI::PositiveNumber);
  auto* scan = app.add_subcommand("scan", "Classify every lens space with p <= p_max");
  scan->add_option("p_max", p_max)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(lens_text, opt, out);
    if (recognize->parsed()) return cmd_recognize(seifert_text, opt, out);
    if (group->parsed()) return cmd_group(group_text, subgroup, table, opt, out);
    if (verify->parsed()) return cmd_verify_action(n, opt, out);
    if (tower->parsed()) return cmd_tower(n1, n2, depth, opt, out);
    if (scan->parsed()) return cmd_scan(p_max, opt, out);
  } catch (ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (UnsupportedBase const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (CosetLimitExceeded const& e) {
    err << "error: " << e.what() << '\n';
    return kExitNegative;
  }
  return kExitUsage;
}

inline int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  std::vector<char const*> argv{"seifert-lens"};
  for (auto const& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace seifert_lens::cli
