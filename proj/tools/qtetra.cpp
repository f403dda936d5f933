// qtetra: verify, extract, reconstruct, and generate modules and pairs for
// the q-tetrahedron algebra over exact rational arithmetic.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qtet/gen.hpp"
#include "qtet/io.hpp"
#include "qtet/pairs.hpp"
#include "qtet/split.hpp"

namespace {

using nlohmann::json;
using namespace qtet;

struct Options {
  std::string q = "2";
  bool q_explicit = false;
  std::vector<std::string> in;
  std::string out;
  std::string format = "json";
  int d = 1;
};

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw io_error("cannot open " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw io_error(path + ": " + e.what());
  }
  return j;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  std::ostream* os = &std::cout;
  std::ofstream f;
  if (!opt.out.empty()) {
    f.open(opt.out);
    if (!f) throw io_error("cannot write " + opt.out);
    os = &f;
  }
  if (opt.format == "json")
    *os << j.dump(2) << "\n";
  else
    *os << text;
}

json report_json(const Report& r, std::optional<int> d = std::nullopt,
                 std::optional<int> type = std::nullopt) {
  json j = {{"ok", r.ok()}, {"report", report_to_json(r)}};
  if (d) j["d"] = *d;
  if (type) j["type"] = *type;
  return j;
}

std::string report_text(const Report& r, const std::string& ok_line) {
  return r.ok() ? ok_line + "\n" : r.summary();
}

QParam<Rat> effective_q(const Options& opt, const Rat& file_q) {
  return QParam<Rat>(opt.q_explicit ? parse_rat(opt.q) : file_q);
}

// Loads and certifies a module file; on failure emits the report and
// signals exit 1 via nullopt.
std::optional<ModuleRep<Rat>> load_module(const Options& opt) {
  auto mf = module_from_json(read_json_file(opt.in.at(0)));
  auto q = effective_q(opt, mf.q);
  auto check = verify_module(q, mf.assignment);
  if (!check.module) {
    emit(opt, report_json(check.report), report_text(check.report, ""));
    return std::nullopt;
  }
  return check.module;
}

struct LoadedPair {
  PairFile file;
  QParam<Rat> q;
};

LoadedPair load_pair_file(const Options& opt, std::size_t idx = 0) {
  auto pf = pair_from_json(read_json_file(opt.in.at(idx)));
  auto q = effective_q(opt, pf.q);
  return {std::move(pf), std::move(q)};
}

int cmd_verify_module(const Options& opt) {
  auto mf = module_from_json(read_json_file(opt.in.at(0)));
  auto q = effective_q(opt, mf.q);
  auto check = verify_module(q, mf.assignment);
  if (check.module) {
    emit(opt, report_json(check.report, check.module->diameter(), check.module->type()),
         report_text(check.report, "ok: module of type " + std::to_string(check.module->type()) +
                                       ", d=" + std::to_string(check.module->diameter())));
    return 0;
  }
  emit(opt, report_json(check.report), report_text(check.report, ""));
  return 1;
}

int cmd_verify_pair(const Options& opt, bool tridiagonal) {
  auto [pf, q] = load_pair_file(opt);
  if (pf.tridiagonal != tridiagonal) throw io_error(tridiagonal ? "expected an A/Astar file" : "expected a K/Kstar file");
  PairCheck<Rat> check = tridiagonal ? verify_qtridiagonal(q, pf.first, pf.second)
                                     : verify_qinverting(q, pf.first, pf.second);
  std::optional<int> d;
  if (check.inverting) d = check.inverting->diameter();
  if (check.tridiagonal) d = check.tridiagonal->diameter();
  emit(opt, report_json(check.report, d),
       report_text(check.report, d ? "ok: d=" + std::to_string(*d) : "ok"));
  return check.report.ok() ? 0 : 1;
}

int cmd_extract(const Options& opt, bool tridiagonal) {
  auto m = load_module(opt);
  if (!m) return 1;
  json j;
  if (tridiagonal) {
    auto p = extract_qtridiagonal(*m);
    j = pair_to_json(m->q().value(), p.A_op(), p.Astar_op(), true);
  } else {
    auto p = extract_qinverting(*m);
    j = pair_to_json(m->q().value(), p.K_op(), p.Kstar_op(), false);
  }
  emit(opt, j, j.dump(2) + "\n");
  return 0;
}

int cmd_reconstruct(const Options& opt) {
  auto [pf, q] = load_pair_file(opt);
  if (pf.tridiagonal) throw io_error("reconstruct expects a K/Kstar file");
  auto check = verify_qinverting(q, pf.first, pf.second);
  if (!check.inverting) {
    emit(opt, report_json(check.report), report_text(check.report, ""));
    return 1;
  }
  auto m = reconstruct_module(*check.inverting);
  json j = module_to_json(q.value(), m.assignment());
  emit(opt, j, j.dump(2) + "\n");
  return 0;
}

int cmd_roundtrip(const Options& opt) {
  auto m = load_module(opt);
  if (!m) return 1;
  auto p = extract_qinverting(*m);
  auto back = reconstruct_module(p);
  Report r;
  for (const auto& g : all_generators())
    if (!(m->generator(g) == back.generator(g))) r.fail("roundtrip", g.name(), "entries differ");
  emit(opt, report_json(r, m->diameter()), report_text(r, "ok: roundtrip exact, d=" + std::to_string(m->diameter())));
  return r.ok() ? 0 : 1;
}

int cmd_z4_orbit(const Options& opt) {
  auto [pf, q] = load_pair_file(opt);
  if (pf.tridiagonal) throw io_error("z4-orbit expects a K/Kstar file");
  auto check = verify_qinverting(q, pf.first, pf.second);
  if (!check.inverting) {
    emit(opt, report_json(check.report), report_text(check.report, ""));
    return 1;
  }
  std::vector<QInvertingPair<Rat>> orbit = {*check.inverting};
  Report r;
  for (int i = 1; i < 4; ++i) orbit.push_back(rho_action(orbit.back()));
  auto again = rho_action(orbit.back());
  if (!(again.K_op() == orbit[0].K_op() && again.Kstar_op() == orbit[0].Kstar_op()))
    r.fail("Sec5.order4", "", "rho^4 is not the identity");
  json iso = json::array();
  std::string pattern;
  for (int i = 0; i < 4; ++i) {
    bool same = static_cast<bool>(pairs_isomorphic(orbit[0], orbit[static_cast<std::size_t>(i)]));
    iso.push_back(same);
    pattern += same ? '1' : '0';
  }
  json j = report_json(r, orbit[0].diameter());
  j["isomorphic_to_first"] = iso;
  emit(opt, j, report_text(r, "ok: orbit certified, isomorphic-to-first pattern " + pattern));
  return r.ok() ? 0 : 1;
}

int cmd_isomorphic(const Options& opt) {
  if (opt.in.size() != 2) throw io_error("isomorphic needs exactly two --in files");
  std::vector<QInvertingPair<Rat>> ps;
  for (std::size_t i = 0; i < 2; ++i) {
    auto [pf, q] = load_pair_file(opt, i);
    if (pf.tridiagonal) throw io_error("isomorphic expects K/Kstar files");
    auto check = verify_qinverting(q, pf.first, pf.second);
    if (!check.inverting) {
      emit(opt, report_json(check.report), report_text(check.report, ""));
      return 1;
    }
    ps.push_back(*check.inverting);
  }
  auto witness = pairs_isomorphic(ps[0], ps[1]);
  if (witness) {
    json j = {{"isomorphic", true}, {"witness", matrix_to_json(*witness)}};
    emit(opt, j, "isomorphic\n");
    return 0;
  }
  emit(opt, json{{"isomorphic", false}}, "not isomorphic\n");
  return 1;
}

int cmd_gen_example(const Options& opt) {
  QParam<Rat> q(parse_rat(opt.q));
  ModuleRep<Rat> m = opt.d == 0 ? trivial_module(q, 1) : evaluation_module(q, opt.d);
  json j = module_to_json(q.value(), m.assignment());
  Options out_opt = opt;
  if (out_opt.out.empty()) {
    std::string qs = to_string(q.value());
    for (auto& c : qs)
      if (c == '/') c = '_';
    out_opt.out = "module_d" + std::to_string(opt.d) + "_q" + qs + ".json";
  }
  emit(out_opt, j, j.dump(2) + "\n");
  std::cout << "wrote " << out_opt.out << "\n";
  return 0;
}

int cmd_check_tables(const Options& opt) {
  auto m = load_module(opt);
  if (!m) return 1;
  Report r = verify_action_tables(*m);
  shape(*m);  // throws on shape disagreement; palindromic check inside
  auto flags = four_flags(*m);
  r.merge(flags.report);
  r.merge(check_flag_intersection(*m));
  emit(opt, report_json(r, m->diameter()), report_text(r, "ok: tables, flags, intersections"));
  return r.ok() ? 0 : 1;
}

int cmd_check_gen9(const Options& opt) {
  auto [pf, q] = load_pair_file(opt);
  PairCheck<Rat> check = pf.tridiagonal ? verify_qtridiagonal(q, pf.first, pf.second)
                                        : verify_qinverting(q, pf.first, pf.second);
  const Decomposition<Rat>* v = nullptr;
  const Decomposition<Rat>* vs = nullptr;
  if (check.inverting) {
    v = &check.inverting->witness();
    vs = &check.inverting->witness_star();
  } else if (check.tridiagonal) {
    v = &check.tridiagonal->witness();
    vs = &check.tridiagonal->witness_star();
  } else {
    emit(opt, report_json(check.report), report_text(check.report, ""));
    return 1;
  }
  auto gc = generalized_conditions_check(*v, *vs);
  json j = report_json(gc.report);
  json conds = json::array();
  for (int i = 0; i < 5; ++i) conds.push_back(gc.cond[i].pass);
  j["conditions"] = conds;
  emit(opt, j, report_text(gc.report, "ok: conditions (i)-(v) hold"));
  return gc.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for q-tetrahedron algebra modules and q-inverting pairs"};
  app.require_subcommand(1);

  Options opt;
  struct Sub {
    CLI::App* cmd;
    std::function<int()> run;
  };
  std::vector<Sub> subs;

  auto add = [&](const std::string& name, const std::string& desc, bool needs_in,
                 std::function<int()> run, bool multi_in = false) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->add_option("--q", opt.q, "rational q parameter (overrides file value)");
    auto* in = c->add_option("--in", opt.in, "input file");
    if (multi_in) in->expected(1, 2);
    if (needs_in) in->required();
    c->add_option("--out", opt.out, "output file (default stdout)");
    c->add_option("--format", opt.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    subs.push_back({c, std::move(run)});
    return c;
  };

  add("verify-module", "certify a module file against the defining relations", true,
      [&] { return cmd_verify_module(opt); });
  add("verify-pair", "certify a q-inverting pair (K/Kstar file)", true,
      [&] { return cmd_verify_pair(opt, false); });
  add("verify-tdpair", "certify a q-tridiagonal pair (A/Astar file)", true,
      [&] { return cmd_verify_pair(opt, true); });
  add("extract-pair", "extract the q-inverting pair (x02, x13) from a module", true,
      [&] { return cmd_extract(opt, false); });
  add("extract-tdpair", "extract the q-tridiagonal pair (x01, x23) from a module", true,
      [&] { return cmd_extract(opt, true); });
  add("reconstruct", "rebuild the full module from a q-inverting pair", true,
      [&] { return cmd_reconstruct(opt); });
  add("roundtrip", "extract then reconstruct and compare entry-wise", true,
      [&] { return cmd_roundtrip(opt); });
  add("z4-orbit", "certify all four Z4-orbit members of a q-inverting pair", true,
      [&] { return cmd_z4_orbit(opt); });
  add("isomorphic", "decide isomorphism of two q-inverting pairs", true,
      [&] { return cmd_isomorphic(opt); }, true);
  auto* gen = add("gen-example", "generate a certified example module", false,
                  [&] { return cmd_gen_example(opt); });
  gen->add_option("--d", opt.d, "diameter (0..4)")->check(CLI::Range(0, 4));
  add("check-tables", "verify action tables, flags, and intersections on a module", true,
      [&] { return cmd_check_tables(opt); });
  add("check-gen9", "check generalized split conditions (i)-(v) on a pair", true,
      [&] { return cmd_check_gen9(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (auto& s : subs)
      if (s.cmd->parsed()) {
        for (auto& so : subs)
          if (so.cmd->parsed()) opt.q_explicit = so.cmd->count("--q") > 0;
        return s.run();
      }
    return 2;
  } catch (const io_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
