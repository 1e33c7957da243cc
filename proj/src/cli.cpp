#include "resconv/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "resconv/analysis.hpp"
#include "resconv/circuit.hpp"
#include "resconv/comb.hpp"
#include "resconv/errors.hpp"
#include "resconv/finstoch.hpp"
#include "resconv/instances.hpp"

namespace resconv {

namespace {

nlohmann::json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw InputError(path + ": " + e.what());
  }
}

nlohmann::json parse_json_arg(const std::string &text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &) {
    throw InputError("cannot parse '" + text + "' as JSON");
  }
}

std::string render(const Decision &d) {
  std::ostringstream os;
  os << to_string(d.verdict());
  if (d.is_unknown()) {
    os << " (bound " << d.bound() << ")";
    if (!d.reason().empty()) os << ": " << d.reason();
  }
  os << "\n";
  if (d.witness())
    for (const auto &s : d.witness()->steps) os << "  " << s << "\n";
  return os.str();
}

nlohmann::json decision_json(const Decision &d) {
  nlohmann::json j{{"verdict", std::string(to_string(d.verdict()))}, {"bound", d.bound()}};
  if (d.witness()) j["certificate"] = d.witness()->steps;
  if (!d.reason().empty()) j["reason"] = d.reason();
  return j;
}

std::string matrix_text(const StochMap &m) {
  std::ostringstream os;
  os << "  " << m.dom().str() << " → " << m.cod().str() << "\n";
  for (Eigen::Index r = 0; r < m.matrix().rows(); ++r) {
    os << "    [";
    for (Eigen::Index c = 0; c < m.matrix().cols(); ++c) os << (c ? " " : "") << m.matrix()(r, c).str();
    os << "]\n";
  }
  return os.str();
}

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

}  // namespace

LoadedTheory load_theory(const nlohmann::json &j, std::size_t bound) {
  if (!j.is_object()) throw InputError("theory file must hold a JSON object");
  LoadedTheory lt;
  if (j.contains("carrier")) {
    lt.table = table_from_json(j);
    lt.oracle = std::make_unique<TableTheory>(*lt.table, j.value("name", std::string("table")));
  } else if (j.contains("objects")) {
    lt.oracle = std::make_unique<ReactionTheory>(presented_smc_from_json(j), SearchLimits{bound, 0});
  } else if (j.contains("kind")) {
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "food") {
      lt.oracle = std::make_unique<VectorTheory>(VectorTheory::food());
    } else if (kind == "proficiency") {
      lt.oracle = std::make_unique<VectorTheory>(VectorTheory::proficiency());
    } else if (kind == "vector") {
      const std::size_t arity = j.value("arity", std::size_t{2});
      const std::string mode = j.value("mode", std::string("additive"));
      if (mode != "additive" && mode != "supremal") throw InputError("vector mode must be additive or supremal");
      lt.oracle = std::make_unique<VectorTheory>(arity, mode == "additive" ? VectorMode::Additive : VectorMode::Supremal);
    } else if (kind == "randomness") {
      lt.oracle = std::make_unique<RandomnessTheory>();
    } else if (kind == "entanglement") {
      lt.oracle = std::make_unique<EntanglementSpectrumTheory>();
    } else {
      throw InputError("unknown theory kind '" + kind + "'");
    }
  } else {
    throw InputError("cannot tell the theory kind: expected a \"carrier\", \"objects\" or \"kind\" key");
  }
  if (j.contains("monotones")) {
    for (const auto &m : j["monotones"]) {
      if (!m.contains("name")) throw InputError("monotone entries need a \"name\"");
      const MonotoneClass cls = monotone_class_from_string(m.value("class", std::string("general")));
      lt.monotones.push_back(builtin_monotone(m["name"].get<std::string>(), cls, *lt.oracle));
    }
  }
  return lt;
}

LoadedTheory load_theory_file(const std::string &path, std::size_t bound) { return load_theory(read_json_file(path), bound); }

std::vector<Term> theory_sample(const TheoryOracle &t, std::size_t box) {
  if (auto c = t.carrier()) return *c;
  return t.enumerate_up_to(box);
}

std::string hasse_dot(const TheoryOracle &t, const std::vector<Term> &sample, std::size_t *nodes, std::size_t *edges) {
  const std::size_t n = sample.size();
  std::vector<std::vector<bool>> ge(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ge[i][j] = i == j || t.geq(sample[i], sample[j]).is_proven();

  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> cls(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] != n) continue;
    cls[i] = classes.size();
    classes.push_back({i});
    for (std::size_t j = i + 1; j < n; ++j)
      if (cls[j] == n && ge[i][j] && ge[j][i]) {
        cls[j] = cls[i];
        classes.back().push_back(j);
      }
  }
  const std::size_t k = classes.size();
  auto above = [&](std::size_t x, std::size_t y) { return x != y && ge[classes[x][0]][classes[y][0]]; };

  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t x = 0; x < k; ++x) {
    std::string label;
    for (std::size_t m : classes[x]) label += (label.empty() ? "" : ", ") + t.format(sample[m]);
    std::string escaped;
    for (char c : label) escaped += c == '"' ? std::string("\\\"") : std::string(1, c);
    os << "  c" << x << " [label=\"" << escaped << "\"];\n";
  }
  std::size_t e = 0;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      if (!above(x, y)) continue;
      bool covered = true;
      for (std::size_t z = 0; z < k && covered; ++z) covered = !(above(x, z) && above(z, y));
      if (!covered) continue;
      os << "  c" << y << " -> c" << x << ";\n";
      ++e;
    }
  os << "}\n";
  if (nodes) *nodes = k;
  if (edges) *edges = e;
  return os.str();
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Resource convertibility toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::uint64_t seed = 0;
  std::size_t bound = 6;
  std::size_t caps = 8;
  std::size_t box = 4;
  std::string out_path;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--bound", bound, "Search bound");
  app.add_option("--caps", caps, "Copy or alphabet caps");
  app.add_option("--box,--sample-box", box, "Sample box for infinite theories");
  app.add_option("--out", out_path, "Write the main output to this file");

  std::string theory_path;
  std::string arg_a;
  std::string arg_b;
  std::vector<std::string> files;

  auto *check = app.add_subcommand("check-axioms", "Check the axioms of a theory (or of a random table)");
  check->add_option("theory", theory_path, "Theory JSON, or 'random'")->required();

  auto *convert = app.add_subcommand("convert", "Decide a ⪰ b");
  convert->add_option("theory", theory_path)->required();
  convert->add_option("a", arg_a)->required();
  convert->add_option("b", arg_b)->required();

  std::string candidates_text;
  auto *catalyst = app.add_subcommand("catalyst", "Search for a catalyst");
  catalyst->add_option("theory", theory_path)->required();
  catalyst->add_option("a", arg_a)->required();
  catalyst->add_option("b", arg_b)->required();
  catalyst->add_option("--candidates", candidates_text, "JSON list of candidate catalysts");

  auto *properties = app.add_subcommand("properties", "Structural property report (JSON array)");
  properties->add_option("theory", theory_path)->required();

  bool minimal = false;
  auto *rate_cmd = app.add_subcommand("rate", "Conversion rate with monotone bounds");
  rate_cmd->add_option("theory", theory_path)->required();
  rate_cmd->add_option("a", arg_a)->required();
  rate_cmd->add_option("b", arg_b)->required();
  rate_cmd->add_flag("--minimal", minimal, "Minimal instead of maximal rate");

  auto *monotones_cmd = app.add_subcommand("monotones", "Verify and classify declared monotones");
  monotones_cmd->add_option("theory", theory_path)->required();

  auto *hasse = app.add_subcommand("hasse", "Hasse diagram of the quotient by ≃ as DOT");
  hasse->add_option("theory", theory_path)->required();

  bool stochastic = false;
  auto *simulate = app.add_subcommand("simulate-channel", "Search for an exact channel simulation");
  simulate->add_option("channel", arg_a)->required();
  simulate->add_option("target", arg_b)->required();
  simulate->add_flag("--stochastic-coders", stochastic, "Admit stochastic encoders and decoders");

  std::string dot_path;
  auto *normalize = app.add_subcommand("normalize-circuit", "Comb normal form of a one-hole circuit");
  normalize->add_option("circuit", theory_path)->required();
  normalize->add_option("--dot", dot_path, "Also write the circuit DAG as DOT");

  auto *plug = app.add_subcommand("plug", "Plug combs into the holes of an outer comb");
  plug->add_option("outer", theory_path)->required();
  plug->add_option("inner", files);

  auto *uc = app.add_subcommand("uc-apply", "Apply a UC allocation transformation");
  uc->add_option("transformation", theory_path)->required();
  uc->add_option("processes", files);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ostringstream text;
    int code = 0;

    if (*check) {
      if (theory_path == "random") {
        std::mt19937_64 rng(seed);
        const FiniteTheoryTable t = random_theory_table(rng);
        const auto v = check_axioms(t);
        if (as_json) {
          text << nlohmann::json{{"table", to_json(t)}, {"violations", v.size()}}.dump(2) << "\n";
        } else {
          text << to_json(t).dump() << "\n" << v.size() << " violations\n";
        }
        code = v.empty() ? 0 : 1;
      } else {
        const LoadedTheory lt = load_theory_file(theory_path, bound);
        std::vector<AxiomViolation> v;
        if (lt.table) {
          v = check_axioms(*lt.table);
        } else {
          v = check_axioms_on_sample(*lt.oracle, theory_sample(*lt.oracle, box));
        }
        if (as_json) {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto &x : v) arr.push_back({{"law", x.law}, {"elements", x.elements}, {"message", x.message}});
          text << nlohmann::json{{"exhaustive", lt.table.has_value()}, {"violations", arr}}.dump(2) << "\n";
        } else {
          for (const auto &x : v) text << x.law << ": " << x.message << "\n";
          text << v.size() << " violations" << (lt.table ? " (exhaustive)" : " on sample") << "\n";
        }
        code = v.empty() ? 0 : 1;
      }
    } else if (*convert) {
      const LoadedTheory lt = load_theory_file(theory_path, bound);
      const Term a = lt.oracle->parse_term(parse_json_arg(arg_a));
      const Term b = lt.oracle->parse_term(parse_json_arg(arg_b));
      const Decision d = lt.oracle->geq(a, b);
      text << (as_json ? decision_json(d).dump(2) + "\n" : render(d));
      code = d.is_proven() ? 0 : 1;
    } else if (*catalyst) {
      const LoadedTheory lt = load_theory_file(theory_path, bound);
      const Term a = lt.oracle->parse_term(parse_json_arg(arg_a));
      const Term b = lt.oracle->parse_term(parse_json_arg(arg_b));
      std::vector<Term> cands;
      if (candidates_text.empty()) {
        cands = theory_sample(*lt.oracle, box);
      } else {
        for (const auto &c : parse_json_arg(candidates_text)) cands.push_back(lt.oracle->parse_term(c));
      }
      const CatalystResult r = find_catalyst(*lt.oracle, a, b, cands, bound);
      if (as_json) {
        nlohmann::json j = decision_json(r.decision);
        j["catalyst"] = r.catalyst ? lt.oracle->term_to_json(*r.catalyst) : nlohmann::json();
        text << j.dump(2) << "\n";
      } else {
        if (r.catalyst) text << "catalyst " << lt.oracle->format(*r.catalyst) << "\n";
        text << render(r.decision);
      }
      code = r.catalyst ? 0 : 1;
    } else if (*properties) {
      const LoadedTheory lt = load_theory_file(theory_path, bound);
      const TheoryOracle &t = *lt.oracle;
      const auto sample = theory_sample(t, box);
      std::vector<PropertyReport> reports{check_catalysis_free(t, sample, bound), check_non_interacting(t, sample, bound),
                                          check_quantity_like(t, sample), check_quality_like(t, sample),
                                          check_waste_free(t, sample)};
      for (auto &r : cross_check_theorems(t, sample, bound)) reports.push_back(std::move(r));
      nlohmann::json arr = nlohmann::json::array();
      for (const auto &r : reports) arr.push_back(to_json(r, t));
      text << arr.dump(2) << "\n";
    } else if (*rate_cmd) {
      const LoadedTheory lt = load_theory_file(theory_path, bound);
      const Term a = lt.oracle->parse_term(parse_json_arg(arg_a));
      const Term b = lt.oracle->parse_term(parse_json_arg(arg_b));
      const RateResult r = minimal ? minimal_rate(*lt.oracle, a, b, caps) : rate(*lt.oracle, a, b, caps, lt.monotones);
      if (as_json) {
        text << to_json(r).dump(2) << "\n";
      } else {
        text << (minimal ? "minimal" : "maximal") << " rate at caps " << r.caps << ": " << r.best.str();
        if (r.best_pair) text << " (" << r.best_pair->first << " copies → " << r.best_pair->second << " copies)";
        text << "\n";
        if (r.upper_bound) {
          text << "monotone bound: " << to_string(*r.upper_bound) << " from " << r.bound_monotone << "\n";
        } else if (r.bound_infinite) {
          text << "monotone bound: ∞\n";
        }
        if (r.exact) text << "exact: best found meets the bound\n";
        if (r.inconclusive) text << "some queries were inconclusive\n";
      }
      code = r.best_pair ? 0 : 1;
    } else if (*monotones_cmd) {
      const LoadedTheory lt = load_theory_file(theory_path, bound);
      const auto sample = theory_sample(*lt.oracle, box);
      std::vector<PropertyReport> reports;
      for (const auto &m : lt.monotones) {
        reports.push_back(verify_monotone(m, *lt.oracle, sample));
        reports.push_back(classify(m, *lt.oracle, sample));
      }
      std::optional<std::pair<std::size_t, std::size_t>> gap;
      std::size_t family_size = 0;
      if (lt.table) {
        const auto family = complete_family(*lt.table);
        family_size = family.size();
        gap = completeness_violation(*lt.table, family);
      }
      if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &r : reports) arr.push_back(to_json(r, *lt.oracle));
        nlohmann::json j{{"reports", arr}};
        if (lt.table) {
          j["complete_family"] = {{"size", family_size},
                                  {"complete", !gap.has_value()}};
        }
        text << j.dump(2) << "\n";
      } else {
        for (const auto &r : reports) text << r.property << ": " << r.status() << "\n";
        if (lt.table) {
          text << "complete family of " << family_size << " indicator monotones: "
               << (gap ? "fails on (" + std::to_string(gap->first) + ", " + std::to_string(gap->second) + ")" : "complete")
               << "\n";
        }
      }
      for (const auto &r : reports)
        if (r.refuted()) code = 1;
      if (gap) code = 1;
    } else if (*hasse) {
      const LoadedTheory lt = load_theory_file(theory_path, bound);
      std::size_t nodes = 0;
      std::size_t edges = 0;
      const std::string dot = hasse_dot(*lt.oracle, theory_sample(*lt.oracle, box), &nodes, &edges);
      if (out_path.empty()) {
        text << dot;
      } else {
        write_output(out_path, dot, out);
        text << nodes << " nodes, " << edges << " edges written to " << out_path << "\n";
      }
      out << text.str();
      return 0;
    } else if (*simulate) {
      const StochMap p = stochmap_from_json(read_json_file(arg_a));
      const StochMap target = stochmap_from_json(read_json_file(arg_b));
      SimulationCaps c{caps, caps, stochastic};
      const SimulationDecision r = search_exact_simulation(p, target, c);
      if (as_json) {
        nlohmann::json j = decision_json(r.decision);
        if (r.witness) {
          j["encoder"] = to_json(r.witness->encoder);
          j["decoder"] = to_json(r.witness->decoder);
          nlohmann::json joint = nlohmann::json::array();
          for (Eigen::Index x = 0; x < r.witness->randomness.joint.rows(); ++x) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index y = 0; y < r.witness->randomness.joint.cols(); ++y)
              row.push_back(r.witness->randomness.joint(x, y).str());
            joint.push_back(row);
          }
          j["randomness"] = joint;
        }
        text << j.dump(2) << "\n";
      } else {
        text << render(r.decision);
        if (r.witness) {
          const StochMap q = simulate_channel(p, r.witness->encoder, r.witness->decoder, r.witness->randomness);
          text << "encoder\n" << matrix_text(r.witness->encoder) << "decoder\n" << matrix_text(r.witness->decoder);
          text << "re-verified by simulation: " << (q.matrix() == target.matrix() ? "yes" : "NO") << "\n";
        }
      }
      code = r.decision.is_proven() ? 0 : 1;
    } else if (*normalize) {
      const CircuitDiagram c = parse_circuit_file(theory_path);
      const OneComb k = normalize_to_comb(c);
      const CircuitNode &hole = *c.holes().front();
      const auto basis = all_deterministic_maps(hole.dom, hole.cod);
      std::size_t agree = 0;
      for (const auto &f : basis)
        if (apply_comb(k, f) == evaluate_circuit(c, {{hole.name, f}})) ++agree;
      const bool ok = agree == basis.size();
      if (as_json) {
        text << nlohmann::json{{"comb", to_json(k)}, {"basis_processes", basis.size()}, {"matches", ok}}.dump(2) << "\n";
      } else {
        text << "hole " << hole.name << ": " << hole.dom.str() << " → " << hole.cod.str() << "\n";
        text << "ancilla Z = " << k.ancilla().str() << "\n";
        text << "pre-map ξ1\n" << matrix_text(k.pre()) << "post-map ξ2\n" << matrix_text(k.post());
        if (ok) {
          text << "matches circuit on " << basis.size() << " basis processes\n";
        } else {
          text << "MISMATCH: agrees on " << agree << " of " << basis.size() << " basis processes\n";
        }
      }
      if (!dot_path.empty()) write_output(dot_path, circuit_to_dot(c), out);
      code = ok ? 0 : 1;
    } else if (*plug) {
      auto load_comb = [](const std::string &path) {
        const nlohmann::json j = read_json_file(path);
        return j.contains("pre") ? NComb::from_one_comb(one_comb_from_json(j)) : ncomb_from_json(j);
      };
      const NComb outer = load_comb(theory_path);
      std::vector<NComb> inner;
      for (const auto &f : files) inner.push_back(load_comb(f));
      text << to_json(plug_ncombs(outer, inner)).dump(2) << "\n";
    } else if (*uc) {
      const UCTransformation t = uc_from_json(read_json_file(theory_path));
      std::vector<StochMap> fs;
      for (const auto &f : files) fs.push_back(stochmap_from_json(read_json_file(f)));
      nlohmann::json arr = nlohmann::json::array();
      for (const auto &m : apply_uc(t, fs)) arr.push_back(to_json(m));
      text << arr.dump(2) << "\n";
    }

    write_output(out_path, text.str(), out);
    return code;
  } catch (const InputError &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace resconv
