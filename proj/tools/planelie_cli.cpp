// planelie: command-line front end for the vector-field engine.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse/engine error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "planelie/error.hpp"
#include "planelie/replay.hpp"
#include "planelie/sl2.hpp"
#include "planelie/textio.hpp"

using namespace planelie;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
  bool json = false;
  std::string grid;
  std::string chart = kDefaultChart;
};

std::vector<Rational> parse_grid(const std::string& text) {
  if (text.empty()) return default_grid();
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const CoefFn c = parse_function(item);
    if (!c.is_zero() && (!c.is_constant() || !c.terms().front().coef.is_rational())) {
      throw Error(ErrorKind::InvalidArgument, "grid entry '" + item + "' is not a rational");
    }
    out.push_back(c.is_zero() ? Rational(0) : c.terms().front().coef.rational_part());
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty grid");
  return out;
}

Rational parse_rational(const std::string& text) { return parse_grid(text).at(0); }

std::vector<VectorField> parse_fields(const std::vector<std::string>& texts,
                                      const std::string& chart) {
  std::vector<VectorField> out;
  for (const auto& t : texts) out.push_back(parse_field(t, chart));
  return out;
}

void emit(const Globals& g, const std::string& command, const std::string& text,
          ordered_json extra = ordered_json::object()) {
  if (g.json) {
    ordered_json j;
    j["command"] = command;
    j["chart"] = g.chart;
    j["result"] = text;
    for (auto& [k, v] : extra.items()) j[k] = v;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

std::string join_fields(const std::vector<VectorField>& rows) {
  std::string out;
  for (const auto& r : rows) out += (out.empty() ? "" : "\n") + print_field(r);
  return out;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (auto n : v) out += (out.empty() ? "" : ", ") + std::to_string(n);
  return "[" + out + "]";
}

int emit_reports(const Globals& g, const std::vector<ClaimReport>& reports) {
  const RunSummary s = summarize(reports);
  for (const auto& r : reports) {
    std::cout << (g.json ? report_json(r) : report_text(r)) << "\n";
  }
  if (!g.json) {
    std::cout << "\n" << s.pass << " pass, " << s.fail << " fail, " << s.known_discrepancy
              << " known-discrepancy";
    if (!s.kd_families.empty()) {
      std::cout << " (";
      for (std::size_t i = 0; i < s.kd_families.size(); ++i) {
        std::cout << (i ? ", " : "") << s.kd_families[i];
      }
      std::cout << ")";
    }
    std::cout << "\n";
  }
  return s.fail == 0 ? kExitOk : kExitFail;
}

Realization pick_realization(const std::string& type, int eps) {
  if (type == "aI") return realization_aI();
  return realization_bII(eps);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie algebra computations with planar vector fields"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Structured, line-delimited output");
  app.add_option("--grid", g.grid, "Comma-separated weight grid, e.g. \"0,1/2,1\"");
  app.add_option("--chart", g.chart, "Chart of the input expressions")
      ->check(CLI::IsMember({"xy", "tilde"}));
  app.fallthrough();

  std::vector<std::string> exprs;
  std::string text_a, text_b;
  unsigned power = 1;
  std::size_t bound = 32;
  bool derived = false, lower = false;
  std::string type = "bII", weight = "0", part = "all", map = "step5", leaf;
  int eps = 0, ymin = 0, ymax = 3;
  unsigned depth = 64;

  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket [A, B]");
  bracket_cmd->add_option("A", text_a)->required();
  bracket_cmd->add_option("B", text_b)->required();

  auto* apply_cmd = app.add_subcommand("apply", "Apply a field to a function");
  apply_cmd->add_option("W", text_a)->required();
  apply_cmd->add_option("function", text_b)->required();

  auto* ad_cmd = app.add_subcommand("ad", "ad(A)^N B");
  ad_cmd->add_option("A", text_a)->required();
  ad_cmd->add_option("B", text_b)->required();
  ad_cmd->add_option("--power", power, "N")->required();

  auto* wedge_cmd = app.add_subcommand("wedge", "f1 g2 - f2 g1");
  wedge_cmd->add_option("A", text_a)->required();
  wedge_cmd->add_option("B", text_b)->required();

  auto* rank_cmd = app.add_subcommand("rank", "Generic rank of <A, B>");
  rank_cmd->add_option("A", text_a)->required();
  rank_cmd->add_option("B", text_b)->required();

  auto* closure_cmd = app.add_subcommand("closure", "Bracket closure of generators");
  closure_cmd->add_option("fields", exprs)->required();
  closure_cmd->add_option("--bound", bound, "Dimension bound")->check(CLI::PositiveNumber);

  auto* series_cmd = app.add_subcommand("series", "Derived or lower central series");
  series_cmd->add_option("fields", exprs)->required();
  auto* derived_flag = series_cmd->add_flag("--derived", derived);
  auto* lower_flag = series_cmd->add_flag("--lower-central", lower);
  derived_flag->excludes(lower_flag);
  series_cmd->add_option("--bound", bound, "Dimension bound for the closure");

  auto* hw_cmd = app.add_subcommand("hw-solve", "Highest weight vectors of a given weight");
  hw_cmd->add_option("--type", type)->check(CLI::IsMember({"aI", "bII"}));
  hw_cmd->add_option("--eps", eps)->check(CLI::IsMember({0, 1}));
  hw_cmd->add_option("--weight", weight)->required();
  hw_cmd->add_option("--ymin", ymin);
  hw_cmd->add_option("--ymax", ymax);

  auto* module_cmd = app.add_subcommand("module", "sl(2)-module generated by a highest weight vector");
  module_cmd->add_option("V", text_a)->required();
  module_cmd->add_option("--depth", depth);
  module_cmd->add_option("--type", type)->check(CLI::IsMember({"aI", "bII"}));
  module_cmd->add_option("--eps", eps)->check(CLI::IsMember({0, 1}));

  auto* push_cmd = app.add_subcommand("pushforward", "Change of coordinates");
  push_cmd->add_option("W", text_a)->required();
  push_cmd->add_option("--map", map)->check(CLI::IsMember({"step5"}));

  auto* fol_cmd = app.add_subcommand("foliation", "Is the line field of the leaf invariant");
  fol_cmd->add_option("fields", exprs)->required();
  fol_cmd->add_option("--leaf", leaf)->required();

  auto* verify_cmd = app.add_subcommand("verify-paper", "Replay the classification claims");
  verify_cmd->add_option("--part", part)->check(CLI::IsMember(
      {"a", "b", "c", "d", "step1", "step2", "step3", "step4", "step5", "all"}));

  auto* parse_cmd = app.add_subcommand("parse", "Echo the canonical form");
  parse_cmd->add_option("W", text_a)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::string& ch = g.chart;
    if (*bracket_cmd) {
      emit(g, "bracket", print_field(bracket(parse_field(text_a, ch), parse_field(text_b, ch))));
    } else if (*apply_cmd) {
      emit(g, "apply", print_coef(apply(parse_field(text_a, ch), parse_function(text_b))));
    } else if (*ad_cmd) {
      emit(g, "ad", print_field(ad_power(parse_field(text_a, ch), parse_field(text_b, ch), power)));
    } else if (*wedge_cmd) {
      emit(g, "wedge", print_coef(wedge(parse_field(text_a, ch), parse_field(text_b, ch))));
    } else if (*rank_cmd) {
      emit(g, "rank",
           std::to_string(generic_rank(parse_field(text_a, ch), parse_field(text_b, ch))));
    } else if (*closure_cmd) {
      const ClosureResult r = bracket_closure(parse_fields(exprs, ch), bound);
      std::string text = r.closed() ? "closed, dim " + std::to_string(r.basis.dim())
                                    : "exceeded bound " + std::to_string(bound);
      ordered_json extra;
      extra["closed"] = r.closed();
      extra["dim"] = r.basis.dim();
      extra["basis"] = ordered_json::array();
      for (const auto& row : r.basis.rows()) extra["basis"].push_back(print_field(row));
      if (r.witness) {
        text += ", witness " + print_field(*r.witness);
        extra["witness"] = print_field(*r.witness);
      }
      if (!g.json) text += "\n" + join_fields(r.basis.rows());
      emit(g, "closure", text, extra);
    } else if (*series_cmd) {
      const ClosureResult r = bracket_closure(parse_fields(exprs, ch), bound);
      if (!r.closed()) throw Error(ErrorKind::NotClosed, "closure exceeded bound");
      const auto dims = lower ? lower_central_series(r.basis) : derived_series(r.basis);
      emit(g, "series", join_sizes(dims));
    } else if (*hw_cmd) {
      const Sl2Triple t = [&] {
        const Realization s = pick_realization(type, eps);
        return verify_sl2_triple(s.X, s.Y);
      }();
      const HWSolution sol = hw_solve(t, HWAnsatz::uniform(parse_rational(weight), ymin, ymax));
      ordered_json extra;
      extra["dim"] = sol.dim();
      extra["basis"] = ordered_json::array();
      std::string text = "dim " + std::to_string(sol.dim());
      for (std::size_t i = 0; i < sol.basis.size(); ++i) {
        text += "\n" + sol.parameters[i] + ": " + print_field(sol.basis[i]);
        extra["basis"].push_back({{"parameter", sol.parameters[i]},
                                  {"field", print_field(sol.basis[i])}});
      }
      emit(g, "hw-solve", text, extra);
    } else if (*module_cmd) {
      const Realization s = pick_realization(type, eps);
      const Sl2Module m = sl2_module(verify_sl2_triple(s.X, s.Y), parse_field(text_a, ch), depth);
      std::string weights;
      ordered_json extra;
      extra["dim"] = m.basis.dim();
      extra["weights"] = ordered_json::array();
      for (const auto& w : m.weights) {
        weights += (weights.empty() ? "" : ", ") + print_scalar(w);
        extra["weights"].push_back(print_scalar(w));
      }
      extra["terminated"] = m.terminated;
      std::string text = "dim " + std::to_string(m.basis.dim()) + ", weights [" + weights + "]" +
                         (m.terminated ? "" : ", depth bound reached");
      emit(g, "module", text, extra);
    } else if (*push_cmd) {
      const ChartMap m = step5_map();
      const VectorField img = pushforward(parse_field(text_a, ch), m);
      emit(g, "pushforward", print_field(img), {{"target_chart", img.chart}});
    } else if (*fol_cmd) {
      const bool inv = foliation_invariant(parse_fields(exprs, ch), parse_field(leaf, ch));
      emit(g, "foliation", inv ? "invariant" : "not invariant", {{"invariant", inv}});
    } else if (*verify_cmd) {
      const std::vector<Rational> grid = parse_grid(g.grid);
      std::vector<ClaimReport> reports;
      if (part == "all") {
        reports = run_all(grid).reports;
      } else if (part.size() == 1) {
        reports = verify_theorem1(part[0], grid);
      } else {
        reports = verify_step(part.back() - '0', grid);
      }
      return emit_reports(g, reports);
    } else if (*parse_cmd) {
      emit(g, "parse", print_field(parse_field(text_a, ch)));
    }
  } catch (const Error& e) {
    if (g.json) {
      ordered_json j;
      j["error"] = to_string(e.kind());
      j["message"] = e.what();
      std::cout << j.dump() << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
