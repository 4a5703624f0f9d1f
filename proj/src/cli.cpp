#include "ggl/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ggl/demo.hpp"
#include "ggl/error.hpp"
#include "ggl/groupoid.hpp"
#include "ggl/identities.hpp"
#include "ggl/structure.hpp"
#include "ggl/theorems.hpp"

namespace ggl::cli {

  namespace {

    using nlohmann::json;

    struct GroupoidArgs {
      std::string carrier;
      std::string shape = "scalar";
      std::string pair;
    };

    void add_groupoid_flags(CLI::App* cmd, GroupoidArgs& a) {
      cmd->add_option("--carrier", a.carrier, "zn:N, zni:N, nzn:N, o(...) or q")->required();
      cmd->add_option("--shape", a.shape, "scalar, mat:RxC or poly:D:entrywise|shuffle|conv")
          ->capture_default_str();
      cmd->add_option("--pair", a.pair, "T,U with an optional I suffix on either side")->required();
    }

    Groupoid build_groupoid(GroupoidArgs const& a) {
      GroupoidSpec spec;
      spec.carrier = parse_carrier(a.carrier);
      spec.shape   = parse_shape(a.shape);
      auto p       = split_pair(a.pair);
      spec.t       = parse_param(spec.carrier, p.t);
      spec.u       = parse_param(spec.carrier, p.u);
      return Groupoid::build(spec);
    }

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw ParseError("cannot read '" + path + "'");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    std::vector<std::string> split_commas(std::string const& text) {
      std::vector<std::string> out;
      std::stringstream        ss(text);
      std::string              item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
          out.push_back(item);
        }
      }
      return out;
    }

    std::string provenance(ClassCountQuery const& q) {
      auto const  c = q.carrier.inner();
      std::string what;
      switch (q.kind) {
        case ClassKind::AllPairs:
          what = "ordered pairs (t, u) of nonzero " + c.name() + " values";
          break;
        case ClassKind::LevelOnePairs:
          what = "ordered pairs (t, u) of nonzero " + c.name() + " values with unit gcd content";
          break;
        case ClassKind::IdempotentPairs:
          what = "ordered pairs (t, u) of nonzero " + c.name() + " values with t + u = "
                 + format_value(c, unit(c));
          break;
      }
      what += q.equal_pairs ? ", t = u included" : ", t != u";
      return what;
    }

  }  // namespace

  PairText split_pair(std::string const& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
      throw ParseError("malformed pair '" + text + "', expected T,U");
    }
    PairText p{text.substr(0, comma), text.substr(comma + 1)};
    if (p.t.empty() || p.u.empty()) {
      throw ParseError("malformed pair '" + text + "', expected T,U");
    }
    return p;
  }

  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Star groupoids over modular, neutrosophic and interval carriers", "ggl"};
    app.require_subcommand(1);

    GroupoidArgs table_args;
    std::string  table_format = "tsv";
    std::uint64_t table_cap   = kDefaultTableCap;
    auto*        table        = app.add_subcommand("table", "Print the Cayley table");
    add_groupoid_flags(table, table_args);
    table->add_option("--format", table_format)->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
    table->add_option("--cap", table_cap, "largest order to print")->capture_default_str();

    GroupoidArgs check_args;
    std::string  identity;
    std::string  mode_text = "auto";
    auto*        check     = app.add_subcommand("check", "Check an identity");
    add_groupoid_flags(check, check_args);
    check->add_option("--identity", identity, "associative, commutative, idempotent, alternative, ...")
        ->required();
    check->add_option("--mode", mode_text, "exhaustive, auto or sampled:N:SEED")->capture_default_str();

    GroupoidArgs  structure_args;
    std::uint64_t max_order = kDefaultClosureLimit;
    auto*         structure = app.add_subcommand("structure", "Report subgroupoids, ideals and simplicity");
    add_groupoid_flags(structure, structure_args);
    structure->add_option("--max-order", max_order, "largest order searched")->capture_default_str();

    std::string   suite = "default";
    std::string   only;
    std::string   range_text;
    std::uint64_t seed = 42;
    std::string   config_path;
    bool          no_timing = false;
    auto*         verify    = app.add_subcommand("verify", "Run the theorem suite");
    auto*         suite_opt = verify->add_option("--suite", suite)->check(CLI::IsMember({"default"}))->capture_default_str();
    verify->add_option("--only", only, "comma separated check ids");
    verify->add_option("--range", range_text, "n=LO..HI or p=LO..HI for every selected check");
    auto* seed_opt = verify->add_option("--seed", seed)->capture_default_str();
    verify->add_option("--config", config_path, "suite config JSON file")->excludes(suite_opt);
    verify->add_flag("--no-timing", no_timing, "omit timing fields");

    std::string count_carrier;
    std::string count_kind;
    bool        equal_pairs  = false;
    std::string count_format = "text";
    auto*       count        = app.add_subcommand("count", "Count parameter pairs of a class");
    count->add_option("--carrier", count_carrier)->required();
    count->add_option("--class", count_kind, "all-pairs, level-one-pairs or idempotent-pairs")->required();
    count->add_flag("--equal-pairs", equal_pairs, "include t = u");
    count->add_option("--format", count_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    std::string example;
    bool        list_demos = false;
    auto*       demo       = app.add_subcommand("demo", "Replay a worked example");
    auto*       example_opt = demo->add_option("--example", example, "example number, e.g. 2.2.1");
    demo->add_flag("--list", list_demos, "list available examples")->excludes(example_opt);

    try {
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kExitOk;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }

    try {
      if (table->parsed()) {
        auto g = build_groupoid(table_args);
        auto t = cayley_table(g, table_cap);
        out << (table_format == "json" ? to_json_text(t) + "\n" : to_tsv(t));
        return kExitOk;
      }

      if (check->parsed()) {
        auto g    = build_groupoid(check_args);
        auto ids  = parse_identity_set(identity);
        auto mode = parse_mode(mode_text);
        json verdicts = json::array();
        for (auto id : ids) {
          auto v = to_json(check_identity(g, id, mode));
          v["groupoid"] = g.describe();
          verdicts.push_back(std::move(v));
        }
        out << (verdicts.size() == 1 ? verdicts[0] : verdicts).dump(2) << "\n";
        return kExitOk;
      }

      if (structure->parsed()) {
        auto g = build_groupoid(structure_args);
        auto r = structure_report(g, max_order);
        r["groupoid"] = g.describe();
        out << r.dump(2) << "\n";
        return kExitOk;
      }

      if (verify->parsed()) {
        SuiteConfig cfg = config_path.empty() ? default_config(seed) : parse_suite_config(read_file(config_path));
        if (!config_path.empty() && seed_opt->count() > 0) {
          cfg.seed = seed;
        }
        if (!only.empty()) {
          std::vector<CheckRequest> picked;
          for (auto const& id : split_commas(only)) {
            find_check(id);
            auto it = std::find_if(cfg.checks.begin(), cfg.checks.end(),
                                   [&](CheckRequest const& c) { return c.id == id; });
            picked.push_back(it != cfg.checks.end() ? *it : CheckRequest{id, std::nullopt});
          }
          cfg.checks = std::move(picked);
        }
        if (!range_text.empty()) {
          auto r = parse_range(range_text);
          for (auto& c : cfg.checks) {
            c.range = r;
          }
        }
        auto report = run_suite(cfg);
        out << to_json(report, !no_timing).dump(2) << "\n";
        return report.asserted_ok() ? kExitOk : kExitFailed;
      }

      if (count->parsed()) {
        ClassCountQuery q;
        q.carrier     = parse_carrier(count_carrier);
        q.kind        = parse_class_kind(count_kind);
        q.equal_pairs = equal_pairs;
        auto n        = count_class(q);
        if (count_format == "json") {
          json j{{"carrier", q.carrier.name()},
                 {"class", class_kind_name(q.kind)},
                 {"equal_pairs", q.equal_pairs},
                 {"count", n},
                 {"provenance", provenance(q)}};
          out << j.dump(2) << "\n";
        } else {
          out << n << "\n" << "# " << provenance(q) << "\n";
        }
        return kExitOk;
      }

      if (demo->parsed()) {
        if (list_demos || example.empty()) {
          for (auto const& name : demo_names()) {
            out << name << "\n";
          }
          return kExitOk;
        }
        auto r = run_demo(example);
        out << "Example " << r.name << ": " << r.title << "\n" << r.output;
        out << (r.matches ? "golden: match\n" : "golden: MISMATCH\n");
        if (!r.matches) {
          err << "expected:\n" << r.golden;
        }
        return r.matches ? kExitOk : kExitFailed;
      }
    } catch (BudgetExceeded const& e) {
      json j{{"error", "budget-exceeded"},
             {"message", e.what()},
             {"required", e.required()},
             {"limit", e.limit()}};
      err << j.dump() << "\n";
      return kExitBudget;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    return kExitUsage;
  }

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
      args.emplace_back(argv[i]);
    }
    return run(std::move(args), out, err);
  }

}  // namespace ggl::cli
