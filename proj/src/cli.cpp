#include "llull/cli.hpp"

#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "llull/blake.hpp"
#include "llull/errors.hpp"
#include "llull/serialize.hpp"

namespace llull {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const SizeError& e) {
    err << "size error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

struct Input {
  std::optional<Profile> profile;
  std::optional<ScoreVectors> scores;
  std::optional<LlullMatrix> matrix;
};

Input load(const std::string& path, const RunConfig& config) {
  Input in;
  if (config.matrix_input) {
    in.matrix = read_matrix_file(path);
    return in;
  }
  in.profile = read_profile_file(path, config.params);
  in.matrix = llull_matrix(*in.profile, config.truncation);
  in.scores = score_vectors(*in.profile, ScoreOptions{config.last_includes_unlisted});
  return in;
}

}  // namespace

int cmd_tally(const std::string& path, const RunConfig& config, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    Input in = load(path, config);
    MethodOptions opt;
    opt.init = config.init.value_or(default_init(config.method));
    opt.margin = config.margin;
    opt.comprehensive_cap = config.comprehensive_cap;
    MethodResult r = run_method(config.method, *in.matrix, in.scores ? &*in.scores : nullptr, opt);
    out << (config.format == OutputFormat::kJson ? dump_json(result_to_json(r))
                                                 : result_to_text(r));
    return 0;
  });
}

int cmd_matrix(const std::string& path, const RunConfig& config, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    Input in = load(path, config);
    const auto& m = *in.matrix;
    if (config.format == OutputFormat::kJson) {
      auto j = matrix_to_json(m);
      if (in.scores) j["scores"] = scores_to_json(m.options(), *in.scores);
      out << dump_json(j);
    } else {
      out << matrix_to_text(m);
      if (in.scores) out << '\n' << scores_to_text(m.options(), *in.scores);
    }
    return 0;
  });
}

int cmd_blake(DoctrineKind kind, std::size_t n, const RunConfig& config, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    if (n == 0) throw ConfigError("need at least one option");
    if (n > 64) throw SizeError("too many options for a canonical form");
    auto L = make_option_literals(kind, default_option_names(n));
    Doctrine d = build_doctrine(kind, L, {config.comprehensive_cap});
    Doctrine blake = blake_canonical_form(d);
    if (config.format == OutputFormat::kJson) {
      nlohmann::json clauses = nlohmann::json::array();
      for (const auto& c : blake.clauses()) {
        nlohmann::json labels = nlohmann::json::array();
        for (Literal l : c.literals()) labels.push_back(blake.universe().label(l));
        clauses.push_back(std::move(labels));
      }
      out << dump_json({{"doctrine", std::string(to_string(kind))},
                        {"options", n},
                        {"clauses", std::move(clauses)}});
    } else {
      out << dump_clauses(blake);
    }
    return 0;
  });
}

int cmd_verify(const std::string& path, const RunConfig& config, std::ostream& out,
               std::ostream& err, const Tamper& tamper) {
  return guarded(err, [&] {
    Input in = load(path, config);
    VerifyOptions opt;
    opt.comprehensive_cap = config.comprehensive_cap;
    opt.tamper = tamper;
    OracleReport r = verify_matrix(*in.matrix, in.scores ? &*in.scores : nullptr, opt);
    out << (config.format == OutputFormat::kJson ? dump_json(report_to_json(r))
                                                 : report_to_text(r));
    return r.all_agree() ? 0 : 1;
  });
}

int cmd_conjecture(const ConjectureOptions& options, OutputFormat format, std::ostream& out) {
  ConjectureReport r = run_conjecture_experiment(options);
  out << (format == OutputFormat::kJson ? dump_json(conjecture_to_json(r))
                                        : conjecture_to_text(r));
  return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degrees-of-belief social choice engine"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string method = "transitivity";
  std::string margin = "0";
  std::string truncation = "abstain";
  std::string init;
  std::string format = "text";
  std::size_t cap = 12;
  std::vector<std::string> params;
  bool last_unlisted = false;
  bool matrix_input = false;

  app.add_option("--method", method, "method id")->envname("LLULL_METHOD");
  app.add_option("--margin", margin, "decision margin in [0,1]")->envname("LLULL_MARGIN");
  app.add_option("--truncation", truncation, "abstain | ties")
      ->check(CLI::IsMember({"abstain", "ties"}))
      ->envname("LLULL_TRUNCATION");
  app.add_option("--init", init, "zero | plurality | plurality-last | approval")
      ->check(CLI::IsMember({"zero", "plurality", "plurality-last", "approval"}))
      ->envname("LLULL_INIT");
  app.add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("LLULL_FORMAT");
  app.add_option("--cap", cap, "comprehensive prominence option cap")->envname("LLULL_CAP");
  app.add_option("--param", params, "weight parameter, name=value");
  app.add_flag("--last-unlisted", last_unlisted, "count unlisted options as tied last")
      ->envname("LLULL_LAST_UNLISTED");
  app.add_flag("--matrix", matrix_input, "input is a Llull matrix JSON file");

  std::string path;
  auto* tally = app.add_subcommand("tally", "winners under a method");
  tally->add_option("input", path, "ballot file")->required();
  auto* matrix = app.add_subcommand("matrix", "Llull matrix and score vectors");
  matrix->add_option("input", path, "ballot file")->required();

  std::string doctrine;
  std::size_t n = 0;
  auto* blake = app.add_subcommand("blake", "Blake canonical form of a doctrine");
  blake->add_option("doctrine", doctrine, "doctrine name")->required();
  blake->add_option("n", n, "number of options")->required();

  ConjectureOptions conj;
  bool conjecture = false;
  auto* verify = app.add_subcommand("verify", "oracle cross-checks");
  verify->add_option("input", path, "ballot file");
  verify->add_flag("--conjecture", conjecture, "run the inclusion experiment instead");
  verify->add_option("--trials", conj.trials, "experiment trials");
  verify->add_option("--options", conj.options, "options per experiment profile");
  verify->add_flag("--complete", conj.complete, "complete rankings only");
  verify->add_option("--seed", conj.seed, "experiment seed")->envname("LLULL_SEED");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  RunConfig config;
  int status = guarded(err, [&] {
    config.method = parse_method_id(method);
    try {
      config.margin = parse_rational(margin);
    } catch (const std::invalid_argument&) {
      throw ParseError(0, "malformed margin '" + margin + "'");
    }
    if (config.margin < 0 || config.margin > 1) throw ConfigError("margin outside [0,1]");
    config.truncation =
        truncation == "ties" ? TruncationMode::kCompleteAsTies : TruncationMode::kAbstain;
    if (!init.empty()) config.init = parse_unary_init(init);
    config.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
    config.comprehensive_cap = cap;
    for (const auto& p : params) {
      auto eq = p.find('=');
      if (eq == std::string::npos || eq == 0) throw ParseError(0, "--param expects name=value");
      try {
        config.params[p.substr(0, eq)] = evaluate_weight(p.substr(eq + 1), {});
      } catch (const std::invalid_argument& e) {
        throw ParseError(0, "--param " + p + ": " + e.what());
      }
    }
    config.last_includes_unlisted = last_unlisted;
    config.matrix_input = matrix_input;
    config.seed = conj.seed;
    return 0;
  });
  if (status != 0) return status;

  if (*tally) return cmd_tally(path, config, out, err);
  if (*matrix) return cmd_matrix(path, config, out, err);
  if (*blake) {
    DoctrineKind kind;
    int s = guarded(err, [&] {
      try {
        kind = parse_doctrine_kind(doctrine);
      } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
      }
      return 0;
    });
    if (s != 0) return s;
    return cmd_blake(kind, n, config, out, err);
  }
  if (conjecture) return cmd_conjecture(conj, config.format, out);
  if (path.empty()) {
    err << "verify needs an input file or --conjecture\n";
    return 2;
  }
  return cmd_verify(path, config, out, err);
}

}  // namespace llull
