#include "cli.hpp"

#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>

#include "conlat/continuous.hpp"
#include "conlat/format.hpp"
#include "conlat/io.hpp"
#include "conlat/lattice_verify.hpp"
#include "conlat/order.hpp"
#include "conlat/prob_meet.hpp"

namespace conlat::cli {

namespace {

struct Args {
  std::string schema;
  std::string first;
  std::string second;
  std::string context = "discovery";
  std::string format = "dot";
  std::optional<std::uint64_t> seed;
  double threshold = 0.9;
  std::string epsilon;
  std::optional<double> resolution;
  double tolerance = 1e-9;
};

void emit(std::ostream& out, const Json& j) { out << dump(j) << '\n'; }

void emit_error(std::ostream& out, std::string_view code, const std::string& message) {
  Json j = Json::object();
  j["error"] = std::string(code);
  j["message"] = message;
  emit(out, j);
}

std::vector<double> parse_epsilon(std::string text) {
  for (char& ch : text) {
    if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
  }
  std::istringstream in(text);
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError, "bad --epsilon value \"" + token + "\"");
    }
  }
  if (out.empty()) throw Error(ErrorCode::ConfigError, "--epsilon is empty");
  return out;
}

std::uint64_t check_seed(const Args& a) {
  if (a.seed) return *a.seed;
  if (const char* env = std::getenv("CONCEPT_LATTICE_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string_view(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::ConfigError, "CONCEPT_LATTICE_SEED must be an unsigned integer");
  }
  return CheckOptions{}.seed;
}

int dispatch(const std::string& command, const Args& a, std::ostream& out) {
  const auto schema = [&] { return parse_schema(read_json_file(a.schema)); };
  const auto concept_pair = [&] {
    const auto s = schema();
    return std::pair{parse_concept(s, read_json_file(a.first)),
                     parse_concept(s, read_json_file(a.second))};
  };

  if (command == "subsumes") {
    const auto [c, d] = concept_pair();
    Json j = Json::object();
    j["subsumes"] = subsumes(c, d);
    emit(out, j);
  } else if (command == "meet") {
    const auto [c, d] = concept_pair();
    if (a.context != "discovery" && a.context != "analysis") {
      throw Error(ErrorCode::ConfigError, "--context must be discovery or analysis");
    }
    const auto ctx = a.context == "analysis" ? MeetContext::Analysis : MeetContext::Discovery;
    emit(out, to_json(guard_base_meet(ctx, c, d)));
  } else if (command == "join") {
    const auto [c, d] = concept_pair();
    const auto j = unify(c, d);
    if (!j) {
      emit(out, Json{{"result", "undefined"}});
      return 2;
    }
    emit(out, to_json(*j));
  } else if (command == "diff") {
    const auto [c, d] = concept_pair();
    emit(out, to_json(concept_diff(c, d)));
  } else if (command == "extension") {
    const auto s = schema();
    const auto c = parse_concept(s, read_json_file(a.first));
    const auto pool = parse_pool(s, read_json_file(a.second));
    const auto hits = extension_indices(c, pool);
    Json j = Json::object();
    j["count"] = hits.size();
    j["indices"] = hits;
    emit(out, j);
  } else if (command == "enumerate") {
    const auto space = enumerate(schema());
    Json list = Json::array();
    for (const auto& c : space.concepts()) list.push_back(to_json(c));
    Json j = Json::object();
    j["size"] = space.size();
    j["concepts"] = std::move(list);
    emit(out, j);
  } else if (command == "check") {
    CheckOptions options;
    options.seed = check_seed(a);
    const auto space = enumerate(schema());
    emit(out, to_json(space, check_axioms(space, options)));
  } else if (command == "hasse") {
    if (a.format != "dot") throw Error(ErrorCode::ConfigError, "only --format dot is supported");
    out << hasse_export(enumerate(schema()));
  } else if (command == "prob") {
    const auto s = schema();
    const auto c = parse_concept(s, read_json_file(a.first));
    const auto post = parse_posterior(read_json_file(a.second));
    Json j = Json::object();
    j["probability"] = round_real(concept_prob(c, post));
    emit(out, j);
  } else if (command == "pmeet") {
    const auto p1 = parse_posterior(read_json_file(a.first));
    const auto p2 = parse_posterior(read_json_file(a.second));
    const std::size_t k = p1.size();
    SchemaPtr s = a.schema.empty() ? nullptr : schema();
    PMeetConfig config;
    config.threshold = a.threshold;
    config.resolution = a.resolution;
    config.tolerance = a.tolerance;
    if (!a.epsilon.empty()) {
      config.epsilon = parse_epsilon(a.epsilon);
      if (config.epsilon.size() == 1 && k > 1) config.epsilon.assign(k, config.epsilon[0]);
    } else if (s) {
      for (const auto& f : s->features()) {
        const auto* dom = std::get_if<CappedInterval>(&f.domain);
        if (!dom) {
          throw Error(ErrorCode::DomainMismatch,
                      "feature '" + f.name + "' is not an interval dimension");
        }
        config.epsilon.push_back(dom->epsilon);
      }
    } else {
      throw Error(ErrorCode::ConfigError, "pmeet needs --epsilon or --schema");
    }
    config.validate(k);
    if (!s) s = interval_schema(config.epsilon);
    emit(out, to_json(probabilistic_meet(p1, p2, config, s)));
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Concept lattice engine", "conlat"};
  app.require_subcommand(1, 1);
  Args a;

  const auto two_files = [&](CLI::App* sub, const char* first, const char* second) {
    sub->add_option("--schema", a.schema, "schema JSON file")->required();
    sub->add_option(first, a.first)->required();
    sub->add_option(second, a.second)->required();
  };
  two_files(app.add_subcommand("subsumes", "does the first concept subsume the second"),
            "first", "second");
  auto* meet = app.add_subcommand("meet", "generalise two concepts");
  two_files(meet, "first", "second");
  meet->add_option("--context", a.context, "discovery or analysis");
  two_files(app.add_subcommand("join", "unify two concepts"), "first", "second");
  two_files(app.add_subcommand("diff", "concept difference"), "first", "second");
  two_files(app.add_subcommand("extension", "instances of a pool above a concept"), "concept",
            "pool");
  app.add_subcommand("enumerate", "list every concept of a finite schema")
      ->add_option("--schema", a.schema)
      ->required();
  auto* check = app.add_subcommand("check", "verify the order structure of a finite schema");
  check->add_option("--schema", a.schema)->required();
  check->add_option("--seed", a.seed, "chain sampling seed");
  auto* hasse = app.add_subcommand("hasse", "covering diagram of a finite schema");
  hasse->add_option("--schema", a.schema)->required();
  hasse->add_option("--format", a.format);
  two_files(app.add_subcommand("prob", "posterior probability of a concept"), "concept",
            "posterior");
  auto* pmeet = app.add_subcommand("pmeet", "probabilistic meet of two posteriors");
  pmeet->add_option("first", a.first)->required();
  pmeet->add_option("second", a.second)->required();
  pmeet->add_option("--schema", a.schema);
  pmeet->add_option("--threshold", a.threshold);
  pmeet->add_option("--epsilon", a.epsilon, "scalar or comma separated list");
  pmeet->add_option("--resolution", a.resolution);
  pmeet->add_option("--tolerance", a.tolerance);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(out, to_string(ErrorCode::ParseError), e.what());
    return 1;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), a, out);
  } catch (const Error& e) {
    emit_error(out, to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    emit_error(out, "InternalError", e.what());
  }
  return 1;
}

}  // namespace conlat::cli
