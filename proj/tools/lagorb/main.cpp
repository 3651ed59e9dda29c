#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>

#include "commands.hpp"

namespace {

using lagorb::cli::kExitSchema;
using lagorb::io::json;

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lagorb::Error(lagorb::ErrorCode::Schema, "cannot read input file: " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int emit(const lagorb::cli::RunResult& r) {
  std::cout << r.output.dump(2) << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact orbit classification of Lagrangian subspaces"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string input = "-";
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::string format = "json";
  std::optional<std::size_t> m, n, p;

  app.add_option("--input", input, "JSON input file, or - for stdin");
  app.add_option("--seed", seed, "Seed for every randomized step");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));

  for (const auto& name : lagorb::cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    if (name == "ff-census") {
      sub->add_option("--m", m, "Rank of the first factor")->required();
      sub->add_option("--n", n, "Rank of the second factor")->required();
      sub->add_option("--p", p, "Field size (prime)")->required();
      sub->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 64));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return emit({lagorb::cli::error_json(lagorb::ErrorCode::Schema, e.what()), kExitSchema});
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json doc = json::object();
  try {
    if (command == "ff-census") {
      doc = json{{"m", *m}, {"n", *n}, {"p", *p}};
    } else if (lagorb::cli::takes_input(command)) {
      doc = json::parse(read_all(input));
      if (!doc.is_object()) throw lagorb::Error(lagorb::ErrorCode::Schema, "input must be a JSON object");
    }
  } catch (const lagorb::Error& e) {
    return emit({lagorb::cli::error_json(e.code(), e.what()), kExitSchema});
  } catch (const json::exception& e) {
    return emit({lagorb::cli::error_json(lagorb::ErrorCode::Schema, e.what()), kExitSchema});
  }

  if (command == "selftest") {
    // Progress goes to stderr so stdout stays a single JSON document.
    std::cerr << "running acceptance criteria with seed " << seed << "\n";
  }
  return emit(lagorb::cli::run(command, doc, {seed, threads}));
}
