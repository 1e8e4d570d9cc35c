#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "braidcx/acceptance.hpp"
#include "braidcx/braid.hpp"
#include "braidcx/cohen_macaulay.hpp"
#include "braidcx/error.hpp"
#include "braidcx/graph_family.hpp"
#include "braidcx/homology.hpp"
#include "braidcx/morse.hpp"
#include "braidcx/partial_braid.hpp"
#include "braidcx/presentation.hpp"
#include "braidcx/serialize.hpp"

using namespace braidcx;

namespace {

enum Exit { ok = 0, verification_failed = 1, invalid_input = 2, budget_exceeded = 3 };

struct RunConfig {
  std::size_t budget = 200000;
  int L = 2;
  std::size_t tietze_budget = 10000;
  std::string format = "json";
  unsigned threads = 1;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_input(path));
  } catch (const Json::parse_error& e) {
    throw DomainError("'" + path + "' is not valid JSON (" + e.what() + ")");
  }
}

void emit(const Json& j) { std::cout << dump(j); }

int verdict_exit(Verdict v) { return v == Verdict::fail ? verification_failed : ok; }

/// A chessboard edge or vertex given as "(1,2),(2,1)" or as a file holding such a string.
Matching read_matching(const std::string& text) { return parse_matching(text); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph complexes, braided chessboard complexes and their verification"};
  app.set_config("--config", "", "TOML file with option values");
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig config;
  app.add_option("--budget", config.budget, "cell budget")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--L", config.L, "braid enumeration bound")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--tietze-budget", config.tietze_budget, "Tietze step budget")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--format", config.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", config.threads, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  std::function<int()> action;

  // complex
  auto* complex = app.add_subcommand("complex", "Delta-complexes")->require_subcommand(1);
  std::string family, ground;
  int skeleton = -2;
  auto* build = complex->add_subcommand("build", "graph complex of a subgraph-closed family");
  build->add_option("--family", family, "matchings | forests | subgraphs | not2connected")->required();
  build->add_option("--ground", ground, "graph JSON file, Kn or Km,n")->required();
  build->add_option("--skeleton", skeleton, "keep cells up to this dimension");
  build->callback([&] {
    action = [&] {
      const bool named = !ground.empty() && ground[0] == 'K' && ground.find('.') == std::string::npos;
      MultiGraph g = named ? named_graph(ground) : graph_from_json(read_json(ground));
      DeltaComplex x = graph_complex(GraphFamily::builtin(family_kind_from_string(family), std::move(g)), config.budget);
      if (skeleton >= -1) x = x.skeleton(skeleton);
      emit(to_json(x));
      return ok;
    };
  });

  std::string input;
  auto* homology_cmd = complex->add_subcommand("homology", "reduced integer homology");
  homology_cmd->add_option("complex", input, "complex JSON file or -")->required();
  homology_cmd->callback([&] {
    action = [&] {
      const HomologyReport h = reduced_homology(complex_from_json(read_json(input)));
      if (config.format == "csv") std::cout << to_csv(h);
      else emit(to_json(h));
      return ok;
    };
  });

  auto* cm = complex->add_subcommand("cm-check", "homological Cohen-Macaulay check");
  cm->add_option("complex", input, "complex JSON file or -")->required();
  cm->callback([&] {
    action = [&] {
      const CMReport r = cm_check(complex_from_json(read_json(input)), config.threads);
      emit(to_json(r));
      return verdict_exit(r.verdict);
    };
  });

  auto* pi1 = complex->add_subcommand("pi1", "fundamental group triviality by Tietze moves");
  pi1->add_option("complex", input, "complex JSON file or -")->required();
  pi1->callback([&] {
    action = [&] {
      emit(to_json(fundamental_group_trivial(complex_from_json(read_json(input)), config.tietze_budget)));
      return ok;
    };
  });

  // poset
  auto* poset = app.add_subcommand("poset", "finite posets")->require_subcommand(1);
  auto* poset_cm = poset->add_subcommand("cm-check", "homological Cohen-Macaulay check");
  poset_cm->add_option("poset", input, "poset JSON file or -")->required();
  poset_cm->callback([&] {
    action = [&] {
      const CMReport r = poset_cm_check(poset_from_json(read_json(input)), config.threads);
      emit(to_json(r));
      return verdict_exit(r.verdict);
    };
  });

  // chessboard
  int m = 0, n = 0;
  auto* chessboard = app.add_subcommand("chessboard", "chessboard complexes")->require_subcommand(1);
  auto* nu = chessboard->add_subcommand("nu", "connectivity bound");
  nu->add_option("m", m)->required()->check(CLI::PositiveNumber);
  nu->add_option("n", n)->required()->check(CLI::PositiveNumber);
  nu->callback([&] {
    action = [&] {
      const auto b = connectivity_bound(m, n);
      Json j;
      j["nu"] = b.nu;
      j["cm_condition"] = b.cm_condition;
      emit(j);
      return ok;
    };
  });

  // braid
  int strands = 0, strand = 0;
  std::string word, other;
  auto* braid = app.add_subcommand("braid", "braid words")->require_subcommand(1);
  auto* nf = braid->add_subcommand("nf", "Garside normal form");
  nf->add_option("word", word)->required();
  nf->add_option("--strands", strands)->required()->check(CLI::PositiveNumber);
  nf->callback([&] {
    action = [&] {
      emit(to_json(normal_form(BraidWord::parse(word, strands))));
      return ok;
    };
  });
  auto* eq = braid->add_subcommand("eq", "equality in the braid group");
  eq->add_option("first", word)->required();
  eq->add_option("second", other)->required();
  eq->add_option("--strands", strands)->required()->check(CLI::PositiveNumber);
  eq->callback([&] {
    action = [&] {
      emit(Json(braid_eq(BraidWord::parse(word, strands), BraidWord::parse(other, strands))));
      return ok;
    };
  });
  auto* del = braid->add_subcommand("delete-strand", "delete one strand");
  del->add_option("word", word)->required();
  del->add_option("--strand", strand, "strand at the bottom, 1-based")->required();
  del->add_option("--strands", strands)->required()->check(CLI::PositiveNumber);
  del->callback([&] {
    action = [&] {
      const BraidWord w = strand_delete(BraidWord::parse(word, strands), strand);
      Json j;
      j["strands"] = w.strands;
      j["word"] = w.str();
      emit(j);
      return ok;
    };
  });

  // braided
  std::string seeds, tau, frozen_file;
  auto* braided = app.add_subcommand("braided", "braided chessboard complexes")->require_subcommand(1);
  auto* closure = braided->add_subcommand("closure", "face closure of partial braids");
  closure->add_option("--seeds", seeds, "JSON array of partial braids")->required();
  closure->callback([&] {
    action = [&] {
      const Json j = read_json(seeds);
      if (!j.is_array()) throw DomainError("seeds: expected a JSON array");
      std::vector<PartialBraid> cells;
      for (const auto& s : j) cells.push_back(partial_braid_from_json(s));
      emit(to_json(closure_complex(cells, config.budget).complex));
      return ok;
    };
  });
  auto* fiber = braided->add_subcommand("fiber", "truncated closed fiber over a chessboard simplex");
  fiber->add_option("--tau", tau, "matching such as \"(1,2),(2,1)\"")->required();
  fiber->add_option("--m", m, "board rows (default: largest row of tau)");
  fiber->add_option("--n", n, "board columns (default: largest column of tau)");
  fiber->add_option("--frozen", frozen_file, "JSON {\"bottom\", \"top\", \"braid\"}");
  fiber->callback([&] {
    action = [&] {
      const Matching t = read_matching(tau);
      int rows = m, cols = n;
      for (const auto& [i, j] : t) rows = std::max(rows, i), cols = std::max(cols, j);
      FrozenContext frozen;
      if (!frozen_file.empty()) {
        const Json f = read_json(frozen_file);
        try {
          frozen.bottoms = f.at("bottom").get<std::vector<int>>();
          frozen.tops = f.at("top").get<std::vector<int>>();
          frozen.braid = BraidWord::parse(f.value("braid", std::string("e")), std::max<int>(1, frozen.bottoms.size()));
        } catch (const Json::exception& e) {
          throw DomainError(std::string("frozen: ") + e.what());
        }
      }
      emit(to_json(truncated_fiber(rows, cols, t, frozen, config.L, config.budget).complex));
      return ok;
    };
  });

  // quillen
  std::string map_file;
  auto* quillen = app.add_subcommand("quillen", "Quillen fiber criterion")->require_subcommand(1);
  auto* qcheck = quillen->add_subcommand("check", "check the fiber criterion for a poset map");
  qcheck->add_option("--map", map_file, "JSON {\"source\", \"target\", \"map\"}")->required();
  qcheck->callback([&] {
    action = [&] {
      const Json j = read_json(map_file);
      auto load = [&](const char* key) {
        if (!j.contains(key)) throw DomainError(std::string("map: missing '") + key + "'");
        const Json& p = j.at(key);
        return p.contains("complex") ? cell_poset(complex_from_json(p.at("complex"))) : poset_from_json(p);
      };
      const Poset source = load("source"), target = load("target");
      std::map<std::string, std::string> f;
      try {
        f = j.at("map").get<std::map<std::string, std::string>>();
      } catch (const Json::exception& e) {
        throw DomainError(std::string("map: ") + e.what());
      }
      const QuillenReport r = quillen_fiber_check(source, target, f, config.threads);
      emit(to_json(r));
      return verdict_exit(r.verdict);
    };
  });

  // morse
  std::string heights_file;
  long level = 0;
  int degree = 0;
  auto* morse = app.add_subcommand("morse", "combinatorial Morse theory")->require_subcommand(1);
  auto* verify = morse->add_subcommand("verify", "check a descending-link prediction");
  verify->add_option("--complex", input)->required();
  verify->add_option("--heights", heights_file)->required();
  verify->add_option("--t", level)->required();
  verify->add_option("--d", degree)->required();
  verify->callback([&] {
    action = [&] {
      const MorseReport r = bb_verify(complex_from_json(read_json(input)), heights_from_json(read_json(heights_file)),
                                      level, degree);
      emit(to_json(r));
      return verdict_exit(r.verdict);
    };
  });

  // suite
  std::uint64_t seed = AcceptanceOptions{}.seed;
  auto* suite = app.add_subcommand("suite", "test suites")->require_subcommand(1);
  auto* acceptance = suite->add_subcommand("acceptance", "run every acceptance criterion");
  acceptance->add_option("--seed", seed)->capture_default_str();
  acceptance->callback([&] {
    action = [&] {
      AcceptanceOptions options;
      options.threads = config.threads;
      options.seed = seed;
      bool all = true;
      run_acceptance(options, [&](const CriterionResult& r) {
        std::cout << r.line() << std::endl;
        all = all && r.passed;
      });
      return all ? ok : verification_failed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : invalid_input;
  }

  try {
    return action();
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return budget_exceeded;
  } catch (const InvalidHeightError& e) {
    std::cerr << "invalid input: " << e.what() << " (cell " << e.witness_cell << ")\n";
    return invalid_input;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << " (" << e.lower << " < " << e.upper << ")\n";
    return invalid_input;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return invalid_input;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return verification_failed;
  }
}
