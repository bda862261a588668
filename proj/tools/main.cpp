#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gamma0/cache.hpp"
#include "gamma0/gamma0.hpp"
#include "gamma0/serialize.hpp"

namespace {

using namespace gamma0;

struct RunConfig {
  std::uint64_t seed = 1;
  std::string cache_dir;
  std::string output = "json";
};

// Raised after printing a report whose "ok" is false.
struct CheckFailed {};

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void emit(const RunConfig& cfg, const Json& report) {
  if (cfg.output == "json") {
    std::cout << report.dump() << '\n';
  } else {
    // flatten() keys leaves by JSON pointer; keep document order for byte-stable output
    const Json flat = report.flatten();
    if (cfg.output == "csv") std::cout << "key,value\n";
    for (auto it = flat.begin(); it != flat.end(); ++it) {
      std::string key = it.key().substr(1);
      for (auto& ch : key) {
        if (ch == '/') ch = '.';
      }
      if (cfg.output == "csv") {
        std::cout << csv_field(key) << ',' << csv_field(scalar_text(*it)) << '\n';
      } else {
        std::cout << key << " = " << scalar_text(*it) << '\n';
      }
    }
  }
  if (report.contains("ok") && !report["ok"].get<bool>()) throw CheckFailed{};
}

UniModular parse_matrix(const std::string& text) {
  std::vector<Integer> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_integer(item));
  if (v.size() != 4) throw DomainError("--matrix expects a,b,c,d");
  return UniModular(v[0], v[1], v[2], v[3]);
}

std::map<std::int64_t, Rational> parse_rl(const std::string& text) {
  std::map<std::int64_t, Rational> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("--rl entries look like l=p/q, got '" + item + "'");
    const Integer l = parse_integer(item.substr(0, eq));
    if (!fits_int64(l)) throw DomainError("divisor out of range: " + item);
    out[to_int64(l)] = Rational::parse(item.substr(eq + 1));
  }
  return out;
}

class Provider {
 public:
  explicit Provider(const RunConfig& cfg) {
    if (auto dir = DiskGeneratorCache::resolve_dir(cfg.cache_dir)) {
      impl_ = std::make_unique<DiskGeneratorCache>(*dir);
    } else {
      impl_ = std::make_unique<MemoryGeneratorCache>();
    }
  }
  GeneratorProvider& get() { return *impl_; }

 private:
  std::unique_ptr<MemoryGeneratorCache> impl_;
};

void require_level(std::int64_t n) {
  if (n < 1) throw DomainError("level must be positive, got " + std::to_string(n));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characters of Gamma0(N): Dedekind sums, Psi, generators and verifiers"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--output", cfg.output, "Report format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized commands")->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "Generator cache directory (default: $GAMMA0_CACHE_DIR)");

  std::string matrix;
  std::int64_t level = 0;
  std::int64_t l_arg = 0;
  std::string h_arg, k_arg;
  std::int64_t chi_id = 0, r1 = 0;
  std::string rl_text;
  bool as_json = false;
  std::int64_t max_n = 0, trials = 0, max_c = 10000;

  auto* psi_cmd = app.add_subcommand("psi", "Psi(gamma) for gamma in SL2(Z)");
  psi_cmd->add_option("--matrix", matrix, "a,b,c,d")->required();

  auto* ded_cmd = app.add_subcommand("dedekind", "Dedekind sum s(h, k)");
  ded_cmd->set_help_flag("--help", "Print this help message and exit");
  ded_cmd->add_option("--h", h_arg)->required();
  ded_cmd->add_option("--k", k_arg)->required();

  auto* sigma_cmd = app.add_subcommand("sigma", "sigma_{N,l}(gamma)");
  sigma_cmd->add_option("--level", level)->required();
  sigma_cmd->add_option("--l", l_arg)->required();
  sigma_cmd->add_option("--matrix", matrix, "a,b,c,d")->required();

  auto* gens_cmd = app.add_subcommand("generators", "Generator set of Gamma0(N)");
  gens_cmd->add_option("--level", level)->required();
  gens_cmd->add_flag("--json", as_json, "Print the cache record");

  auto* chars_cmd = app.add_subcommand("characters", "Dirichlet characters mod N");
  chars_cmd->add_option("--level", level)->required();

  auto* eval_cmd = app.add_subcommand("eval-char", "Evaluate the character with the given parameters");
  eval_cmd->add_option("--level", level)->required();
  eval_cmd->add_option("--chi", chi_id, "Character id (see 'characters')")->required();
  eval_cmd->add_option("--r1", r1)->required();
  eval_cmd->add_option("--rl", rl_text, "l=p/q[,l=p/q...]");
  eval_cmd->add_option("--matrix", matrix, "a,b,c,d")->required();

  auto* beta_cmd = app.add_subcommand("beta", "beta(N, l), the generator of the image of sigma_{N,l}");
  beta_cmd->add_option("--level", level)->required();
  beta_cmd->add_option("--l", l_arg, "Divisor l > 1 (default N)");

  auto* rank_cmd = app.add_subcommand("rank", "Rank of the sigma matrix");
  rank_cmd->add_option("--level", level)->required();

  auto* verify = app.add_subcommand("verify", "Batch verifiers");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* v_prop21 = verify->add_subcommand("prop21", "Composition law of Psi on random pairs");
  v_prop21->add_option("--trials", trials)->required();
  v_prop21->add_option("--seed", cfg.seed);
  auto* v_surj = verify->add_subcommand("surjectivity", "Surjectivity of the character parametrization");
  v_surj->add_option("--level", level)->required();
  auto* v_table2 = verify->add_subcommand("table2", "beta(N) against the residue table");
  v_table2->add_option("--max", max_n)->required();
  auto* v_c1 = verify->add_subcommand("conjecture1", "beta(N, l) = beta(l, l)");
  v_c1->add_option("--max", max_n)->required();
  auto* v_c2 = verify->add_subcommand("conjecture2", "Residue table with the square rule");
  v_c2->add_option("--max", max_n)->required();
  auto* v_c3 = verify->add_subcommand("conjecture3", "rank = t - 1");
  v_c3->add_option("--max", max_n)->required();
  auto* v_ded = verify->add_subcommand("dedekind-identity", "Divisibility of the Dedekind quotient");
  v_ded->add_option("--trials", trials)->required();
  v_ded->add_option("--seed", cfg.seed);
  v_ded->add_option("--max-c", max_c)->capture_default_str();
  auto* v_kernel = verify->add_subcommand("kernel", "Exponent sum zero iff sigma_{N,N} = 0");
  v_kernel->add_option("--level", level)->required();
  v_kernel->add_option("--trials", trials)->required();
  v_kernel->add_option("--seed", cfg.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*psi_cmd) {
      emit(cfg, Json{{"psi", integer_json(psi(parse_matrix(matrix)))}});
    } else if (*ded_cmd) {
      const Integer h = parse_integer(h_arg), k = parse_integer(k_arg);
      emit(cfg, Json{{"s", dedekind_sum_fast(h, k).str()}});
    } else if (*sigma_cmd) {
      require_level(level);
      const Gamma0Element g(parse_matrix(matrix), level);
      emit(cfg, Json{{"sigma", integer_json(sigma_N_l(g, l_arg))}});
    } else if (*gens_cmd) {
      require_level(level);
      Provider p(cfg);
      const auto gs = p.get().get(level);
      if (as_json) {
        emit(cfg, to_json(*gs));
      } else {
        Json j{{"level", level}, {"r", gs->r()}, {"e2", gs->e2()}, {"e3", gs->e3()}, {"index", index_gamma0(level)},
               {"free", to_json(gs->free)}, {"elliptic2", to_json(gs->elliptic2)}, {"elliptic3", to_json(gs->elliptic3)}};
        emit(cfg, j);
      }
    } else if (*chars_cmd) {
      require_level(level);
      Json list = Json::array();
      for (const auto& chi : enumerate_characters(level)) {
        Json c = to_json(chi);
        c["id"] = chi.id();
        list.push_back(c);
      }
      emit(cfg, Json{{"modulus", level}, {"count", list.size()}, {"characters", list}});
    } else if (*eval_cmd) {
      require_level(level);
      const CharacterParams params(DirichletCharacter::from_id(level, chi_id), r1, parse_rl(rl_text));
      const Gamma0Element g(parse_matrix(matrix), level);
      emit(cfg, Json{{"value", eval_character(params, g).str()}});
    } else if (*beta_cmd) {
      require_level(level);
      const std::int64_t l = l_arg == 0 ? level : l_arg;
      if (l <= 1 || level % l != 0) throw DomainError("--l must be a divisor of N greater than 1");
      Provider p(cfg);
      emit(cfg, Json{{"level", level}, {"l", l}, {"beta", integer_json(beta(*p.get().get(level), l))}});
    } else if (*rank_cmd) {
      require_level(level);
      Provider p(cfg);
      const auto gs = p.get().get(level);
      const SigmaMatrix sm = sigma_matrix(*gs);
      const auto t = divisors(level).size();
      emit(cfg, Json{{"level", level},
                     {"rank", integer_rank(sm.entries)},
                     {"t_minus_1", t - 1},
                     {"r", gs->r()},
                     {"sigma_matrix", to_json(sm)}});
    } else if (*v_prop21) {
      emit(cfg, to_json(verify_cocycle_law(trials, cfg.seed)));
    } else if (*v_surj) {
      require_level(level);
      Provider p(cfg);
      emit(cfg, to_json(verify_surjectivity(*p.get().get(level))));
    } else if (*v_table2) {
      Provider p(cfg);
      emit(cfg, to_json(verify_beta_table(max_n, p.get())));
    } else if (*v_c1) {
      Provider p(cfg);
      emit(cfg, to_json(verify_conjecture1(max_n, p.get())));
    } else if (*v_c2) {
      Provider p(cfg);
      emit(cfg, to_json(verify_conjecture2(max_n, p.get())));
    } else if (*v_c3) {
      Provider p(cfg);
      emit(cfg, to_json(verify_conjecture3(max_n, p.get())));
    } else if (*v_ded) {
      emit(cfg, to_json(verify_dedekind_identity(trials, cfg.seed, max_c)));
    } else if (*v_kernel) {
      require_level(level);
      Provider p(cfg);
      emit(cfg, to_json(verify_kernel(*p.get().get(level), trials, cfg.seed)));
    }
  } catch (const CheckFailed&) {
    return 1;
  } catch (const TheoremViolation& e) {
    std::cout << Json{{"ok", false}, {"error", e.what()}, {"witness", Json::parse(e.witness())}}.dump() << '\n';
    std::cerr << "theorem violation: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
