#include "cli.hpp"

#include "fglab/errors.hpp"
#include "fglab/magnus.hpp"
#include "fglab/serialization.hpp"
#include "fglab/stallings.hpp"
#include "fglab/theorem.hpp"
#include "fglab/word.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

namespace fglab::cli {

using nlohmann::ordered_json;

CliConfig default_config() {
  CliConfig cfg;
  if (const char *env = std::getenv("FGLAB_MAGNUS_CAP")) {
    std::string_view s(env);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0)
      cfg.magnus_cap = v;
  }
  return cfg;
}

namespace {

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

void emit(std::ostream &out, const ordered_json &j) { out << j.dump(2) << '\n'; }

int cmd_reduce(const CliConfig &cfg, const std::string &alphabet, const std::string &text,
               std::ostream &out) {
  auto w = parse_word(text, Alphabet::from_csv(alphabet));
  if (cfg.json)
    emit(out, {{"word", to_string(w)}, {"length", w.length()}});
  else
    out << to_string(w) << '\n';
  return kSuccess;
}

int cmd_omega(const CliConfig &cfg, long long n, std::ostream &out) {
  if (n < 0)
    throw UsageError("omega needs n >= 0");
  if (n > 24)
    throw UsageError("omega_n has length 2^(n+2)+2; n > 24 is refused");
  auto w = omega(static_cast<unsigned>(n));
  if (cfg.json)
    emit(out, {{"n", n}, {"word", to_string(w)}, {"length", w.length()}});
  else
    out << to_string(w) << '\n';
  return kSuccess;
}

int cmd_subgroup(const CliConfig &cfg, const std::string &action, const std::string &file,
                 const std::string &word_text, bool has_word, std::ostream &out) {
  const auto desc = load_subgroup(file);
  const auto graph = desc.graph();
  auto need_word = [&] {
    if (!has_word)
      throw UsageError("subgroup " + action + " needs a word argument");
    return parse_word(word_text, desc.alphabet);
  };

  if (action == "index") {
    auto idx = index(graph);
    if (cfg.json)
      emit(out, {{"index", idx.is_finite() ? ordered_json(idx.value()) : ordered_json("infinite")},
                 {"vertices", graph.vertex_count()}});
    else
      out << idx.to_string() << '\n';
  } else if (action == "normal") {
    bool normal = is_normal(graph);
    if (cfg.json)
      emit(out, {{"normal", normal}, {"index", graph.vertex_count()}});
    else
      out << (normal ? "true" : "false") << '\n';
  } else if (action == "contains") {
    auto w = need_word();
    bool in = contains(graph, w);
    if (cfg.json)
      emit(out, {{"word", to_string(w)}, {"contains", in}});
    else
      out << (in ? "true" : "false") << '\n';
  } else if (action == "rewrite" || action == "basis") {
    auto t = schreier_transversal(graph, desc.preferred_generator());
    auto b = schreier_basis(graph, t);
    if (action == "rewrite") {
      auto w = need_word();
      auto r = rewrite(graph, t, b, w);
      if (cfg.json)
        emit(out, {{"word", to_string(w)}, {"rewritten", to_string(r)}});
      else
        out << to_string(r) << '\n';
    } else if (cfg.json) {
      ordered_json j;
      j["basis"] = ordered_json::array();
      for (const auto &e : b.elements)
        j["basis"].push_back({{"name", e.name}, {"word", to_string(e.word)}});
      j["transversal"] = ordered_json::array();
      for (const auto &r : t.representatives)
        j["transversal"].push_back(to_string(r));
      emit(out, j);
    } else {
      for (const auto &e : b.elements)
        out << e.name << " = " << to_string(e.word) << '\n';
    }
  } else if (action == "dot") {
    out << to_dot(graph);
  } else {
    throw UsageError("unknown subgroup action '" + action + "'");
  }
  return kSuccess;
}

int cmd_weight(const CliConfig &cfg, const std::string &alphabet, const std::string &text,
               unsigned cap, std::ostream &out) {
  if (cap == 0)
    throw UsageError("--cap must be positive");
  auto w = parse_word(text, Alphabet::from_csv(alphabet));
  auto weight = lcs_weight(w, cap);
  if (cfg.json) {
    ordered_json value = weight.kind == LcsWeight::Kind::exact ? ordered_json(weight.value)
                                                               : ordered_json(weight.to_string());
    emit(out, {{"word", to_string(w)}, {"cap", cap}, {"weight", value}});
  } else {
    out << weight.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_witness(long long d, long long m, std::optional<unsigned> cap, const std::string &path,
                std::ostream &out, std::ostream &err) {
  if (d < 2 || m < 2)
    throw UsageError("witness needs --d >= 2 and --m >= 2");
  if (m > 24)
    throw UsageError("--m above 24 is refused (witness length grows as 2^m)");
  auto cert = witness(d, static_cast<unsigned>(m), cap);
  if (auto problem = verify_certificate(cert); !problem.empty()) {
    err << "certificate failed re-verification: " << problem << '\n';
    return kVerificationFailure;
  }
  auto text = to_json(cert).dump(2) + "\n";
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream f(path);
    if (!(f << text))
      throw UsageError("cannot write " + path);
  }
  return kSuccess;
}

int cmd_verify(const CliConfig &cfg, long long d_max, long long n_max, std::ostream &out,
               std::ostream &err) {
  if (d_max < 2 || n_max < 1)
    throw UsageError("verify needs --d-max >= 2 and --n-max >= 1");
  const auto n = static_cast<unsigned>(n_max);
  const unsigned rec_n = std::min(n, cfg.recurrence_n_max);

  ordered_json rows = ordered_json::array();
  std::ostringstream table;
  table << std::left << std::setw(4) << "d" << std::setw(14) << "recurrence" << std::setw(11)
        << "char_poly" << std::setw(8) << "eigen" << std::setw(22) << "spectral(rel.err)"
        << "nonvanishing\n";
  bool all_ok = true;
  std::string first_failure;
  auto fail = [&](const std::string &what) {
    if (all_ok)
      first_failure = what;
    all_ok = false;
  };

  for (long long d = 2; d <= d_max; ++d) {
    ordered_json row;
    row["d"] = d;
    std::string rec = "ok n<=" + std::to_string(rec_n);
    try {
      verify_recurrence(KernelSpec(d), rec_n);
      row["recurrence"] = {{"n_max", rec_n}, {"ok", true}};
    } catch (const VerificationFailure &e) {
      rec = "FAIL";
      row["recurrence"] = {{"n_max", rec_n}, {"ok", false}, {"error", e.what()}};
      fail(e.what());
    }

    std::string cp = "skipped";
    if (d <= static_cast<long long>(cfg.d_bound)) {
      bool ok = char_poly_check(d, cfg.d_bound);
      cp = ok ? "ok" : "FAIL";
      row["char_poly"] = ok;
      if (!ok)
        fail("d=" + std::to_string(d) + ": characteristic polynomial mismatch");
    } else {
      row["char_poly"] = nullptr;
    }

    bool eig = true;
    for (const auto &pair : eigen_check(d))
      if (!pair.holds) {
        eig = false;
        fail("d=" + std::to_string(d) + " j=" + std::to_string(pair.j) +
             ": eigen relation fails");
      }
    row["eigen"] = eig;

    std::string spec_cell;
    try {
      auto s = spectral_certificate(d, n);
      std::ostringstream cell;
      cell << "ok " << std::scientific << std::setprecision(1) << s.max_relative_error;
      spec_cell = cell.str();
      row["spectral"] = {{"ok", true},
                         {"max_alpha_off_kernel", s.max_alpha_off_kernel},
                         {"max_relative_error", s.max_relative_error}};
    } catch (const VerificationFailure &e) {
      spec_cell = "FAIL";
      row["spectral"] = {{"ok", false}, {"error", e.what()}};
      fail(e.what());
    }

    bool nv = nonvanishing_check(d, n);
    row["nonvanishing"] = nv;
    if (!nv)
      fail("d=" + std::to_string(d) + ": A^n v_0 vanished for some n <= " +
           std::to_string(n));

    table << std::setw(4) << d << std::setw(14) << rec << std::setw(11) << cp << std::setw(8)
          << (eig ? "ok" : "FAIL") << std::setw(22) << spec_cell << (nv ? "ok" : "FAIL")
          << '\n';
    rows.push_back(std::move(row));
  }

  if (cfg.json) {
    emit(out, {{"d_max", d_max}, {"n_max", n_max}, {"rows", rows}, {"passed", all_ok}});
  } else {
    out << table.str();
    out << (all_ok ? "all checks passed" : "verification FAILED") << '\n';
  }
  if (!all_ok) {
    err << "first failure: " << first_failure << '\n';
    return kVerificationFailure;
  }
  return kSuccess;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CliConfig cfg = default_config();
  CLI::App app{"Free-group toolkit: Stallings graphs, Reidemeister-Schreier rewriting, "
               "Magnus weights and commutator-subgroup witnesses"};
  app.name("fglab");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json, "Emit JSON instead of plain text");

  std::string alphabet = "x,y";
  std::string word_text;

  auto *reduce = app.add_subcommand("reduce", "Print the freely reduced canonical form");
  reduce->add_option("-a,--alphabet", alphabet, "Comma-separated generator names");
  reduce->add_option("word", word_text, "Word, e.g. \"x y^-1 x^2\"")->required();

  long long omega_n = 0;
  auto *omega_cmd = app.add_subcommand("omega", "Print omega_n = [x, y, x, ..., x]");
  omega_cmd->add_option("n", omega_n, "Number of trailing x's")->required();

  std::string action, file;
  auto *subgroup = app.add_subcommand("subgroup", "Query a subgroup description file");
  subgroup->add_option("action", action, "index | normal | contains | rewrite | basis | dot")
      ->required()
      ->check(CLI::IsMember({"index", "normal", "contains", "rewrite", "basis", "dot"}));
  subgroup->add_option("file", file, "Subgroup JSON file")->required();
  auto *sub_word = subgroup->add_option("word", word_text, "Word for contains/rewrite");

  unsigned cap = cfg.magnus_cap;
  auto *weight = app.add_subcommand("weight", "Lower-central-series weight via Magnus expansion");
  weight->add_option("-a,--alphabet", alphabet, "Comma-separated generator names");
  weight->add_option("--cap", cap, "Truncation degree (default 8, or FGLAB_MAGNUS_CAP)");
  weight->add_option("word", word_text, "Word")->required();

  long long wd = 0, wm = 0;
  std::optional<unsigned> wcap;
  std::string out_path;
  auto *witness_cmd = app.add_subcommand("witness", "Issue a certificate for omega_(m-2)");
  witness_cmd->add_option("--d", wd, "Modulus d >= 2")->required();
  witness_cmd->add_option("--m", wm, "Lower central term m >= 2")->required();
  witness_cmd->add_option("--cap", wcap, "Magnus cap (default m + 1)");
  witness_cmd->add_option("--out", out_path, "Write the certificate here instead of stdout");

  long long d_max = cfg.d_bound, n_max = cfg.n_max;
  auto *verify = app.add_subcommand("verify", "Run every check of the argument for 2 <= d <= d-max");
  verify->add_option("--d-max", d_max, "Largest modulus");
  verify->add_option("--n-max", n_max, "Largest iterate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*reduce)
      return cmd_reduce(cfg, alphabet, word_text, out);
    if (*omega_cmd)
      return cmd_omega(cfg, omega_n, out);
    if (*subgroup)
      return cmd_subgroup(cfg, action, file, word_text, sub_word->count() > 0, out);
    if (*weight)
      return cmd_weight(cfg, alphabet, word_text, cap, out);
    if (*witness_cmd)
      return cmd_witness(wd, wm, wcap, out_path, out, err);
    if (*verify)
      return cmd_verify(cfg, d_max, n_max, out, err);
  } catch (const DomainError &e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const VerificationFailure &e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}

} // namespace fglab::cli
