#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "bsw/betti_io.hpp"
#include "bsw/curve_asymptotics.hpp"
#include "bsw/decompose.hpp"
#include "bsw/errors.hpp"
#include "bsw/koszul.hpp"

namespace bsw::cli {

namespace {

// Flat `key=value` lines; `#` comments. Keys are long option names.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int line_no = 0;
  auto trim = [](const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ParseError("bad integer '" + item + "' in list");
    out.push_back(v);
  }
  return out;
}

struct ModelFlags {
  std::string family;
  int genus = 0;
  std::string f_coeffs;
  std::uint32_t characteristic = kDefaultCharacteristic;
  unsigned jobs = 1;
  std::string timing;
  std::optional<std::uint32_t> cross_char;
};

void add_model_flags(CLI::App* sub, ModelFlags& flags) {
  sub->add_option("--family", flags.family, "rational or hyperelliptic")
      ->check(CLI::IsMember({"rational", "hyperelliptic"}));
  sub->add_option("--genus", flags.genus, "genus g")->check(CLI::NonNegativeNumber);
  sub->add_option("--f-coeffs", flags.f_coeffs, "c_0,...,c_{2g+1} of f, low degree first")
      ->allow_extra_args(false);
  sub->add_option("--char", flags.characteristic, "field characteristic");
  sub->add_option("--jobs", flags.jobs, "worker threads for Koszul blocks")
      ->check(CLI::PositiveNumber);
  sub->add_option("--timing", flags.timing, "append per-block `p q rows cols rank millis` lines");
  sub->add_option("--cross-char", flags.cross_char, "recompute over a second prime and compare");
}

// The degree bound is checked before anything that needs the model.
CurveModel build_model(const ModelFlags& flags) {
  const std::string family =
      flags.family.empty() ? (flags.genus == 0 ? "rational" : "hyperelliptic") : flags.family;
  if (family == "rational") {
    if (flags.genus != 0) throw InvalidModel("rational family requires genus 0");
    return CurveModel::rational(flags.characteristic);
  }
  if (flags.f_coeffs.empty()) throw InvalidModel("hyperelliptic family requires --f-coeffs");
  return CurveModel::hyperelliptic(flags.genus, parse_int_list(flags.f_coeffs),
                                   flags.characteristic);
}

void require_degree(int genus, int d, const char* what) {
  if (d < 2 * genus + 2) {
    throw DegreeTooSmall(std::string(what) + " " + std::to_string(d) + " < 2g + 2 = " +
                         std::to_string(2 * genus + 2));
  }
}

std::string render(const Rational& q, bool approx) {
  return approx ? to_string(q) + " (" + to_decimal(q, 6) + ")" : to_string(q);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

void append_timing(const std::string& path, int d, const std::vector<KoszulBlockTiming>& blocks) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << "# d=" << d << '\n';
  write_timing_log(out, blocks);
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boij-Soderberg workbench for graded Betti tables of curves", "bsw"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  std::string config_path;
  app.add_option("--config", config_path, "flat key=value file with option defaults");

  // pure
  auto* pure = app.add_subcommand("pure", "pure diagram of a degree sequence");
  std::string degree_sequence, pure_out;
  pure->add_option("--degree-sequence", degree_sequence, "e_0,e_1,...,e_s")->required();
  pure->add_option("--out", pure_out, "output table file");

  // decompose
  auto* dec = app.add_subcommand("decompose", "Boij-Soderberg decomposition of a table file");
  std::string dec_input;
  std::optional<int> dec_genus, dec_r;
  bool dec_approx = false;
  dec->add_option("--input", dec_input, "table file")->required();
  dec->add_option("--genus", dec_genus, "also report curve coefficients c_0..c_g");
  dec->add_option("--r", dec_r, "embedding dimension r (default: projective span + 1)");
  dec->add_flag("--approx", dec_approx, "add decimal values");

  // hn
  auto* hn = app.add_subcommand("hn", "Hilbert numerator, codimension and multiplicity");
  std::string hn_input;
  bool hn_approx = false;
  hn->add_option("--input", hn_input, "table file")->required();
  hn->add_flag("--approx", hn_approx, "add decimal values");

  // resolve
  auto* res = app.add_subcommand("resolve", "Betti table of a curve model via Koszul homology");
  ModelFlags res_flags;
  int res_degree = 0;
  std::string res_out;
  add_model_flags(res, res_flags);
  res->add_option("--degree", res_degree, "degree d of the embedding line bundle")->required();
  res->add_option("--out", res_out, "output table file (default stdout)");

  // asymptotics
  auto* asy = app.add_subcommand("asymptotics", "coefficients c_{i,d} over a range of degrees");
  ModelFlags asy_flags;
  int dmin = 0, dmax = 0;
  std::string csv_path;
  add_model_flags(asy, asy_flags);
  asy->add_option("--dmin", dmin, "first degree")->required();
  asy->add_option("--dmax", dmax, "last degree")->required();
  asy->add_option("--csv", csv_path, "exact CSV report; .approx.csv and .epsdelta.csv siblings")
      ->required();

  for (auto* sub : {pure, dec, hn, res, asy}) {
    for (auto* opt : sub->get_options()) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  }

  try {
    // splice config defaults in front of the explicit arguments
    std::vector<std::string> args;
    std::string config_file;
    for (std::size_t k = 0; k < raw_args.size(); ++k) {
      if (raw_args[k] == "--config" && k + 1 < raw_args.size()) {
        config_file = raw_args[++k];
      } else if (raw_args[k].rfind("--config=", 0) == 0) {
        config_file = raw_args[k].substr(9);
      } else {
        args.push_back(raw_args[k]);
      }
    }
    if (!config_file.empty()) {
      auto entries = read_config(config_file);
      std::string command;
      std::vector<std::string> rest = args;
      if (!rest.empty() && rest.front().rfind("-", 0) != 0) {
        command = rest.front();
        rest.erase(rest.begin());
      }
      for (const auto& [key, value] : entries) {
        if (key == "command" && command.empty()) command = value;
      }
      CLI::App* sub = command.empty() ? nullptr : app.get_subcommand_no_throw(command);
      if (!sub) throw InvalidInput("config needs a known subcommand");
      std::vector<std::string> spliced{command};
      for (const auto& [key, value] : entries) {
        if (key == "command") continue;
        const CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (!opt) throw InvalidInput("unknown config key '" + key + "' for " + command);
        if (opt->get_expected_min() == 0) {
          if (value == "true" || value == "1" || value == "yes") spliced.push_back("--" + key);
        } else {
          spliced.push_back("--" + key + "=" + value);
        }
      }
      spliced.insert(spliced.end(), rest.begin(), rest.end());
      args = std::move(spliced);
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (*pure) {
      const BettiTable table = pure_diagram(parse_degree_sequence(degree_sequence));
      if (pure_out.empty()) {
        write_betti_table(out, table);
      } else {
        write_betti_table_file(pure_out, table);
      }
      return kSuccess;
    }

    if (*dec) {
      const BettiTable table = read_betti_table_file(dec_input);
      if (table.empty()) throw UndefinedOnZero("input table is empty");
      const Decomposition parts = decompose(table);
      for (const auto& part : parts.parts) {
        out << to_string(part.degrees) << " : " << render(part.coefficient, dec_approx) << '\n';
      }
      if (dec_genus) {
        const int r = dec_r ? *dec_r : *table.projective_span() + 1;
        const CurveCoefficients c = curve_coefficients(table, *dec_genus, r);
        for (std::size_t i = 0; i < c.c.size(); ++i) {
          out << (i ? " " : "") << "c_" << i << '=' << render(c.c[i], dec_approx);
        }
        out << '\n';
      }
      return kSuccess;
    }

    if (*hn) {
      const BettiTable table = read_betti_table_file(hn_input);
      const HilbertNumerator numerator = hilbert_numerator(table);
      out << "HN = " << to_string(numerator.numerator) << "; codim " << numerator.codim
          << "; mult " << render(numerator.multiplicity(), hn_approx) << '\n';
      return kSuccess;
    }

    if (*res) {
      require_degree(res_flags.genus, res_degree, "degree");
      const CurveModel model = build_model(res_flags);
      KoszulOptions options;
      options.jobs = res_flags.jobs;
      const KoszulResult result = koszul_resolve(model, res_degree, options);
      if (!res_flags.timing.empty()) append_timing(res_flags.timing, res_degree, result.blocks);
      if (res_flags.cross_char) {
        const BettiTable other =
            koszul_betti(model.with_characteristic(*res_flags.cross_char), res_degree, options);
        if (!(other == result.table)) {
          err << "error: Betti tables disagree between characteristics "
              << model.field().characteristic() << " and " << *res_flags.cross_char << '\n';
          return kInternalFailure;
        }
      }
      if (res_out.empty()) {
        write_betti_table(out, result.table);
      } else {
        write_betti_table_file(res_out, result.table);
        out << display_betti_table(result.table);
      }
      return kSuccess;
    }

    if (*asy) {
      require_degree(asy_flags.genus, dmin, "dmin");
      const CurveModel model = build_model(asy_flags);
      ExperimentOptions options;
      options.koszul.jobs = asy_flags.jobs;
      options.cross_check_characteristic = asy_flags.cross_char;
      if (!asy_flags.timing.empty()) {
        options.on_blocks = [&](int d, const std::vector<KoszulBlockTiming>& blocks) {
          append_timing(asy_flags.timing, d, blocks);
        };
      }
      const AsymptoticsReport report = run_convergence_experiment(model, dmin, dmax, options);

      std::ostringstream exact, approx, eps;
      write_report_csv(exact, report);
      write_report_approx_csv(approx, report);
      write_report_eps_delta_csv(eps, report);
      write_text(csv_path, exact.str());
      write_text(sibling_path(csv_path, "approx"), approx.str());
      write_text(sibling_path(csv_path, "epsdelta"), eps.str());

      bool disagreement = false;
      for (const auto& row : report.rows) {
        out << "d=" << row.d << " r=" << row.r;
        for (std::size_t i = 0; i < row.c.size(); ++i) out << " c_" << i << '=' << to_string(row.c[i]);
        out << " (c_" << report.genus << " ~ " << to_decimal(row.c.back(), 6) << ", bound "
            << to_decimal(row.tail_bound, 6) << ")\n";
        if (row.cross_check_agrees && !*row.cross_check_agrees) {
          err << "warning: d=" << row.d << " Betti table differs over GF("
              << *asy_flags.cross_char << ")\n";
          disagreement = true;
        }
      }
      return disagreement ? kInternalFailure : kSuccess;
    }
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kInternalFailure;
  } catch (const MathRejection& e) {
    err << "error: " << e.what() << '\n';
    return kRejected;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalFailure;
  }
  return kInvalidInput;
}

}  // namespace bsw::cli
