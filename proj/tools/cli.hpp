#pragma once

// Command dispatch for the fano95 tool. Exit codes: 0 success, 2 usage or
// domain error, 3 I/O error.

#include "fano95/fano95.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace fano95::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int degree_bound_from_env() {
  const char* v = std::getenv("FANO95_DMAX");
  if (v == nullptr || *v == '\0') return kDefaultDegreeBound;
  int bound = 0;
  std::istringstream in(v);
  if (!(in >> bound) || !in.eof()) throw UsageError(std::string("FANO95_DMAX is not an integer: ") + v);
  if (bound < 66) throw UsageError("FANO95_DMAX must be at least 66");
  return bound;
}

/// Database for the current degree bound, shared across commands.
inline const std::vector<FamilyRecord>& database(int bound) {
  static std::map<int, std::vector<FamilyRecord>> cache;
  auto it = cache.find(bound);
  if (it == cache.end())
    it = cache.emplace(bound, bound == kDefaultDegreeBound ? build_database()
                                                           : build_database(enumerate_families(bound)))
             .first;
  return it->second;
}

inline std::string weights_str(const FamilyRecord& r, char sep) {
  std::string s;
  for (int w : r.weights.ambient()) {
    if (!s.empty()) s += sep;
    s += std::to_string(w);
  }
  return s;
}

inline std::string target_str(const std::array<int, 3>& t) {
  if (t == std::array<int, 3>{1, 1, 1}) return "P^2";
  return "P(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

inline std::string chain_line(const BlowupChain& c) {
  std::string s = forest_str(c.roots);
  if (c.multiplicity > 1) s += "  (multiplicity " + std::to_string(c.multiplicity) + ")";
  return s;
}

inline void print_list(const std::vector<FamilyRecord>& db, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << database_dump(db);
  } else if (format == "csv") {
    out << "n,weights,degree,kcube,basket,has_fibration\n";
    for (const auto& r : db)
      out << r.n << ",\"" << weights_str(r, ',') << "\"," << r.degree() << ',' << r.kcube << ",\""
          << r.basket.str() << "\"," << (r.has_fibration ? "true" : "false") << '\n';
  } else if (format == "table") {
    out << std::left << std::setw(4) << "n" << std::setw(20) << "weights" << std::setw(8) << "degree"
        << std::setw(10) << "-K^3" << std::setw(10) << "fibration" << "basket\n";
    for (const auto& r : db)
      out << std::setw(4) << r.n << std::setw(20) << ("P(" + weights_str(r, ',') + ")") << std::setw(8)
          << r.degree() << std::setw(10) << r.kcube.str() << std::setw(10)
          << (r.has_fibration ? "yes" : "no") << r.basket.str() << '\n';
  } else {
    throw UsageError("unknown format '" + format + "' (expected table, json or csv)");
  }
}

inline const FamilyRecord& record(const std::vector<FamilyRecord>& db, int n) {
  if (n < 1 || n > static_cast<int>(db.size()))
    throw UsageError("family number must be in 1.." + std::to_string(db.size()) + ", got " + std::to_string(n));
  return db[static_cast<std::size_t>(n) - 1];
}

inline void print_fibrations(const FamilyRecord& r, std::ostream& out) {
  if (r.chains.empty()) {
    out << "no chains\n";
  } else {
    for (const auto& c : r.chains) out << chain_line(c) << '\n';
  }
  if (is_curve_center_exception(r.n)) out << "curve-centre fibration (no point blow-up chain)\n";
  for (const auto& t : r.targets) out << "target " << target_str(t) << '\n';
}

inline void print_show(const FamilyRecord& r, std::ostream& out) {
  out << "n: " << r.n << '\n'
      << "weights: P(" << weights_str(r, ',') << ")\n"
      << "degree: " << r.degree() << '\n'
      << "-K^3: " << r.kcube << '\n'
      << "basket: " << r.basket.str() << '\n'
      << "has_fibration: " << (r.has_fibration ? "yes" : "no") << '\n'
      << "chains:\n";
  if (r.chains.empty()) out << "  none\n";
  for (const auto& c : r.chains) out << "  " << chain_line(c) << '\n';
  out << "targets:";
  if (r.targets.empty()) out << " none";
  for (const auto& t : r.targets) out << ' ' << target_str(t);
  out << '\n';
}

inline std::vector<Rational> parse_vector(const std::vector<std::string>& parts) {
  std::vector<Rational> out;
  for (const auto& p : parts) {
    try {
      out.push_back(Rational::parse(p));
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

inline DivisorClass class_from(const std::vector<Rational>& v, std::size_t k, const char* name) {
  if (v.size() != k + 1)
    throw UsageError(std::string("--") + name + " needs " + std::to_string(k + 1) + " coefficients, got " +
                     std::to_string(v.size()));
  return DivisorClass{v[0], std::vector<Rational>(v.begin() + 1, v.end())};
}

/// Runs one command line (args excludes the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic fibration data for the 95 Fano hypersurface families", "fano95"};
  app.require_subcommand(1);

  std::string format = "table";
  auto* list = app.add_subcommand("list", "Catalogue of all families");
  list->add_option("--format", format, "table, json or csv");

  int n = 0;
  auto* show = app.add_subcommand("show", "Everything known about one family");
  show->add_option("n", n)->required();
  auto* basket = app.add_subcommand("basket", "Singularities of one family");
  basket->add_option("n", n)->required();
  auto* fibrations = app.add_subcommand("fibrations", "Zero-chains and fibration bases of one family");
  fibrations->add_option("n", n)->required();

  app.add_subcommand("classify", "Families without chains and without fibrations");

  std::string d0cube;
  std::vector<std::string> ecubes, ca, cb, cc;
  auto* triple = app.add_subcommand("triple", "Triple product of three classes on a blow-up tower");
  triple->add_option("--d0cube", d0cube, "self-intersection of the base class")->required();
  triple->add_option("--ecubes", ecubes, "E_i^3, comma separated")->delimiter(',');
  triple->add_option("--a", ca, "coefficients c0,c1,...")->delimiter(',')->required();
  triple->add_option("--b", cb)->delimiter(',')->required();
  triple->add_option("--c", cc)->delimiter(',')->required();

  std::string path;
  auto* exp = app.add_subcommand("export", "Write the family database as JSON");
  exp->add_option("path", path)->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*triple) {
      const auto e = parse_vector(ecubes);
      const TowerContext ctx{parse_vector({d0cube}).front(), e};
      const auto a = class_from(parse_vector(ca), e.size(), "a");
      const auto b = class_from(parse_vector(cb), e.size(), "b");
      const auto c = class_from(parse_vector(cc), e.size(), "c");
      out << triple_product(a, b, c, ctx) << '\n';
      return kOk;
    }

    const auto& db = database(degree_bound_from_env());
    if (*list) {
      print_list(db, format, out);
    } else if (*show) {
      print_show(record(db, n), out);
    } else if (*basket) {
      out << record(db, n).basket.str() << '\n';
    } else if (*fibrations) {
      print_fibrations(record(db, n), out);
    } else if (app.got_subcommand("classify")) {
      std::string no_chain, no_fib;
      for (const auto& r : db) {
        if (r.chains.empty()) no_chain += " " + std::to_string(r.n);
        if (!r.has_fibration) no_fib += " " + std::to_string(r.n);
      }
      out << "families: " << db.size() << '\n'
          << "no chain:" << no_chain << '\n'
          << "no fibration:" << no_fib << '\n';
    } else if (*exp) {
      std::ofstream file(path, std::ios::binary | std::ios::trunc);
      if (!file) {
        err << "cannot open " << path << " for writing\n";
        return kIo;
      }
      file << database_dump(db);
      file.close();
      if (!file) {
        err << "failed writing " << path << '\n';
        return kIo;
      }
      out << "wrote " << db.size() << " records to " << path << '\n';
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace fano95::cli
