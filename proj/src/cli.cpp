#include "spinproj/cli.hpp"

#include "spinproj/opcalc.hpp"
#include "spinproj/render.hpp"
#include "spinproj/serialize.hpp"
#include "spinproj/spin.hpp"

#include <CLI11.hpp>

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace spinproj::cli {

namespace {

enum class Format { Text, Json, Latex };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<BigRational> parse_list(const std::string& text, const char* what) {
  std::vector<BigRational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos) throw UsageError(std::string("empty entry in --") + what);
    out.push_back(BigRational::parse(item.substr(first, last - first + 1)));
  }
  if (out.empty() || text.back() == ',') throw UsageError(std::string("empty entry in --") + what);
  return out;
}

struct Options {
  std::string spin;
  std::string m;
  std::string values;
  std::string nodes;
  std::string coeffs;
  unsigned long power = 0;
  long max_twos = 100;
  Format format = Format::Text;
};

SpinQuantum checked_spin(const Options& opt) {
  SpinQuantum s = SpinQuantum::parse(opt.spin);
  if (s.twice() > opt.max_twos) {
    throw UsageError("spin " + s.value().to_string() + " exceeds guard 2S <= " + std::to_string(opt.max_twos) +
                     " (raise with --max-twos)");
  }
  return s;
}

std::string latex_label(const HalfInt& m) { return render_rational(m.to_rational(), Style::Latex); }

std::string cmd_projector(const Options& opt) {
  const SpinQuantum spin = checked_spin(opt);
  const MagneticQuantum q(spin, HalfInt::parse(opt.m));
  const Polynomial p = projector_polynomial(q);
  const FactoredForm factored = projector_factored(q);
  const DiagonalOperator op = eval_on_diagonal(p, sz_operator(spin));

  std::ostringstream out;
  switch (opt.format) {
    case Format::Text:
      out << "P = " << render_polynomial(p, sz_symbol(Style::Text), Style::Text) << " ; "
          << render_diagonal(op, Style::Text) << "\n";
      out << "factored: " << render_factored(factored, sz_symbol(Style::Text), Style::Text) << "\n";
      break;
    case Format::Latex: {
      const std::string lhs = "\\hat P_{" + latex_label(q.m()) + "}(\\hat S_z) = ";
      out << lhs << render_polynomial(p, sz_symbol(Style::Latex), Style::Latex) << "\n";
      out << lhs << render_factored(factored, sz_symbol(Style::Latex), Style::Latex) << "\n";
      out << lhs << render_diagonal(op, Style::Latex) << "\n";
      break;
    }
    case Format::Json: {
      Json j{{"spin", to_json(spin.value())},
             {"m", to_json(q.m())},
             {"polynomial", to_json(p)},
             {"factored", {{"coefficient", to_json(factored.coefficient)}, {"roots", to_json(factored.roots)}}},
             {"operator", to_json(op)}};
      out << j.dump() << "\n";
      break;
    }
  }
  return out.str();
}

std::string cmd_funcal(const Options& opt) {
  const SpinQuantum spin = checked_spin(opt);
  if (opt.values.empty() == opt.coeffs.empty()) throw UsageError("funcal needs exactly one of --values or --coeffs");
  Polynomial p;
  std::vector<BigRational> values;
  if (!opt.values.empty()) {
    values = parse_list(opt.values, "values");
    if (values.size() != spin.dimension()) {
      throw UsageError("--values needs " + std::to_string(spin.dimension()) + " entries (m = S down to -S), got " +
                       std::to_string(values.size()));
    }
    p = operator_function(spin, values);
  } else {
    p = operator_function(spin, Polynomial(parse_list(opt.coeffs, "coeffs")));
  }
  const DiagonalOperator op = eval_on_diagonal(p, sz_operator(spin));
  if (values.empty()) values.assign(op.diagonal().begin(), op.diagonal().end());

  std::ostringstream out;
  switch (opt.format) {
    case Format::Text:
      out << "f(Sz) = " << render_polynomial(p, sz_symbol(Style::Text), Style::Text) << " ; "
          << render_diagonal(op, Style::Text) << "\n";
      break;
    case Format::Latex:
      out << "\\hat f(\\hat S_z) = " << render_polynomial(p, sz_symbol(Style::Latex), Style::Latex) << "\n";
      out << "\\hat f(\\hat S_z) = " << render_diagonal(op, Style::Latex) << "\n";
      break;
    case Format::Json: {
      Json j{{"spin", to_json(spin.value())},
             {"values", to_json(values)},
             {"polynomial", to_json(p)},
             {"operator", to_json(op)}};
      out << j.dump() << "\n";
      break;
    }
  }
  return out.str();
}

std::string cmd_reduce(const Options& opt) {
  const SpinQuantum spin = checked_spin(opt);
  const Polynomial p = reduce_power(spin, opt.power);
  std::ostringstream out;
  const Polynomial power = Polynomial::monomial(BigRational(1), opt.power);
  switch (opt.format) {
    case Format::Text:
      out << render_polynomial(power, sz_symbol(Style::Text), Style::Text) << " = "
          << render_polynomial(p, sz_symbol(Style::Text), Style::Text) << "\n";
      break;
    case Format::Latex:
      out << render_polynomial(power, sz_symbol(Style::Latex), Style::Latex) << " = "
          << render_polynomial(p, sz_symbol(Style::Latex), Style::Latex) << "\n";
      break;
    case Format::Json:
      out << Json{{"spin", to_json(spin.value())}, {"power", opt.power}, {"polynomial", to_json(p)}}.dump() << "\n";
      break;
  }
  return out.str();
}

std::string cmd_interpolate(const Options& opt) {
  if (opt.nodes.empty() || opt.values.empty()) throw UsageError("interpolate needs --nodes and --values");
  const NodeSet nodes(parse_list(opt.nodes, "nodes"));
  const auto values = parse_list(opt.values, "values");
  if (values.size() != nodes.size()) {
    throw UsageError("--values has " + std::to_string(values.size()) + " entries for " +
                     std::to_string(nodes.size()) + " nodes");
  }
  const Polynomial p = interpolate(nodes, values);
  std::ostringstream out;
  switch (opt.format) {
    case Format::Text:
      out << render_polynomial(p, "x", Style::Text) << "\n";
      break;
    case Format::Latex:
      out << "P(x) = " << render_polynomial(p, "x", Style::Latex) << "\n";
      break;
    case Format::Json:
      out << Json{{"nodes", to_json(nodes.nodes())}, {"values", to_json(values)}, {"polynomial", to_json(p)}}.dump()
          << "\n";
      break;
  }
  return out.str();
}

std::string cmd_verify(const Options& opt, bool& all_pass) {
  const SpinQuantum spin = checked_spin(opt);
  const VerificationReport report = run_suite(spin);
  all_pass = report.all_pass();
  std::ostringstream out;
  switch (opt.format) {
    case Format::Text: {
      out << "verify S = " << spin.value().to_string() << " (twoS = " << spin.twice() << ")\n";
      std::size_t failed = 0;
      for (const auto& c : report.checks) {
        out << "  " << (c.pass ? "PASS" : "FAIL") << " " << c.name;
        if (c.witness) out << ": " << *c.witness;
        out << "\n";
        failed += c.pass ? 0 : 1;
      }
      if (failed == 0) {
        out << "all " << report.checks.size() << " checks passed\n";
      } else {
        out << failed << " of " << report.checks.size() << " checks failed\n";
      }
      break;
    }
    case Format::Latex:
      out << "\\begin{array}{ll}\n";
      out << "\\multicolumn{2}{l}{S = " << render_rational(spin.value().to_rational(), Style::Latex) << "} \\\\\n";
      for (const auto& c : report.checks) {
        out << "\\text{" << c.name << "} & " << (c.pass ? "\\checkmark" : "\\times") << " \\\\\n";
      }
      out << "\\end{array}\n";
      break;
    case Format::Json:
      out << to_json(report).dump() << "\n";
      break;
  }
  return out.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spin projection operators P_m(S_z) and operator functions f(S_z).\n"
               "Value lists are comma-separated rationals (\"p/q\" or \"p\") in m-descending order:\n"
               "the first entry belongs to m = S, the last to m = -S."};
  app.require_subcommand(1);
  Options opt;

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"latex", Format::Latex}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_spin = [&](CLI::App* sub) {
    sub->add_option("--spin", opt.spin, "Spin S, e.g. 1/2, 1, 3/2")->required();
    sub->add_option("--max-twos", opt.max_twos, "Largest accepted 2S")->check(CLI::NonNegativeNumber);
  };

  auto* projector = app.add_subcommand("projector", "Projector P_m(S_z) onto the eigenstate |m>");
  add_spin(projector);
  projector->add_option("--m", opt.m, "Magnetic quantum number m")->required();
  add_format(projector);

  auto* funcal = app.add_subcommand("funcal", "Operator function f(S_z) from a value table or polynomial");
  add_spin(funcal);
  funcal->add_option("--values", opt.values, "f(m) for m = S, S-1, ..., -S");
  funcal->add_option("--coeffs", opt.coeffs, "Polynomial f, ascending coefficients c0,c1,...");
  add_format(funcal);

  auto* reduce = app.add_subcommand("reduce", "Reduce S_z^n to degree <= 2S");
  add_spin(reduce);
  reduce->add_option("--power", opt.power, "Exponent n >= 0")->required();
  add_format(reduce);

  auto* interp = app.add_subcommand("interpolate", "Lagrange interpolating polynomial through (node, value) pairs");
  interp->add_option("--nodes", opt.nodes, "Distinct nodes x_0,x_1,...")->required();
  interp->add_option("--values", opt.values, "Values f(x_0),f(x_1),...")->required();
  add_format(interp);

  auto* verify = app.add_subcommand("verify", "Run the exact projector identity suite");
  add_spin(verify);
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsageError;
  }

  try {
    std::string rendered;
    int code = kSuccess;
    if (projector->parsed()) {
      rendered = cmd_projector(opt);
    } else if (funcal->parsed()) {
      rendered = cmd_funcal(opt);
    } else if (reduce->parsed()) {
      rendered = cmd_reduce(opt);
    } else if (interp->parsed()) {
      rendered = cmd_interpolate(opt);
    } else {
      bool all_pass = false;
      rendered = cmd_verify(opt, all_pass);
      if (!all_pass) code = kVerificationFailed;
    }
    out << rendered;
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace spinproj::cli
