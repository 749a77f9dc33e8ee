#pragma once

// Command-line front end. Exit codes:
//   0  success, every check verified
//   1  some statement refuted, or a closed formula is false
//   2  usage or parse error
//   3  evaluation or domain error

#include "arith/arith.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace arith::cli {

enum ExitCode : int { kOk = 0, kRefuted = 1, kUsage = 2, kEvaluation = 3 };

enum class OutputMode { Plain, Tsv };

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Interval {
  Int lo;
  Int hi;
};

inline Int parse_number(const std::string& text, const char* what) {
  try {
    return parse_int(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + ": '" + text + "' is not an integer");
  }
}

// "LO:HI" with LO <= HI.
inline Interval parse_interval(const std::string& text, const char* what) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw UsageError(std::string(what) + ": expected LO:HI, got '" + text + "'");
  Interval iv{parse_number(text.substr(0, colon), what), parse_number(text.substr(colon + 1), what)};
  if (iv.lo > iv.hi) throw UsageError(std::string(what) + ": empty interval " + text);
  return iv;
}

template <class Range>
std::string join(const Range& items, const std::string& sep) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += sep;
    first = false;
    std::ostringstream os;
    os << item;
    out += os.str();
  }
  return out;
}

inline std::string describe_plain(const dsl::CheckResult& r) {
  std::string s(dsl::to_string(r.verdict));
  if (r.verdict == dsl::Verdict::Refuted && r.counterexample && !r.counterexample->empty())
    s += " at " + dsl::to_string(*r.counterexample);
  if (!r.domain.empty()) {
    s += (r.verdict == dsl::Verdict::Refuted ? " searching " : " on ") + r.domain_text();
    s += " (" + std::to_string(r.assignments) + (r.assignments == 1 ? " assignment)" : " assignments)");
  }
  return s;
}

inline std::string describe_tsv(const dsl::CheckResult& r) {
  std::string s = std::string(dsl::to_string(r.verdict)) + "\t" + r.domain_text() + "\t" + std::to_string(r.assignments);
  if (r.verdict == dsl::Verdict::Refuted) {
    std::string cx;
    for (const auto& [name, value] : *r.counterexample) cx += (cx.empty() ? "" : ",") + name + "=" + value.str();
    s += "\t" + cx;
  }
  return s;
}

class Runner {
public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(std::vector<std::string> args) {
    CLI::App app{"Exact divisibility, primality, residue and binomial toolkit", "arith"};
    app.require_subcommand(1, 1);
    std::string format = "plain";
    app.add_option("--format", format, "Output mode")->check(CLI::IsMember({"plain", "tsv"}));

    std::string term_text;
    auto* eval = app.add_subcommand("eval", "Evaluate a term exactly");
    eval->add_option("TERM", term_text)->required();

    std::string formula_text, file, domain_text = "-100:100";
    auto* check = app.add_subcommand("check", "Check a statement (or a worksheet file) on bounded domains");
    check->add_option("FORMULA", formula_text);
    auto* file_opt = check->add_option("-f,--file", file, "Worksheet file");
    check->add_option("--domain", domain_text, "Default domain LO:HI for free variables");
    check->get_option("FORMULA")->excludes(file_opt);

    std::string modulus_text;
    std::vector<std::string> exprs;
    bool image = false;
    auto* table = app.add_subcommand("table", "Residue table of polynomial expressions");
    table->add_option("--mod", modulus_text, "Modulus")->required();
    table->add_option("EXPR", exprs)->required();
    table->add_flag("--image", image, "Print the residue sets and their intersection");

    std::string range_text, find_formula;
    auto* findall = app.add_subcommand("findall", "All solutions of a one-variable statement in a range");
    findall->add_option("--range", range_text, "Search interval LO:HI")->required();
    findall->add_option("FORMULA", find_formula)->required();

    std::string n_text, k_text;
    auto* prime = app.add_subcommand("prime", "Primality by trial division");
    prime->add_option("N", n_text)->required();
    auto* binom_cmd = app.add_subcommand("binom", "Binomial coefficient");
    binom_cmd->add_option("N", n_text)->required();
    binom_cmd->add_option("K", k_text)->required();
    auto* pascal = app.add_subcommand("pascal", "Row of Pascal's triangle");
    pascal->add_option("N", n_text)->required();
    auto* digits = app.add_subcommand("digits", "Decimal digits and the rules of 2 and 3");
    digits->add_option("N", n_text)->required();

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kUsage;
    }
    mode_ = format == "tsv" ? OutputMode::Tsv : OutputMode::Plain;

    try {
      if (eval->parsed()) return cmd_eval(term_text);
      if (check->parsed()) {
        const Interval d = parse_interval(domain_text, "--domain");
        if (!file.empty()) return cmd_check_file(file, {d.lo, d.hi});
        if (formula_text.empty()) throw UsageError("check: give a FORMULA or -f FILE");
        return cmd_check(formula_text, {d.lo, d.hi});
      }
      if (table->parsed()) return cmd_table(parse_number(modulus_text, "--mod"), exprs, image);
      if (findall->parsed()) return cmd_findall(parse_interval(range_text, "--range"), find_formula);
      if (prime->parsed()) return cmd_prime(parse_number(n_text, "N"));
      if (binom_cmd->parsed()) return cmd_binom(parse_number(n_text, "N"), parse_number(k_text, "K"));
      if (pascal->parsed()) return cmd_pascal(parse_number(n_text, "N"));
      if (digits->parsed()) return cmd_digits(parse_number(n_text, "N"));
    } catch (const UsageError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const dsl::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const dsl::WorksheetError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const dsl::EvalError& e) {
      err_ << "error: " << e.what() << "\n";
      return kEvaluation;
    } catch (const DomainError& e) {
      err_ << "error: " << e.what() << "\n";
      return kEvaluation;
    } catch (const std::invalid_argument& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    }
    return kUsage;
  }

private:
  bool tsv() const { return mode_ == OutputMode::Tsv; }

  int cmd_eval(const std::string& text) {
    const dsl::Term t = dsl::parse_term(text);
    out_ << dsl::eval_term(t, dsl::Env{}) << "\n";
    return kOk;
  }

  int cmd_check(const std::string& text, const dsl::Domain& domain) {
    const dsl::Formula f = dsl::parse_formula(text);
    const dsl::CheckResult r = dsl::bounded_check(f, domain);
    out_ << (tsv() ? describe_tsv(r) : describe_plain(r)) << "\n";
    return r.verdict == dsl::Verdict::VerifiedOnDomain ? kOk : kRefuted;
  }

  int cmd_check_file(const std::string& path, const dsl::Domain& domain) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read worksheet '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto outcomes = dsl::run_worksheet(dsl::parse_worksheet(buffer.str()), domain);
    bool parse_failed = false, eval_failed = false, refuted = false;
    for (const auto& o : outcomes) {
      if (const auto* r = std::get_if<dsl::CheckResult>(&o.result)) {
        refuted |= r->verdict == dsl::Verdict::Refuted;
        out_ << o.name << (tsv() ? "\t" + describe_tsv(*r) : ": " + describe_plain(*r)) << "\n";
      } else {
        const auto& e = std::get<dsl::ExerciseError>(o.result);
        (e.is_evaluation_error() ? eval_failed : parse_failed) = true;
        if (tsv()) {
          out_ << o.name << "\terror\t" << dsl::to_string(e.kind) << "\t" << e.text() << "\n";
        } else {
          out_ << o.name << ": error: " << e.text() << "\n";
        }
      }
    }
    if (parse_failed) return kUsage;
    if (eval_failed) return kEvaluation;
    return refuted ? kRefuted : kOk;
  }

  int cmd_table(const Int& modulus, const std::vector<std::string>& texts, bool image) {
    std::vector<ResidueRow> rows;
    for (const auto& text : texts) {
      const dsl::Term t = dsl::parse_term(text);
      const auto vars = dsl::free_variables(t);
      if (vars.size() > 1)
        throw dsl::ParseError(dsl::ErrorKind::NotResidueCompatible, t.span,
                              "'" + text + "' has more than one variable (" + join(vars, ", ") + ")");
      rows.push_back(residue_row(t, vars.empty() ? "x" : vars.front(), modulus));
    }
    const auto label = [](const ResidueRow& r) { return dsl::to_string(r.expr); };
    std::optional<ResidueSet> common;
    std::vector<ResidueSet> images;
    for (const auto& row : rows) {
      images.push_back(image_of(row));
      common = common ? intersect(*common, images.back()) : images.back();
    }
    if (!image) {
      if (tsv()) {
        std::vector<Int> header;
        for (Int r = 0; r < modulus; ++r) header.push_back(r);
        out_ << "expr\t" << join(header, "\t") << "\n";
        for (const auto& row : rows) out_ << label(row) << "\t" << join(row.values, "\t") << "\n";
      } else {
        out_ << render_table(rows, modulus);
      }
    } else {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (tsv()) {
          out_ << label(rows[i]) << "\t" << join(images[i].members, ",") << "\n";
        } else {
          out_ << label(rows[i]) << " (mod " << modulus << "): " << to_string(images[i]) << "\n";
        }
      }
    }
    if (rows.size() >= 2 || (image && !rows.empty())) {
      if (tsv()) {
        out_ << "intersection\t" << join(common->members, ",") << "\n";
      } else {
        out_ << "intersection: " << to_string(*common) << "\n";
      }
    }
    return kOk;
  }

  int cmd_findall(const Interval& range, const std::string& text) {
    const dsl::Formula f = dsl::parse_formula(text);
    const auto found = dsl::find_all_dsl(f, range.lo, range.hi);
    out_ << join(found, tsv() ? "\n" : " ") << (found.empty() && tsv() ? "" : "\n");
    return kOk;
  }

  int cmd_prime(const Int& n) {
    const PrimalityVerdict v = is_prime(n);
    if (tsv()) {
      out_ << n << "\t" << (v.is_prime ? "prime" : v.smallest_factor ? "composite" : "not prime");
      if (v.smallest_factor) out_ << "\t" << *v.smallest_factor;
      out_ << "\n";
    } else if (v.is_prime) {
      out_ << "prime\n";
    } else if (v.smallest_factor) {
      out_ << "composite (smallest factor " << *v.smallest_factor << ")\n";
    } else {
      out_ << "not prime\n";
    }
    return kOk;
  }

  int cmd_binom(const Int& n, const Int& k) {
    out_ << binom(Nat(n), Nat(k)) << "\n";
    return kOk;
  }

  int cmd_pascal(const Int& n) {
    out_ << join(pascal_row(Nat(n)), tsv() ? "\t" : " ") << "\n";
    return kOk;
  }

  int cmd_digits(const Int& n) {
    const Digits d = to_digits(n);
    const Int sum = digit_sum(d);
    const Int last = last_digit(d);
    const bool rule2 = floor_mod(last, Int{2}) == 0;
    const bool rule3 = floor_mod(sum, Int{3}) == 0;
    const auto yes = [](bool b) { return b ? "yes" : "no"; };
    if (tsv()) {
      out_ << "digits\t" << join(d.digits(), " ") << "\n"
           << "digit_sum\t" << sum << "\n"
           << "last_digit\t" << last << "\n"
           << "divisible_by_2\t" << yes(rule2) << "\n"
           << "divisible_by_3\t" << yes(rule3) << "\n";
    } else {
      out_ << "digits: " << join(d.digits(), " ") << "\n"
           << "digit sum: " << sum << "\n"
           << "last digit: " << last << "\n"
           << "divisible by 2: " << yes(rule2) << " (last digit " << last << ")\n"
           << "divisible by 3: " << yes(rule3) << " (digit sum " << sum << ")\n";
    }
    return kOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  OutputMode mode_ = OutputMode::Plain;
};

// args excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return Runner(out, err).run(std::move(args));
}

}  // namespace arith::cli
