#pragma once

// Command line front end. `main` is the whole program; tools/metab.cpp
// only forwards argv to it.

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "serialize.hpp"

namespace metab::cli {

  //! Exit status of `eq` and of failures.
  enum ExitCode : int { kOk = 0, kUnequal = 1, kError = 2 };

  struct Options {
    std::string              group = "metabelian";
    std::size_t              rank  = 2;
    long long                level = 1;
    bool                     json  = false;
    std::string              subgroup;
    std::string              plane;
    std::string              perturb;
    std::string              file;
    std::vector<std::string> operands;
  };

  //! Output of one command: the document to print and the exit status.
  struct Result {
    std::string text;
    int         status = kOk;
  };

  namespace detail {

    inline std::string point_text(Point const& p) {
      return "(" + p.to_string() + ")";
    }

    inline std::string flow_text(EdgeFlow const& f) {
      if (f.empty()) {
        return "0";
      }
      std::string out;
      for (auto const& [e, mult] : f) {
        if (!out.empty()) {
          out += ' ';
        }
        out += "(" + point_text(e.base) + "," + std::to_string(e.axis) + "):"
               + (mult > 0 ? "+" : "") + mult.str();
      }
      return out;
    }

    inline std::string plaquettes_text(PlaquetteSum const& s) {
      if (s.empty()) {
        return "0";
      }
      std::string out;
      for (auto const& [p, mult] : s) {
        if (!out.empty()) {
          out += ' ';
        }
        out += "p(" + point_text(p.base) + "," + std::to_string(p.i) + ","
               + std::to_string(p.j) + "):" + (mult > 0 ? "+" : "") + mult.str();
      }
      return out;
    }

    inline Result emit(Options const& o, json const& doc, std::string const& human) {
      return {o.json ? doc.dump() : human, kOk};
    }

    inline std::string const& operand(Options const& o, std::size_t i) {
      if (i >= o.operands.size()) {
        throw ParseError("missing operand");
      }
      return o.operands[i];
    }

    inline void check_group(std::string const& g) {
      static char const* const groups[]
          = {"free", "abelian", "heisenberg", "metabelian", "satellite"};
      for (char const* name : groups) {
        if (g == name) {
          return;
        }
      }
      throw ParseError("unknown group '" + g + "'");
    }

    // Evaluates one word in the selected quotient; returns the JSON document
    // and its human rendering.
    inline std::pair<json, std::string> evaluate(Options const&     o,
                                                 std::string const& text) {
      check_group(o.group);
      if (o.group == "satellite") {
        SatelliteElem a = sat_from_word(text, Integer(o.level));
        return {to_json(a), "k " + a.k.str() + " vec " + point_text(a.vec)
                                + " cycle " + flow_text(a.cycle)};
      }
      Word w = parse_word(text, o.rank);
      if (o.group == "free") {
        return {to_json(w), to_string(w)};
      }
      if (o.group == "abelian") {
        Point p = abelian_image(w);
        return {json{{"endpoint", to_json(p)}}, point_text(p)};
      }
      if (o.group == "heisenberg") {
        HeisenbergElem h     = heis_eval(w);
        std::string    human = "endpoint " + point_text(h.endpoint());
        for (std::size_t i = 1; i <= h.rank(); ++i) {
          for (std::size_t j = i + 1; j <= h.rank(); ++j) {
            human += " A" + std::to_string(i) + "," + std::to_string(j) + "="
                     + h.area(i, j).str();
          }
        }
        return {to_json(h), human};
      }
      MetabelianElem m = met_from_word(w);
      return {to_json(m),
              "endpoint " + point_text(m.endpoint) + " flow " + flow_text(m.flow)};
    }

    inline Result cmd_reduce(Options const& o) {
      Word w = parse_word(operand(o, 0), o.rank);
      return emit(o, to_json(w), to_string(w));
    }

    inline Result cmd_eval(Options const& o) {
      auto [doc, human] = evaluate(o, operand(o, 0));
      return emit(o, doc, human);
    }

    inline Result cmd_eq(Options const& o) {
      auto lhs   = evaluate(o, operand(o, 0)).first;
      auto rhs   = evaluate(o, operand(o, 1)).first;
      bool equal = lhs == rhs;
      json doc   = {{"group", o.group},
                    {"equal", equal},
                    {"verdict", equal ? "equal" : "unequal"}};
      Result r = emit(o, doc, equal ? "equal" : "unequal");
      r.status = equal ? kOk : kUnequal;
      return r;
    }

    inline Word loop_word(Options const& o) {
      Word w = parse_word(operand(o, 0), o.rank);
      if (!is_loop(w)) {
        throw NotACycle();
      }
      return w;
    }

    inline Result cmd_decompose(Options const& o) {
      PlaquetteSum s = decompose_cycle(evaluate_path(loop_word(o)).flow);
      return emit(o, to_json(s), plaquettes_text(s));
    }

    inline Result cmd_area(Options const& o) {
      std::size_t i = 1, j = 2;
      if (!o.plane.empty()) {
        Point plane = parse_point(o.plane);
        if (plane.rank() != 2 || plane(1) < 1 || plane(2) < 1) {
          throw ParseError("--plane expects two positive axes 'i,j'");
        }
        i = plane(1).convert_to<std::size_t>();
        j = plane(2).convert_to<std::size_t>();
      }
      EdgeFlow f    = project_flow(evaluate_path(loop_word(o)).flow, i, j);
      Integer  area = algebraic_area(f);
      return emit(o, json{{"i", i}, {"j", j}, {"area", to_json(area)}}, area.str());
    }

    inline Result cmd_cocycle(Options const& o) {
      Point    g1 = parse_point(operand(o, 0));
      Point    g2 = parse_point(operand(o, 1));
      EdgeFlow c  = canonical_cocycle(g1, g2);
      return emit(o, to_json(c), flow_text(c));
    }

    inline Result cmd_beta(Options const& o) {
      CocycleRule y = CocycleRule::scaled(2, Integer(o.level));
      if (!o.perturb.empty()) {
        std::ifstream in(o.perturb);
        if (!in) {
          throw ParseError("cannot read perturbation file '" + o.perturb + "'");
        }
        json doc = json::parse(in, nullptr, false);
        if (doc.is_discarded()) {
          throw ParseError("perturbation file '" + o.perturb + "' is not JSON");
        }
        y = CocycleRule::perturbed(std::move(y), cochain_from_json(doc, 2));
      }
      Integer b = beta(y);
      return emit(o, json{{"beta", to_json(b)}}, b.str());
    }

    inline Result cmd_fox(Options const& o) {
      FoxImage    f     = fox_image(parse_word(operand(o, 0), o.rank));
      std::string human = "monomial " + point_text(f.monomial);
      for (std::size_t i = 0; i < f.derivatives.size(); ++i) {
        human += "\nD" + std::to_string(i + 1) + ":";
        for (auto const& [m, coeff] : f.derivatives[i]) {
          human += " " + point_text(m) + ":" + (coeff > 0 ? "+" : "") + coeff.str();
        }
      }
      return emit(o, to_json(f), human);
    }

    inline Result cmd_member(Options const& o) {
      SatelliteElem a = sat_from_word(operand(o, 0), Integer(o.level));
      bool          member;
      if (o.subgroup == "N") {
        member = sat_in_N(a);
      } else if (o.subgroup == "M") {
        member = sat_in_M(a);
      } else if (o.subgroup == "commutant") {
        member = sat_in_commutant(a);
      } else {
        throw ParseError("--sub must be N, M or commutant");
      }
      json doc = {{"subgroup", o.subgroup}, {"k", o.level}, {"member", member}};
      return emit(o, doc, member ? "true" : "false");
    }

    //! Splits a batch line into arguments; double quotes group words.
    inline std::vector<std::string> split_line(std::string const& line) {
      std::vector<std::string> out;
      std::string              current;
      bool                     in_quotes = false, have = false;
      for (char c : line) {
        if (c == '"') {
          in_quotes = !in_quotes;
          have      = true;
        } else if (!in_quotes && (c == ' ' || c == '\t')) {
          if (have) {
            out.push_back(current);
            current.clear();
            have = false;
          }
        } else {
          current += c;
          have = true;
        }
      }
      if (in_quotes) {
        throw ParseError("unbalanced quotes");
      }
      if (have) {
        out.push_back(current);
      }
      return out;
    }

  }  // namespace detail

  inline Result run(std::vector<std::string> const& args, std::ostream& err, bool nested);

  namespace detail {

    inline std::string one_line(std::string s) {
      while (!s.empty() && s.back() == '\n') {
        s.pop_back();
      }
      for (char& c : s) {
        if (c == '\n') {
          c = ' ';
        }
      }
      return s;
    }

    inline Result cmd_batch(Options const& o) {
      std::ifstream in(o.file);
      if (!in) {
        throw ParseError("cannot read batch file '" + o.file + "'");
      }
      std::string out, line;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
          line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
          out += '\n';
          continue;
        }
        std::vector<std::string> args;
        try {
          auto eq_sign = line.find('=');
          if (eq_sign != std::string::npos) {
            args = {"eq", "--group", o.group, "--d", std::to_string(o.rank),
                    "--k", std::to_string(o.level), line.substr(0, eq_sign),
                    line.substr(eq_sign + 1)};
            if (o.json) {
              args.push_back("--json");
            }
          } else {
            args = split_line(line);
          }
        } catch (Error const& e) {
          out += std::string("error: ") + e.what() + '\n';
          continue;
        }
        std::ostringstream line_err;
        Result             r = run(args, line_err, true);
        if (r.status == kError) {
          std::string msg = one_line(line_err.str());
          out += (msg.empty() ? std::string("error") : msg) + '\n';
        } else {
          out += one_line(r.text) + '\n';
        }
      }
      if (!out.empty()) {
        out.pop_back();
      }
      return {out, kOk};
    }

    inline void add_rank(CLI::App* sub, Options& o) {
      sub->add_option("--d", o.rank, "number of generators")
          ->check(CLI::PositiveNumber);
    }
    inline void add_group(CLI::App* sub, Options& o) {
      sub->add_option("--group", o.group,
                      "free | abelian | heisenberg | metabelian | satellite")
          ->check(CLI::IsMember(
              {"free", "abelian", "heisenberg", "metabelian", "satellite"}));
    }
    inline void add_level(CLI::App* sub, Options& o) {
      sub->add_option("--k", o.level, "satellite level k of Met_k(2)");
    }
    inline void add_json(CLI::App* sub, Options& o) {
      sub->add_flag("--json", o.json, "emit one JSON document");
    }

  }  // namespace detail

  inline constexpr char const* kHelpFooter = R"(
Word grammar: tokens separated by whitespace or '.', each x<i> optionally
followed by ^<nonzero integer>, e.g. "x1 x2^-2 . x3".
Satellite words use the generators x, y, z with the same exponent syntax,
e.g. "x y x^-1 y^-1 z^-2".
Vectors are comma separated integers, e.g. 2,-1.
eq exits 0 when equal, 1 when unequal; any error exits 2.)";

  //! Parses \p args (without the program name) and executes the command.
  inline Result run(std::vector<std::string> const& args,
                    std::ostream&                   err,
                    bool                            nested = false) {
    Options  o;
    CLI::App app{"Exact word problem and homology computations in free "
                 "metabelian groups and their relatives",
                 "metab"};
    app.footer(kHelpFooter);
    app.require_subcommand(1);

    using Handler = std::function<Result(Options const&)>;
    std::vector<std::pair<CLI::App*, Handler>> handlers;
    auto add = [&](char const* name, char const* desc, Handler h) {
      CLI::App* sub = app.add_subcommand(name, desc);
      handlers.emplace_back(sub, std::move(h));
      detail::add_json(sub, o);
      return sub;
    };

    auto* reduce = add("reduce", "freely reduce a word", detail::cmd_reduce);
    detail::add_rank(reduce, o);
    reduce->add_option("word", o.operands)->required()->expected(1);

    for (char const* verb : {"eval", "nf"}) {
      auto* sub = add(verb, "evaluate a word in the selected group", detail::cmd_eval);
      detail::add_group(sub, o);
      detail::add_rank(sub, o);
      detail::add_level(sub, o);
      sub->add_option("word", o.operands)->required()->expected(1);
    }

    auto* eq = add("eq", "decide equality of two words", detail::cmd_eq);
    detail::add_group(eq, o);
    detail::add_rank(eq, o);
    detail::add_level(eq, o);
    eq->add_option("words", o.operands)->required()->expected(2);

    auto* decompose = add("decompose", "plaquette decomposition of a closed word",
                          detail::cmd_decompose);
    detail::add_rank(decompose, o);
    decompose->add_option("word", o.operands)->required()->expected(1);

    auto* area = add("area", "algebraic area of a closed word's projection",
                     detail::cmd_area);
    detail::add_rank(area, o);
    area->add_option("--plane", o.plane, "axes i,j with i < j (default 1,2)");
    area->add_option("word", o.operands)->required()->expected(1);

    auto* cocycle = add("cocycle", "canonical cocycle value c(g1, g2)",
                        detail::cmd_cocycle);
    cocycle->add_option("vectors", o.operands)->required()->expected(2);

    auto* beta_cmd = add("beta", "beta invariant of k * c (+ coboundary)",
                         detail::cmd_beta);
    detail::add_level(beta_cmd, o);
    beta_cmd->add_option("--perturb", o.perturb,
                         "JSON file [{\"vertex\":[m,n],\"plaquettes\":[...]}]");

    auto* fox = add("fox", "Magnus embedding image of a word", detail::cmd_fox);
    detail::add_rank(fox, o);
    fox->add_option("word", o.operands)->required()->expected(1);

    auto* member = add("member", "membership of a satellite word in N, M or the commutant",
                       detail::cmd_member);
    member->add_option("--sub", o.subgroup, "N | M | commutant")
        ->required()
        ->check(CLI::IsMember({"N", "M", "commutant"}));
    detail::add_level(member, o);
    member->add_option("word", o.operands)->required()->expected(1);

    if (!nested) {
      auto* batch = add("batch", "run one command (or 'w1 = w2' query) per line",
                        detail::cmd_batch);
      detail::add_group(batch, o);
      detail::add_rank(batch, o);
      detail::add_level(batch, o);
      batch->add_option("file", o.file)->required();
    }

    if (!args.empty() && !args.front().starts_with('-')
        && app.get_subcommand_no_throw(args.front()) == nullptr) {
      err << "error: unknown command '" << args.front() << "'\n";
      return {"", kError};
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      return {app.help(), kOk};
    } catch (CLI::CallForAllHelp const&) {
      return {app.help("", CLI::AppFormatMode::All), kOk};
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return {"", kError};
    }

    for (auto const& [sub, handler] : handlers) {
      if (sub->parsed()) {
        try {
          return handler(o);
        } catch (std::exception const& e) {
          err << "error: " << e.what() << '\n';
          return {"", kError};
        }
      }
    }
    err << "error: no command\n";
    return {"", kError};
  }

  //! Runs the program, printing the document (if any) to \p out.
  inline int main(std::vector<std::string> const& args,
                  std::ostream&                   out,
                  std::ostream&                   err) {
    Result r = run(args, err);
    if (r.status != kError && !r.text.empty()) {
      out << r.text;
      if (r.text.back() != '\n') {
        out << '\n';
      }
    }
    return r.status;
  }

}  // namespace metab::cli
