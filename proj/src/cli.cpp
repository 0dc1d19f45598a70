// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include "zxand/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zxand/circuit.hpp"
#include "zxand/eval.hpp"
#include "zxand/matrix.hpp"
#include "zxand/rewrite.hpp"
#include "zxand/rules.hpp"
#include "zxand/serialize.hpp"
#include "zxand/span.hpp"
#include "zxand/synth.hpp"
#include "zxand/term.hpp"
#include "zxand/translate.hpp"

namespace zxand {

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Either a diagram or a circuit, sniffed from the first non-space byte.
struct Input {
  std::optional<Diagram> diagram;
  std::optional<Circuit> circuit;
};

Input load_input(const std::string& path) {
  std::string text = slurp(path);
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) throw InputError(path + ": empty input");
  Input r;
  if (text[i] == '{') r.diagram = diagram_from_json(text);
  else if (text[i] == '(') r.diagram = term_to_diagram(parse_term(text));
  else r.circuit = parse_circuit(text);
  return r;
}

Diagram as_diagram(const Input& in) {
  if (in.diagram) return *in.diagram;
  return circuit_to_diagram(*in.circuit);
}

NatMatrix input_matrix(const Input& in) {
  if (in.diagram) return eval(*in.diagram);
  return circuit_matrix(*in.circuit);
}

std::string nat_str(const Nat& v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

json matrix_json(const NatMatrix& m) {
  json rows = json::array();
  for (std::int64_t r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (std::int64_t c = 0; c < m.cols; ++c) row.push_back(nat_str(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows}, {"cols", m.cols}, {"matrix", std::move(rows)}};
}

std::string diagram_text(const Diagram& d) {
  return print_term(diagram_to_term(d));
}

const char* status_name(InstanceReport::Status s) {
  switch (s) {
    case InstanceReport::Pass: return "pass";
    case InstanceReport::Fail: return "fail";
    case InstanceReport::Skipped: return "skipped";
  }
  return "?";
}

int cmd_check_axioms(const std::string& set, int max_arity, bool as_json,
                     std::ostream& out) {
  std::vector<std::string> sets;
  if (set == "all") sets = {"zxa", "tof", "cnot", "lemmas"};
  else sets = {set};
  std::vector<SoundnessReport> reports;
  for (const std::string& s : sets)
    for (auto& r : check_all(axiom_db(s, max_arity)))
      reports.push_back(std::move(r));
  bool all_pass = true;
  if (as_json) {
    json j = json::array();
    for (const auto& r : reports) {
      all_pass = all_pass && r.pass;
      json inst = json::array();
      for (const auto& i : r.instances) {
        json ji = {{"instantiation", i.desc}, {"status", status_name(i.status)}};
        if (i.status != InstanceReport::Pass) ji["witness"] = i.detail;
        inst.push_back(std::move(ji));
      }
      j.push_back({{"rule", r.rule},
                   {"status", r.pass ? "pass" : "fail"},
                   {"instances", std::move(inst)}});
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      all_pass = all_pass && r.pass;
      std::size_t skipped = 0;
      for (const auto& i : r.instances)
        if (i.status == InstanceReport::Skipped) ++skipped;
      out << (r.pass ? "PASS " : "FAIL ") << r.rule << " ("
          << r.instances.size() << " instances";
      if (skipped) out << ", " << skipped << " skipped";
      out << ")\n";
      for (const auto& i : r.instances)
        if (i.status == InstanceReport::Fail)
          out << "  FAIL " << i.desc << ": " << i.detail << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"zxand: an engine for the ZX& diagrammatic calculus"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file, file_b, set = "all", to;
  int max_arity = 3;
  bool trace = false;

  auto* c_eval = app.add_subcommand("eval", "print the exact matrix");
  c_eval->add_option("FILE", file)->required();
  auto* c_eq = app.add_subcommand("eq", "decide semantic equality");
  c_eq->add_option("A", file)->required();
  c_eq->add_option("B", file_b)->required();
  auto* c_ax = app.add_subcommand("check-axioms", "verify rule databases");
  c_ax->add_option("--set", set)
      ->check(CLI::IsMember({"zxa", "tof", "cnot", "lemmas", "all"}));
  c_ax->add_option("--max-arity", max_arity)->check(CLI::Range(1, 8));
  auto* c_simp = app.add_subcommand("simplify", "rewrite to a smaller form");
  c_simp->add_option("FILE", file)->required();
  c_simp->add_flag("--trace", trace, "print applied steps");
  auto* c_tr = app.add_subcommand("translate", "between diagrams and circuits");
  c_tr->add_option("--to", to)->required()->check(CLI::IsMember({"zx", "tof"}));
  c_tr->add_option("FILE", file)->required();
  auto* c_sy = app.add_subcommand("synth", "diagram for a matrix");
  c_sy->add_option("MATRIXFILE", file)->required();
  auto* c_cl = app.add_subcommand("classify", "map class of the semantics");
  c_cl->add_option("FILE", file)->required();
  auto* c_cc = app.add_subcommand("cross-check", "matrix vs span backend");
  c_cc->add_option("FILE", file)->required();
  auto* c_dot = app.add_subcommand("dot", "Graphviz rendering");
  c_dot->add_option("FILE", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_eval->parsed()) {
      NatMatrix m = input_matrix(load_input(file));
      if (as_json) out << matrix_json(m).dump(2) << "\n";
      else out << write_matrix(m);
      return 0;
    }
    if (c_eq->parsed()) {
      NatMatrix a = input_matrix(load_input(file));
      NatMatrix b = input_matrix(load_input(file_b));
      bool equal = a == b;
      if (as_json) out << json{{"equal", equal}}.dump(2) << "\n";
      else out << (equal ? "equal\n" : "unequal\n");
      return equal ? 0 : 1;
    }
    if (c_ax->parsed()) return cmd_check_axioms(set, max_arity, as_json, out);
    if (c_simp->parsed()) {
      SimplifyResult r = simplify(as_diagram(load_input(file)));
      if (as_json) {
        json steps = json::array();
        for (const auto& s : r.trace)
          steps.push_back({{"rule", s.rule},
                           {"vertices", s.vertices},
                           {"v_before", s.v_before},
                           {"e_before", s.e_before},
                           {"v_after", s.v_after},
                           {"e_after", s.e_after}});
        out << json{{"diagram", diagram_text(r.diagram)},
                    {"trace", std::move(steps)}}
                   .dump(2)
            << "\n";
      } else {
        if (trace)
          for (const auto& s : r.trace) {
            out << s.rule << " [";
            for (std::size_t i = 0; i < s.vertices.size(); ++i)
              out << (i ? " " : "") << s.vertices[i];
            out << "] V " << s.v_before << "->" << s.v_after << " E "
                << s.e_before << "->" << s.e_after << "\n";
          }
        out << diagram_text(r.diagram) << "\n";
      }
      return 0;
    }
    if (c_tr->parsed()) {
      Input in = load_input(file);
      if (to == "tof") {
        Circuit c = zx_to_tofhat(as_diagram(in));
        if (as_json) out << json{{"circuit", print_circuit(c)}}.dump(2) << "\n";
        else out << print_circuit(c);
      } else {
        if (!in.circuit)
          throw InputError("translate --to zx expects a circuit input");
        Diagram d = tofhat_to_zx(expand_to_primitive(*in.circuit));
        if (as_json) out << json{{"diagram", diagram_text(d)}}.dump(2) << "\n";
        else out << diagram_text(d) << "\n";
      }
      return 0;
    }
    if (c_sy->parsed()) {
      std::istringstream in(slurp(file));
      Diagram d = matrix_to_diagram(read_matrix(in));
      if (as_json) out << json{{"diagram", diagram_text(d)}}.dump(2) << "\n";
      else out << diagram_text(d) << "\n";
      return 0;
    }
    if (c_cl->parsed()) {
      const char* name =
          map_class_name(classify(input_matrix(load_input(file))).tightest);
      if (as_json) out << json{{"class", name}}.dump(2) << "\n";
      else out << name << "\n";
      return 0;
    }
    if (c_cc->parsed()) {
      Diagram d = as_diagram(load_input(file));
      NatMatrix a = eval(d);
      NatMatrix b = span_to_matrix(eval_span(d));
      bool agree = a == b;
      if (as_json) out << json{{"agree", agree}}.dump(2) << "\n";
      else out << (agree ? "agree\n" : "disagree\n");
      return agree ? 0 : 1;
    }
    if (c_dot->parsed()) {
      out << diagram_to_dot(as_diagram(load_input(file)));
      return 0;
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace zxand
