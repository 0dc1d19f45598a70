// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include "zxand/serialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace zxand {

namespace {

using json = nlohmann::ordered_json;

json endpoint_json(const Endpoint& e) {
  if (e.v == kInB) return {{"b", "in"}, {"i", e.leg}};
  if (e.v == kOutB) return {{"b", "out"}, {"i", e.leg}};
  return {{"v", e.v}, {"leg", e.leg}};
}

Endpoint endpoint_from_json(const json& j) {
  if (j.contains("b")) {
    const std::string b = j.at("b").get<std::string>();
    if (b != "in" && b != "out")
      throw DiagramError("json: endpoint boundary must be in or out");
    return {b == "in" ? kInB : kOutB, j.at("i").get<int>()};
  }
  return {j.at("v").get<int>(), j.at("leg").get<int>()};
}

const char* kind_name(VKind k) {
  switch (k) {
    case VKind::Z: return "z";
    case VKind::X: return "x";
    case VKind::And: return "and";
  }
  return "?";
}

} // namespace

std::string diagram_to_json(const Diagram& d) {
  json j;
  j["inputs"] = json::array();
  for (int i = 0; i < d.n_in; ++i) j["inputs"].push_back(i);
  j["outputs"] = json::array();
  for (int i = 0; i < d.n_out; ++i) j["outputs"].push_back(i);
  j["vertices"] = json::array();
  for (const auto& [id, v] : d.vertices) {
    json jv = {{"id", id}, {"kind", kind_name(v.kind)}, {"phase", v.phase}};
    if (v.kind == VKind::And) jv["apex"] = kApexLeg;
    j["vertices"].push_back(std::move(jv));
  }
  j["edges"] = json::array();
  for (const Edge& e : d.edges)
    j["edges"].push_back({endpoint_json(e.a), endpoint_json(e.b)});
  if (d.loops) j["loops"] = d.loops;
  return j.dump(2) + "\n";
}

Diagram diagram_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DiagramError(std::string("json: ") + e.what());
  }
  Diagram d;
  try {
    d.n_in = static_cast<int>(j.at("inputs").size());
    d.n_out = static_cast<int>(j.at("outputs").size());
    std::map<int, int> apex_of;
    for (const json& jv : j.at("vertices")) {
      int id = jv.at("id").get<int>();
      if (id < 0 || d.vertices.count(id))
        throw DiagramError("json: bad or duplicate vertex id");
      const std::string k = jv.at("kind").get<std::string>();
      Vertex v;
      if (k == "z") v.kind = VKind::Z;
      else if (k == "x") v.kind = VKind::X;
      else if (k == "and") v.kind = VKind::And;
      else throw DiagramError("json: unknown vertex kind");
      v.phase = jv.value("phase", 0);
      if (v.phase != 0 && v.phase != 1)
        throw DiagramError("json: phase must be 0 or 1");
      if (v.kind == VKind::And) apex_of[id] = jv.value("apex", kApexLeg);
      v.arity = 0;
      d.vertices[id] = v;
      d.next_id = std::max(d.next_id, id + 1);
    }
    for (const json& je : j.at("edges")) {
      if (!je.is_array() || je.size() != 2)
        throw DiagramError("json: edge must be an endpoint pair");
      d.add_edge(endpoint_from_json(je[0]), endpoint_from_json(je[1]));
    }
    d.loops = j.value("loops", 0);
    if (d.loops < 0) throw DiagramError("json: loops must be nonnegative");
    // Recover arities from leg indices; move a nonstandard And apex leg
    // into slot 2 by swapping leg labels.
    for (Edge& e : d.edges)
      for (Endpoint* ep : {&e.a, &e.b}) {
        if (ep->v < 0) continue;
        auto it = d.vertices.find(ep->v);
        if (it == d.vertices.end())
          throw DiagramError("json: edge references unknown vertex");
        auto ax = apex_of.find(ep->v);
        if (ax != apex_of.end() && ax->second != kApexLeg) {
          if (ep->leg == ax->second) ep->leg = kApexLeg;
          else if (ep->leg == kApexLeg) ep->leg = ax->second;
        }
        it->second.arity = std::max(it->second.arity, ep->leg + 1);
      }
    for (const auto& [id, v] : d.vertices)
      if (v.kind == VKind::And && v.arity != 3)
        throw DiagramError("json: And vertex must have exactly 3 legs");
  } catch (const json::exception& e) {
    throw DiagramError(std::string("json: ") + e.what());
  }
  validate(d);
  return d;
}

std::string diagram_to_dot(const Diagram& d) {
  std::ostringstream os;
  os << "graph zxand {\n  rankdir=LR;\n";
  for (int i = 0; i < d.n_in; ++i)
    os << "  in" << i << " [shape=plaintext,label=\"in " << i << "\"];\n";
  for (int i = 0; i < d.n_out; ++i)
    os << "  out" << i << " [shape=plaintext,label=\"out " << i << "\"];\n";
  for (const auto& [id, v] : d.vertices) {
    os << "  v" << id << " [";
    switch (v.kind) {
      case VKind::Z:
        os << "shape=circle,label=\"" << (v.phase ? "Z pi" : "Z") << "\"";
        break;
      case VKind::X:
        os << "shape=circle,style=filled,fillcolor=gray,label=\""
           << (v.phase ? "X pi" : "X") << "\"";
        break;
      case VKind::And:
        os << "shape=triangle,label=\"&\"";
        break;
    }
    os << "];\n";
  }
  auto name = [](const Endpoint& e) {
    std::ostringstream s;
    if (e.v == kInB) s << "in" << e.leg;
    else if (e.v == kOutB) s << "out" << e.leg;
    else s << "v" << e.v;
    return s.str();
  };
  for (const Edge& e : d.edges) {
    os << "  " << name(e.a) << " -- " << name(e.b);
    const bool apex_a = e.a.v >= 0 && e.a.leg == kApexLeg &&
                        d.vertices.at(e.a.v).kind == VKind::And;
    const bool apex_b = e.b.v >= 0 && e.b.leg == kApexLeg &&
                        d.vertices.at(e.b.v).kind == VKind::And;
    if (apex_a || apex_b) {
      os << " [";
      if (apex_a) os << "taillabel=\"*\"";
      if (apex_a && apex_b) os << ",";
      if (apex_b) os << "headlabel=\"*\"";
      os << "]";
    }
    os << ";\n";
  }
  for (int i = 0; i < d.loops; ++i)
    os << "  loop" << i << " [shape=circle,label=\"2\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace zxand
