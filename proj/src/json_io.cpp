#include "pointfree/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace pointfree {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path, std::string("invalid JSON: ") + e.what());
  }
  return j;
}

namespace {

std::vector<std::string> element_names(const json& j, const std::string& path) {
  if (!j.contains("elements") || !j["elements"].is_array())
    throw ParseError(path, "missing \"elements\" array");
  std::vector<std::string> names;
  for (const auto& e : j["elements"]) names.push_back(e.get<std::string>());
  return names;
}

}  // namespace

Poset poset_from_json(const json& j, const std::string& path) {
  std::vector<std::string> names = element_names(j, path);
  const int n = int(names.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i)
    if (!index.emplace(names[i], i).second)
      throw ParseError(path, "duplicate element \"" + names[i] + "\"");

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  if (j.contains("leq"))
    for (const auto& pair : j["leq"]) {
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError(path, "leq entries must be [a, b] pairs");
      auto a = index.find(pair[0].get<std::string>());
      auto b = index.find(pair[1].get<std::string>());
      if (a == index.end() || b == index.end())
        throw ParseError(path, "leq pair names an unknown element");
      leq[a->second][b->second] = true;
    }

  // transitive closure, then reject cycles between distinct elements
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if (leq[a][k])
        for (int b = 0; b < n; ++b)
          if (leq[k][b]) leq[a][b] = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && leq[a][b] && leq[b][a])
        throw ParseError(path, "order cycle through \"" + names[a] + "\" and \"" + names[b] +
                                   "\"");
  return Poset::validate(leq, std::move(names));
}

json poset_to_json(const Poset& p) {
  json j;
  j["elements"] = p.labels();
  json pairs = json::array();
  for (auto [a, b] : p.cover_pairs()) pairs.push_back({p.label(a), p.label(b)});
  j["leq"] = pairs;
  return j;
}

FiniteFrame frame_from_json(const json& j, const std::string& path) {
  if (j.contains("generate")) {
    std::string kind = j["generate"].get<std::string>();
    int n = j.value("n", 0);
    if (kind == "powerset") return FiniteFrame::powerset(n);
    if (kind == "chain") return FiniteFrame::chain(n);
    throw ParseError(path, "unknown frame generator \"" + kind + "\"");
  }
  return FiniteFrame::from_poset(poset_from_json(j, path));
}

Tree tree_from_json(const json& j, const std::string& path) {
  if (j.contains("generate")) {
    std::string kind = j["generate"].get<std::string>();
    int depth = j.value("depth", 0);
    int width = j.value("width", 2);
    if (kind == "cantor") return cantor_tree(depth);
    if (kind == "baire") return baire_tree(width, depth);
    if (kind == "koenig") return koenig_tree(width, depth);
    throw ParseError(path, "unknown tree generator \"" + kind + "\"");
  }
  if (!j.contains("nodes")) throw ParseError(path, "missing \"nodes\" array");
  std::vector<std::string> names;
  for (const auto& e : j["nodes"]) names.push_back(e.get<std::string>());
  std::map<std::string, int> index;
  for (int i = 0; i < int(names.size()); ++i)
    if (!index.emplace(names[i], i).second)
      throw ParseError(path, "duplicate node \"" + names[i] + "\"");
  std::vector<int> parent(names.size(), -1);
  if (j.contains("parent"))
    for (auto it = j["parent"].begin(); it != j["parent"].end(); ++it) {
      auto child = index.find(it.key());
      auto par = index.find(it.value().get<std::string>());
      if (child == index.end() || par == index.end())
        throw ParseError(path, "parent map names an unknown node");
      parent[child->second] = par->second;
    }
  try {
    return Tree::from_parents(std::move(parent), std::move(names));
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
}

json tree_to_json(const Tree& t) {
  json j;
  j["nodes"] = t.labels();
  json parent = json::object();
  for (int v = 0; v < t.size(); ++v)
    if (t.parent(v) != -1) parent[t.label(v)] = t.label(t.parent(v));
  j["parent"] = parent;
  return j;
}

PAdicBall ball_from_json(const json& j, const std::string& path) {
  if (!j.contains("p") || !j.contains("coset_exp"))
    throw ParseError(path, "ball needs \"p\" and \"coset_exp\"");
  long long p = j["p"].get<long long>();
  PAdicScalar center;
  if (j.contains("center")) {
    center.mantissa = j["center"].value("m", 0ll);
    center.exponent = j["center"].value("e", 0);
  }
  try {
    return PAdicBall(p, normalize_scalar(p, center.mantissa, center.exponent),
                     j["coset_exp"].get<int>());
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
}

json ball_to_json(const PAdicBall& b) {
  return json{{"p", b.p()},
              {"center", {{"m", b.center().mantissa}, {"e", b.center().exponent}}},
              {"coset_exp", b.coset_exp()},
              {"literal", b.to_string()}};
}

PAdicBall ball_from_literal(const std::string& text) {
  // p^k*Zp+c with c an integer or a/b, b a power of p
  std::string s = text;
  auto caret = s.find('^');
  auto star = s.find("*Zp+");
  if (caret == std::string::npos || star == std::string::npos || star < caret)
    throw ParseError(text, "expected p^k*Zp+c");
  long long p = std::stoll(s.substr(0, caret));
  int k = std::stoi(s.substr(caret + 1, star - caret - 1));
  std::string c = s.substr(star + 4);
  long long num = 0, den = 1;
  auto slash = c.find('/');
  if (slash == std::string::npos) {
    num = std::stoll(c);
  } else {
    num = std::stoll(c.substr(0, slash));
    den = std::stoll(c.substr(slash + 1));
  }
  int e = 0;
  while (den > 1) {
    if (den % p != 0)
      throw NotRepresentableError("ball center denominator is not a power of " +
                                  std::to_string(p));
    den /= p;
    --e;
  }
  return PAdicBall(p, normalize_scalar(p, num, e), k);
}

ClosureMap nucleus_from_json(const FiniteFrame& f, const json& j, const std::string& path) {
  if (!j.contains("table") || !j["table"].is_array())
    throw ParseError(path, "nucleus needs a \"table\" array of [a, j(a)] pairs");
  std::vector<int> table(f.size(), -1);
  for (const auto& pair : j["table"]) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError(path, "table entries must be [a, j(a)] pairs");
    int a = pair[0].get<int>();
    int ja = pair[1].get<int>();
    if (a < 0 || a >= f.size() || ja < 0 || ja >= f.size())
      throw ParseError(path, "table entry out of range");
    table[a] = ja;
  }
  for (int a = 0; a < f.size(); ++a)
    if (table[a] == -1) throw ParseError(path, "table misses element " + std::to_string(a));
  try {
    return make_closure_map(f, std::move(table));
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
}

json nucleus_to_json(const ClosureMap& c) {
  json table = json::array();
  for (int a = 0; a < int(c.table.size()); ++a) table.push_back({a, c.table[a]});
  return json{{"table", table}};
}

json report_to_json(const Report& r, bool with_timing) {
  json j;
  j["command"] = r.command;
  j["seed"] = r.seed;
  j["max_size"] = r.max_size;
  json records = json::array();
  for (const auto& rec : r.records)
    records.push_back({{"name", rec.name},
                       {"anchor", rec.anchor},
                       {"status", rec.pass ? "pass" : "fail"},
                       {"witness", rec.witness}});
  j["records"] = records;
  j["all_pass"] = r.all_pass();
  if (with_timing && r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string poset_to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < p.size(); ++i) os << "  n" << i << " [label=" << quote(p.label(i)) << "];\n";
  for (auto [a, b] : p.cover_pairs()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string tree_to_dot(const Tree& t) {
  std::ostringstream os;
  os << "digraph tree {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int v = 0; v < t.size(); ++v) os << "  n" << v << " [label=" << quote(t.label(v)) << "];\n";
  for (int v = 0; v < t.size(); ++v)
    if (t.parent(v) != -1) os << "  n" << t.parent(v) << " -> n" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string tree_base_to_dot(const TreeBase& tb) {
  const Tree& t = tb.tree;
  std::ostringstream os;
  os << "digraph treebase {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int v = 0; v < t.size(); ++v)
    os << "  n" << v << " [label=" << quote(t.label(v) + " @L" + std::to_string(t.level_of(v)))
       << "];\n";
  for (int v = 0; v < t.size(); ++v)
    if (t.parent(v) != -1) os << "  n" << t.parent(v) << " -> n" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace pointfree
