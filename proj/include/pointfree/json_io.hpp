#pragma once

#include <string>

#include <json.hpp>

#include "pointfree/branch.hpp"
#include "pointfree/frame.hpp"
#include "pointfree/nucleus.hpp"
#include "pointfree/padic.hpp"
#include "pointfree/poset.hpp"
#include "pointfree/tree.hpp"
#include "pointfree/verify.hpp"

namespace pointfree {

using json = nlohmann::json;

// {"elements": [...], "leq": [["a","b"], ...]}; reflexive pairs optional,
// transitive closure applied after an acyclicity check.
Poset poset_from_json(const json& j, const std::string& path = "<memory>");
json poset_to_json(const Poset& p);

// Explicit {"elements","leq"} or {"generate":"powerset"|"chain","n":k}.
FiniteFrame frame_from_json(const json& j, const std::string& path = "<memory>");

// {"nodes":[...],"parent":{...}} or {"generate":"cantor"|"baire"|"koenig",...}.
Tree tree_from_json(const json& j, const std::string& path = "<memory>");
json tree_to_json(const Tree& t);

// {"p":3,"center":{"m":1,"e":0},"coset_exp":2}
PAdicBall ball_from_json(const json& j, const std::string& path = "<memory>");
json ball_to_json(const PAdicBall& b);

// p^k*Zp+c literal, c an integer or a fraction with a p-power denominator.
PAdicBall ball_from_literal(const std::string& text);

// {"table": [[a, j(a)], ...]}
ClosureMap nucleus_from_json(const FiniteFrame& f, const json& j,
                             const std::string& path = "<memory>");
json nucleus_to_json(const ClosureMap& c);

json report_to_json(const Report& r, bool with_timing);

std::string poset_to_dot(const Poset& p);          // Hasse diagram
std::string tree_to_dot(const Tree& t);            // root at the bottom, growing up
std::string tree_base_to_dot(const TreeBase& tb);  // level-annotated

json load_json_file(const std::string& path);

}  // namespace pointfree
