#include "tropicost/system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tropicost {

std::optional<size_t> TransitionSystem::state_index(
    std::string_view name) const {
  for (size_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return i;
  return std::nullopt;
}

namespace {

std::vector<size_t> checked_set(std::vector<size_t> xs, size_t n,
                                const char* what) {
  if (xs.empty()) throw Error(std::string(what) + " set must be nonempty");
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    throw Error(std::string(what) + " set has duplicates");
  if (xs.back() >= n) throw Error(std::string(what) + " state out of range");
  return xs;
}

}  // namespace

TransitionSystem make_system(DioidPtr dioid, std::vector<std::string> states,
                             std::vector<size_t> initial,
                             std::vector<size_t> finals) {
  if (states.empty()) throw Error("a system needs at least one state");
  for (size_t i = 0; i < states.size(); ++i)
    for (size_t j = i + 1; j < states.size(); ++j)
      if (states[i] == states[j])
        throw Error("duplicate state '" + states[i] + "'");
  size_t n = states.size();
  CostMatrix m(dioid, n, n);
  return TransitionSystem{std::move(dioid), std::move(states), std::move(m),
                          checked_set(std::move(initial), n, "initial"),
                          checked_set(std::move(finals), n, "final")};
}

namespace {

struct Line {
  int number;
  std::vector<std::pair<std::string, int>> tokens;  // token, 1-based column
  std::string text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    ++number;
    pos = nl + 1;
    size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || raw[first] == '#') {
      if (pos > text.size()) break;
      continue;
    }
    Line line;
    line.number = number;
    line.text = std::string(raw);
    size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i >= raw.size()) break;
      size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      line.tokens.emplace_back(std::string(raw.substr(start, i - start)),
                               static_cast<int>(start) + 1);
    }
    out.push_back(std::move(line));
    if (pos > text.size()) break;
  }
  return out;
}

}  // namespace

ParsedSystem parse_system(std::string_view text) {
  std::optional<std::string> dioid_name;
  std::vector<std::string> universe;
  bool merge_edges = false;
  std::vector<std::string> states;
  DioidPtr dioid;
  std::optional<CostMatrix> matrix;
  std::optional<std::vector<size_t>> initial, finals;
  std::set<std::pair<size_t, size_t>> declared_edges;
  std::vector<std::string> warnings;

  auto state_of = [&](const std::string& name, const Line& ln,
                      int col) -> size_t {
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end())
      throw ParseError("unknown state '" + name + "'", ln.number, col);
    return static_cast<size_t>(it - states.begin());
  };

  for (const Line& ln : split_lines(text)) {
    const std::string& head = ln.tokens.front().first;
    auto argc = ln.tokens.size() - 1;
    if (head == "dioid") {
      if (dioid_name)
        throw ParseError("repeated dioid directive", ln.number);
      if (argc != 1)
        throw ParseError("dioid directive takes one name", ln.number);
      dioid_name = ln.tokens[1].first;
    } else if (head == "universe") {
      if (!states.empty())
        throw ParseError("universe must precede states", ln.number);
      if (argc == 0)
        throw ParseError("universe directive needs members", ln.number);
      for (size_t i = 1; i < ln.tokens.size(); ++i)
        universe.push_back(ln.tokens[i].first);
    } else if (head == "merge-edges") {
      if (argc != 0)
        throw ParseError("merge-edges takes no arguments", ln.number);
      merge_edges = true;
    } else if (head == "states") {
      if (!states.empty())
        throw ParseError("repeated states directive", ln.number);
      if (argc == 0)
        throw ParseError("states directive needs at least one name", ln.number);
      if (!dioid_name)
        throw ParseError("dioid must be declared before states", ln.number);
      for (size_t i = 1; i < ln.tokens.size(); ++i) {
        if (std::find(states.begin(), states.end(), ln.tokens[i].first) !=
            states.end())
          throw ParseError("duplicate state '" + ln.tokens[i].first + "'",
                           ln.number, ln.tokens[i].second);
        states.push_back(ln.tokens[i].first);
      }
      DioidParams params;
      params.universe = universe;
      try {
        dioid = make_dioid(*dioid_name, std::move(params));
      } catch (const Error& e) {
        throw ParseError(e.what(), ln.number);
      }
      matrix.emplace(dioid, states.size(), states.size());
    } else if (head == "init" || head == "final") {
      if (states.empty())
        throw ParseError(head + " must follow states", ln.number);
      auto& slot = head == "init" ? initial : finals;
      if (slot) throw ParseError("repeated " + head + " directive", ln.number);
      if (argc == 0)
        throw ParseError(head + " directive needs at least one state",
                         ln.number);
      std::vector<size_t> xs;
      for (size_t i = 1; i < ln.tokens.size(); ++i)
        xs.push_back(
            state_of(ln.tokens[i].first, ln, ln.tokens[i].second));
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
      slot = std::move(xs);
    } else if (head == "edge") {
      if (states.empty())
        throw ParseError("edge must follow states", ln.number);
      if (argc < 3)
        throw ParseError("edge directive needs source, target and cost",
                         ln.number);
      size_t src = state_of(ln.tokens[1].first, ln, ln.tokens[1].second);
      size_t dst = state_of(ln.tokens[2].first, ln, ln.tokens[2].second);
      // The cost literal is the rest of the line, so set and tuple literals
      // may contain spaces.
      int cost_col = ln.tokens[3].second;
      std::string cost_text = ln.text.substr(cost_col - 1);
      CostValue cost = [&] {
        try {
          return dioid->parse_value(cost_text);
        } catch (const Error& e) {
          throw ParseError(e.what(), ln.number, cost_col);
        }
      }();
      auto key = std::make_pair(src, dst);
      if (declared_edges.count(key)) {
        if (!merge_edges)
          throw ParseError("repeated edge " + ln.tokens[1].first + " -> " +
                               ln.tokens[2].first +
                               " (use merge-edges to combine)",
                           ln.number);
        matrix->set(src, dst, dioid->oplus(matrix->at(src, dst), cost));
      } else {
        declared_edges.insert(key);
        matrix->set(src, dst, std::move(cost));
      }
    } else {
      throw ParseError("unknown directive '" + head + "'", ln.number,
                       ln.tokens.front().second);
    }
  }

  if (states.empty()) throw ParseError("missing states directive", 1);
  if (!initial) {
    initial = std::vector<size_t>{0};
    warnings.push_back("no init line, defaulting to first state '" +
                       states.front() + "'");
  }
  if (!finals) {
    finals = std::vector<size_t>{states.size() - 1};
    warnings.push_back("no final line, defaulting to last state '" +
                       states.back() + "'");
  }
  TransitionSystem sys{std::move(dioid), std::move(states), std::move(*matrix),
                       std::move(*initial), std::move(*finals)};
  return ParsedSystem{std::move(sys), std::move(warnings)};
}

std::string serialize_system(const TransitionSystem& p) {
  std::ostringstream out;
  out << "dioid " << p.dioid->name() << "\n";
  if (!p.dioid->universe().empty()) {
    out << "universe";
    for (const auto& m : p.dioid->universe()) out << " " << m;
    out << "\n";
  }
  out << "states";
  for (const auto& s : p.states) out << " " << s;
  out << "\n";
  out << "init";
  for (size_t i : p.initial) out << " " << p.states[i];
  out << "\n";
  out << "final";
  for (size_t i : p.finals) out << " " << p.states[i];
  out << "\n";
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p.size(); ++j)
      if (!p.dioid->equal(p.matrix.at(i, j), p.dioid->bot()))
        out << "edge " << p.states[i] << " " << p.states[j] << " "
            << p.dioid->to_string(p.matrix.at(i, j)) << "\n";
  return out.str();
}

std::vector<size_t> reachable_states(const TransitionSystem& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<size_t> stack = p.initial;
  for (size_t i : stack) seen[i] = true;
  while (!stack.empty()) {
    size_t s = stack.back();
    stack.pop_back();
    for (size_t t = 0; t < p.size(); ++t)
      if (!seen[t] && !p.dioid->equal(p.matrix.at(s, t), p.dioid->bot())) {
        seen[t] = true;
        stack.push_back(t);
      }
  }
  std::vector<size_t> out;
  for (size_t i = 0; i < p.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

TransitionSystem reachable_restrict(const TransitionSystem& p) {
  std::vector<size_t> keep = reachable_states(p);
  std::vector<size_t> back(p.size(), SIZE_MAX);
  for (size_t i = 0; i < keep.size(); ++i) back[keep[i]] = i;

  std::vector<std::string> states;
  states.reserve(keep.size());
  for (size_t i : keep) states.push_back(p.states[i]);
  CostMatrix m(p.dioid, keep.size(), keep.size());
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j)
      m.set(i, j, p.matrix.at(keep[i], keep[j]));
  std::vector<size_t> initial, finals;
  for (size_t i : p.initial) initial.push_back(back[i]);
  for (size_t f : p.finals)
    if (back[f] != SIZE_MAX) finals.push_back(back[f]);
  std::sort(initial.begin(), initial.end());
  std::sort(finals.begin(), finals.end());
  return TransitionSystem{p.dioid, std::move(states), std::move(m),
                          std::move(initial), std::move(finals)};
}

}  // namespace tropicost
