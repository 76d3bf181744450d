#include "tropicost/partition.hpp"

#include <algorithm>
#include <sstream>

#include "tropicost/analysis.hpp"
#include "tropicost/error.hpp"
#include "tropicost/longrun.hpp"

namespace tropicost {

Partition parse_partition(std::string_view text, const TransitionSystem& p) {
  Partition q;
  q.block_of.assign(p.size(), SIZE_MAX);
  std::vector<char> seen(p.size(), 0);

  size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    bool last = eol == text.size();
    pos = eol + 1;
    ++lineno;

    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::istringstream in{std::string(line)};
    std::string state, arrow, block;
    if (!(in >> state)) {
      if (last) break;
      continue;  // blank line
    }
    if (!(in >> arrow >> block) || arrow != "->")
      throw ParseError("expected `state -> Block`", lineno);
    std::string extra;
    if (in >> extra)
      throw ParseError("trailing tokens after block name", lineno);

    auto idx = p.state_index(state);
    if (!idx) throw ParseError("unknown state `" + state + "`", lineno);
    if (seen[*idx])
      throw ParseError("state `" + state + "` mapped twice", lineno);
    seen[*idx] = 1;

    size_t b = 0;
    while (b < q.blocks.size() && q.blocks[b] != block) ++b;
    if (b == q.blocks.size()) q.blocks.push_back(block);
    q.block_of[*idx] = b;

    if (last) break;
  }

  for (size_t i = 0; i < p.size(); ++i)
    if (!seen[i])
      throw Error("partition does not cover state `" + p.state_name(i) + "`");
  return q;
}

PartitionLift lift_partition(const TransitionSystem& p, Partition q) {
  if (q.block_of.size() != p.size())
    throw Error("state map size does not match the state count");
  for (size_t b : q.block_of)
    if (b >= q.blocks.size())
      throw Error("state map block index out of range");

  const DioidPtr& d = p.dioid;
  CostMatrix alpha(d, q.blocks.size(), p.size());
  for (size_t s = 0; s < p.size(); ++s) alpha.set(q.block_of[s], s, d->one());

  CostMatrix gamma = transpose(alpha);
  return PartitionLift{d, std::move(q), std::move(alpha), std::move(gamma)};
}

bool check_galois(const PartitionLift& lift, std::string* why) {
  const DioidPtr& d = lift.dioid;
  CostMatrix ag = mat_mul(lift.alpha, lift.gamma);
  if (!mat_leq(ag, CostMatrix::identity(d, ag.rows()))) {
    if (why) *why = "alpha . gamma is not below the identity";
    return false;
  }
  CostMatrix ga = mat_mul(lift.gamma, lift.alpha);
  if (!mat_leq(CostMatrix::identity(d, ga.rows()), ga)) {
    if (why) *why = "identity is not below gamma . alpha";
    return false;
  }
  return true;
}

TransitionSystem best_abstract_system(const TransitionSystem& p,
                                      const PartitionLift& lift) {
  const Partition& q = lift.partition;
  if (q.block_of.size() != p.size())
    throw Error("lift was built for a different state space");

  std::vector<char> is_init(q.blocks.size(), 0), is_final(q.blocks.size(), 0);
  for (size_t s : p.initial) is_init[q.block_of[s]] = 1;
  for (size_t s : p.finals) is_final[q.block_of[s]] = 1;
  std::vector<size_t> initial, finals;
  for (size_t b = 0; b < q.blocks.size(); ++b) {
    if (is_init[b]) initial.push_back(b);
    if (is_final[b]) finals.push_back(b);
  }

  TransitionSystem abs = make_system(p.dioid, q.blocks, std::move(initial),
                                     std::move(finals));
  abs.matrix = mat_mul(mat_mul(lift.alpha, p.matrix), lift.gamma);
  return abs;
}

CorrectnessVerdict check_correct_abstraction(const TransitionSystem& p,
                                             const TransitionSystem& abs,
                                             const PartitionLift& lift) {
  const auto& d = *p.dioid;
  const Partition& q = lift.partition;
  if (q.block_of.size() != p.size() || q.blocks.size() != abs.size())
    throw Error("abstraction triple has mismatched dimensions");

  CorrectnessVerdict v;
  CostMatrix lhs = mat_mul(lift.alpha, p.matrix);
  CostMatrix rhs = mat_mul(abs.matrix, lift.alpha);
  for (size_t b = 0; b < lhs.rows(); ++b)
    for (size_t s = 0; s < lhs.cols(); ++s)
      if (!d.leq(lhs.at(b, s), rhs.at(b, s))) {
        v.ok = false;
        v.detail = "transfer bound violated at (" + abs.state_name(b) + ", " +
                   p.state_name(s) + "): " + d.to_string(lhs.at(b, s)) +
                   " is not below " + d.to_string(rhs.at(b, s));
        return v;
      }

  auto member = [](const std::vector<size_t>& xs, size_t x) {
    return std::binary_search(xs.begin(), xs.end(), x);
  };
  for (size_t s : p.initial)
    if (!member(abs.initial, q.block_of[s])) {
      v.ok = false;
      v.detail = "initial state " + p.state_name(s) +
                 " maps outside the abstract initial set";
      return v;
    }
  for (size_t s : p.finals)
    if (!member(abs.finals, q.block_of[s])) {
      v.ok = false;
      v.detail = "final state " + p.state_name(s) +
                 " maps outside the abstract final set";
      return v;
    }
  return v;
}

CostComparison compare_abstraction_costs(const TransitionSystem& p,
                                         const TransitionSystem& abs) {
  const auto& d = *p.dioid;
  CostComparison r;
  r.global_concrete = global_cost(p);
  r.global_abstract = global_cost(abs);
  r.global_ok = d.leq(r.global_concrete, r.global_abstract);
  r.longrun_concrete = long_run_cost(p);
  r.longrun_abstract = long_run_cost(abs);
  r.longrun_ok = d.leq(r.longrun_concrete, r.longrun_abstract);
  return r;
}

}  // namespace tropicost
