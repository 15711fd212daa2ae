#include "mcsreason/mcs.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "mcsreason/consistency.hpp"
#include "mcsreason/error.hpp"

namespace mcsreason {

bool Mcs::contains(AxiomIndex i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

std::vector<std::string> Mcs::ids(const Ontology& onto) const {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (AxiomIndex i : members) out.push_back(onto.at(i).id);
  return out;
}

bool characteristic_less(const std::vector<AxiomIndex>& a, const std::vector<AxiomIndex>& b) {
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) {
      ++ia;
      ++ib;
    } else {
      // smallest differing index: whoever lacks it sorts first
      return *ia > *ib;
    }
  }
  return ia == a.end() && ib != b.end();
}

namespace {

// Literal over map variables: variable index, polarity.
struct Lit {
  std::size_t var;
  bool positive;
};
using Clause = std::vector<Lit>;

// Finds an assignment satisfying every clause, preferring `true` in
// ascending variable order. Plain DPLL with chronological backtracking; the
// map formulas here are small and almost always satisfied greedily.
class MapSolver {
 public:
  explicit MapSolver(std::size_t vars) : vars_(vars) {}

  void add(Clause c) { clauses_.push_back(std::move(c)); }
  bool has_empty_clause() const {
    return std::any_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.empty(); });
  }

  std::optional<std::vector<bool>> solve() {
    if (has_empty_clause()) return std::nullopt;
    assignment_.assign(vars_, Value::Unset);
    if (!search(0)) return std::nullopt;
    std::vector<bool> out(vars_);
    for (std::size_t i = 0; i < vars_; ++i) out[i] = assignment_[i] == Value::True;
    return out;
  }

 private:
  enum class Value : std::uint8_t { Unset, False, True };

  bool falsified(const Clause& c) const {
    for (const Lit& l : c) {
      Value v = assignment_[l.var];
      if (v == Value::Unset) return false;
      if ((v == Value::True) == l.positive) return false;
    }
    return true;
  }

  bool any_falsified() const {
    return std::any_of(clauses_.begin(), clauses_.end(),
                       [&](const Clause& c) { return falsified(c); });
  }

  bool search(std::size_t var) {
    if (var == vars_) return true;
    for (Value v : {Value::True, Value::False}) {
      assignment_[var] = v;
      if (!any_falsified() && search(var + 1)) return true;
    }
    assignment_[var] = Value::Unset;
    return false;
  }

  std::size_t vars_;
  std::vector<Clause> clauses_;
  std::vector<Value> assignment_;
};

class Enumerator {
 public:
  Enumerator(const Ontology& onto, std::vector<AxiomIndex> candidates,
             std::optional<Axiom> hard, const McsBudget& budget, McsStats* stats)
      : onto_(onto),
        candidates_(std::move(candidates)),
        hard_(std::move(hard)),
        budget_(budget),
        stats_(stats),
        map_(candidates_.size()) {
    if (hard_) hard_->id = "\x01hard";
    for (std::size_t v = 0; v < candidates_.size(); ++v) var_of_id_[onto_[candidates_[v]].id] = v;
  }

  std::vector<Mcs> run() {
    std::vector<Mcs> found;
    if (hard_ && !consistent({})) return found;
    while (auto seed = map_.solve()) {
      std::vector<std::size_t> set;
      for (std::size_t v = 0; v < seed->size(); ++v)
        if ((*seed)[v]) set.push_back(v);
      ConsistencyResult r = check(set);
      if (r.consistent) {
        grow(set);
        Mcs m;
        for (std::size_t v : set) m.members.push_back(candidates_[v]);
        std::sort(m.members.begin(), m.members.end());
        found.push_back(std::move(m));
        if (stats_) stats_->mcs_found = found.size();
        if (found.size() > budget_.max_mcs)
          throw Error(ErrorCode::BudgetExceeded,
                      "MCS budget of " + std::to_string(budget_.max_mcs) + " exceeded");
        block_down(set);
      } else {
        std::vector<std::size_t> core = core_from_clash(*r.clash, set);
        shrink(core);
        if (stats_) ++stats_->mus_found;
        block_up(core);
      }
    }
    std::sort(found.begin(), found.end(),
              [](const Mcs& a, const Mcs& b) { return characteristic_less(a.members, b.members); });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
  }

 private:
  ConsistencyResult check(const std::vector<std::size_t>& vars) {
    if (++oracle_calls_ > budget_.max_oracle_calls)
      throw Error(ErrorCode::BudgetExceeded, "oracle-call budget of " +
                                                 std::to_string(budget_.max_oracle_calls) +
                                                 " exceeded");
    if (stats_) stats_->oracle_calls = oracle_calls_;
    std::vector<const Axiom*> refs;
    refs.reserve(vars.size() + 1);
    if (hard_) refs.push_back(&*hard_);
    for (std::size_t v : vars) refs.push_back(&onto_[candidates_[v]]);
    return check_consistency(refs);
  }

  bool consistent(const std::vector<std::size_t>& vars) { return check(vars).consistent; }

  // Adds variables in ascending order while consistency is kept.
  void grow(std::vector<std::size_t>& set) {
    std::vector<bool> in(candidates_.size(), false);
    for (std::size_t v : set) in[v] = true;
    for (std::size_t v = 0; v < candidates_.size(); ++v) {
      if (in[v]) continue;
      std::vector<std::size_t> trial = set;
      trial.insert(std::upper_bound(trial.begin(), trial.end(), v), v);
      if (consistent(trial)) {
        set = std::move(trial);
        in[v] = true;
      }
    }
  }

  std::vector<std::size_t> core_from_clash(const ClashReport& clash,
                                           const std::vector<std::size_t>& seed) {
    std::vector<std::size_t> core;
    for (const auto& id : clash.axiom_ids) {
      auto it = var_of_id_.find(id);
      if (it != var_of_id_.end()) core.push_back(it->second);
    }
    std::sort(core.begin(), core.end());
    if (core.empty() && !seed.empty()) core = seed;
    return core;
  }

  // Deletion-based reduction to a minimal inconsistent subset.
  void shrink(std::vector<std::size_t>& core) {
    for (std::size_t i = 0; i < core.size();) {
      std::vector<std::size_t> trial = core;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (!consistent(trial)) core = std::move(trial);
      else ++i;
    }
  }

  void block_down(const std::vector<std::size_t>& mss) {
    std::vector<bool> in(candidates_.size(), false);
    for (std::size_t v : mss) in[v] = true;
    Clause c;
    for (std::size_t v = 0; v < candidates_.size(); ++v)
      if (!in[v]) c.push_back(Lit{v, true});
    map_.add(std::move(c));
  }

  void block_up(const std::vector<std::size_t>& mus) {
    Clause c;
    for (std::size_t v : mus) c.push_back(Lit{v, false});
    map_.add(std::move(c));
  }

  const Ontology& onto_;
  std::vector<AxiomIndex> candidates_;
  std::optional<Axiom> hard_;
  McsBudget budget_;
  McsStats* stats_;
  MapSolver map_;
  std::unordered_map<std::string, std::size_t> var_of_id_;
  std::size_t oracle_calls_ = 0;
};

}  // namespace

std::vector<Mcs> enumerate_mcs(const Ontology& onto, const McsBudget& budget, McsStats* stats) {
  std::vector<AxiomIndex> all(onto.size());
  for (AxiomIndex i = 0; i < onto.size(); ++i) all[i] = i;
  return Enumerator(onto, std::move(all), std::nullopt, budget, stats).run();
}

std::vector<Mcs> enumerate_mcs_with(const Ontology& onto, const Axiom& alpha,
                                    const McsBudget& budget, McsStats* stats) {
  std::optional<AxiomIndex> present = onto.find(alpha);
  std::vector<AxiomIndex> candidates;
  for (AxiomIndex i = 0; i < onto.size(); ++i)
    if (i != present) candidates.push_back(i);
  return Enumerator(onto, std::move(candidates), alpha, budget, stats).run();
}

std::vector<Mcs> brute_force_mcs(const Ontology& onto) {
  const std::size_t n = onto.size();
  if (n > kBruteForceLimit)
    throw Error(ErrorCode::TooLarge, "brute force limited to " + std::to_string(kBruteForceLimit) +
                                         " axioms, got " + std::to_string(n));
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<bool> consistent(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    std::vector<const Axiom*> refs;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) refs.push_back(&onto[i]);
    consistent[mask] = is_consistent(refs);
    if (mask == full) break;
  }

  std::vector<Mcs> out;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (consistent[mask]) {
      // maximal: no consistent strict superset
      bool maximal = true;
      const std::uint32_t rest = full & ~mask;
      for (std::uint32_t extra = rest; extra != 0 && maximal; extra = (extra - 1) & rest)
        if (consistent[mask | extra]) maximal = false;
      if (maximal) {
        Mcs m;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (1u << i)) m.members.push_back(i);
        out.push_back(std::move(m));
      }
    }
    if (mask == full) break;
  }
  std::sort(out.begin(), out.end(),
            [](const Mcs& a, const Mcs& b) { return characteristic_less(a.members, b.members); });
  return out;
}

}  // namespace mcsreason
