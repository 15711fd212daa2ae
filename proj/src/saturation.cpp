#include "saturation.hpp"

#include <algorithm>
#include <set>

namespace mcsreason::detail {

namespace {

Support merge(const Support& a, const Support& b) {
  Support out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Support with_source(const Support& a, std::uint32_t source) {
  return merge(a, Support{source});
}

}  // namespace

Saturation::Saturation(std::span<const Axiom* const> axioms) : axiom_count_(axioms.size()) {
  for (const Axiom* a : axioms) source_labels_.push_back(a->id);

  // Rules first, so that every seeded fact sees the full rule set.
  for (std::uint32_t src = 0; src < axioms.size(); ++src) {
    const Axiom& a = *axioms[src];
    switch (a.kind) {
      case AxiomKind::SubClassOf: {
        ExprId lhs = intern(a.concepts[0]);
        ExprId rhs = intern(a.concepts[1]);
        sub_rules_[lhs].emplace_back(rhs, src);
        break;
      }
      case AxiomKind::EquivalentClasses: {
        ExprId lhs = intern(a.concepts[0]);
        ExprId rhs = intern(a.concepts[1]);
        sub_rules_[lhs].emplace_back(rhs, src);
        sub_rules_[rhs].emplace_back(lhs, src);
        break;
      }
      case AxiomKind::DisjointClasses: {
        ExprId lhs = intern(a.concepts[0]);
        ExprId rhs = intern(a.concepts[1]);
        disjoint_rules_[lhs].emplace_back(rhs, src);
        if (rhs != lhs) disjoint_rules_[rhs].emplace_back(lhs, src);
        break;
      }
      case AxiomKind::ObjectPropertyDomain:
      case AxiomKind::DataPropertyDomain: {
        ExprId c = intern(a.concepts[0]);
        domain_rules_[role_id(a.property)].emplace_back(c, src);
        break;
      }
      case AxiomKind::ObjectPropertyRange: {
        ExprId c = intern(a.concepts[0]);
        range_rules_[role_id(a.property)].emplace_back(c, src);
        break;
      }
      case AxiomKind::FunctionalObjectProperty: {
        RoleId r = role_id(a.property);
        if (!functional_[r]) functional_[r] = src;
        break;
      }
      case AxiomKind::ClassAssertion:
        intern(a.concepts[0]);
        break;
      case AxiomKind::ObjectPropertyAssertion:
      case AxiomKind::DataPropertyAssertion:
        role_id(a.property);
        break;
    }
  }

  for (std::uint32_t src = 0; src < axioms.size(); ++src) {
    const Axiom& a = *axioms[src];
    switch (a.kind) {
      case AxiomKind::ClassAssertion:
        add_membership(individual(a.subject), intern(a.concepts[0]), Support{src});
        break;
      case AxiomKind::ObjectPropertyAssertion: {
        NodeId s = individual(a.subject);
        NodeId o = individual(a.object);
        add_role(role_id(a.property), s, o, Support{src});
        break;
      }
      case AxiomKind::DataPropertyAssertion: {
        NodeId s = individual(a.subject);
        NodeId o = literal(a.value);
        add_role(role_id(a.property), s, o, Support{src});
        break;
      }
      default:
        break;
    }
  }
}

ExprId Saturation::intern(const ConceptExpr& c) {
  std::string key = render_concept(c);
  if (auto it = expr_index_.find(key); it != expr_index_.end()) return it->second;

  ExprInfo info;
  info.expr = c;
  switch (c.kind) {
    case ConceptKind::Named:
      info.nothing = c.is_nothing();
      break;
    case ConceptKind::IntersectionOf:
      for (const auto& op : c.operands) info.operands.push_back(intern(op));
      break;
    case ConceptKind::UnionOf:
    case ConceptKind::SomeValuesFrom:
    case ConceptKind::AllValuesFrom:
    case ConceptKind::ExactCardinality:
    case ConceptKind::MinCardinality:
      // opaque: only registered so their parts exist as atoms
      if (!c.data_role)
        for (const auto& op : c.operands) intern(op);
      break;
    case ConceptKind::HasValue:
      info.role = role_id(c.role);
      info.value = individual(c.individual);
      break;
    case ConceptKind::MaxCardinality:
      info.role = role_id(c.role);
      info.max_cardinality = true;
      if (!c.data_role && !c.filler().is_thing()) info.filler = intern(c.filler());
      break;
  }

  ExprId id = static_cast<ExprId>(exprs_.size());
  expr_index_.emplace(std::move(key), id);
  exprs_.push_back(std::move(info));
  sub_rules_.emplace_back();
  disjoint_rules_.emplace_back();
  parent_intersections_.emplace_back();
  max_by_filler_.emplace_back();

  const ExprInfo& stored = exprs_.back();
  for (ExprId op : stored.operands) parent_intersections_[op].push_back(id);
  if (c.is_thing()) thing_ = id;
  if (c.kind == ConceptKind::HasValue) has_value_by_role_[*stored.role].push_back(id);
  if (stored.max_cardinality) {
    max_by_role_[*stored.role].push_back(id);
    if (stored.filler) max_by_filler_[*stored.filler].push_back(id);
  }
  return id;
}

RoleId Saturation::role_id(const std::string& role) {
  if (auto it = role_index_.find(role); it != role_index_.end()) return it->second;
  RoleId id = static_cast<RoleId>(roles_.size());
  roles_.push_back(role);
  role_index_.emplace(role, id);
  domain_rules_.emplace_back();
  range_rules_.emplace_back();
  functional_.emplace_back();
  has_value_by_role_.emplace_back();
  max_by_role_.emplace_back();
  return id;
}

std::uint32_t Saturation::add_source(std::string label) {
  source_labels_.push_back(std::move(label));
  return static_cast<std::uint32_t>(source_labels_.size() - 1);
}

NodeId Saturation::individual(const std::string& name) {
  if (auto it = individuals_.find(name); it != individuals_.end()) return it->second;
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{name, false, false, {}});
  individuals_.emplace(name, id);
  return id;
}

NodeId Saturation::fresh_individual() {
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{"_:fresh" + std::to_string(++fresh_counter_), false, true, {}});
  return id;
}

NodeId Saturation::fresh_literal() {
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{"_:value" + std::to_string(++fresh_counter_), true, true, {}});
  return id;
}

NodeId Saturation::literal(const Literal& l) {
  auto key = std::make_tuple(l.lexical, l.datatype, l.language);
  if (auto it = literals_.find(key); it != literals_.end()) return it->second;
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{render_literal(l), true, false, {}});
  literals_.emplace(std::move(key), id);
  return id;
}

std::optional<NodeId> Saturation::find_individual(const std::string& name) const {
  if (auto it = individuals_.find(name); it != individuals_.end()) return it->second;
  return std::nullopt;
}

std::optional<NodeId> Saturation::find_literal(const Literal& l) const {
  auto it = literals_.find(std::make_tuple(l.lexical, l.datatype, l.language));
  if (it == literals_.end()) return std::nullopt;
  return it->second;
}

void Saturation::assert_membership(NodeId node, ExprId expr, std::uint32_t source) {
  add_membership(node, expr, Support{source});
}

void Saturation::assert_role(const std::string& role, NodeId subject, NodeId object,
                             std::uint32_t source) {
  add_role(role_id(role), subject, object, Support{source});
}

const Support* Saturation::membership(NodeId node, ExprId expr) const {
  const auto& members = nodes_[node].members;
  if (expr >= members.size() || !members[expr]) return nullptr;
  return &*members[expr];
}

bool Saturation::has_membership(NodeId node, ExprId expr) const {
  return membership(node, expr) != nullptr;
}

bool Saturation::has_role(const std::string& role, NodeId subject, NodeId object) const {
  auto r = role_index_.find(role);
  if (r == role_index_.end()) return false;
  auto it = role_facts_.find({r->second, subject});
  if (it == role_facts_.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(),
                     [&](const RoleFact& f) { return f.object == object; });
}

void Saturation::add_membership(NodeId node, ExprId expr, Support support) {
  auto& members = nodes_[node].members;
  if (expr >= members.size()) members.resize(exprs_.size());
  if (members[expr]) return;
  members[expr] = std::move(support);
  queue_.push_back(Event{false, node, expr, 0, 0});
}

void Saturation::add_role(RoleId role, NodeId subject, NodeId object, Support support) {
  auto& facts = role_facts_[{role, subject}];
  for (const auto& f : facts)
    if (f.object == object) return;
  facts.push_back(RoleFact{object, std::move(support)});
  role_subjects_[{role, object}].push_back(subject);
  queue_.push_back(Event{true, subject, 0, role, object});
}

bool Saturation::run() {
  if (thing_) {
    for (NodeId n = 0; n < nodes_.size(); ++n)
      if (!nodes_[n].literal) add_membership(n, *thing_, {});
  }
  while (!queue_.empty() && !clash_) {
    Event e = queue_.front();
    queue_.pop_front();
    if (e.is_role) {
      Support s;
      for (const auto& f : role_facts_[{e.role, e.node}])
        if (f.object == e.object) s = f.support;
      on_role(e.role, e.node, e.object, s);
    } else {
      on_membership(e.node, e.expr);
    }
  }
  return !clash_;
}

void Saturation::on_membership(NodeId x, ExprId e) {
  const Support support = *membership(x, e);
  const ExprInfo& info = exprs_[e];

  if (info.nothing) {
    report(ClashKind::DisjointnessClash, support, {x});
    return;
  }
  for (const auto& [target, src] : sub_rules_[e]) add_membership(x, target, with_source(support, src));
  for (const auto& [other, src] : disjoint_rules_[e]) {
    if (const Support* s = membership(x, other)) {
      report(ClashKind::DisjointnessClash, with_source(merge(support, *s), src), {x});
      return;
    }
  }
  for (ExprId op : info.operands) add_membership(x, op, support);
  for (ExprId parent : parent_intersections_[e]) {
    Support combined;
    bool all = true;
    for (ExprId op : exprs_[parent].operands) {
      const Support* s = membership(x, op);
      if (!s) {
        all = false;
        break;
      }
      combined = merge(combined, *s);
    }
    if (all) add_membership(x, parent, std::move(combined));
  }
  if (info.expr.kind == ConceptKind::HasValue) add_role(*info.role, x, *info.value, support);
  if (info.max_cardinality) check_max_cardinality(x, e);
  for (ExprId m : max_by_filler_[e]) {
    auto it = role_subjects_.find({*exprs_[m].role, x});
    if (it == role_subjects_.end()) continue;
    for (NodeId subject : it->second)
      if (has_membership(subject, m)) check_max_cardinality(subject, m);
  }
}

void Saturation::on_role(RoleId r, NodeId s, NodeId o, const Support& support) {
  for (const auto& [c, src] : domain_rules_[r]) add_membership(s, c, with_source(support, src));
  if (!nodes_[o].literal)
    for (const auto& [c, src] : range_rules_[r]) add_membership(o, c, with_source(support, src));

  if (functional_[r] && !nodes_[o].literal) {
    for (const auto& f : role_facts_[{r, s}]) {
      if (f.object == o || nodes_[f.object].literal) continue;
      report(ClashKind::FunctionalClash, with_source(merge(support, f.support), *functional_[r]),
             {s, f.object, o});
      return;
    }
  }
  for (ExprId hv : has_value_by_role_[r])
    if (*exprs_[hv].value == o) add_membership(s, hv, support);
  for (ExprId m : max_by_role_[r])
    if (has_membership(s, m)) check_max_cardinality(s, m);
}

void Saturation::check_max_cardinality(NodeId x, ExprId m) {
  const ExprInfo& info = exprs_[m];
  auto it = role_facts_.find({*info.role, x});
  if (it == role_facts_.end()) return;
  Support support = *membership(x, m);
  std::vector<NodeId> involved{x};
  std::uint32_t count = 0;
  for (const auto& f : it->second) {
    const Support* filler_support = nullptr;
    if (info.filler) {
      filler_support = membership(f.object, *info.filler);
      if (!filler_support) continue;
    }
    support = merge(support, f.support);
    if (filler_support) support = merge(support, *filler_support);
    involved.push_back(f.object);
    if (++count > info.expr.cardinality) {
      report(ClashKind::MaxCardinalityClash, std::move(support), std::move(involved));
      return;
    }
  }
}

void Saturation::report(ClashKind kind, Support support, std::vector<NodeId> nodes) {
  if (clash_) return;
  ClashReport r;
  r.kind = kind;
  for (std::uint32_t s : support) r.axiom_ids.push_back(source_labels_[s]);
  for (NodeId n : nodes) r.individuals.push_back(nodes_[n].name);
  clash_ = std::move(r);
}

SaturationState Saturation::export_state() const {
  SaturationState state;
  for (const auto& node : nodes_) {
    if (node.fresh || node.literal) continue;
    auto& out = state.memberships[node.name];
    for (ExprId e = 0; e < node.members.size(); ++e)
      if (node.members[e]) out.push_back(render_concept(exprs_[e].expr));
    std::sort(out.begin(), out.end());
  }
  for (const auto& [key, facts] : role_facts_) {
    const auto& [role, subject] = key;
    if (nodes_[subject].fresh) continue;
    for (const auto& f : facts)
      state.role_assertions.emplace_back(roles_[role], nodes_[subject].name, nodes_[f.object].name);
  }
  std::sort(state.role_assertions.begin(), state.role_assertions.end());

  // told subsumption closure between named concepts
  std::map<std::string, std::set<std::string>> direct;
  for (ExprId e = 0; e < exprs_.size(); ++e) {
    if (!exprs_[e].expr.is_named()) continue;
    for (const auto& [target, src] : sub_rules_[e]) {
      (void)src;
      if (exprs_[target].expr.is_named()) direct[exprs_[e].expr.name].insert(exprs_[target].expr.name);
    }
  }
  for (const auto& [name, _] : direct) {
    std::set<std::string> seen;
    std::vector<std::string> stack(direct[name].begin(), direct[name].end());
    while (!stack.empty()) {
      std::string cur = stack.back();
      stack.pop_back();
      if (!seen.insert(cur).second) continue;
      if (auto it = direct.find(cur); it != direct.end())
        stack.insert(stack.end(), it->second.begin(), it->second.end());
    }
    state.subsumers[name].assign(seen.begin(), seen.end());
  }
  state.clash = clash_;
  return state;
}

}  // namespace mcsreason::detail
