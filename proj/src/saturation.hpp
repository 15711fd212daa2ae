#pragma once

// Internal saturation engine shared by consistency checking and entailment.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mcsreason/consistency.hpp"
#include "mcsreason/ontology.hpp"

namespace mcsreason::detail {

using NodeId = std::uint32_t;
using ExprId = std::uint32_t;
using RoleId = std::uint32_t;
// Sorted list of source indices that a fact depends on.
using Support = std::vector<std::uint32_t>;

class Saturation {
 public:
  // Sources [0, axioms.size()) are the input axioms; extra sources added via
  // add_source() follow.
  explicit Saturation(std::span<const Axiom* const> axioms);

  // Registers expressions (and their subexpressions) so that rules producing
  // them, such as intersection introduction, fire. Must precede run().
  ExprId intern(const ConceptExpr& c);

  std::uint32_t add_source(std::string label);
  NodeId individual(const std::string& name);
  NodeId fresh_individual();
  NodeId fresh_literal();

  void assert_membership(NodeId node, ExprId expr, std::uint32_t source);
  void assert_role(const std::string& role, NodeId subject, NodeId object, std::uint32_t source);

  // Runs to fixpoint or first clash. Returns true when consistent.
  bool run();

  bool has_membership(NodeId node, ExprId expr) const;
  bool has_role(const std::string& role, NodeId subject, NodeId object) const;
  std::optional<NodeId> find_individual(const std::string& name) const;
  std::optional<NodeId> find_literal(const Literal& l) const;

  const std::optional<ClashReport>& clash() const { return clash_; }
  SaturationState export_state() const;

 private:
  struct ExprInfo {
    ConceptExpr expr;
    std::vector<ExprId> operands;  // intersections
    std::optional<RoleId> role;    // HasValue / MaxCardinality
    std::optional<NodeId> value;   // HasValue individual
    std::optional<ExprId> filler;  // MaxCardinality, unset means any filler counts
    bool max_cardinality = false;
    bool nothing = false;
  };

  struct Node {
    std::string name;
    bool literal = false;
    bool fresh = false;
    std::vector<std::optional<Support>> members;  // indexed by ExprId
  };

  struct RoleFact {
    NodeId object;
    Support support;
  };

  struct Event {
    bool is_role;
    NodeId node;  // subject for role events
    ExprId expr;
    RoleId role;
    NodeId object;
  };

  RoleId role_id(const std::string& role);
  NodeId literal(const Literal& l);
  void add_membership(NodeId node, ExprId expr, Support support);
  void add_role(RoleId role, NodeId subject, NodeId object, Support support);
  void on_membership(NodeId node, ExprId expr);
  void on_role(RoleId role, NodeId subject, NodeId object, const Support& support);
  void check_max_cardinality(NodeId node, ExprId expr);
  void report(ClashKind kind, Support support, std::vector<NodeId> nodes);
  const Support* membership(NodeId node, ExprId expr) const;

  std::vector<std::string> source_labels_;
  std::vector<ExprInfo> exprs_;
  std::unordered_map<std::string, ExprId> expr_index_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, NodeId> individuals_;
  std::map<std::tuple<std::string, std::string, std::string>, NodeId> literals_;
  std::vector<std::string> roles_;
  std::unordered_map<std::string, RoleId> role_index_;

  // rules
  std::vector<std::vector<std::pair<ExprId, std::uint32_t>>> sub_rules_;       // by lhs expr
  std::vector<std::vector<std::pair<ExprId, std::uint32_t>>> disjoint_rules_;  // by expr
  std::vector<std::vector<ExprId>> parent_intersections_;                     // by operand
  std::vector<std::vector<ExprId>> max_by_filler_;                            // by filler
  std::vector<std::vector<std::pair<ExprId, std::uint32_t>>> domain_rules_;    // by role
  std::vector<std::vector<std::pair<ExprId, std::uint32_t>>> range_rules_;     // by role
  std::vector<std::optional<std::uint32_t>> functional_;                      // by role
  std::vector<std::vector<ExprId>> has_value_by_role_;
  std::vector<std::vector<ExprId>> max_by_role_;
  std::optional<ExprId> thing_;

  // role facts: (role, subject) -> fillers in insertion order
  std::map<std::pair<RoleId, NodeId>, std::vector<RoleFact>> role_facts_;
  // (role, object) -> subjects, for filler-membership triggers
  std::map<std::pair<RoleId, NodeId>, std::vector<NodeId>> role_subjects_;

  std::deque<Event> queue_;
  std::optional<ClashReport> clash_;
  std::size_t axiom_count_;
  std::uint32_t fresh_counter_ = 0;
};

}  // namespace mcsreason::detail
