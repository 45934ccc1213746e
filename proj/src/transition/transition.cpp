#include "rst/transition/transition.hpp"

#include <algorithm>

#include "rst/error.hpp"

namespace rst {
namespace {

void linearize(const RstNode& node, std::vector<Action>& out) {
  if (node.is_leaf()) {
    out.push_back(Action::shift());
    return;
  }
  linearize(node.left(), out);
  linearize(node.right(), out);
  out.push_back(Action::reduce(node.label()));
}

void collect_labels(const RstNode& node, std::vector<Label>& out) {
  if (node.is_leaf()) return;
  out.push_back(node.label());
  collect_labels(node.left(), out);
  collect_labels(node.right(), out);
}

}  // namespace

std::string to_string(const Action& action) {
  if (action.is_shift()) return "SHIFT";
  return std::string("REDUCE-") + (action.direction() == Direction::Left ? "L-" : "R-") +
         to_string(action.label);
}

Action parse_action(std::string_view text) {
  if (text == "SHIFT") return Action::shift();
  constexpr std::string_view prefix = "REDUCE-";
  if (text.substr(0, prefix.size()) != prefix || text.size() < prefix.size() + 2)
    throw DataError("bad action '" + std::string(text) + "'");
  const char dir = text[prefix.size()];
  Action a = Action::reduce(parse_label(text.substr(prefix.size() + 2)));
  if (a.label.nuclearity == Nuclearity::SS || (dir != 'L' && dir != 'R') ||
      (dir == 'R') != (a.direction() == Direction::Right))
    throw DataError("bad action '" + std::string(text) + "'");
  return a;
}

Configuration::Configuration(int n_edus) : n_(n_edus) {
  if (n_edus < 1) throw InvariantError("a configuration needs at least one EDU");
}

const RstNode* Configuration::stack(int i) const noexcept {
  const Cell* c = cell_.get();
  for (; c && i > 0; --i) c = c->below.get();
  return c ? c->node.get() : nullptr;
}

std::vector<NodePtr> Configuration::stack_nodes() const {
  std::vector<NodePtr> out;
  for (const Cell* c = cell_.get(); c; c = c->below.get()) out.push_back(c->node);
  std::reverse(out.begin(), out.end());
  return out;
}

Configuration Configuration::apply(const Action& action) const {
  Configuration next = *this;
  if (action.is_shift()) {
    if (!can_shift()) throw InvariantError("SHIFT with an empty queue");
    next.cell_ = std::make_shared<const Cell>(Cell{RstNode::leaf(front_), cell_, stack_height() + 1});
    ++next.front_;
    return next;
  }
  if (!can_reduce())
    throw InvariantError("REDUCE with " + std::to_string(stack_height()) + " element(s) on the stack");
  if (action.label.nuclearity == Nuclearity::SS) throw InvariantError("REDUCE with pattern SS");
  const Cell& top = *cell_;
  const Cell& lower = *top.below;
  NodePtr merged = RstNode::internal(lower.node, top.node, action.label);
  next.cell_ = std::make_shared<const Cell>(Cell{std::move(merged), lower.below, lower.height});
  return next;
}

Configuration initial_config(int n_edus) { return Configuration(n_edus); }

bool is_legal(const Configuration& c, const Action& action) {
  if (action.is_shift()) return c.can_shift();
  return c.can_reduce() && action.label.nuclearity != Nuclearity::SS;
}

std::vector<Action> legal_actions(const Configuration& c, const std::vector<Action>& vocabulary) {
  std::vector<Action> out;
  for (const auto& a : vocabulary)
    if (is_legal(c, a)) out.push_back(a);
  return out;
}

std::vector<Action> oracle(const RstTree& tree) {
  if (auto v = validate_tree(tree.root(), tree.edu_count()); !v.empty())
    throw DataError("oracle on an invalid tree: " + v.front().message);
  std::vector<Action> out;
  out.reserve(2 * tree.edu_count() - 1);
  linearize(tree.root(), out);
  return out;
}

RstTree replay(const std::vector<Action>& actions, int n_edus) {
  Configuration c = initial_config(n_edus);
  for (const auto& a : actions) c = c.apply(a);
  if (!c.is_final()) throw InvariantError("action sequence does not reach a final configuration");
  return RstTree(c.stack_nodes().front());
}

std::string format_actions(const std::vector<Action>& actions) {
  std::string out;
  for (const auto& a : actions) out += to_string(a) + '\n';
  return out;
}

ActionSet ActionSet::induce(const std::vector<RstTree>& trees) {
  std::vector<Label> labels;
  for (const auto& t : trees) collect_labels(t.root(), labels);
  return from_labels(labels);
}

ActionSet ActionSet::from_labels(const std::vector<Label>& labels) {
  std::vector<Label> sorted = labels;
  std::sort(sorted.begin(), sorted.end(), label_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  ActionSet set;
  for (const auto& l : sorted) set.actions_.push_back(Action::reduce(l));
  return set;
}

std::optional<std::size_t> ActionSet::index_of(const Action& action) const {
  auto it = std::find(actions_.begin(), actions_.end(), action);
  if (it == actions_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - actions_.begin());
}

}  // namespace rst
