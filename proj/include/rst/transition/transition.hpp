#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rst/core/tree.hpp"

namespace rst {

enum class Direction { Left, Right };

// SHIFT, or a REDUCE carrying the label of the node it builds. The direction
// names the nucleus side and follows from the pattern: SN reduces right,
// NS and NN reduce left.
struct Action {
  enum class Kind { Shift, Reduce };
  Kind kind = Kind::Shift;
  Label label{};

  static Action shift() { return Action{}; }
  static Action reduce(Label label) { return Action{Kind::Reduce, label}; }

  bool is_shift() const noexcept { return kind == Kind::Shift; }
  Direction direction() const noexcept {
    return label.nuclearity == Nuclearity::SN ? Direction::Right : Direction::Left;
  }

  friend bool operator==(const Action& a, const Action& b) {
    return a.kind == b.kind && (a.kind == Kind::Shift || a.label == b.label);
  }
};

// "SHIFT" or "REDUCE-L-NN-Comparison".
std::string to_string(const Action& action);
// Throws DataError.
Action parse_action(std::string_view text);

// Parser state. The stack is a persistent list, so configurations reached
// from a common prefix share it.
class Configuration {
 public:
  explicit Configuration(int n_edus);

  int edu_count() const noexcept { return n_; }
  int queue_front() const noexcept { return front_; }
  bool queue_empty() const noexcept { return front_ >= n_; }
  int stack_height() const noexcept { return cell_ ? cell_->height : 0; }

  // i = 0 is the top; null past the bottom.
  const RstNode* stack(int i) const noexcept;
  // Bottom to top.
  std::vector<NodePtr> stack_nodes() const;

  bool can_shift() const noexcept { return !queue_empty(); }
  bool can_reduce() const noexcept { return stack_height() >= 2; }
  bool is_final() const noexcept { return queue_empty() && stack_height() == 1; }

  // Throws InvariantError when the action is illegal.
  Configuration apply(const Action& action) const;

 private:
  struct Cell {
    NodePtr node;
    std::shared_ptr<const Cell> below;
    int height;
  };
  Configuration() = default;

  std::shared_ptr<const Cell> cell_;
  int front_ = 0;
  int n_ = 0;
};

// Throws InvariantError for n_edus < 1.
Configuration initial_config(int n_edus);

bool is_legal(const Configuration& c, const Action& action);

// The legal actions among `vocabulary`, in vocabulary order.
std::vector<Action> legal_actions(const Configuration& c, const std::vector<Action>& vocabulary);

inline Configuration apply(const Configuration& c, const Action& a) { return c.apply(a); }

// Post-order linearization: 2n-1 actions. Throws DataError on invalid trees.
std::vector<Action> oracle(const RstTree& tree);

// Runs the actions from the initial configuration; throws InvariantError if
// an action is illegal or the result is not final.
RstTree replay(const std::vector<Action>& actions, int n_edus);

// One action per line.
std::string format_actions(const std::vector<Action>& actions);

// Output vocabulary of the scorer: SHIFT at index 0, then the REDUCE labels
// seen in training ordered by their printed form.
class ActionSet {
 public:
  ActionSet() : actions_{Action::shift()} {}
  static ActionSet induce(const std::vector<RstTree>& trees);
  static ActionSet from_labels(const std::vector<Label>& labels);

  std::size_t size() const noexcept { return actions_.size(); }
  const Action& operator[](std::size_t i) const { return actions_.at(i); }
  const std::vector<Action>& actions() const noexcept { return actions_; }
  std::optional<std::size_t> index_of(const Action& action) const;

 private:
  std::vector<Action> actions_;
};

}  // namespace rst
