// Delayed semantics: every node emits final values only, one per grid index,
// in order. Globally and eventually slide a monotonic wedge over their child.
// Until keeps its operand outputs from its last answered index onwards and
// rescans them for each new output.

#include <optional>

#include "engine.hpp"
#include "stlmon/detail/domain_traits.hpp"
#include "stlmon/wedge.hpp"

namespace stlmon::detail {

namespace {

template <class D>
class Node {
 public:
  using Value = typename D::Value;
  virtual ~Node() = default;

  /// Extends the output deque as far as the resolved grid allows.
  virtual void advance(const Context& ctx) = 0;
  /// Drops child outputs this node will never read again.
  virtual void trim_children() = 0;
  virtual std::size_t cache_size() const = 0;
  virtual std::size_t min_base() const = 0;

  std::size_t base() const { return base_; }
  std::size_t end() const { return base_ + out_.size(); }
  const Value& at(std::size_t idx) const { return out_[idx - base_]; }

  void trim(std::size_t keep_from) {
    while (base_ < keep_from && !out_.empty()) {
      out_.pop_front();
      ++base_;
    }
  }

 protected:
  std::deque<Value> out_;
  std::size_t base_ = 0;
};

template <class D>
using NodePtr = std::unique_ptr<Node<D>>;

template <class D>
class TrueNode final : public Node<D> {
 public:
  void advance(const Context& ctx) override {
    while (this->end() < ctx.grid.size()) this->out_.push_back(D::top());
  }
  void trim_children() override {}
  std::size_t cache_size() const override { return 0; }
  std::size_t min_base() const override { return this->base_; }
};

template <class D>
class AtomNode final : public Node<D> {
 public:
  explicit AtomNode(AtomSpec spec) : spec_(spec) {}

  void advance(const Context& ctx) override {
    for (const auto& p : ctx.points) {
      this->out_.push_back(
          D::atom(spec_.cmp, p.values[spec_.signal], spec_.threshold(ctx.variables)));
    }
  }
  void trim_children() override {}
  std::size_t cache_size() const override { return 0; }
  std::size_t min_base() const override { return this->base_; }

 private:
  AtomSpec spec_;
};

template <class D>
class NotNode final : public Node<D> {
 public:
  explicit NotNode(NodePtr<D> child) : child_(std::move(child)) {}

  void advance(const Context& ctx) override {
    child_->advance(ctx);
    for (auto i = this->end(); i < child_->end(); ++i) this->out_.push_back(D::neg(child_->at(i)));
  }
  void trim_children() override {
    child_->trim(this->end());
    child_->trim_children();
  }
  std::size_t cache_size() const override { return child_->cache_size(); }
  std::size_t min_base() const override { return std::min(this->base_, child_->min_base()); }

 private:
  NodePtr<D> child_;
};

enum class BinaryOp { And, Or, Implies };

template <class D>
class BinaryNode final : public Node<D> {
 public:
  BinaryNode(BinaryOp op, NodePtr<D> left, NodePtr<D> right)
      : op_(op), left_(std::move(left)), right_(std::move(right)) {}

  void advance(const Context& ctx) override {
    left_->advance(ctx);
    right_->advance(ctx);
    const auto stop = std::min(left_->end(), right_->end());
    for (auto i = this->end(); i < stop; ++i) {
      const auto& l = left_->at(i);
      const auto& r = right_->at(i);
      switch (op_) {
        case BinaryOp::And: this->out_.push_back(D::conj(l, r)); break;
        case BinaryOp::Or: this->out_.push_back(D::disj(l, r)); break;
        case BinaryOp::Implies: this->out_.push_back(D::disj(D::neg(l), r)); break;
      }
    }
  }
  void trim_children() override {
    left_->trim(this->end());
    right_->trim(this->end());
    left_->trim_children();
    right_->trim_children();
  }
  std::size_t cache_size() const override {
    return left_->cache_size() + right_->cache_size();
  }
  std::size_t min_base() const override {
    return std::min({this->base_, left_->min_base(), right_->min_base()});
  }

 private:
  BinaryOp op_;
  NodePtr<D> left_;
  NodePtr<D> right_;
};

// Globally (Min) and Eventually (Max).
template <class D>
class WindowNode final : public Node<D> {
 public:
  WindowNode(WedgeMode mode, TimeInterval interval, NodePtr<D> child)
      : interval_(interval), child_(std::move(child)), wedge_(mode) {}

  void advance(const Context& ctx) override {
    child_->advance(ctx);
    const auto& grid = ctx.grid;
    while (pushed_ < child_->end()) {
      const double tj = grid.at(pushed_);
      // Outputs whose window closes before tj are complete.
      while (this->end() < pushed_ && grid.at(this->end()) + interval_.upper < tj) emit(grid);
      wedge_.push(tj, child_->at(pushed_));
      ++pushed_;
    }
    while (this->end() < grid.size()) {
      const double hi = grid.at(this->end()) + interval_.upper;
      if (hi > grid.frontier()) break;
      if (child_->end() < grid.size() && !(hi < grid.at(child_->end()))) break;
      emit(grid);
    }
  }
  void trim_children() override {
    child_->trim(pushed_);
    child_->trim_children();
  }
  std::size_t cache_size() const override { return wedge_.size() + child_->cache_size(); }
  std::size_t min_base() const override { return std::min(this->base_, child_->min_base()); }

 private:
  void emit(const Grid& grid) {
    const double t = grid.at(this->end());
    this->out_.push_back(wedge_.query_holding(t + interval_.lower));
  }

  TimeInterval interval_;
  NodePtr<D> child_;
  Wedge<typename D::Value> wedge_;
  std::size_t pushed_ = 0;
};

template <class D>
class UntilNode final : public Node<D> {
 public:
  UntilNode(TimeInterval interval, NodePtr<D> left, NodePtr<D> right)
      : interval_(interval), left_(std::move(left)), right_(std::move(right)) {}

  void advance(const Context& ctx) override {
    left_->advance(ctx);
    right_->advance(ctx);
    const auto& grid = ctx.grid;
    while (this->end() < grid.size()) {
      const auto i = this->end();
      const double t = grid.at(i);
      const double hi = t + interval_.upper;
      if (hi > grid.frontier()) break;
      if (!covers(*left_, grid, hi) || !covers(*right_, grid, hi)) break;
      const auto lo_idx = grid.held_index(t + interval_.lower);
      const auto last = grid.held_index(hi);
      Value run = D::top();
      std::optional<Value> acc;
      for (auto k = i; k <= last; ++k) {
        run = D::conj(run, left_->at(k));
        if (k >= lo_idx) {
          const Value cand = D::conj(right_->at(k), run);
          acc = acc ? D::disj(*acc, cand) : cand;
        }
      }
      this->out_.push_back(*acc);
    }
  }
  void trim_children() override {
    // Operand outputs are kept from the last answered index onwards.
    const auto keep = this->end() == 0 ? 0 : this->end() - 1;
    left_->trim(keep);
    right_->trim(keep);
    left_->trim_children();
    right_->trim_children();
  }
  std::size_t cache_size() const override {
    return (left_->end() - left_->base()) + (right_->end() - right_->base()) +
           left_->cache_size() + right_->cache_size();
  }
  std::size_t min_base() const override {
    return std::min({this->base_, left_->min_base(), right_->min_base()});
  }

 private:
  using Value = typename D::Value;

  static bool covers(const Node<D>& n, const Grid& grid, double hi) {
    return n.end() == grid.size() || hi < grid.at(n.end());
  }

  TimeInterval interval_;
  NodePtr<D> left_;
  NodePtr<D> right_;
};

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

template <class D>
NodePtr<D> build(const Formula& f, const SignalTable& signals, const VariableTable& vars) {
  auto rec = [&](const Formula& g) { return build<D>(g, signals, vars); };
  return std::visit(
      overloaded{
          [&](const Formula::True&) -> NodePtr<D> { return std::make_unique<TrueNode<D>>(); },
          [&](const Formula::Atom& a) -> NodePtr<D> {
            return std::make_unique<AtomNode<D>>(resolve_atom(a, signals, vars));
          },
          [&](const Formula::Not& n) -> NodePtr<D> {
            return std::make_unique<NotNode<D>>(rec(n.child));
          },
          [&](const Formula::And& n) -> NodePtr<D> {
            return std::make_unique<BinaryNode<D>>(BinaryOp::And, rec(n.left), rec(n.right));
          },
          [&](const Formula::Or& n) -> NodePtr<D> {
            return std::make_unique<BinaryNode<D>>(BinaryOp::Or, rec(n.left), rec(n.right));
          },
          [&](const Formula::Implies& n) -> NodePtr<D> {
            return std::make_unique<BinaryNode<D>>(BinaryOp::Implies, rec(n.left),
                                                   rec(n.right));
          },
          [&](const Formula::Eventually& n) -> NodePtr<D> {
            return std::make_unique<WindowNode<D>>(WedgeMode::Max, n.interval, rec(n.child));
          },
          [&](const Formula::Globally& n) -> NodePtr<D> {
            return std::make_unique<WindowNode<D>>(WedgeMode::Min, n.interval, rec(n.child));
          },
          [&](const Formula::Until& n) -> NodePtr<D> {
            return std::make_unique<UntilNode<D>>(n.interval, rec(n.left), rec(n.right));
          },
      },
      f.node());
}

template <class D>
class DelayedEvaluator final : public Evaluator {
 public:
  DelayedEvaluator(const MonitorConfig& config, const SignalTable& signals,
                   const VariableTable& vars)
      : root_(build<D>(config.formula, signals, vars)),
        depth_(temporal_depth(config.formula)) {}

  void advance(const Context& ctx, MonitorOutput& out) override {
    root_->advance(ctx);
    const auto& grid = ctx.grid;
    while (emitted_ < root_->end()) {
      const double t = grid.at(emitted_);
      if (!(t + depth_ <= grid.frontier())) break;
      out.events.push_back(Event{t, D::verdict(root_->at(emitted_)), true});
      ++emitted_;
    }
    root_->trim(emitted_);
    root_->trim_children();
  }

  std::size_t cache_size() const override { return root_->cache_size(); }
  std::size_t grid_needed_from() const override { return root_->min_base(); }

 private:
  NodePtr<D> root_;
  double depth_;
  std::size_t emitted_ = 0;
};

}  // namespace

std::unique_ptr<Evaluator> make_delayed_evaluator(const MonitorConfig& config,
                                                  const SignalTable& signals,
                                                  const VariableTable& variables) {
  if (config.semantics == Semantics::DelayedQualitative) {
    return std::make_unique<DelayedEvaluator<BooleanDomain>>(config, signals, variables);
  }
  return std::make_unique<DelayedEvaluator<RobustnessDomain>>(config, signals, variables);
}

}  // namespace stlmon::detail
