// Partial-trace semantics. Each node holds one entry per resolved grid index
// together with a flag saying whether the entry can still change. Unsettled
// entries are re-evaluated whenever the grid grows; windows that reach past
// the frontier include one virtual sample whose value is fixed per node.

#include <optional>
#include <type_traits>

#include "engine.hpp"
#include "stlmon/detail/domain_traits.hpp"

namespace stlmon::detail {

namespace {

template <class D>
class Node {
 public:
  using Value = typename D::Value;

  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  struct Entry {
    Value value;
    bool settled = false;
    // Window nodes only: settled child entries from the start of the
    // window are folded into `acc`, and scanning resumes at `absorbed`.
    std::size_t absorbed = kUnset;
    std::optional<Value> acc;
  };

  explicit Node(Value virtual_value) : virtual_(virtual_value) {}
  virtual ~Node() = default;

  void advance(const Context& ctx) {
    advance_children(ctx);
    const auto n = ctx.grid.size();
    if (n == end()) return;
    std::vector<std::size_t> still;
    for (auto idx : unsettled_) {
      auto& e = entry(idx);
      evaluate(ctx.grid, idx, e);
      if (!e.settled) still.push_back(idx);
    }
    for (auto idx = end(); idx < n; ++idx) {
      out_.push_back(Entry{D::top(), false, kUnset, std::nullopt});
      auto& e = out_.back();
      evaluate(ctx.grid, idx, e);
      if (!e.settled) still.push_back(idx);
    }
    unsettled_ = std::move(still);
  }

  const Entry& at(std::size_t idx) const { return out_[idx - base_]; }
  const Value& virtual_value() const { return virtual_; }
  std::size_t base() const { return base_; }
  std::size_t end() const { return base_ + out_.size(); }

  void trim(std::size_t keep_from) {
    while (base_ < keep_from && !out_.empty()) {
      out_.pop_front();
      ++base_;
    }
    auto first = std::lower_bound(unsettled_.begin(), unsettled_.end(), base_);
    unsettled_.erase(unsettled_.begin(), first);
  }

  std::size_t first_unsettled() const {
    return unsettled_.empty() ? end() : unsettled_.front();
  }

  /// Index of the oldest child entry any unsettled entry may still read.
  std::size_t child_keep() const {
    std::size_t keep = end();
    for (auto idx : unsettled_) keep = std::min(keep, need_from(idx));
    return keep;
  }

  virtual void trim_children() = 0;
  virtual std::size_t cache_size() const = 0;
  virtual std::size_t min_base() const = 0;

 protected:
  Entry& entry(std::size_t idx) { return out_[idx - base_]; }

  virtual void advance_children(const Context& ctx) = 0;
  virtual void evaluate(const Grid& grid, std::size_t idx, Entry& e) = 0;
  virtual std::size_t need_from(std::size_t idx) const { return idx; }

  void finish(Entry& e, Value v, bool complete) {
    e.value = v;
    e.settled = complete || D::decided(v);
  }

  Value virtual_;
  std::deque<Entry> out_;
  std::size_t base_ = 0;
  std::vector<std::size_t> unsettled_;
};

template <class D>
using NodePtr = std::unique_ptr<Node<D>>;

template <class D>
class TrueNode final : public Node<D> {
 public:
  TrueNode() : Node<D>(D::top()) {}
  void trim_children() override {}
  std::size_t cache_size() const override { return 0; }
  std::size_t min_base() const override { return this->base_; }

 private:
  using Entry = typename Node<D>::Entry;
  void advance_children(const Context&) override {}
  void evaluate(const Grid&, std::size_t, Entry& e) override { this->finish(e, D::top(), true); }
};

template <class D>
class AtomNode final : public Node<D> {
 public:
  explicit AtomNode(AtomSpec spec) : Node<D>(D::unknown()), spec_(spec) {}
  void trim_children() override {}
  std::size_t cache_size() const override { return 0; }
  std::size_t min_base() const override { return this->base_; }

 private:
  using Entry = typename Node<D>::Entry;

  void advance_children(const Context& ctx) override { ctx_ = &ctx; }
  void evaluate(const Grid& grid, std::size_t idx, Entry& e) override {
    // Atoms are only evaluated at new points, which `ctx_->points` holds.
    const auto offset = idx - (grid.size() - ctx_->points.size());
    const auto& p = ctx_->points[offset];
    this->finish(e, D::atom(spec_.cmp, p.values[spec_.signal], spec_.threshold(ctx_->variables)),
                 true);
  }

  AtomSpec spec_;
  const Context* ctx_ = nullptr;
};

template <class D>
class NotNode final : public Node<D> {
 public:
  explicit NotNode(NodePtr<D> child)
      : Node<D>(D::neg(child->virtual_value())), child_(std::move(child)) {}

  void trim_children() override {
    child_->trim(this->child_keep());
    child_->trim_children();
  }
  std::size_t cache_size() const override { return child_->cache_size(); }
  std::size_t min_base() const override { return std::min(this->base_, child_->min_base()); }

 private:
  using Entry = typename Node<D>::Entry;

  void advance_children(const Context& ctx) override { child_->advance(ctx); }
  void evaluate(const Grid&, std::size_t idx, Entry& e) override {
    const auto& c = child_->at(idx);
    this->finish(e, D::neg(c.value), c.settled);
  }

  NodePtr<D> child_;
};

enum class BinaryOp { And, Or, Implies };

template <class D>
typename D::Value apply(BinaryOp op, const typename D::Value& l, const typename D::Value& r) {
  switch (op) {
    case BinaryOp::And: return D::conj(l, r);
    case BinaryOp::Or: return D::disj(l, r);
    case BinaryOp::Implies: break;
  }
  return D::disj(D::neg(l), r);
}

template <class D>
class BinaryNode final : public Node<D> {
 public:
  BinaryNode(BinaryOp op, NodePtr<D> left, NodePtr<D> right)
      : Node<D>(apply<D>(op, left->virtual_value(), right->virtual_value())),
        op_(op),
        left_(std::move(left)),
        right_(std::move(right)) {}

  void trim_children() override {
    const auto keep = this->child_keep();
    left_->trim(keep);
    right_->trim(keep);
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
  using Entry = typename Node<D>::Entry;

  void advance_children(const Context& ctx) override {
    left_->advance(ctx);
    right_->advance(ctx);
  }
  void evaluate(const Grid&, std::size_t idx, Entry& e) override {
    const auto& l = left_->at(idx);
    const auto& r = right_->at(idx);
    this->finish(e, apply<D>(op_, l.value, r.value), l.settled && r.settled);
  }

  BinaryOp op_;
  NodePtr<D> left_;
  NodePtr<D> right_;
};

// True when `v` absorbs every further operand of the fold.
template <class D>
bool absorbs(bool is_min, const typename D::Value& v) {
  if constexpr (std::is_same_v<typename D::Value, ThreeValued>) {
    return v == (is_min ? ThreeValued::False : ThreeValued::True);
  } else {
    return false;
  }
}

// Globally (min) and eventually (max).
template <class D>
class WindowNode final : public Node<D> {
 public:
  WindowNode(bool is_min, TimeInterval interval, NodePtr<D> child)
      : Node<D>(child->virtual_value()),
        is_min_(is_min),
        interval_(interval),
        child_(std::move(child)) {}

  void trim_children() override {
    child_->trim(this->child_keep());
    child_->trim_children();
  }
  std::size_t cache_size() const override {
    return (child_->end() - child_->base()) + child_->cache_size();
  }
  std::size_t min_base() const override { return std::min(this->base_, child_->min_base()); }

 private:
  using Value = typename D::Value;
  using Entry = typename Node<D>::Entry;

  Value fold(const std::optional<Value>& acc, const Value& v) const {
    if (!acc) return v;
    return is_min_ ? D::conj(*acc, v) : D::disj(*acc, v);
  }

  void advance_children(const Context& ctx) override { child_->advance(ctx); }

  std::size_t need_from(std::size_t idx) const override {
    const auto& e = this->at(idx);
    return e.absorbed == Node<D>::kUnset ? idx : e.absorbed;
  }

  void evaluate(const Grid& grid, std::size_t idx, Entry& e) override {
    const double t = grid.at(idx);
    const double lo = t + interval_.lower;
    const double hi = t + interval_.upper;
    const double frontier = grid.frontier();
    if (lo > frontier) {
      this->finish(e, child_->virtual_value(), false);
      return;
    }
    if (e.absorbed == Node<D>::kUnset) e.absorbed = grid.held_index(lo);
    const auto last = hi > frontier ? grid.size() - 1 : grid.held_index(hi);
    while (e.absorbed <= last && child_->at(e.absorbed).settled) {
      e.acc = fold(e.acc, child_->at(e.absorbed).value);
      ++e.absorbed;
    }
    std::optional<Value> v = e.acc;
    bool complete = true;
    for (auto k = e.absorbed; k <= last && !(v && absorbs<D>(is_min_, *v)); ++k) {
      v = fold(v, child_->at(k).value);
      complete = false;
    }
    if (hi > frontier && !absorbs<D>(is_min_, *v)) {
      v = fold(v, child_->virtual_value());
      complete = false;
    }
    this->finish(e, *v, complete);
  }

  bool is_min_;
  TimeInterval interval_;
  NodePtr<D> child_;
};

template <class D>
class UntilNode final : public Node<D> {
 public:
  UntilNode(TimeInterval interval, NodePtr<D> left, NodePtr<D> right)
      : Node<D>(D::conj(right->virtual_value(), left->virtual_value())),
        interval_(interval),
        left_(std::move(left)),
        right_(std::move(right)) {}

  void trim_children() override {
    const auto keep = this->child_keep();
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
  using Entry = typename Node<D>::Entry;

  void advance_children(const Context& ctx) override {
    left_->advance(ctx);
    right_->advance(ctx);
  }

  void evaluate(const Grid& grid, std::size_t idx, Entry& e) override {
    const double t = grid.at(idx);
    const double lo = t + interval_.lower;
    const double hi = t + interval_.upper;
    const double frontier = grid.frontier();
    const auto n = grid.size();

    Value run = D::top();
    bool complete = true;
    if (lo > frontier) {
      // Only the virtual sample is a candidate; the left operand must hold
      // on every resolved point from t onwards as well.
      for (auto k = idx; k < n && !absorbs<D>(true, run); ++k) run = D::conj(run, left_->at(k).value);
      this->finish(e, D::conj(this->virtual_, run), false);
      return;
    }

    const auto lo_idx = grid.held_index(lo);
    const auto last = hi > frontier ? n - 1 : grid.held_index(hi);
    std::optional<Value> acc;
    auto k = idx;
    for (; k <= last; ++k) {
      const auto& l = left_->at(k);
      run = D::conj(run, l.value);
      complete = complete && l.settled;
      if (k >= lo_idx) {
        const auto& r = right_->at(k);
        const Value cand = D::conj(r.value, run);
        acc = acc ? D::disj(*acc, cand) : cand;
        complete = complete && r.settled;
        if (absorbs<D>(false, *acc)) break;
      }
      // Every later candidate is bounded by `run`.
      if (absorbs<D>(true, run)) break;
    }
    const bool cut = k <= last;
    if (!cut && hi > frontier) {
      const Value cand = D::conj(this->virtual_, run);
      acc = acc ? D::disj(*acc, cand) : cand;
      complete = false;
    }
    if (!acc) acc = run;  // the cut happened before the first candidate
    this->finish(e, *acc, complete);
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
            return std::make_unique<WindowNode<D>>(false, n.interval, rec(n.child));
          },
          [&](const Formula::Globally& n) -> NodePtr<D> {
            return std::make_unique<WindowNode<D>>(true, n.interval, rec(n.child));
          },
          [&](const Formula::Until& n) -> NodePtr<D> {
            return std::make_unique<UntilNode<D>>(n.interval, rec(n.left), rec(n.right));
          },
      },
      f.node());
}

template <class D>
class PartialEvaluator final : public Evaluator {
 public:
  PartialEvaluator(const MonitorConfig& config, const SignalTable& signals,
                   const VariableTable& vars)
      : root_(build<D>(config.formula, signals, vars)),
        depth_(temporal_depth(config.formula)) {}

  void advance(const Context& ctx, MonitorOutput& out) override {
    if (ctx.points.empty()) return;
    root_->advance(ctx);
    const auto& grid = ctx.grid;
    for (auto idx = seen_; idx < root_->end(); ++idx) pending_.push_back(Pending{idx, {}});
    seen_ = root_->end();

    std::vector<Pending> still;
    for (auto& p : pending_) {
      const auto& e = root_->at(p.index);
      const double t = grid.at(p.index);
      if constexpr (std::is_same_v<typename D::Value, ThreeValued>) {
        if (e.settled) {
          out.events.push_back(Event{t, D::verdict(e.value), true});
        } else {
          still.push_back(p);
        }
      } else {
        const bool final = e.settled || e.value.is_point() || t + depth_ <= grid.frontier();
        if (!p.last || !(*p.last == e.value)) {
          out.events.push_back(Event{t, D::verdict(e.value), final});
          p.last = e.value;
        }
        if (!final) still.push_back(p);
      }
    }
    pending_ = std::move(still);

    // A retired time whose entry is not settled yet stays cached: eviction
    // follows the window horizon, not event finality.
    auto keep = root_->first_unsettled();
    if (!pending_.empty()) keep = std::min(keep, pending_.front().index);
    root_->trim(keep);
    root_->trim_children();
  }

  std::size_t cache_size() const override { return root_->cache_size(); }
  std::size_t grid_needed_from() const override { return root_->min_base(); }

 private:
  struct Pending {
    std::size_t index;
    std::optional<typename D::Value> last;
  };

  NodePtr<D> root_;
  double depth_;
  std::size_t seen_ = 0;
  std::vector<Pending> pending_;
};

}  // namespace

std::unique_ptr<Evaluator> make_partial_evaluator(const MonitorConfig& config,
                                                  const SignalTable& signals,
                                                  const VariableTable& variables) {
  if (config.semantics == Semantics::EagerQualitative) {
    return std::make_unique<PartialEvaluator<ThreeValuedDomain>>(config, signals, variables);
  }
  return std::make_unique<PartialEvaluator<IntervalDomain>>(config, signals, variables);
}

}  // namespace stlmon::detail
