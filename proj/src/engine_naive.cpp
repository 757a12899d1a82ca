// Replays the whole retained trace through the reference evaluator at every
// update that resolves new points, with the same emission policy as the
// incremental engines.

#include <optional>

#include "engine.hpp"
#include "stlmon/oracle.hpp"

namespace stlmon::detail {

namespace {

class NaiveEvaluator final : public Evaluator {
 public:
  NaiveEvaluator(const MonitorConfig& config, const SignalTable& signals)
      : formula_(config.formula),
        semantics_(config.semantics),
        depth_(temporal_depth(config.formula)),
        trace_(signals.names),
        schedule_(config.variables) {}

  void on_step(const Step& step) override {
    trace_.append(step.signal, step.timestamp, step.value);
  }

  void on_variables_changed(double frontier, const Variables& vars) override {
    schedule_.change(frontier, vars);
  }

  void advance(const Context& ctx, MonitorOutput& out) override {
    if (ctx.points.empty()) return;
    const auto grid = trace_.grid();
    const double frontier = trace_.frontier();
    for (auto idx = seen_; idx < grid.size(); ++idx) pending_.push_back(Pending{idx, {}});
    seen_ = grid.size();

    std::vector<Pending> candidates;
    for (const auto& p : pending_) {
      const bool delayed = semantics_ == Semantics::DelayedQuantitative ||
                           semantics_ == Semantics::DelayedQualitative;
      if (!delayed || grid[p.index] + depth_ <= frontier) candidates.push_back(p);
    }
    std::vector<double> times;
    for (const auto& p : candidates) times.push_back(grid[p.index]);
    const auto verdicts = oracle_verdicts(trace_, formula_, schedule_, semantics_, times);

    std::vector<std::size_t> retired;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      auto& p = candidates[k];
      const double t = times[k];
      const auto& v = verdicts[k];
      switch (semantics_) {
        case Semantics::DelayedQuantitative:
        case Semantics::DelayedQualitative:
          out.events.push_back(Event{t, v, true});
          retired.push_back(p.index);
          break;
        case Semantics::EagerQualitative:
          if (v.as_three_valued() != ThreeValued::Unknown) {
            out.events.push_back(Event{t, v, true});
            retired.push_back(p.index);
          }
          break;
        case Semantics::Rosi: {
          const bool final = v.as_interval().is_point() || t + depth_ <= frontier;
          auto it = std::find_if(pending_.begin(), pending_.end(),
                                 [&](const Pending& q) { return q.index == p.index; });
          if (!it->last || !(*it->last == v)) {
            out.events.push_back(Event{t, v, final});
            it->last = v;
          }
          if (final) retired.push_back(p.index);
          break;
        }
      }
    }
    std::erase_if(pending_, [&](const Pending& q) {
      return std::binary_search(retired.begin(), retired.end(), q.index);
    });
  }

  std::size_t cache_size() const override { return 0; }
  std::size_t grid_needed_from() const override { return static_cast<std::size_t>(-1); }

 private:
  struct Pending {
    std::size_t index;
    std::optional<Verdict> last;
  };

  Formula formula_;
  Semantics semantics_;
  double depth_;
  Trace trace_;
  VariableSchedule schedule_;
  std::size_t seen_ = 0;
  std::vector<Pending> pending_;
};

}  // namespace

std::unique_ptr<Evaluator> make_naive_evaluator(const MonitorConfig& config,
                                                const SignalTable& signals) {
  return std::make_unique<NaiveEvaluator>(config, signals);
}

}  // namespace stlmon::detail
