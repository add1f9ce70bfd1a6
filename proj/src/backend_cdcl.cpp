// Small conflict-driven clause-learning solver: two watched literals,
// first-UIP learning, VSIDS with phase saving, Luby restarts and
// assumptions as the first decision levels.

#include "fobnn/sat_backend.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>

namespace fobnn {

namespace {

using Lit = std::uint32_t;
constexpr Lit kNoLit = ~Lit{0};
constexpr int kNoReason = -1;

inline Lit make_lit(int dimacs) {
  const auto var = static_cast<Lit>(std::abs(dimacs) - 1);
  return 2 * var + (dimacs < 0 ? 1 : 0);
}
inline Lit negate(Lit l) { return l ^ 1u; }
inline std::uint32_t var_of(Lit l) { return l >> 1; }
inline bool is_negative(Lit l) { return (l & 1u) != 0; }

enum class Value : std::int8_t { False = -1, Undef = 0, True = 1 };

struct ClauseData {
  std::vector<Lit> lits;
  bool learnt = false;
  bool deleted = false;
  double activity = 0;
};

double luby(double y, int x) {
  int size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

class CdclBackend final : public SatBackend {
 public:
  std::string name() const override { return "cdcl"; }

  void reserve(int num_vars) override {
    const auto n = static_cast<std::size_t>(num_vars);
    if (n <= assigns_.size()) return;
    const std::size_t old = assigns_.size();
    assigns_.resize(n, Value::Undef);
    level_.resize(n, 0);
    reason_.resize(n, kNoReason);
    activity_.resize(n, 0);
    polarity_.resize(n, true);
    seen_.resize(n, 0);
    heap_index_.resize(n, -1);
    watches_.resize(2 * n);
    for (std::size_t v = old; v < n; ++v) heap_insert(static_cast<std::uint32_t>(v));
  }

  void add_clause(std::span<const int> clause) override {
    if (!ok_) return;
    int max_var = 0;
    for (int l : clause) max_var = std::max(max_var, std::abs(l));
    reserve(max_var);
    cancel_until(0);

    std::vector<Lit> lits;
    for (int l : clause) lits.push_back(make_lit(l));
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<Lit> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i + 1 < lits.size() && lits[i + 1] == negate(lits[i])) return;  // tautology
      const Value v = value(lits[i]);
      if (v == Value::True) return;
      if (v == Value::Undef) kept.push_back(lits[i]);
    }
    if (kept.empty()) {
      ok_ = false;
      return;
    }
    if (kept.size() == 1) {
      enqueue(kept[0], kNoReason);
      if (propagate() != kNoReason) ok_ = false;
      return;
    }
    attach(store(std::move(kept), false));
  }

  bool solve(std::span<const int> assumptions) override {
    if (!ok_) return false;
    int max_var = 0;
    for (int l : assumptions) max_var = std::max(max_var, std::abs(l));
    reserve(max_var);
    assumptions_.clear();
    for (int l : assumptions) assumptions_.push_back(make_lit(l));

    Value status = Value::Undef;
    for (int restarts = 0; status == Value::Undef; ++restarts) {
      const double budget = luby(2, restarts) * 100;
      status = search(static_cast<long>(budget));
    }
    if (status == Value::True) {
      model_.assign(assigns_.size(), false);
      for (std::size_t v = 0; v < assigns_.size(); ++v) model_[v] = assigns_[v] == Value::True;
    }
    cancel_until(0);
    return status == Value::True;
  }

  bool value(int var) const override {
    const auto idx = static_cast<std::size_t>(var - 1);
    return var > 0 && idx < model_.size() && model_[idx];
  }

 private:
  Value value(Lit l) const {
    const Value v = assigns_[var_of(l)];
    if (v == Value::Undef) return v;
    return (v == Value::True) != is_negative(l) ? Value::True : Value::False;
  }

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  int store(std::vector<Lit> lits, bool learnt) {
    clauses_.push_back({std::move(lits), learnt, false, 0});
    return static_cast<int>(clauses_.size() - 1);
  }

  void attach(int ci) {
    const auto& c = clauses_[static_cast<std::size_t>(ci)].lits;
    watches_[c[0]].push_back(ci);
    watches_[c[1]].push_back(ci);
  }

  void enqueue(Lit l, int reason) {
    const auto v = var_of(l);
    assigns_[v] = is_negative(l) ? Value::False : Value::True;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(l);
  }

  // Returns the index of a conflicting clause or kNoReason.
  int propagate() {
    while (qhead_ < trail_.size()) {
      const Lit false_lit = negate(trail_[qhead_++]);
      auto& ws = watches_[false_lit];
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < ws.size()) {
        const int ci = ws[i++];
        auto& cd = clauses_[static_cast<std::size_t>(ci)];
        if (cd.deleted) continue;
        auto& c = cd.lits;
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        if (value(c[0]) == Value::True) {
          ws[j++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (value(c[k]) != Value::False) {
            std::swap(c[1], c[k]);
            watches_[c[1]].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = ci;
        if (value(c[0]) == Value::False) {
          while (i < ws.size()) ws[j++] = ws[i++];
          ws.resize(j);
          qhead_ = trail_.size();
          return ci;
        }
        enqueue(c[0], ci);
      }
      ws.resize(j);
    }
    return kNoReason;
  }

  void bump_var(std::uint32_t v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    if (heap_index_[v] >= 0) heap_up(static_cast<std::size_t>(heap_index_[v]));
  }

  void bump_clause(ClauseData& c) {
    c.activity += clause_inc_;
    if (c.activity > 1e20) {
      for (auto& cd : clauses_)
        if (cd.learnt) cd.activity *= 1e-20;
      clause_inc_ *= 1e-20;
    }
  }

  std::vector<Lit> analyze(int confl, int& backtrack_level) {
    std::vector<Lit> learnt{kNoLit};
    int path = 0;
    Lit p = kNoLit;
    std::size_t index = trail_.size();
    do {
      auto& cd = clauses_[static_cast<std::size_t>(confl)];
      if (cd.learnt) bump_clause(cd);
      for (std::size_t j = p == kNoLit ? 0 : 1; j < cd.lits.size(); ++j) {
        const Lit q = cd.lits[j];
        const auto v = var_of(q);
        if (seen_[v] || level_[v] == 0) continue;
        bump_var(v);
        seen_[v] = 1;
        if (level_[v] >= decision_level()) ++path;
        else learnt.push_back(q);
      }
      while (!seen_[var_of(trail_[--index])]) {
      }
      p = trail_[index];
      confl = reason_[var_of(p)];
      seen_[var_of(p)] = 0;
      --path;
    } while (path > 0);
    learnt[0] = negate(p);

    backtrack_level = 0;
    if (learnt.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t i = 2; i < learnt.size(); ++i)
        if (level_[var_of(learnt[i])] > level_[var_of(learnt[max_i])]) max_i = i;
      std::swap(learnt[1], learnt[max_i]);
      backtrack_level = level_[var_of(learnt[1])];
    }
    for (Lit l : learnt) seen_[var_of(l)] = 0;
    return learnt;
  }

  void cancel_until(int level) {
    if (decision_level() <= level) return;
    const std::size_t stop = trail_lim_[static_cast<std::size_t>(level)];
    for (std::size_t i = trail_.size(); i > stop; --i) {
      const Lit l = trail_[i - 1];
      const auto v = var_of(l);
      assigns_[v] = Value::Undef;
      reason_[v] = kNoReason;
      polarity_[v] = is_negative(l);
      if (heap_index_[v] < 0) heap_insert(v);
    }
    trail_.resize(stop);
    trail_lim_.resize(static_cast<std::size_t>(level));
    qhead_ = trail_.size();
  }

  Lit pick_branch() {
    while (!heap_.empty()) {
      const std::uint32_t v = heap_pop();
      if (assigns_[v] == Value::Undef) return 2 * v + (polarity_[v] ? 1 : 0);
    }
    return kNoLit;
  }

  bool locked(int ci) const {
    const auto& c = clauses_[static_cast<std::size_t>(ci)].lits;
    return reason_[var_of(c[0])] == ci && value(c[0]) == Value::True;
  }

  void reduce_db() {
    std::vector<int> learnts;
    for (std::size_t i = 0; i < clauses_.size(); ++i)
      if (clauses_[i].learnt && !clauses_[i].deleted && clauses_[i].lits.size() > 2) learnts.push_back(static_cast<int>(i));
    std::sort(learnts.begin(), learnts.end(), [&](int a, int b) {
      return clauses_[static_cast<std::size_t>(a)].activity < clauses_[static_cast<std::size_t>(b)].activity;
    });
    for (std::size_t i = 0; i < learnts.size() / 2; ++i) {
      if (locked(learnts[i])) continue;
      auto& cd = clauses_[static_cast<std::size_t>(learnts[i])];
      cd.deleted = true;
      cd.lits.clear();
      cd.lits.shrink_to_fit();
      --num_learnts_;
    }
  }

  Value search(long conflict_budget) {
    long conflicts = 0;
    for (;;) {
      const int confl = propagate();
      if (confl != kNoReason) {
        ++conflicts;
        if (decision_level() == 0) {
          ok_ = false;
          return Value::False;
        }
        int bt = 0;
        std::vector<Lit> learnt = analyze(confl, bt);
        cancel_until(bt);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          const int ci = store(std::move(learnt), true);
          attach(ci);
          bump_clause(clauses_[static_cast<std::size_t>(ci)]);
          ++num_learnts_;
          enqueue(clauses_[static_cast<std::size_t>(ci)].lits[0], ci);
        }
        var_inc_ /= 0.95;
        clause_inc_ /= 0.999;
        continue;
      }
      if (conflicts >= conflict_budget) {
        cancel_until(0);
        return Value::Undef;
      }
      if (num_learnts_ > max_learnts_) {
        reduce_db();
        max_learnts_ = max_learnts_ * 11 / 10;
      }
      Lit next = kNoLit;
      while (static_cast<std::size_t>(decision_level()) < assumptions_.size()) {
        const Lit a = assumptions_[static_cast<std::size_t>(decision_level())];
        const Value v = value(a);
        if (v == Value::True) {
          trail_lim_.push_back(trail_.size());
        } else if (v == Value::False) {
          return Value::False;
        } else {
          next = a;
          break;
        }
      }
      if (next == kNoLit) {
        next = pick_branch();
        if (next == kNoLit) return Value::True;
      }
      trail_lim_.push_back(trail_.size());
      enqueue(next, kNoReason);
    }
  }

  // Max-heap of variables ordered by activity.
  bool heap_less(std::uint32_t a, std::uint32_t b) const { return activity_[a] > activity_[b]; }

  void heap_insert(std::uint32_t v) {
    heap_index_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    heap_up(heap_.size() - 1);
  }

  std::uint32_t heap_pop() {
    const std::uint32_t top = heap_.front();
    heap_index_[top] = -1;
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_index_[heap_.front()] = 0;
      heap_down(0);
    }
    return top;
  }

  void heap_up(std::size_t i) {
    const std::uint32_t v = heap_[i];
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!heap_less(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      heap_index_[heap_[i]] = static_cast<int>(i);
      i = parent;
    }
    heap_[i] = v;
    heap_index_[v] = static_cast<int>(i);
  }

  void heap_down(std::size_t i) {
    const std::uint32_t v = heap_[i];
    for (;;) {
      std::size_t child = 2 * i + 1;
      if (child >= heap_.size()) break;
      if (child + 1 < heap_.size() && heap_less(heap_[child + 1], heap_[child])) ++child;
      if (!heap_less(heap_[child], v)) break;
      heap_[i] = heap_[child];
      heap_index_[heap_[i]] = static_cast<int>(i);
      i = child;
    }
    heap_[i] = v;
    heap_index_[v] = static_cast<int>(i);
  }

  bool ok_ = true;
  std::vector<ClauseData> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<Value> assigns_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<double> activity_;
  std::vector<bool> polarity_;  // true: branch negative
  std::vector<char> seen_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<std::uint32_t> heap_;
  std::vector<int> heap_index_;
  std::vector<Lit> assumptions_;
  std::vector<bool> model_;
  double var_inc_ = 1;
  double clause_inc_ = 1;
  long num_learnts_ = 0;
  long max_learnts_ = 2000;
};

}  // namespace

std::unique_ptr<SatBackend> make_cdcl_backend() { return std::make_unique<CdclBackend>(); }

}  // namespace fobnn
