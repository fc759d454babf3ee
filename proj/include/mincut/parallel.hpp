#pragma once

#include <cstddef>
#include <memory>
#include <utility>

#include <tbb/blocked_range.h>
#include <tbb/global_control.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

namespace mincut {

// Runs f(i) for i in [begin, end) on the TBB pool. Callers must not depend on
// the execution order.
template <class F>
void parallel_for(std::size_t begin, std::size_t end, F&& f, std::size_t grain = 1) {
  if (end <= begin) return;
  if (end - begin <= grain) {
    for (std::size_t i = begin; i < end; ++i) f(i);
    return;
  }
  tbb::parallel_for(tbb::blocked_range<std::size_t>(begin, end, grain),
                    [&](const tbb::blocked_range<std::size_t>& r) {
                      for (std::size_t i = r.begin(); i != r.end(); ++i) f(i);
                    });
}

// Sets the worker count for its lifetime; 0 keeps the TBB default. Work
// passed to run() executes in an arena of exactly that many slots, even when
// this exceeds the hardware concurrency.
class WorkerLimit {
 public:
  explicit WorkerLimit(std::size_t workers) {
    if (workers > 0) {
      control_ = std::make_unique<tbb::global_control>(
          tbb::global_control::max_allowed_parallelism, workers);
      arena_ = std::make_unique<tbb::task_arena>(static_cast<int>(workers));
    }
  }

  template <class F>
  auto run(F&& f) {
    return arena_ ? arena_->execute(std::forward<F>(f)) : f();
  }

 private:
  std::unique_ptr<tbb::global_control> control_;
  std::unique_ptr<tbb::task_arena> arena_;
};

}  // namespace mincut
