#ifndef NETRED_KERNELS_HPP
#define NETRED_KERNELS_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace netred::kernels {

// Every kernel has a serial reference implementation and an OpenMP one.
// Both produce bit-identical results; Auto picks by input size.  The serial
// path is the reference the parallel path is tested against.
enum class Exec { Auto, Serial, Parallel };

bool parallel_available();

// Size at or above which Auto dispatches to the parallel path.
inline constexpr int64_t kAutoThreshold = 1 << 14;

Exec resolve(Exec exec, int64_t work_items);

// Scans u ∈ U once and reports, per codomain element w of m:
//   first_u[w]    smallest u with m[u] = w, or -1 when w is unreached
//   first_x[w]    n[t[first_u[w]]], or -1 when w is unreached
//   conflict_u[w] smallest u with m[u] = w and n[t[u]] != first_x[w],
//                 or -1 when the fiber is constant under n∘t
struct FiberScan {
  std::vector<int64_t> first_u;
  std::vector<int32_t> first_x;
  std::vector<int64_t> conflict_u;
};

FiberScan fiber_scan(std::span<const int32_t> m, std::span<const int32_t> t,
                     std::span<const int32_t> n, int w_count,
                     Exec exec = Exec::Auto);

// Histogram of (w, x) = (m[u], n[t[u]]) pairs over all u, flattened as
// w * x_count + x, together with the smallest generating u per cell.
struct PairScan {
  std::vector<int64_t> count;  // size w_count * x_count
  std::vector<int64_t> min_u;  // -1 where count is 0
};

PairScan pair_scan(std::span<const int32_t> m, std::span<const int32_t> t,
                   std::span<const int32_t> n, int w_count, int x_count,
                   Exec exec = Exec::Auto);

// Enumerates all `total` candidate tables over domain size target.size()
// (candidate index encodes the table base-v_count, first domain element most
// significant) and returns, in ascending order, the indices of candidates
// with n[table[u]] == target[u] for all u.  total must equal
// v_count^target.size().
std::vector<int64_t> search_tables(std::span<const int32_t> target,
                                   std::span<const int32_t> n, int v_count,
                                   int64_t total, Exec exec = Exec::Auto);

// Smallest index in [0, total) where pred returns false, or -1 when pred
// holds everywhere.  The whole range is always scanned.  make_state builds
// one scratch state per worker; pred(state, i) must not touch anything else
// mutable.
template <class MakeState, class Pred>
int64_t first_failure(int64_t total, MakeState&& make_state, Pred&& pred,
                      Exec exec = Exec::Auto) {
  if (total <= 0) return -1;
  if (resolve(exec, total) == Exec::Parallel) {
    int64_t best = total;
#pragma omp parallel reduction(min : best)
    {
      auto state = make_state();
#pragma omp for schedule(static) nowait
      for (int64_t i = 0; i < total; ++i) {
        if (!pred(state, i) && i < best) best = i;
      }
    }
    return best == total ? -1 : best;
  }
  auto state = make_state();
  for (int64_t i = 0; i < total; ++i)
    if (!pred(state, i)) return i;
  return -1;
}

}  // namespace netred::kernels

#endif
