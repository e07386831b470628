#ifndef ITP_SRC_LS_CORE_HPP
#define ITP_SRC_LS_CORE_HPP

#include <chrono>

#include "itp/encoding.hpp"
#include "itp/heuristics.hpp"

namespace itp {
namespace detail {

class RunClock {
public:
    explicit RunClock(double limit_seconds = 0) : limit_(limit_seconds) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
    bool expired() const { return limit_ > 0 && seconds() >= limit_; }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    double limit_;
};

struct LsOutcome {
    Configuration config;
    Value value = 0;
    std::uint64_t passes = 0;
};

// Shared first-improvement core; `trace` may be null. One neighborhood
// shuffle per pass is the only randomness.
LsOutcome ls_first_core(const IntervalTpInstance& inst, Configuration start, int cap, Rng& rng,
                        FitnessCache& cache, const RunClock& clock,
                        std::vector<TracePoint>* trace);

LsOutcome ls_best_core(const IntervalTpInstance& inst, Configuration start, int cap,
                       FitnessCache& cache, const RunClock& clock,
                       std::vector<TracePoint>* trace);

} // namespace detail
} // namespace itp

#endif
