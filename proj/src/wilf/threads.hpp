#ifndef WILF_THREADS_HPP
#define WILF_THREADS_HPP

namespace wilf {

// Worker cap: WILF_THREADS if set to a positive integer, else the hardware
// concurrency (at least 1).
int thread_cap();

} // namespace wilf

#endif
