#pragma once

namespace bdecat {

// Cap on 4k, read from BDECAT_MAX_POINTS (default 12).
int max_points();

// Opt-in thread parallelism for enumeration-heavy routines.
void set_parallel(bool on);
bool parallel_enabled();

}  // namespace bdecat
