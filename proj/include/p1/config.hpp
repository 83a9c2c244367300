#pragma once

// Internal consistency checks (inverse products, cohomology cross-checks).
// On by default; configure with -DP1_ENABLE_EXPENSIVE_CHECKS=OFF to drop them.
#ifndef P1_EXPENSIVE_CHECKS
#define P1_EXPENSIVE_CHECKS 1
#endif
