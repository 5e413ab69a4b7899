#pragma once

/// Umbrella header for the lambda-quiddity library.

#include "quiddity/rings.hpp"      // IWYU pragma: export
#include "quiddity/core.hpp"       // IWYU pragma: export
#include "quiddity/ops.hpp"        // IWYU pragma: export
#include "quiddity/enumerate.hpp"  // IWYU pragma: export
