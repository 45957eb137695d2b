#pragma once

// Umbrella header: exact p-adic Welch bound verification and search over
// rational-coordinate vectors in Q_p^d.

#include "classical.hpp"
#include "combinatorics.hpp"
#include "config_io.hpp"
#include "linalg.hpp"
#include "prime.hpp"
#include "rational.hpp"
#include "search.hpp"
#include "sym_tensor.hpp"
#include "valuation.hpp"
#include "version.hpp"
#include "welch.hpp"
