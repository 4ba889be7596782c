#pragma once

// Umbrella header: construction, composition, verification, exhaustive
// search, and serialization of k-diagonal magic squares.

#include "kdiag/compose.hpp"
#include "kdiag/constructions.hpp"
#include "kdiag/core.hpp"
#include "kdiag/io.hpp"
#include "kdiag/oracle.hpp"
