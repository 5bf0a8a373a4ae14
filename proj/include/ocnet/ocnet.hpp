#pragma once

#include "ocnet/causal.hpp"
#include "ocnet/dot.hpp"
#include "ocnet/element_set.hpp"
#include "ocnet/io.hpp"
#include "ocnet/lattice.hpp"
#include "ocnet/net.hpp"
#include "ocnet/netgen.hpp"
#include "ocnet/next_closure.hpp"
#include "ocnet/ortho_closure.hpp"
#include "ocnet/poset.hpp"
#include "ocnet/relations.hpp"
#include "ocnet/report.hpp"
