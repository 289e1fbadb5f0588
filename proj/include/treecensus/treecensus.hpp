// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TREECENSUS_TREECENSUS_HPP
#define TREECENSUS_TREECENSUS_HPP

#include "treecensus/census.hpp"
#include "treecensus/cycle_index.hpp"
#include "treecensus/indices.hpp"
#include "treecensus/marking.hpp"
#include "treecensus/oracle.hpp"
#include "treecensus/series.hpp"
#include "treecensus/singularity.hpp"

#endif  // TREECENSUS_TREECENSUS_HPP
