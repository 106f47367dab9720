#pragma once

#include "zforce/classifier.hpp"
#include "zforce/closed_forms.hpp"
#include "zforce/digraph.hpp"
#include "zforce/digraph_io.hpp"
#include "zforce/errors.hpp"
#include "zforce/forcing.hpp"
#include "zforce/generators.hpp"
#include "zforce/minrank.hpp"
#include "zforce/solvers.hpp"
#include "zforce/sweeps.hpp"
#include "zforce/vertex_set.hpp"
