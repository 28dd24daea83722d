#ifndef PROXLAB_PROXLAB_HPP
#define PROXLAB_PROXLAB_HPP

#include "proxlab/error.hpp"
#include "proxlab/exactmath.hpp"
#include "proxlab/polyhedron.hpp"
#include "proxlab/proximity.hpp"
#include "proxlab/spindle.hpp"
#include "proxlab/lifting.hpp"
#include "proxlab/generators.hpp"
#include "proxlab/io.hpp"
#include "proxlab/sweep.hpp"

#endif
