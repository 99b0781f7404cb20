// Umbrella header for the annet library.
#pragma once

#include "annet/circuit.hpp"
#include "annet/csan.hpp"
#include "annet/error.hpp"
#include "annet/gadget.hpp"
#include "annet/glue.hpp"
#include "annet/gnet.hpp"
#include "annet/gol.hpp"
#include "annet/io.hpp"
#include "annet/network.hpp"
#include "annet/problems.hpp"
#include "annet/simulate.hpp"
