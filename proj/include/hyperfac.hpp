#pragma once

#include "hyperfac/catalog.hpp"
#include "hyperfac/cyclotomic.hpp"
#include "hyperfac/engine.hpp"
#include "hyperfac/factorization.hpp"
#include "hyperfac/field.hpp"
#include "hyperfac/freeness.hpp"
#include "hyperfac/geometry.hpp"
#include "hyperfac/index_set.hpp"
#include "hyperfac/io.hpp"
#include "hyperfac/lattice.hpp"
#include "hyperfac/partition.hpp"
#include "hyperfac/rational.hpp"
