#ifndef SPECCOVER_SPECCOVER_HPP
#define SPECCOVER_SPECCOVER_HPP

#include "bit_row.hpp"
#include "convert.hpp"
#include "core.hpp"
#include "covering.hpp"
#include "error.hpp"
#include "io.hpp"
#include "random.hpp"
#include "sat.hpp"
#include "transform.hpp"

#endif
