#pragma once

#include "fcq/homalg/complex.hpp"
#include "fcq/homalg/random.hpp"
#include "fcq/homalg/resolution.hpp"
#include "fcq/homalg/steenrod.hpp"
#include "fcq/homalg/tate.hpp"
