#pragma once

#include "fcq/ore/coulomb.hpp"
#include "fcq/ore/qtorus.hpp"
#include "fcq/ore/weyl.hpp"
