#pragma once

#include "oddgreedy/exact.hpp"
#include "oddgreedy/family.hpp"
#include "oddgreedy/greedy.hpp"
#include "oddgreedy/length2.hpp"
#include "oddgreedy/prefix_families.hpp"
#include "oddgreedy/reduction.hpp"
#include "oddgreedy/two_step.hpp"
#include "oddgreedy/oracle.hpp"
#include "oddgreedy/crosscheck.hpp"
