#pragma once

#include "vira/cohomology.hpp"
#include "vira/extension.hpp"
#include "vira/fock.hpp"
#include "vira/free_vector.hpp"
#include "vira/partition.hpp"
#include "vira/report.hpp"
#include "vira/scalar.hpp"
#include "vira/sweep.hpp"
#include "vira/verma.hpp"
#include "vira/witt.hpp"
