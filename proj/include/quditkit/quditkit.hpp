#pragma once

#include "matrix.hpp"
#include "eig.hpp"
#include "generators.hpp"
#include "states.hpp"
#include "random.hpp"
#include "quantum_ops.hpp"
#include "multipartite.hpp"
#include "quantifiers.hpp"
#include "bell.hpp"
#include "teleport.hpp"
#include "json_io.hpp"
#include "selftest.hpp"
