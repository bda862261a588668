#pragma once

#include "gamma0/character_lab.hpp"
#include "gamma0/dedekind.hpp"
#include "gamma0/dirichlet.hpp"
#include "gamma0/farey.hpp"
#include "gamma0/generators.hpp"
#include "gamma0/integer.hpp"
#include "gamma0/linalg.hpp"
#include "gamma0/modular_group.hpp"
#include "gamma0/random.hpp"
#include "gamma0/rational.hpp"
#include "gamma0/registry.hpp"
#include "gamma0/verifiers.hpp"
